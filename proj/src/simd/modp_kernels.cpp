#include "orgc/simd/modp_kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ORGC_X86 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#define ORGC_NEON 1
#endif

namespace orgc::simd {

namespace {

inline std::uint32_t reduce(std::uint64_t t) {
  t = (t & kPrime) + (t >> 31);
  t = (t & kPrime) + (t >> 31);
  return static_cast<std::uint32_t>(t >= kPrime ? t - kPrime : t);
}

}  // namespace

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Avx2: return "avx2";
    case Kernel::Neon: return "neon";
  }
  return "?";
}

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::Scalar: return true;
    case Kernel::Avx2:
#ifdef ORGC_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Kernel::Neon:
#ifdef ORGC_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

Kernel best_kernel() {
  static const Kernel k = kernel_available(Kernel::Avx2)   ? Kernel::Avx2
                          : kernel_available(Kernel::Neon) ? Kernel::Neon
                                                           : Kernel::Scalar;
  return k;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) {
  return reduce(static_cast<std::uint64_t>(a) * b);
}

std::uint32_t inv_mod(std::uint32_t a) {
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  std::uint32_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = reduce(dst[i] + static_cast<std::uint64_t>(factor) * src[i]);
}

#ifdef ORGC_X86
__attribute__((target("avx2"))) static void axpy_avx2_impl(std::uint32_t* dst, const std::uint32_t* src,
                                                           std::uint32_t factor, std::size_t n) {
  const __m256i f = _mm256_set1_epi64x(factor);
  const __m256i p64 = _mm256_set1_epi64x(kPrime);
  const __m256i p32 = _mm256_set1_epi32(static_cast<int>(kPrime));
  const __m256i low_mask = _mm256_set1_epi64x(0xffffffffLL);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i even = _mm256_add_epi64(_mm256_mul_epu32(s, f), _mm256_and_si256(d, low_mask));
    __m256i odd = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(s, 32), f), _mm256_srli_epi64(d, 32));
    even = _mm256_add_epi64(_mm256_and_si256(even, p64), _mm256_srli_epi64(even, 31));
    even = _mm256_add_epi64(_mm256_and_si256(even, p64), _mm256_srli_epi64(even, 31));
    odd = _mm256_add_epi64(_mm256_and_si256(odd, p64), _mm256_srli_epi64(odd, 31));
    odd = _mm256_add_epi64(_mm256_and_si256(odd, p64), _mm256_srli_epi64(odd, 31));
    __m256i t = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    t = _mm256_min_epu32(t, _mm256_sub_epi32(t, p32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  axpy_scalar(dst + i, src + i, factor, n - i);
}
#endif

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
#ifdef ORGC_X86
  if (kernel_available(Kernel::Avx2)) return axpy_avx2_impl(dst, src, factor, n);
#endif
  (void)dst, (void)src, (void)factor, (void)n;
  throw std::logic_error("avx2 kernel not available on this machine");
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
#ifdef ORGC_NEON
  const uint32x2_t f = vdup_n_u32(factor);
  const uint64x2_t p64 = vdupq_n_u64(kPrime);
  const uint32x4_t p32 = vdupq_n_u32(kPrime);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t s = vld1q_u32(src + i);
    uint32x4_t d = vld1q_u32(dst + i);
    uint64x2_t lo = vmlal_u32(vmovl_u32(vget_low_u32(d)), vget_low_u32(s), f);
    uint64x2_t hi = vmlal_u32(vmovl_u32(vget_high_u32(d)), vget_high_u32(s), f);
    lo = vaddq_u64(vandq_u64(lo, p64), vshrq_n_u64(lo, 31));
    lo = vaddq_u64(vandq_u64(lo, p64), vshrq_n_u64(lo, 31));
    hi = vaddq_u64(vandq_u64(hi, p64), vshrq_n_u64(hi, 31));
    hi = vaddq_u64(vandq_u64(hi, p64), vshrq_n_u64(hi, 31));
    uint32x4_t t = vcombine_u32(vmovn_u64(lo), vmovn_u64(hi));
    t = vminq_u32(t, vsubq_u32(t, p32));
    vst1q_u32(dst + i, t);
  }
  axpy_scalar(dst + i, src + i, factor, n - i);
#else
  (void)dst, (void)src, (void)factor, (void)n;
  throw std::logic_error("neon kernel not available on this machine");
#endif
}

void axpy(Kernel k, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  switch (k) {
    case Kernel::Scalar: return axpy_scalar(dst, src, factor, n);
    case Kernel::Avx2: return axpy_avx2(dst, src, factor, n);
    case Kernel::Neon: return axpy_neon(dst, src, factor, n);
  }
}

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n) {
  axpy(best_kernel(), dst, src, factor, n);
}

}  // namespace orgc::simd
