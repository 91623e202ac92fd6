#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace orgc::simd {

inline constexpr std::uint32_t kPrime = 2147483647u;  // 2^31 - 1

enum class Kernel { Scalar, Avx2, Neon };

std::string_view kernel_name(Kernel k);
bool kernel_available(Kernel k);
Kernel best_kernel();

// dst[i] = (dst[i] + factor * src[i]) mod p; all inputs must already be < p.
void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);
void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);

// Runtime-selected variant; calling an unavailable variant throws std::logic_error.
void axpy(Kernel k, std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);
void axpy(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::size_t n);

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b);
std::uint32_t inv_mod(std::uint32_t a);

}  // namespace orgc::simd
