#pragma once

#include "tfspec/simd/kernels.hpp"

namespace tfspec::simd::detail {

void recurrence_table_scalar(const ThreeTermRecurrence& rec, std::span<const double> xs,
                             std::span<double> out);
double dot_scalar(const double* x, const double* y, std::size_t n);
double dot3_scalar(const double* w, const double* f, const double* g, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void mul_inplace_scalar(const double* x, double* y, std::size_t n);

#if defined(TFSPEC_HAVE_AVX2)
void recurrence_table_avx2(const ThreeTermRecurrence& rec, std::span<const double> xs,
                           std::span<double> out);
double dot_avx2(const double* x, const double* y, std::size_t n);
double dot3_avx2(const double* w, const double* f, const double* g, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void mul_inplace_avx2(const double* x, double* y, std::size_t n);
#endif

}  // namespace tfspec::simd::detail
