#pragma once

// Data-parallel inner loops used by assembly and evaluation. Every kernel
// has a scalar reference implementation; vector variants are selected at
// runtime and must match the reference (bit-for-bit for the elementwise
// kernels, to rounding for reductions).

#include <cstddef>
#include <span>
#include <string_view>

namespace tfspec::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Coefficients of P_n = (a[n] x + b[n]) P_{n-1} - c[n] P_{n-2}, n >= 1.
/// Index 0 is unused; c[1] must be zero.
struct ThreeTermRecurrence {
    std::span<const double> a;
    std::span<const double> b;
    std::span<const double> c;
    std::size_t nmax() const { return a.empty() ? 0 : a.size() - 1; }
};

struct Kernels {
    Isa isa;

    /// Fills out (row-major, (nmax+1) x xs.size()) with P_0..P_nmax at xs.
    void (*recurrence_table)(const ThreeTermRecurrence& rec, std::span<const double> xs,
                             std::span<double> out);

    double (*dot)(const double* x, const double* y, std::size_t n);

    /// sum_j w[j] * f[j] * g[j]
    double (*dot3)(const double* w, const double* f, const double* g, std::size_t n);

    /// y[j] += alpha * x[j]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

    /// y[j] *= x[j]
    void (*mul_inplace)(const double* x, double* y, std::size_t n);
};

bool isa_available(Isa isa);

const Kernels& kernels(Isa isa);

/// Best available ISA, unless overridden by TFSPEC_SIMD=scalar|avx2 or set_active().
const Kernels& active();
Isa active_isa();
void set_active(Isa isa);

}  // namespace tfspec::simd
