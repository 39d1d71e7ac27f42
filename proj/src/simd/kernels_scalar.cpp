#include "kernels_impl.hpp"

namespace tfspec::simd::detail {

void recurrence_table_scalar(const ThreeTermRecurrence& rec, std::span<const double> xs,
                             std::span<double> out) {
    const std::size_t m = xs.size();
    const std::size_t nmax = rec.nmax();
    double* p0 = out.data();
    for (std::size_t j = 0; j < m; ++j) p0[j] = 1.0;
    if (nmax == 0) return;

    double* p1 = out.data() + m;
    for (std::size_t j = 0; j < m; ++j) {
        double t = rec.a[1] * xs[j];
        t = t + rec.b[1];
        p1[j] = t * p0[j];
    }
    for (std::size_t n = 2; n <= nmax; ++n) {
        const double* pm2 = out.data() + (n - 2) * m;
        const double* pm1 = out.data() + (n - 1) * m;
        double* pn = out.data() + n * m;
        const double an = rec.a[n], bn = rec.b[n], cn = rec.c[n];
        for (std::size_t j = 0; j < m; ++j) {
            double t = an * xs[j];
            t = t + bn;
            t = t * pm1[j];
            const double u = cn * pm2[j];
            pn[j] = t - u;
        }
    }
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += x[j] * y[j];
    return s;
}

double dot3_scalar(const double* w, const double* f, const double* g, std::size_t n) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += (w[j] * f[j]) * g[j];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] = y[j] + alpha * x[j];
}

void mul_inplace_scalar(const double* x, double* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] = y[j] * x[j];
}

}  // namespace tfspec::simd::detail
