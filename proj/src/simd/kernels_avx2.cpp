// Compiled with -mavx2 (and without -mfma) so every lane performs the same
// IEEE multiply/add sequence as the scalar reference.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace tfspec::simd::detail {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void recurrence_table_avx2(const ThreeTermRecurrence& rec, std::span<const double> xs,
                           std::span<double> out) {
    const std::size_t m = xs.size();
    const std::size_t nmax = rec.nmax();
    const std::size_t vec_end = m - m % 4;
    double* p0 = out.data();
    for (std::size_t j = 0; j < m; ++j) p0[j] = 1.0;
    if (nmax == 0) return;

    double* p1 = out.data() + m;
    {
        const __m256d a1 = _mm256_set1_pd(rec.a[1]);
        const __m256d b1 = _mm256_set1_pd(rec.b[1]);
        std::size_t j = 0;
        for (; j < vec_end; j += 4) {
            __m256d t = _mm256_mul_pd(a1, _mm256_loadu_pd(xs.data() + j));
            t = _mm256_add_pd(t, b1);
            _mm256_storeu_pd(p1 + j, _mm256_mul_pd(t, _mm256_loadu_pd(p0 + j)));
        }
        for (; j < m; ++j) {
            double t = rec.a[1] * xs[j];
            t = t + rec.b[1];
            p1[j] = t * p0[j];
        }
    }
    for (std::size_t n = 2; n <= nmax; ++n) {
        const double* pm2 = out.data() + (n - 2) * m;
        const double* pm1 = out.data() + (n - 1) * m;
        double* pn = out.data() + n * m;
        const __m256d an = _mm256_set1_pd(rec.a[n]);
        const __m256d bn = _mm256_set1_pd(rec.b[n]);
        const __m256d cn = _mm256_set1_pd(rec.c[n]);
        std::size_t j = 0;
        for (; j < vec_end; j += 4) {
            __m256d t = _mm256_mul_pd(an, _mm256_loadu_pd(xs.data() + j));
            t = _mm256_add_pd(t, bn);
            t = _mm256_mul_pd(t, _mm256_loadu_pd(pm1 + j));
            const __m256d u = _mm256_mul_pd(cn, _mm256_loadu_pd(pm2 + j));
            _mm256_storeu_pd(pn + j, _mm256_sub_pd(t, u));
        }
        for (; j < m; ++j) {
            double t = rec.a[n] * xs[j];
            t = t + rec.b[n];
            t = t * pm1[j];
            const double u = rec.c[n] * pm2[j];
            pn[j] = t - u;
        }
    }
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j)));
        acc1 = _mm256_add_pd(acc1,
                             _mm256_mul_pd(_mm256_loadu_pd(x + j + 4), _mm256_loadu_pd(y + j + 4)));
    }
    for (; j + 4 <= n; j += 4)
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j)));
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < n; ++j) s += x[j] * y[j];
    return s;
}

double dot3_avx2(const double* w, const double* f, const double* g, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(w + j), _mm256_loadu_pd(f + j));
        const __m256d b = _mm256_mul_pd(_mm256_loadu_pd(w + j + 4), _mm256_loadu_pd(f + j + 4));
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, _mm256_loadu_pd(g + j)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, _mm256_loadu_pd(g + j + 4)));
    }
    for (; j + 4 <= n; j += 4) {
        const __m256d a = _mm256_mul_pd(_mm256_loadu_pd(w + j), _mm256_loadu_pd(f + j));
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, _mm256_loadu_pd(g + j)));
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < n; ++j) s += (w[j] * f[j]) * g[j];
    return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d v = _mm256_add_pd(_mm256_loadu_pd(y + j), _mm256_mul_pd(a, _mm256_loadu_pd(x + j)));
        _mm256_storeu_pd(y + j, v);
    }
    for (; j < n; ++j) y[j] = y[j] + alpha * x[j];
}

void mul_inplace_avx2(const double* x, double* y, std::size_t n) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(y + j, _mm256_mul_pd(_mm256_loadu_pd(y + j), _mm256_loadu_pd(x + j)));
    for (; j < n; ++j) y[j] = y[j] * x[j];
}

}  // namespace tfspec::simd::detail
