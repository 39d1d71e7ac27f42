#include "assembly.hpp"

#include "tfspec/error.hpp"
#include "tfspec/simd/kernels.hpp"

#include <cmath>
#include <string>

namespace tfspec::detail {

Matrix weighted_gram(std::span<const double> w, const RowMatrix& g, const RowMatrix& h) {
    const auto& k = simd::active();
    const auto m = static_cast<std::size_t>(w.size());
    Matrix out(g.rows(), h.rows());
    for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < h.rows(); ++c)
            out(r, c) = k.dot3(w.data(), g.row(r).data(), h.row(c).data(), m);
    return out;
}

std::vector<double> test_moments(const CompositeFunction& f, double a, double lambda, int count,
                                 int npts) {
    std::vector<double> out(static_cast<std::size_t>(count), 0.0);
    if (count == 0) return out;
    const auto& k = simd::active();
    for (const auto& term : f) {
        WeightedNodes q = weighted_nodes(term, a, 0.0, npts);
        for (std::size_t j = 0; j < q.x.size(); ++j) q.w[j] *= std::exp(lambda * q.x[j]);
        const RowMatrix table = jacobi_table(count - 1, {a, -a}, q.x);
        for (int r = 0; r < count; ++r)
            out[static_cast<std::size_t>(r)] += k.dot(q.w.data(), table.row(r).data(), q.w.size());
    }
    return out;
}

std::vector<double> jacobi_series(std::span<const double> c, JacobiParams p, std::span<const double> xs) {
    std::vector<double> out(xs.size(), 0.0);
    if (c.empty() || xs.empty()) return out;
    const auto& k = simd::active();
    const RowMatrix table = jacobi_table(static_cast<int>(c.size()) - 1, p, xs);
    for (std::size_t n = 0; n < c.size(); ++n)
        k.axpy(c[n], table.row(static_cast<Eigen::Index>(n)).data(), out.data(), out.size());
    return out;
}

void check_regime_size(int N, int min_n, const char* who) {
    if (N < min_n || N > kMaxJacobiDegree)
        throw SizeError(std::string(who) + ": N = " + std::to_string(N) + " outside [" +
                        std::to_string(min_n) + ", " + std::to_string(kMaxJacobiDegree) + "]");
}

}  // namespace tfspec::detail
