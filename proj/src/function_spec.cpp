#include "tfspec/function_spec.hpp"

#include "tfspec/error.hpp"

#include <cmath>
#include <string>

namespace tfspec {

FunctionSpec FunctionSpec::from_eval(std::function<double(double)> f, double left_exponent,
                                     double right_exponent) {
    FunctionSpec s;
    s.eval = std::move(f);
    s.left_exponent = left_exponent;
    s.right_exponent = right_exponent;
    return s;
}

FunctionSpec FunctionSpec::from_factor(std::function<double(double)> g, double left_exponent,
                                       double right_exponent, double lo, double hi) {
    FunctionSpec s;
    s.factor = std::move(g);
    s.left_exponent = left_exponent;
    s.right_exponent = right_exponent;
    s.lo = lo;
    s.hi = hi;
    return s;
}

double FunctionSpec::operator()(double x) const {
    if (x < lo || x > hi) return 0.0;
    if (eval) return eval(x);
    double v = factor(x);
    if (left_exponent != 0.0) v *= std::pow(x - lo, left_exponent);
    if (right_exponent != 0.0) v *= std::pow(hi - x, right_exponent);
    return v;
}

double FunctionSpec::smooth_factor(double x) const {
    if (factor) return factor(x);
    double v = eval(x);
    if (left_exponent != 0.0) v /= std::pow(x - lo, left_exponent);
    if (right_exponent != 0.0) v /= std::pow(hi - x, right_exponent);
    return v;
}

void FunctionSpec::validate() const {
    if (!eval && !factor) throw DomainError("FunctionSpec: neither eval nor factor given");
    if (!(lo < hi) || lo < -1.0 || hi > 1.0)
        throw DomainError("FunctionSpec: support must satisfy -1 <= lo < hi <= 1");
    if (!(left_exponent > -1.0) || !(right_exponent > -1.0))
        throw SingularityError("FunctionSpec: endpoint exponents must exceed -1 (got " +
                               std::to_string(left_exponent) + ", " +
                               std::to_string(right_exponent) + ")");
}

double evaluate(const CompositeFunction& f, double x) {
    double s = 0.0;
    for (const auto& term : f) s += term(x);
    return s;
}

}  // namespace tfspec
