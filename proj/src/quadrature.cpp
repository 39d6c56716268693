#include "dengfan/quadrature.hpp"

#include "dengfan/errors.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace dengfan {

namespace {

constexpr unsigned kMaxDepth = 20;

void check(const QuadratureResult& r, double rel_tol, const char* rule) {
    if (!std::isfinite(r.value)) {
        throw ConvergenceError(std::string(rule) + ": non-finite integral");
    }
    // Slack of 10x: the rules' own estimates are pessimistic near convergence.
    if (r.error_estimate > 10.0 * rel_tol * std::abs(r.value) && r.error_estimate > 1e-300) {
        std::ostringstream msg;
        msg << rule << ": error estimate " << r.error_estimate << " exceeds tolerance " << rel_tol
            << " relative to value " << r.value << " after " << r.levels << " levels";
        throw ConvergenceError(msg.str());
    }
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol) {
    using boost::math::quadrature::gauss_kronrod;
    QuadratureResult r;
    double l1 = 0.0;
    r.value = gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, rel_tol, &r.error_estimate, &l1);
    r.levels = static_cast<int>(kMaxDepth);
    check(r, rel_tol, "gauss-kronrod");
    return r;
}

QuadratureResult integrate_endpoint_singular(const std::function<double(double)>& f, double a, double b,
                                             double rel_tol) {
    boost::math::quadrature::tanh_sinh<double> rule;
    QuadratureResult r;
    double l1 = 0.0;
    std::size_t levels = 0;
    r.value = rule.integrate(f, a, b, rel_tol, &r.error_estimate, &l1, &levels);
    r.levels = static_cast<int>(levels);
    check(r, rel_tol, "tanh-sinh");
    return r;
}

} // namespace dengfan
