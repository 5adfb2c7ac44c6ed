#include "rpl/zygmund.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

const double kE = std::exp(1.0);

double phi_raw(double t, double q, double alpha, double a) {
    if (t == 0.0) return 0.0;
    return std::exp(q * std::log(t) - alpha * std::log(log_a_plus_exp(a, std::log(t))));
}

// Midpoint convexity and monotonicity of Phi, sampled over [1e-8, 1e8].
bool phi_is_convex(double q, double alpha, double a) {
    const int npts = 800;
    const double lo = std::log(1e-8), hi = std::log(1e8);
    double prev = 0.0;
    for (int k = 0; k + 2 < npts; ++k) {
        const double t1 = std::exp(lo + (hi - lo) * k / (npts - 1));
        const double t2 = std::exp(lo + (hi - lo) * (k + 2) / (npts - 1));
        const double p1 = phi_raw(t1, q, alpha, a);
        const double pm = phi_raw(0.5 * (t1 + t2), q, alpha, a);
        const double pr = 0.5 * (p1 + phi_raw(t2, q, alpha, a));
        if (pm > pr * (1.0 + 1e-12)) return false;
        if (p1 < prev * (1.0 - 1e-12)) return false;
        prev = p1;
    }
    return true;
}

} // namespace

double log_a_plus_exp(double a, double m) {
    if (m > 40.0) {
        const double r = std::exp(-m); // underflows to 0 for huge m, which is fine
        return m + std::log1p(a * r);
    }
    return std::log(a + std::exp(m));
}

ZygmundParams::ZygmundParams(double q, double alpha)
    : ZygmundParams(q, alpha, kE, std::min(q - 1.0, 1.0)) {}

ZygmundParams::ZygmundParams(double q, double alpha, double a_const, double eps0)
    : q(q), alpha(alpha), a_const(a_const), eps0(eps0) {
    if (!(q > 1.0)) throw InvalidParameter("norm exponent q must exceed 1");
    if (!(alpha > 0.0)) throw InvalidParameter("log exponent alpha must be positive");
    if (!(a_const >= kE * (1.0 - 1e-12)))
        throw InvalidParameter("offset a must be at least e");
    if (!(eps0 > 0.0 && eps0 <= q - 1.0))
        throw InvalidParameter("eps0 must lie in (0, q-1]");
    if (!phi_is_convex(q, alpha, a_const))
        throw InvalidParameter(
            "Phi(t) = t^q log^-alpha(a+t) is not convex for q=" + std::to_string(q) +
            " alpha=" + std::to_string(alpha) + " a=" + std::to_string(a_const) +
            "; increase a (see ZygmundParams::with_convex_const)");
}

ZygmundParams ZygmundParams::with_convex_const(double q, double alpha) {
    if (!(q > 1.0)) throw InvalidParameter("norm exponent q must exceed 1");
    if (!(alpha > 0.0)) throw InvalidParameter("log exponent alpha must be positive");
    for (int k = 1; k <= 30; ++k) {
        const double a = std::exp(static_cast<double>(k));
        if (phi_is_convex(q, alpha, a))
            return ZygmundParams(q, alpha, a, std::min(q - 1.0, 1.0));
    }
    throw InvalidParameter("no offset a up to e^30 makes Phi convex for q=" +
                           std::to_string(q) + " alpha=" + std::to_string(alpha));
}

double ZygmundParams::phi(double t) const {
    if (t == 0.0) return 0.0;
    if (!(t > 0.0)) throw InvalidParameter("Phi is defined for t >= 0");
    return std::exp(log_phi(std::log(t)));
}

double ZygmundParams::log_phi(double m) const {
    if (m == -std::numeric_limits<double>::infinity()) return m;
    return q * m - alpha * std::log(log_a_plus_exp(a_const, m));
}

} // namespace rpl
