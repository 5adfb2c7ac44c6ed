#pragma once

namespace rpl {

/// Parameters of the Orlicz class generated by Phi(t) = t^q log^-alpha(a + t).
/// Construction validates the ranges and checks that Phi is increasing and
/// convex by midpoint sampling on a log grid; for large alpha the offset a = e
/// genuinely breaks convexity, so with_convex_const() escalates a through
/// powers of e until the sampled check passes.
struct ZygmundParams {
    double q;        // > 1
    double alpha;    // > 0
    double a_const;  // >= e
    double eps0;     // integration window endpoint, in (0, q-1]

    ZygmundParams(double q, double alpha);
    ZygmundParams(double q, double alpha, double a_const, double eps0);

    static ZygmundParams with_convex_const(double q, double alpha);

    double phi(double t) const;
    /// log Phi(e^m), stable for any m including very large heights.
    double log_phi(double m) const;
};

/// log(a + e^m) without overflow.
double log_a_plus_exp(double a, double m);

} // namespace rpl
