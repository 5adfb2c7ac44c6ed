#pragma once

#include <utility>
#include <vector>

#include "rpl/samples.hpp"
#include "rpl/zygmund.hpp"

namespace rpl {

/// One-time preprocessing of a sample set (drop zeros, sort, cache log arrays)
/// shared by every norm evaluation.  All reductions run in log space so spike
/// fields with astronomically large heights and small set measures are exact.
class NormEvaluator {
public:
    explicit NormEvaluator(const SampleSet& samples);

    /// log of the integral of |g|^s (s > 0).
    double log_moment(double s) const;

    /// Averaged Lebesgue norm over the unit-measure domain.
    double lebesgue(double s) const;

    /// Weak-type norm sup_t t mu{|g| > t}^{1/p}, exact: the sup equals the
    /// maximum of level * mu{|g| >= level}^{1/p} over the distinct levels.
    double marcinkiewicz(double p) const;

    /// sup over a log-spaced eps grid in [1e-6, p-1] of
    /// eps^{alpha/p} * lebesgue(p - eps).
    double grand(double p, double alpha, int grid_points = 200) const;

    /// Luxemburg gauge inf{lambda : avg Phi(|g|/lambda) <= 1}, by bisection on
    /// log lambda to relative tolerance 1e-10.
    double luxemburg(const ZygmundParams& zp) const;

    /// ( int_0^eps0 eps^{alpha-1} lebesgue(q-eps)^q d eps )^{1/q}.  The weight
    /// singularity is removed exactly by substituting t = eps^alpha; the t
    /// integral uses composite Gauss-Legendre with panels geometrically graded
    /// toward 0, which also absorbs the t^{1/alpha} composition kink.
    double zygmund(const ZygmundParams& zp, int panels = 64) const;

    /// Rows (eps, eps^{alpha/q} * lebesgue(q-eps)) over a decreasing eps grid
    /// from eps0 down to eps_min.
    std::vector<std::pair<double, double>> epsilon_profile(const ZygmundParams& zp,
                                                           int points = 40,
                                                           double eps_min = 1e-6) const;

    bool empty() const { return logv_.empty(); }

private:
    std::vector<double> logv_;  // nonzero samples, ascending
    std::vector<double> logw_;
};

double lebesgue_avg_norm(const SampleSet& g, double p);
double marcinkiewicz_norm(const SampleSet& g, double p);
double grand_lebesgue_norm(const SampleSet& g, double p, double alpha);
double luxemburg_norm(const SampleSet& g, const ZygmundParams& zp);
double zygmund_norm(const SampleSet& g, const ZygmundParams& zp);
std::vector<std::pair<double, double>> epsilon_profile(const SampleSet& g,
                                                       const ZygmundParams& zp);

/// Field equal to e^{1/eps} on a set sized so that avg Phi(|f|) = 1 exactly,
/// zero elsewhere.  The set is whole triangles plus one fractional-weight
/// triangle carrying the residual measure, so the unit Luxemburg norm holds by
/// construction even when the measure is far below a single triangle.
SampleSet spike_field(double eps, const ZygmundParams& zp, const Grid& grid);

struct NormReport {
    ZygmundParams params;
    double luxemburg = 0.0;
    double zygmund = 0.0;
    double grand = 0.0;
    std::vector<std::pair<double, double>> lebesgue_table;  // (eps, lebesgue(q-eps))
};

NormReport norm_report(const SampleSet& g, const ZygmundParams& zp);

} // namespace rpl
