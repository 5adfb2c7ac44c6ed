#include "rpl/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Core>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// 6-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlx[6] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                            0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
constexpr double kGlw[6] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                            0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

double lse2(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double m = std::max(a, b);
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

} // namespace

NormEvaluator::NormEvaluator(const SampleSet& samples) {
    const auto& lv = samples.log_values();
    const auto& lw = samples.log_weights();
    std::vector<int> idx;
    idx.reserve(lv.size());
    for (size_t i = 0; i < lv.size(); ++i)
        if (lv[i] != kNegInf && lw[i] != kNegInf) idx.push_back(static_cast<int>(i));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lv[a] < lv[b]; });
    logv_.reserve(idx.size());
    logw_.reserve(idx.size());
    for (int i : idx) {
        logv_.push_back(lv[i]);
        logw_.push_back(lw[i]);
    }
}

double NormEvaluator::log_moment(double s) const {
    if (!(s > 0.0)) throw InvalidParameter("moment exponent must be positive");
    if (logv_.empty()) return kNegInf;
    const auto n = static_cast<Eigen::Index>(logv_.size());
    Eigen::Map<const Eigen::ArrayXd> lv(logv_.data(), n), lw(logw_.data(), n);
    Eigen::ArrayXd m = lw + s * lv;
    const double top = m.maxCoeff();
    if (top == kNegInf) return kNegInf;
    return top + std::log((m - top).exp().sum());
}

double NormEvaluator::lebesgue(double s) const {
    if (logv_.empty()) return 0.0;
    return std::exp(log_moment(s) / s);
}

double NormEvaluator::marcinkiewicz(double p) const {
    if (!(p > 0.0)) throw InvalidParameter("weak-norm exponent must be positive");
    if (logv_.empty()) return 0.0;
    double best = kNegInf;
    double cum = kNegInf; // log of the measure above the current level
    for (int k = static_cast<int>(logv_.size()) - 1; k >= 0; --k) {
        cum = lse2(cum, logw_[k]);
        const bool last_of_level = (k == 0) || (logv_[k - 1] != logv_[k]);
        if (last_of_level) best = std::max(best, p * logv_[k] + cum);
    }
    return std::exp(best / p);
}

double NormEvaluator::grand(double p, double alpha, int grid_points) const {
    if (!(p > 1.0)) throw InvalidParameter("grand-norm exponent must exceed 1");
    if (!(alpha > 0.0)) throw InvalidParameter("grand-norm alpha must be positive");
    if (grid_points < 2) throw InvalidParameter("grand-norm grid needs at least 2 points");
    if (logv_.empty()) return 0.0;
    const double lo = std::log(1e-6), hi = std::log(p - 1.0);
    double best = 0.0;
    for (int k = 0; k < grid_points; ++k) {
        const double eps = std::exp(lo + (hi - lo) * k / (grid_points - 1));
        const double s = p - eps;
        best = std::max(best, std::exp((alpha / p) * std::log(eps) + log_moment(s) / s));
    }
    return best;
}

double NormEvaluator::luxemburg(const ZygmundParams& zp) const {
    if (logv_.empty()) return 0.0;
    const auto n = static_cast<Eigen::Index>(logv_.size());
    Eigen::Map<const Eigen::ArrayXd> lv(logv_.data(), n), lw(logw_.data(), n);

    // log of avg Phi(|g| / lambda); strictly decreasing in log lambda.
    auto surplus = [&](double loglam) {
        const double mmax = logv_.back() - loglam;
        double top;
        Eigen::ArrayXd terms(n);
        if (mmax <= 40.0) {
            terms = lw + zp.q * (lv - loglam) -
                    zp.alpha * (zp.a_const + (lv - loglam).exp()).log().log();
            top = terms.maxCoeff();
        } else {
            top = kNegInf;
            for (Eigen::Index i = 0; i < n; ++i) {
                terms[i] = lw[i] + zp.log_phi(lv[i] - loglam);
                top = std::max(top, terms[i]);
            }
        }
        if (top == kNegInf) return kNegInf;
        return top + std::log((terms - top).exp().sum());
    };

    double guess = log_moment(zp.q) / zp.q;
    double lo, hi;
    if (surplus(guess) > 0.0) {
        lo = guess;
        double step = 1.0;
        hi = guess + step;
        while (surplus(hi) > 0.0) {
            step *= 2.0;
            hi += step;
            if (step > 1e6) throw InvalidParameter("Luxemburg bracket ran away");
        }
    } else {
        hi = guess;
        double step = 1.0;
        lo = guess - step;
        while (surplus(lo) <= 0.0) {
            step *= 2.0;
            lo -= step;
            if (step > 1e6) return 0.0; // avg Phi stays below 1 for every lambda
        }
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (surplus(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

double NormEvaluator::zygmund(const ZygmundParams& zp, int panels) const {
    if (panels < 1) throw InvalidParameter("quadrature needs at least one panel");
    if (logv_.empty()) return 0.0;
    const double T = std::pow(zp.eps0, zp.alpha);
    double integral = 0.0;
    double right = T;
    for (int j = 0; j < panels; ++j) {
        const double left = (j + 1 < panels) ? right * 0.5 : 0.0;
        if (right <= left) break;
        const double mid = 0.5 * (left + right), hw = 0.5 * (right - left);
        for (int g = 0; g < 6; ++g) {
            const double t = mid + hw * kGlx[g];
            const double eps = std::pow(t, 1.0 / zp.alpha);
            const double s = zp.q - eps;
            integral += hw * kGlw[g] * std::exp(zp.q * log_moment(s) / s);
        }
        right = left;
    }
    return std::pow(integral / zp.alpha, 1.0 / zp.q);
}

std::vector<std::pair<double, double>> NormEvaluator::epsilon_profile(const ZygmundParams& zp,
                                                                      int points,
                                                                      double eps_min) const {
    if (points < 2 || !(eps_min > 0.0) || !(eps_min < zp.eps0))
        throw InvalidParameter("bad epsilon profile grid");
    std::vector<std::pair<double, double>> rows;
    rows.reserve(points);
    const double hi = std::log(zp.eps0), lo = std::log(eps_min);
    for (int k = 0; k < points; ++k) {
        const double eps = std::exp(hi + (lo - hi) * k / (points - 1));
        const double s = zp.q - eps;
        const double v = logv_.empty()
                             ? 0.0
                             : std::exp((zp.alpha / zp.q) * std::log(eps) + log_moment(s) / s);
        rows.emplace_back(eps, v);
    }
    return rows;
}

double lebesgue_avg_norm(const SampleSet& g, double p) { return NormEvaluator(g).lebesgue(p); }
double marcinkiewicz_norm(const SampleSet& g, double p) {
    return NormEvaluator(g).marcinkiewicz(p);
}
double grand_lebesgue_norm(const SampleSet& g, double p, double alpha) {
    return NormEvaluator(g).grand(p, alpha);
}
double luxemburg_norm(const SampleSet& g, const ZygmundParams& zp) {
    return NormEvaluator(g).luxemburg(zp);
}
double zygmund_norm(const SampleSet& g, const ZygmundParams& zp) {
    return NormEvaluator(g).zygmund(zp);
}
std::vector<std::pair<double, double>> epsilon_profile(const SampleSet& g,
                                                       const ZygmundParams& zp) {
    return NormEvaluator(g).epsilon_profile(zp);
}

SampleSet spike_field(double eps, const ZygmundParams& zp, const Grid& grid) {
    if (!(eps > 0.0)) throw InvalidParameter("spike needs eps > 0");
    const double log_height = 1.0 / eps;
    const double log_measure = -zp.log_phi(log_height);
    if (!(log_measure < 0.0))
        throw InvalidParameter("spike set would exceed the domain; eps too large");

    SampleSet s;
    const double area = grid.triangle_area();
    const double measure = std::exp(log_measure); // may underflow; handled below
    int full = 0;
    if (measure >= area) {
        full = static_cast<int>(measure / area);
        if (full >= grid.triangle_count()) full = grid.triangle_count() - 1;
        for (int t = 0; t < full; ++t) s.add(log_height, std::log(area));
        const double frac = measure - full * area;
        if (frac > 0.0) s.add(log_height, std::log(frac));
    } else {
        // below one triangle: a single fractional-weight triangle, exact in log form
        s.add(log_height, log_measure);
    }
    // remainder of the domain carries the value 0
    s.add(kNegInf, std::log1p(-measure));
    return s;
}

NormReport norm_report(const SampleSet& g, const ZygmundParams& zp) {
    NormEvaluator ev(g);
    NormReport r{zp};
    r.luxemburg = ev.luxemburg(zp);
    r.zygmund = ev.zygmund(zp);
    r.grand = ev.grand(zp.q, zp.alpha);
    const int points = 40;
    const double hi = std::log(zp.eps0), lo = std::log(1e-6);
    for (int k = 0; k < points; ++k) {
        const double eps = std::exp(hi + (lo - hi) * k / (points - 1));
        r.lebesgue_table.emplace_back(eps, ev.lebesgue(zp.q - eps));
    }
    return r;
}

} // namespace rpl
