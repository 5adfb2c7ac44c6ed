#include "rpl/samples.hpp"

#include <cmath>
#include <limits>

#include "rpl/errors.hpp"

namespace rpl {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

SampleSet SampleSet::from_triangle_values(const Grid& grid, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != grid.triangle_count())
        throw InvalidParameter("sample set needs one magnitude per triangle");
    SampleSet s;
    const double logw = std::log(grid.triangle_area());
    s.log_value_.reserve(values.size());
    s.log_weight_.reserve(values.size());
    for (double v : values) {
        if (!std::isfinite(v)) throw InvalidParameter("non-finite magnitude sample");
        const double m = std::fabs(v);
        s.log_value_.push_back(m > 0.0 ? std::log(m) : kNegInf);
        s.log_weight_.push_back(logw);
    }
    return s;
}

SampleSet SampleSet::from_magnitudes(const VectorField& F) {
    return from_triangle_values(F.grid(), F.magnitudes());
}

SampleSet SampleSet::from_log(std::vector<double> log_values, std::vector<double> log_weights) {
    if (log_values.size() != log_weights.size())
        throw InvalidParameter("log value/weight arrays differ in length");
    for (size_t i = 0; i < log_values.size(); ++i) {
        if (std::isnan(log_values[i]) || log_values[i] == std::numeric_limits<double>::infinity())
            throw InvalidParameter("log magnitude must be finite or -inf");
        if (std::isnan(log_weights[i]) || log_weights[i] == std::numeric_limits<double>::infinity())
            throw InvalidParameter("log weight must be finite or -inf");
    }
    SampleSet s;
    s.log_value_ = std::move(log_values);
    s.log_weight_ = std::move(log_weights);
    return s;
}

void SampleSet::add(double log_value, double log_weight) {
    if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity())
        throw InvalidParameter("log magnitude must be finite or -inf");
    if (std::isnan(log_weight) || log_weight == std::numeric_limits<double>::infinity())
        throw InvalidParameter("log weight must be finite or -inf");
    log_value_.push_back(log_value);
    log_weight_.push_back(log_weight);
}

void SampleSet::add_linear(double value, double weight) {
    if (!(weight > 0.0)) throw InvalidParameter("sample weight must be positive");
    const double m = std::fabs(value);
    add(m > 0.0 ? std::log(m) : kNegInf, std::log(weight));
}

double SampleSet::total_measure() const {
    double best = kNegInf;
    for (double w : log_weight_) best = std::max(best, w);
    if (best == kNegInf) return 0.0;
    double sum = 0.0;
    for (double w : log_weight_) sum += std::exp(w - best);
    return std::exp(best) * sum;
}

} // namespace rpl
