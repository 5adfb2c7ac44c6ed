#pragma once

#include <vector>

#include "rpl/fields.hpp"

namespace rpl {

/// Weighted magnitude samples over the unit square, kept in log form.
/// Log storage lets the extremal spike families (heights like e^1000 on sets
/// of measure e^-1493) flow through the same norm code as ordinary fields;
/// zero magnitudes are stored as -infinity.  Weights are the measure carried
/// by each sample and normally sum to 1.
class SampleSet {
public:
    SampleSet() = default;

    /// Per-triangle magnitudes, each weighted by the triangle area.
    static SampleSet from_triangle_values(const Grid& grid, const std::vector<double>& values);
    /// Per-triangle |F|, each weighted by the triangle area.
    static SampleSet from_magnitudes(const VectorField& F);
    /// Raw log-domain samples.
    static SampleSet from_log(std::vector<double> log_values, std::vector<double> log_weights);

    void add(double log_value, double log_weight);
    void add_linear(double value, double weight);

    int size() const { return static_cast<int>(log_value_.size()); }
    const std::vector<double>& log_values() const { return log_value_; }
    const std::vector<double>& log_weights() const { return log_weight_; }

    /// Sum of all weights (1 for sets covering the whole domain).
    double total_measure() const;

private:
    std::vector<double> log_value_;
    std::vector<double> log_weight_;
};

} // namespace rpl
