#pragma once

#include <istream>
#include <map>
#include <string>

namespace rpl {

/// key=value configuration with '#' comments and blank lines ignored.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse(std::istream& in, const std::string& name);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    double get(const std::string& key, double fallback) const;

private:
    std::map<std::string, double> values_;
};

/// Pass/fail levels for the verification modes. The in-code defaults are the
/// shipped acceptance levels; a config file may override any of them.
struct Thresholds {
    double embedding_slack = 1e-10;
    double hodge_residual_max = 1e-10;
    double energy_ratio_max = 100.0;
    double uniqueness_diff_tol = 1e-8;
    double uniqueness_profile_drop = 0.5;
    double homogeneity_tol = 1e-10;
    double stability_monotone_slack = 0.05;
    double stability_decade_band = 10.0;
    double comparison_band = 10.0;
    double cauchy_final_rel = 0.01;
    double solver_tol = 1e-10;

    static Thresholds from_config(const Config& cfg);
};

} // namespace rpl
