#include "rpl/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "rpl/errors.hpp"

namespace rpl {
namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open config file " + path);
    return parse(in, path);
}

Config Config::parse(std::istream& in, const std::string& name) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter(name + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw InvalidParameter(name + ":" + std::to_string(lineno) + ": empty key");
        try {
            size_t used = 0;
            const double v = std::stod(val, &used);
            if (used != val.size() || !std::isfinite(v)) throw std::invalid_argument("bad");
            cfg.values_[key] = v;
        } catch (const std::exception&) {
            throw InvalidParameter(name + ":" + std::to_string(lineno) + ": value '" + val +
                                   "' is not a number");
        }
    }
    return cfg;
}

double Config::get(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

Thresholds Thresholds::from_config(const Config& cfg) {
    Thresholds t;
    t.embedding_slack = cfg.get("embedding_slack", t.embedding_slack);
    t.hodge_residual_max = cfg.get("hodge_residual_max", t.hodge_residual_max);
    t.energy_ratio_max = cfg.get("energy_ratio_max", t.energy_ratio_max);
    t.uniqueness_diff_tol = cfg.get("uniqueness_diff_tol", t.uniqueness_diff_tol);
    t.uniqueness_profile_drop = cfg.get("uniqueness_profile_drop", t.uniqueness_profile_drop);
    t.homogeneity_tol = cfg.get("homogeneity_tol", t.homogeneity_tol);
    t.stability_monotone_slack = cfg.get("stability_monotone_slack", t.stability_monotone_slack);
    t.stability_decade_band = cfg.get("stability_decade_band", t.stability_decade_band);
    t.comparison_band = cfg.get("comparison_band", t.comparison_band);
    t.cauchy_final_rel = cfg.get("cauchy_final_rel", t.cauchy_final_rel);
    t.solver_tol = cfg.get("solver_tol", t.solver_tol);
    return t;
}

} // namespace rpl
