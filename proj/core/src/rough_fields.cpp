#include "rpl/rough_fields.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rpl/errors.hpp"
#include "rpl/zygmund.hpp"

namespace rpl {
namespace {

RoughRecipe::Kind parse_kind(const std::string& name) {
    if (name == "point-singularity") return RoughRecipe::Kind::PointSingularity;
    if (name == "counterexample-lift") return RoughRecipe::Kind::CounterexampleLift;
    if (name == "smooth-random") return RoughRecipe::Kind::SmoothRandom;
    throw InvalidParameter("unknown rough field kind '" + name +
                           "' (expected point-singularity, counterexample-lift or smooth-random)");
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        if (!std::isfinite(v)) throw std::invalid_argument("nonfinite");
        return v;
    } catch (const std::exception&) {
        throw InvalidParameter("rough field parameter " + key + "=" + text + " is not a number");
    }
}

struct TrigMode {
    double kx, ky, phase, amp;
};

/// The smooth-random recipe is a fixed analytic function of the seed so the
/// same recipe sampled on two grids describes one underlying field.
std::vector<TrigMode> trig_modes(unsigned seed, int modes, int component) {
    std::mt19937 rng(seed * 2654435761u + static_cast<unsigned>(component) * 40503u + 11u);
    std::uniform_int_distribution<int> wave(1, 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<TrigMode> out;
    out.reserve(static_cast<size_t>(modes));
    for (int m = 0; m < modes; ++m) {
        TrigMode tm;
        tm.kx = 2.0 * M_PI * wave(rng);
        tm.ky = 2.0 * M_PI * wave(rng);
        tm.phase = angle(rng);
        tm.amp = gauss(rng) / (1.0 + m);
        out.push_back(tm);
    }
    return out;
}

double eval_modes(const std::vector<TrigMode>& modes, Vec2 x) {
    double v = 0.0;
    for (const TrigMode& tm : modes) v += tm.amp * std::sin(tm.kx * x.x + tm.ky * x.y + tm.phase);
    return v;
}

VectorField point_singularity(const RoughRecipe& r, const Grid& grid) {
    if (r.beta <= 0.0) throw InvalidParameter("point-singularity needs beta > 0");
    VectorField f(grid);
    for (int t = 0; t < grid.triangle_count(); ++t) {
        const Vec2 c = grid.centroid(t);
        const Vec2 d = {c.x - r.x0.x, c.y - r.x0.y};
        const double dist = norm(d);
        if (dist == 0.0) continue;
        const double mag =
            r.amplitude * std::pow(dist, -r.beta) * std::pow(std::log(M_E + 1.0 / dist), -r.s);
        f[t] = d * (mag / dist);
    }
    return f;
}

VectorField counterexample_lift(const RoughRecipe& r, const Grid& grid) {
    if (!(r.eps > 0.0 && r.eps < 1.0))
        throw InvalidParameter("counterexample-lift needs eps in (0, 1)");
    const ZygmundParams zp = ZygmundParams::with_convex_const(r.q, r.alpha);
    // Height and support measure matching the unit-Luxemburg spike; with the
    // huge heights involved only the whole-triangle part is representable,
    // so round the support to at least one triangle.
    const double log_height = 1.0 / r.eps;
    const double log_measure = -zp.log_phi(log_height);
    const double measure = std::exp(log_measure);
    const double area = grid.triangle_area();
    int support = static_cast<int>(std::llround(measure / area));
    support = std::max(1, std::min(support, grid.triangle_count()));
    const double height = log_height > 700.0 ? std::exp(700.0) : std::exp(log_height);
    VectorField f(grid);
    for (int t = 0; t < support; ++t)
        f[t] = Vec2{1.0, 0.0} * (r.amplitude * height);
    return f;
}

VectorField smooth_random(const RoughRecipe& r, const Grid& grid) {
    if (r.modes < 1) throw InvalidParameter("smooth-random needs modes >= 1");
    const std::vector<TrigMode> mx = trig_modes(r.seed, r.modes, 0);
    const std::vector<TrigMode> my = trig_modes(r.seed, r.modes, 1);
    VectorField f(grid);
    for (int t = 0; t < grid.triangle_count(); ++t) {
        const Vec2 c = grid.centroid(t);
        f[t] =
            Vec2{eval_modes(mx, c), eval_modes(my, c)} * r.amplitude;
    }
    return f;
}

} // namespace

RoughRecipe RoughRecipe::parse(const std::string& text) {
    const size_t colon = text.find(':');
    RoughRecipe r;
    r.kind = parse_kind(text.substr(0, colon));
    if (colon == std::string::npos) return r;

    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty()) continue;
        const size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("rough field parameter '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (key == "amplitude") r.amplitude = parse_number(key, val);
        else if (key == "beta") r.beta = parse_number(key, val);
        else if (key == "s") r.s = parse_number(key, val);
        else if (key == "x0") r.x0.x = parse_number(key, val);
        else if (key == "y0") r.x0.y = parse_number(key, val);
        else if (key == "eps") r.eps = parse_number(key, val);
        else if (key == "q") r.q = parse_number(key, val);
        else if (key == "alpha") r.alpha = parse_number(key, val);
        else if (key == "seed") r.seed = static_cast<unsigned>(parse_number(key, val));
        else if (key == "modes") r.modes = static_cast<int>(parse_number(key, val));
        else throw InvalidParameter("unknown rough field parameter '" + key + "'");
    }
    return r;
}

VectorField rough_field(const RoughRecipe& recipe, const Grid& grid) {
    switch (recipe.kind) {
        case RoughRecipe::Kind::PointSingularity: return point_singularity(recipe, grid);
        case RoughRecipe::Kind::CounterexampleLift: return counterexample_lift(recipe, grid);
        case RoughRecipe::Kind::SmoothRandom: return smooth_random(recipe, grid);
    }
    throw InvalidParameter("unknown rough field kind");
}

std::vector<double> lognormal_triangle_values(const Grid& grid, unsigned seed, double sigma) {
    if (!(sigma > 0.0)) throw InvalidParameter("lognormal sigma must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, sigma);
    std::vector<double> out(static_cast<size_t>(grid.triangle_count()));
    for (double& v : out) v = std::exp(gauss(rng));
    return out;
}

} // namespace rpl
