#include "rpl/plaplace_operator.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "rpl/calculus.hpp"
#include "rpl/errors.hpp"

namespace rpl {

std::array<double, 2> SymMatrix2::eigenvalues() const {
    const double mid = 0.5 * (a11 + a22);
    const double disc = std::hypot(0.5 * (a11 - a22), a12);
    return {mid - disc, mid + disc};
}

double SymMatrix2::deviation_from_identity() const {
    const auto ev = eigenvalues();
    return std::max(std::fabs(ev[0] - 1.0), std::fabs(ev[1] - 1.0));
}

OperatorSpec OperatorSpec::identity(double p, double delta_reg) {
    OperatorSpec s;
    s.p = p;
    s.delta_reg = delta_reg;
    return s;
}

OperatorSpec OperatorSpec::with_coefficient(double p, std::vector<SymMatrix2> A, double a_ell,
                                            double b_ell, double delta_reg) {
    OperatorSpec s;
    s.p = p;
    s.A = std::move(A);
    s.a_ell = a_ell;
    s.b_ell = b_ell;
    s.delta_reg = delta_reg;
    return s;
}

void OperatorSpec::validate(const Grid& grid) const {
    if (!(p >= 2.0)) throw InvalidParameter("growth exponent p must be at least 2");
    if (!(a_ell > 0.0 && a_ell <= b_ell))
        throw InvalidParameter("ellipticity constants need 0 < a <= b");
    if (!(delta_reg >= 0.0)) throw InvalidParameter("regularization delta must be >= 0");
    if (A.empty()) {
        if (a_ell > 1.0 + 1e-12 || b_ell < 1.0 - 1e-12)
            throw InvalidParameter("identity coefficient needs a <= 1 <= b");
        return;
    }
    if (static_cast<int>(A.size()) != grid.triangle_count())
        throw InvalidParameter("coefficient field needs one matrix per triangle");
    const double lo = std::pow(a_ell, 2.0 / p) * (1.0 - 1e-12);
    const double hi = std::pow(b_ell, 2.0 / p) * (1.0 + 1e-12);
    for (size_t t = 0; t < A.size(); ++t) {
        const auto ev = A[t].eigenvalues();
        if (ev[0] < lo || ev[1] > hi)
            throw InvalidParameter("coefficient eigenvalues [" + std::to_string(ev[0]) + ", " +
                                   std::to_string(ev[1]) + "] on triangle " + std::to_string(t) +
                                   " leave [a^{2/p}, b^{2/p}]");
    }
}

namespace {
const SymMatrix2 kIdentity = SymMatrix2::identity();
}

const SymMatrix2& OperatorSpec::coef(int t) const {
    return A.empty() ? kIdentity : A[static_cast<size_t>(t)];
}

Vec2 operator_eval(const OperatorSpec& spec, int t, const Vec2& xi) {
    const SymMatrix2& M = spec.coef(t);
    const Vec2 w = M.apply(xi);
    const double s = dot(w, xi) + spec.delta_reg * spec.delta_reg;
    if (s == 0.0) return {0.0, 0.0};
    return std::pow(s, 0.5 * (spec.p - 2.0)) * w;
}

VectorField apply_operator(const OperatorSpec& spec, const VectorField& xi) {
    VectorField out(xi.grid());
    for (int t = 0; t < xi.size(); ++t) out[t] = operator_eval(spec, t, xi[t]);
    return out;
}

double characteristic(const OperatorSpec& spec, const Grid& grid) {
    if (spec.identity_coefficient()) return 1.0;
    if (static_cast<int>(spec.A.size()) != grid.triangle_count())
        throw InvalidParameter("coefficient field needs one matrix per triangle");
    double dev = 0.0;
    for (const auto& M : spec.A) dev = std::max(dev, M.deviation_from_identity());
    return std::pow(1.0 + dev, spec.p / 2.0);
}

StructureReport structure_check(const OperatorSpec& spec, const Grid& grid, int n_samples,
                                unsigned seed) {
    spec.validate(grid);
    StructureReport rep;
    rep.samples = n_samples;
    rep.kappa_p = std::pow(2.0, 2.0 - spec.p) / (spec.p - 1.0);
    rep.min_coercivity_ratio = 1e300;
    rep.min_monotonicity_ratio = 1e300;
    rep.min_monotonicity_vs_a = 1e300;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
    std::uniform_real_distribution<double> decade(-3.0, 3.0);
    std::uniform_int_distribution<int> tri(0, grid.triangle_count() - 1);
    std::uniform_int_distribution<int> special(0, 9);

    auto rand_vec = [&] {
        const double th = angle(rng);
        const double r = std::pow(10.0, decade(rng));
        return Vec2{r * std::cos(th), r * std::sin(th)};
    };

    const double slack = 1.0 - 1e-12;
    for (int k = 0; k < n_samples; ++k) {
        const int t = tri(rng);
        Vec2 xi = rand_vec();
        Vec2 eta = rand_vec();
        switch (special(rng)) {
        case 0: eta = xi * std::pow(10.0, 0.3 * decade(rng)); break;     // parallel
        case 1: eta = xi * -1.0; break;                                  // antipodal
        case 2: eta = Vec2{-xi.y, xi.x} * norm(eta) * (1.0 / norm(xi)); break; // perpendicular
        default: break;
        }

        const double nx = norm(xi), ne = norm(eta);
        if (nx > 0.0) {
            const Vec2 ax = operator_eval(spec, t, xi);
            const double coer = dot(ax, xi) / (spec.a_ell * std::pow(nx, spec.p));
            rep.min_coercivity_ratio = std::min(rep.min_coercivity_ratio, coer);
            if (coer < slack) {
                std::ostringstream os;
                os << "coercivity violated on triangle " << t << " at xi = (" << xi.x << ", "
                   << xi.y << "): ratio " << coer;
                throw StructureViolation(os.str());
            }
        }

        const Vec2 d = xi - eta;
        const double nd = norm(d);
        if (nd < 1e-14 * (nx + ne) || nx + ne == 0.0) continue;
        const double base = nd * nd * std::pow(nx + ne, spec.p - 2.0);
        if (!(base > 0.0) || !std::isfinite(base)) continue;
        const Vec2 diff = operator_eval(spec, t, xi) - operator_eval(spec, t, eta);
        const double mono = dot(diff, d);
        const double vs_a = mono / (spec.a_ell * base);
        const double vs_kappa = vs_a / rep.kappa_p;
        rep.min_monotonicity_vs_a = std::min(rep.min_monotonicity_vs_a, vs_a);
        rep.min_monotonicity_ratio = std::min(rep.min_monotonicity_ratio, vs_kappa);
        if (vs_kappa < slack) {
            std::ostringstream os;
            os << "monotonicity below a*kappa_p on triangle " << t << " at xi = (" << xi.x
               << ", " << xi.y << "), eta = (" << eta.x << ", " << eta.y << "): ratio "
               << vs_kappa;
            throw StructureViolation(os.str());
        }
        const double lip =
            norm(diff) / (spec.b_ell * nd * std::pow(nx + ne, spec.p - 2.0));
        rep.max_lipschitz_factor = std::max(rep.max_lipschitz_factor, lip);
    }
    return rep;
}

double energy(const OperatorSpec& spec, const ScalarField& u, const VectorField& f) {
    require_same_grid(u.grid(), f.grid(), "energy");
    const Grid& g = u.grid();
    const VectorField gr = gradient(u);
    const double d2 = spec.delta_reg * spec.delta_reg;
    const double area = g.triangle_area();
    double e = 0.0;
    for (int t = 0; t < g.triangle_count(); ++t) {
        const double s = spec.coef(t).quad(gr[t]) + d2;
        e += area * (std::pow(s, 0.5 * spec.p) / spec.p - dot(f[t], gr[t]));
    }
    return e;
}

} // namespace rpl
