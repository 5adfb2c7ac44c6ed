#include "rpl/solver.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "rpl/calculus.hpp"
#include "rpl/errors.hpp"
#include "rpl/hodge.hpp"
#include "rpl/norms.hpp"

namespace rpl {

namespace {

// Flux derivative at one triangle: s^{(p-2)/2} A + (p-2) s^{(p-4)/2} (A xi)(A xi)^T
// with s = <A xi, xi> + delta^2; SPD whenever delta > 0.
SymMatrix2 tangent_weight(const OperatorSpec& spec, int t, const Vec2& xi, double delta) {
    const SymMatrix2& M = spec.coef(t);
    const Vec2 w = M.apply(xi);
    const double s = dot(w, xi) + delta * delta;
    if (s == 0.0) return {0.0, 0.0, 0.0}; // only reachable at delta = 0, xi = 0, p > 2
    const double c0 = std::pow(s, 0.5 * (spec.p - 2.0));
    const double c1 = (spec.p - 2.0) * std::pow(s, 0.5 * (spec.p - 4.0));
    return {c0 * M.a11 + c1 * w.x * w.x, c0 * M.a12 + c1 * w.x * w.y,
            c0 * M.a22 + c1 * w.y * w.y};
}

ScalarField residual_at(const OperatorSpec& spec, double delta, const ScalarField& u,
                        const ScalarField& rhs_f) {
    OperatorSpec reg = spec;
    reg.delta_reg = delta;
    ScalarField r = divergence_weak(apply_operator(reg, gradient(u)));
    r -= rhs_f;
    const Grid& g = u.grid();
    for (int k = 0; k < g.node_count(); ++k)
        if (g.on_boundary(k)) r[k] = 0.0;
    return r;
}

// Energy together with the sum of absolute contributions; the latter sets the
// rounding floor below which energy comparisons are meaningless and the line
// search must not reject a full Newton step.
struct EnergyEval {
    double value = 0.0;
    double abs_scale = 0.0;
};

EnergyEval energy_terms(const OperatorSpec& spec, double delta, const ScalarField& u,
                        const VectorField& f) {
    const Grid& g = u.grid();
    const VectorField gr = gradient(u);
    const double area = g.triangle_area();
    EnergyEval e;
    for (int t = 0; t < g.triangle_count(); ++t) {
        const Vec2 xi = gr[t];
        const double s = dot(spec.coef(t).apply(xi), xi) + delta * delta;
        const double bulk = std::pow(s, 0.5 * spec.p) / spec.p;
        const double load = dot(f[t], xi);
        e.value += area * (bulk - load);
        e.abs_scale += area * (bulk + std::fabs(load));
    }
    return e;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

ScalarField initial_guess(const OperatorSpec& spec, const VectorField& f,
                          const ScalarField& boundary, const SolveOptions& opts) {
    const Grid& g = f.grid();
    switch (opts.start) {
    case SolveOptions::Start::Zero:
        return boundary; // boundary trace with untouched (given) interior? see below
    case SolveOptions::Start::Random: {
        ScalarField u = boundary;
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        for (int k = 0; k < g.node_count(); ++k)
            if (!g.on_boundary(k)) u[k] = unit(rng);
        return u;
    }
    case SolveOptions::Start::Given: {
        if (!opts.initial) throw InvalidParameter("Start::Given needs an initial field");
        require_same_grid(g, opts.initial->grid(), "initial guess");
        ScalarField u = *opts.initial;
        for (int k = 0; k < g.node_count(); ++k)
            if (g.on_boundary(k)) u[k] = boundary[k];
        return u;
    }
    case SolveOptions::Start::Lifted:
    default: {
        // one linear solve with the coefficient as weight; exact for p = 2
        std::vector<SymMatrix2> W(static_cast<size_t>(g.triangle_count()));
        for (int t = 0; t < g.triangle_count(); ++t) W[t] = spec.coef(t);
        return solve_spd_system(g, W, divergence_weak(f), boundary, 1e-10, opts.max_inner);
    }
    }
}

} // namespace

ScalarField weak_residual(const OperatorSpec& spec, const ScalarField& u,
                          const VectorField& f) {
    require_same_grid(u.grid(), f.grid(), "weak residual");
    return residual_at(spec, spec.delta_reg, u, divergence_weak(f));
}

SolveResult solve_dirichlet(const OperatorSpec& spec, const VectorField& f,
                            const ScalarField& boundary, double tol,
                            const SolveOptions& opts) {
    const Grid& g = f.grid();
    spec.validate(g);
    require_same_grid(g, boundary.grid(), "solve boundary");
    if (!(tol > 0.0)) throw InvalidParameter("solver tolerance must be positive");

    const ScalarField rhs_f = divergence_weak(f);
    const double target = tol * (1.0 + f.max_magnitude());

    ScalarField u = initial_guess(spec, f, boundary, opts);
    if (opts.start == SolveOptions::Start::Zero) {
        for (int k = 0; k < g.node_count(); ++k)
            if (!g.on_boundary(k)) u[k] = 0.0;
    }

    const double delta_final = std::max(spec.delta_reg, opts.delta_min);
    std::vector<double> deltas;
    for (double d = std::max(1.0, delta_final); d > delta_final * 1.0000001; d *= 0.5)
        deltas.push_back(d);
    deltas.push_back(delta_final);

    int newton = 0;
    // A start that already meets the caller's residual target needs no
    // continuation at all; this makes warm starts from a previous solution
    // (or an exact linear lift) free.  The gate applies only on entry: once
    // the continuation is underway every level must run, because intermediate
    // iterates certify against their own regularization, not the caller's.
    double rmax = residual_at(spec, spec.delta_reg, u, rhs_f).max_abs();
    const bool start_certified = rmax <= target;
    for (size_t lev = 0; !start_certified && lev < deltas.size(); ++lev) {
        double delta = deltas[lev];
        const bool last = (lev + 1 == deltas.size());
        const double level_target = last ? target : std::max(target, 1e-6 * (1.0 + f.max_magnitude()));
        int bad_steps = 0;

        for (;;) {
            ScalarField R = residual_at(spec, delta, u, rhs_f);
            rmax = R.max_abs();
            if (rmax <= level_target) break;
            if (newton >= opts.max_newton)
                throw SolverFailure("Newton cap of " + std::to_string(opts.max_newton) +
                                        " steps hit at residual " + fmt(rmax),
                                    rmax, newton, u.values());

            VectorField gr = gradient(u);
            std::vector<SymMatrix2> W(static_cast<size_t>(g.triangle_count()));
            for (int t = 0; t < g.triangle_count(); ++t)
                W[t] = tangent_weight(spec, t, gr[t], delta);

            ScalarField minusR = R;
            minusR *= -1.0;
            SpdSolveInfo inner;
            ScalarField d = solve_spd_system(g, W, minusR, ScalarField(g), 1e-12,
                                             opts.max_inner, &inner);
            const bool tangent_ok = inner.converged || inner.rel_residual < 1e-8;
            const double slope = tangent_ok ? interior_dot(R, d) : 0.0;
            if (!tangent_ok || !std::isfinite(slope)) {
                // tangent too degenerate at this delta; back off toward the
                // better-conditioned end of the continuation once, then give up
                if (++bad_steps > 1 || delta >= deltas.front())
                    throw SolverFailure("tangent solve failed at delta " + fmt(delta) +
                                            ", residual " + fmt(rmax),
                                        rmax, newton, u.values());
                delta = std::min(deltas.front(), delta * 16.0);
                continue;
            }
            // The tangent is positive definite for delta > 0, so a nonnegative
            // slope means stationarity up to rounding; let the certification
            // below judge the iterate.
            if (slope >= 0.0) break;

            const EnergyEval e0 = energy_terms(spec, delta, u, f);
            // Sums of this many terms carry rounding scatter; below it the
            // energy cannot veto a full Newton step.
            const double noise = 4.0 * std::sqrt(static_cast<double>(g.triangle_count())) *
                                 2.2e-16 * e0.abs_scale;
            double step = 1.0;
            ScalarField trial = u;
            bool accepted = false;
            for (int h = 0; h < 60; ++h) {
                trial = u;
                for (int k = 0; k < g.node_count(); ++k)
                    if (!g.on_boundary(k)) trial[k] = u[k] + step * d[k];
                const double et = energy_terms(spec, delta, trial, f).value;
                if (et <= e0.value + 1e-4 * step * slope + noise) {
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) {
                // flat to rounding; residual may already be at the floor
                if (last && rmax > target)
                    throw SolverFailure("line search stalled at residual " + fmt(rmax),
                                        rmax, newton, u.values());
                break;
            }
            u = trial;
            ++newton;
        }
    }

    // certify against the caller's own regularization, not the continuation's
    rmax = residual_at(spec, spec.delta_reg, u, rhs_f).max_abs();
    if (rmax > target)
        throw SolverFailure("final residual " + fmt(rmax) + " exceeds target " + fmt(target),
                            rmax, newton, u.values());

    SolveResult res{std::move(u), newton, rmax, 0.0};
    res.energy = energy(spec, res.u, f);
    return res;
}

VectorField truncate_magnitude(const VectorField& f, double level) {
    if (!(level > 0.0)) throw InvalidParameter("truncation level must be positive");
    VectorField out = f;
    for (int t = 0; t < f.size(); ++t) {
        const double m = norm(f[t]);
        if (m > level) out[t] = f[t] * (level / m);
    }
    return out;
}

std::vector<CauchyRow> cauchy_probe(const OperatorSpec& spec, const VectorField& f,
                                    const std::vector<double>& levels,
                                    const ZygmundParams& data_params, double tol) {
    if (levels.size() < 2) throw InvalidParameter("cauchy probe needs at least two levels");
    for (size_t i = 0; i + 1 < levels.size(); ++i)
        if (!(levels[i] > 0.0 && levels[i] < levels[i + 1]))
            throw InvalidParameter("truncation levels must be positive and increasing");

    const ZygmundParams grad_params =
        ZygmundParams::with_convex_const(spec.p, data_params.alpha);
    const ScalarField zero(f.grid());

    std::vector<VectorField> data;
    std::vector<ScalarField> sols;
    data.reserve(levels.size());
    sols.reserve(levels.size());
    for (double lv : levels) {
        data.push_back(truncate_magnitude(f, lv));
        sols.push_back(solve_dirichlet(spec, data.back(), zero, tol).u);
    }

    std::vector<CauchyRow> rows;
    for (size_t i = 0; i + 1 < levels.size(); ++i) {
        CauchyRow row;
        row.level_lo = levels[i];
        row.level_hi = levels[i + 1];
        const VectorField dg = gradient(sols[i + 1]) - gradient(sols[i]);
        const VectorField df = data[i + 1] - data[i];
        row.grad_increment =
            std::pow(zygmund_norm(SampleSet::from_magnitudes(dg), grad_params), spec.p);
        row.data_increment =
            std::pow(zygmund_norm(SampleSet::from_magnitudes(df), data_params), data_params.q);
        rows.push_back(row);
    }
    return rows;
}

} // namespace rpl
