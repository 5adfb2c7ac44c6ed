#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpl/calculus.hpp"
#include "rpl/cli.hpp"
#include "rpl/config.hpp"
#include "rpl/csv.hpp"
#include "rpl/errors.hpp"
#include "rpl/field_io.hpp"
#include "rpl/hodge.hpp"
#include "rpl/norms.hpp"
#include "rpl/parallel.hpp"
#include "rpl/rough_fields.hpp"

using namespace rpl;
namespace fs = std::filesystem;

namespace {

const fs::path& tmp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "rpl-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (tmp_dir() / name).string(); }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

/// Runs the CLI with stdout and stderr redirected so test output stays clean.
struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    CliRun r;
    try {
        r.code = run_cli(args);
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

VectorField smooth_field(const Grid& grid, unsigned seed) {
    return rough_field(RoughRecipe{.kind = RoughRecipe::Kind::SmoothRandom, .seed = seed}, grid);
}

} // namespace

TEST_CASE("config parses comments, blanks and whitespace") {
    std::istringstream in("a = 1\n# full comment\n\n  b\t= 2.5  # tail comment\nc=-3e-2\n");
    const Config cfg = Config::parse(in, "cfg");
    CHECK(cfg.has("a"));
    CHECK(cfg.has("b"));
    CHECK(!cfg.has("missing"));
    CHECK(cfg.get("a", 0.0) == 1.0);
    CHECK(cfg.get("b", 0.0) == 2.5);
    CHECK(cfg.get("c", 0.0) == doctest::Approx(-3e-2));
    CHECK(cfg.get("missing", 7.25) == 7.25);
}

TEST_CASE("config errors carry the file name and line number") {
    std::istringstream a("x 3\n");
    CHECK_THROWS_WITH_AS(Config::parse(a, "cfg"), "cfg:1: expected key=value", InvalidParameter);
    std::istringstream b("# ok\n=3\n");
    CHECK_THROWS_WITH_AS(Config::parse(b, "cfg"), "cfg:2: empty key", InvalidParameter);
    std::istringstream c("k=abc\n");
    CHECK_THROWS_WITH_AS(Config::parse(c, "cfg"), "cfg:1: value 'abc' is not a number",
                         InvalidParameter);
    CHECK_THROWS_AS(Config::parse_file(path_of("no-such-config.cfg")), InvalidParameter);
}

TEST_CASE("thresholds pick up config overrides and keep the rest") {
    const Thresholds defaults;
    CHECK(defaults.embedding_slack == 1e-10);
    CHECK(defaults.comparison_band == 10.0);

    std::istringstream in("comparison_band = 25\nsolver_tol = 1e-8\n");
    const Thresholds th = Thresholds::from_config(Config::parse(in, "cfg"));
    CHECK(th.comparison_band == 25.0);
    CHECK(th.solver_tol == 1e-8);
    CHECK(th.embedding_slack == defaults.embedding_slack);
    CHECK(th.energy_ratio_max == defaults.energy_ratio_max);
    CHECK(th.cauchy_final_rel == defaults.cauchy_final_rel);
}

TEST_CASE("csv formatting quotes only when needed") {
    CHECK(csv_number(0.25) == "0.25");
    CHECK(csv_number(2.0) == "2");
    CHECK(csv_number(1e-10) == "1e-10");
    CHECK(csv_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv_cell("plain") == "plain");
    CHECK(csv_cell("a,b") == "\"a,b\"");
    CHECK(csv_cell("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_cell("two\nlines") == "\"two\nlines\"");

    std::ostringstream out;
    CsvWriter csv(out);
    csv.header({"x", "y"});
    csv.row({"1", "a,b"});
    CHECK(out.str() == "x,y\n1,\"a,b\"\n");
}

TEST_CASE("rough recipe parsing") {
    const RoughRecipe bare = RoughRecipe::parse("smooth-random");
    CHECK(bare.kind == RoughRecipe::Kind::SmoothRandom);
    CHECK(bare.amplitude == 1.0);
    CHECK(bare.seed == 0);

    const RoughRecipe sr = RoughRecipe::parse("smooth-random:seed=9,modes=2,amplitude=0.5");
    CHECK(sr.seed == 9);
    CHECK(sr.modes == 2);
    CHECK(sr.amplitude == 0.5);

    const RoughRecipe ps = RoughRecipe::parse("point-singularity:beta=0.6,s=1,x0=0.25,y0=0.75");
    CHECK(ps.kind == RoughRecipe::Kind::PointSingularity);
    CHECK(ps.beta == 0.6);
    CHECK(ps.s == 1.0);
    CHECK(ps.x0.x == 0.25);
    CHECK(ps.x0.y == 0.75);

    const RoughRecipe cl = RoughRecipe::parse("counterexample-lift:eps=0.05,q=1.5,alpha=2");
    CHECK(cl.kind == RoughRecipe::Kind::CounterexampleLift);
    CHECK(cl.eps == 0.05);
    CHECK(cl.q == 1.5);
    CHECK(cl.alpha == 2.0);

    CHECK_THROWS_AS(RoughRecipe::parse("made-up"), InvalidParameter);
    CHECK_THROWS_AS(RoughRecipe::parse("smooth-random:bogus=1"), InvalidParameter);
    CHECK_THROWS_AS(RoughRecipe::parse("smooth-random:seed"), InvalidParameter);
    CHECK_THROWS_AS(RoughRecipe::parse("smooth-random:seed=abc"), InvalidParameter);
}

TEST_CASE("rough fields are deterministic and validated") {
    const Grid grid(8);
    const VectorField a = smooth_field(grid, 3);
    const VectorField b = smooth_field(grid, 3);
    const VectorField c = smooth_field(grid, 4);
    REQUIRE(a.size() == b.size());
    bool identical = true, differs = false;
    for (int t = 0; t < a.size(); ++t) {
        identical = identical && a[t].x == b[t].x && a[t].y == b[t].y;
        differs = differs || a[t].x != c[t].x || a[t].y != c[t].y;
    }
    CHECK(identical);
    CHECK(differs);

    RoughRecipe bad_beta;
    bad_beta.kind = RoughRecipe::Kind::PointSingularity;
    bad_beta.beta = -1.0;
    CHECK_THROWS_AS(rough_field(bad_beta, grid), InvalidParameter);
    RoughRecipe bad_eps;
    bad_eps.kind = RoughRecipe::Kind::CounterexampleLift;
    bad_eps.eps = 1.5;
    CHECK_THROWS_AS(rough_field(bad_eps, grid), InvalidParameter);
    RoughRecipe bad_modes;
    bad_modes.modes = 0;
    CHECK_THROWS_AS(rough_field(bad_modes, grid), InvalidParameter);

    const auto vals = lognormal_triangle_values(grid, 11, 2.0);
    CHECK(vals.size() == static_cast<size_t>(grid.triangle_count()));
    for (double v : vals) CHECK(v > 0.0);
    CHECK(vals == lognormal_triangle_values(grid, 11, 2.0));
    CHECK(vals != lognormal_triangle_values(grid, 12, 2.0));
    CHECK_THROWS_AS(lognormal_triangle_values(grid, 1, 0.0), InvalidParameter);
}

TEST_CASE("field files round-trip exactly and reject malformed input") {
    const Grid grid(4);
    const VectorField F = smooth_field(grid, 5);
    write_field(path_of("roundtrip-v.txt"), F);
    const VectorField F2 = read_vector_field(path_of("roundtrip-v.txt"));
    REQUIRE(F2.grid() == grid);
    for (int t = 0; t < F.size(); ++t) {
        CHECK(F[t].x == F2[t].x);
        CHECK(F[t].y == F2[t].y);
    }

    const ScalarField u = ScalarField::sample(grid, [](double x, double y) { return x * y - 0.3; });
    write_field(path_of("roundtrip-s.txt"), u);
    const ScalarField u2 = read_scalar_field(path_of("roundtrip-s.txt"));
    for (int i = 0; i < u.size(); ++i) CHECK(u[i] == u2[i]);

    std::string matrix_text = "matrix 2\n";
    for (int t = 0; t < 8; ++t) matrix_text += "1.25 0.1 0.75\n";
    write_text(path_of("m.txt"), matrix_text);
    const MatrixField M = read_matrix_field(path_of("m.txt"));
    REQUIRE(M.values.size() == 8);
    CHECK(M.values[3].a11 == 1.25);
    CHECK(M.values[3].a12 == 0.1);
    CHECK(M.values[3].a22 == 0.75);

    write_text(path_of("bad-header.txt"), "widget 4\n");
    CHECK_THROWS_AS(read_scalar_field(path_of("bad-header.txt")), InvalidParameter);
    write_text(path_of("bad-kind.txt"), "vector 4\n");
    CHECK_THROWS_AS(read_scalar_field(path_of("bad-kind.txt")), InvalidParameter);
    write_text(path_of("short.txt"), "scalar 4\n1\n2\n");
    CHECK_THROWS_WITH_AS(read_scalar_field(path_of("short.txt")),
                         (path_of("short.txt") + ":3: expected 25 data lines, found 2").c_str(),
                         InvalidParameter);
    write_text(path_of("nonnum.txt"), "vector 2\n1 2\n3 x\n");
    CHECK_THROWS_AS(read_vector_field(path_of("nonnum.txt")), InvalidParameter);
    CHECK_THROWS_AS(read_vector_field(path_of("absent.txt")), InvalidParameter);
}

TEST_CASE("worker count respects the thread cap variable") {
    const char* old = std::getenv("ROUGH_PLAPLACE_THREADS");
    const std::string saved = old ? old : "";

    setenv("ROUGH_PLAPLACE_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    setenv("ROUGH_PLAPLACE_THREADS", "0", 1); // invalid, ignored
    CHECK(worker_count() >= 1);

    if (old) setenv("ROUGH_PLAPLACE_THREADS", saved.c_str(), 1);
    else unsetenv("ROUGH_PLAPLACE_THREADS");
}

TEST_CASE("parallel for covers every index once and rethrows") {
    const int count = 997;
    std::vector<int> hits(count, 0);
    parallel_for(count, [&](int i) { hits[i] += 1; });
    for (int i = 0; i < count; ++i) CHECK(hits[i] == 1);

    parallel_for(0, [&](int) { throw std::runtime_error("never runs"); });
    CHECK_THROWS_AS(parallel_for(8,
                                 [](int i) {
                                     if (i == 3) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}

TEST_CASE("cli help and parse failures") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 1);
    CHECK(cli({"made-up-command"}).code == 1);
    CHECK(cli({"norms"}).code == 1);                       // missing required options
    CHECK(cli({"norms", "--field", "x", "--q", "1.5", "--which", "median"}).code == 1);
    CHECK(cli({"verify", "made-up-mode"}).code == 1);
}

TEST_CASE("cli norms matches the library on a stored vector field") {
    const Grid grid(8);
    const VectorField F = smooth_field(grid, 3);
    write_field(path_of("norms-f.txt"), F);
    const SampleSet samples = SampleSet::from_magnitudes(F);

    const CliRun leb = cli({"norms", "--field", path_of("norms-f.txt"), "--q", "1.5", "--which",
                            "lebesgue", "--out", path_of("leb.csv")});
    CHECK(leb.code == 0);
    const auto lines = read_lines(path_of("leb.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "name,value");
    CHECK(lines[1] == "lebesgue," + csv_number(lebesgue_avg_norm(samples, 1.5)));

    const CliRun zyg = cli({"norms", "--field", path_of("norms-f.txt"), "--q", "1.5", "--alpha",
                            "1", "--a", "3", "--eps0", "0.3", "--which", "zygmund", "--out",
                            path_of("zyg.csv")});
    CHECK(zyg.code == 0);
    const auto zlines = read_lines(path_of("zyg.csv"));
    REQUIRE(zlines.size() == 2);
    CHECK(zlines[1] ==
          "zygmund," + csv_number(zygmund_norm(samples, ZygmundParams(1.5, 1.0, 3.0, 0.3))));

    const CliRun prof = cli({"norms", "--field", path_of("norms-f.txt"), "--q", "1.5", "--alpha",
                             "1", "--which", "profile", "--out", path_of("prof.csv")});
    CHECK(prof.code == 0);
    const auto plines = read_lines(path_of("prof.csv"));
    REQUIRE(plines.size() == 41);
    CHECK(plines[0] == "eps,value");
    CHECK(plines[1].rfind("0.5,", 0) == 0); // window upper end for q = 1.5

    CHECK(cli({"norms", "--field", path_of("norms-f.txt"), "--q", "1.5", "--which", "luxemburg"})
              .code == 1); // needs --alpha
    CHECK(cli({"norms", "--field", path_of("absent.txt"), "--q", "1.5", "--which", "lebesgue"})
              .code == 1);
}

TEST_CASE("cli norms accepts scalar fields through midpoint sampling") {
    const Grid grid(6);
    const ScalarField u =
        ScalarField::sample(grid, [](double x, double y) { return x * x - y + 0.25; });
    write_field(path_of("norms-s.txt"), u);
    std::vector<double> means(static_cast<size_t>(grid.triangle_count()));
    for (int t = 0; t < grid.triangle_count(); ++t) {
        const auto nd = grid.triangle_nodes(t);
        means[static_cast<size_t>(t)] = (u[nd[0]] + u[nd[1]] + u[nd[2]]) / 3.0;
    }
    const SampleSet samples = SampleSet::from_triangle_values(grid, means);

    const CliRun weak = cli({"norms", "--field", path_of("norms-s.txt"), "--q", "1.5", "--which",
                             "weak", "--out", path_of("weak.csv")});
    CHECK(weak.code == 0);
    const auto lines = read_lines(path_of("weak.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "weak," + csv_number(marcinkiewicz_norm(samples, 1.5)));
}

TEST_CASE("cli solve emits a summary row and the solution field") {
    const CliRun run = cli({"solve", "--p", "3", "--rough", "smooth-random:seed=1", "--n", "8",
                            "--out", path_of("u.txt")});
    CHECK(run.code == 0);
    REQUIRE(run.out.rfind("iterations,residual,energy\n", 0) == 0);

    const ScalarField u = read_scalar_field(path_of("u.txt"));
    REQUIRE(u.grid().cells() == 8);
    for (int i = 0; i < u.size(); ++i)
        if (u.grid().on_boundary(i)) CHECK(u[i] == 0.0);

    // the same data through a file gives the identical run
    const Grid grid(8);
    write_field(path_of("solve-f.txt"), smooth_field(grid, 1));
    const CliRun rerun = cli({"solve", "--p", "3", "--f", path_of("solve-f.txt")});
    CHECK(rerun.code == 0);
    CHECK(rerun.out == run.out);
}

TEST_CASE("cli solve argument and failure paths") {
    write_field(path_of("solve-f4.txt"), smooth_field(Grid(4), 2));
    CHECK(cli({"solve", "--p", "3"}).code == 1); // needs --f or --rough
    CHECK(cli({"solve", "--p", "3", "--f", path_of("solve-f4.txt"), "--rough", "smooth-random"})
              .code == 1);
    CHECK(cli({"solve", "--p", "3", "--rough", "smooth-random"}).code == 1); // missing --n
    CHECK(cli({"solve", "--p", "3", "--f", path_of("solve-f4.txt"), "--n", "8"}).code == 1);
    CHECK(cli({"solve", "--p", "1.5", "--f", path_of("solve-f4.txt")}).code == 1);
    CHECK(cli({"solve", "--p", "3", "--f", path_of("solve-f4.txt"), "--tol", "1e-300"}).code == 2);

    std::string pd = "matrix 4\n", bad = "matrix 4\n";
    for (int t = 0; t < 32; ++t) {
        pd += "1.2 0.1 0.9\n";
        bad += "2 0 -0.5\n";
    }
    write_text(path_of("A-pd.txt"), pd);
    write_text(path_of("A-bad.txt"), bad);
    CHECK(cli({"solve", "--p", "3", "--f", path_of("solve-f4.txt"), "--A", path_of("A-pd.txt")})
              .code == 0);
    CHECK(cli({"solve", "--p", "3", "--f", path_of("solve-f4.txt"), "--A", path_of("A-bad.txt")})
              .code == 1);
}

TEST_CASE("cli hodge splits a stored field and reports the probe") {
    const Grid grid(12);
    const VectorField F = smooth_field(grid, 6);
    write_field(path_of("hodge-f.txt"), F);

    const CliRun run = cli({"hodge", "--field", path_of("hodge-f.txt"), "--out-phi",
                            path_of("phi.txt"), "--out-h", path_of("h.txt"), "--out",
                            path_of("hodge.csv")});
    CHECK(run.code == 0);
    const auto lines = read_lines(path_of("hodge.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "residual,r1,r2");
    CHECK(lines[1].substr(lines[1].size() - 2) == ",,"); // no probe requested

    const ScalarField phi = read_scalar_field(path_of("phi.txt"));
    const VectorField h = read_vector_field(path_of("h.txt"));
    const VectorField recon = gradient(phi) + h;
    double drift = 0.0;
    for (int t = 0; t < F.size(); ++t) drift = std::max(drift, norm(recon[t] - F[t]));
    CHECK(drift <= 1e-9 * (1.0 + F.max_magnitude()));

    const CliRun probe = cli({"hodge", "--field", path_of("hodge-f.txt"), "--eps", "0.05", "--p",
                              "3", "--out", path_of("hodge2.csv")});
    CHECK(probe.code == 0);
    const HodgeProbe want = hodge_ratio_probe(F, 0.05, 3.0);
    const auto plines = read_lines(path_of("hodge2.csv"));
    REQUIRE(plines.size() == 2);
    const std::string tail = "," + csv_number(want.r1) + "," + csv_number(want.r2);
    CHECK(plines[1].substr(plines[1].size() - tail.size()) == tail);

    CHECK(cli({"hodge", "--field", path_of("hodge-f.txt"), "--eps", "0.05"}).code == 1);
}

TEST_CASE("cli verify writes reports and honors threshold overrides") {
    const CliRun run =
        cli({"verify", "energy", "--n", "8", "--count", "2", "--out", path_of("energy.csv")});
    CHECK(run.code == 0);
    const auto lines = read_lines(path_of("energy.csv"));
    REQUIRE(lines.size() == 4); // two seeded rows plus the scaling audit row
    CHECK(lines[0] == "id,p,q,alpha,n,lhs,rhs,ratio");
    CHECK(lines[1].rfind("energy:seed=7,", 0) == 0);
    CHECK(lines[2].rfind("energy:seed=8,", 0) == 0);
    CHECK(lines[3].rfind("energy:lam=", 0) == 0);

    // without --out the report lands on stdout
    const CliRun to_stdout = cli({"verify", "energy", "--n", "8", "--count", "1"});
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out.rfind("id,p,q,alpha,n,lhs,rhs,ratio\n", 0) == 0);

    CHECK(cli({"verify", "energy", "--config", path_of("no-such.cfg")}).code == 1);
    write_text(path_of("broken.cfg"), "not a key value line\n");
    CHECK(cli({"verify", "energy", "--config", path_of("broken.cfg")}).code == 1);

    // an unreachable threshold fails the run but still writes the report first
    write_text(path_of("strict.cfg"), "homogeneity_tol = 1e-30\n");
    fs::remove(path_of("strict.csv"));
    const CliRun strict = cli({"verify", "energy", "--n", "8", "--count", "1", "--config",
                               path_of("strict.cfg"), "--out", path_of("strict.csv")});
    CHECK(strict.code == 3);
    CHECK(strict.err.find("verification failed") != std::string::npos);
    const auto slines = read_lines(path_of("strict.csv"));
    CHECK(slines.size() >= 2);
    CHECK(slines[0] == "id,p,q,alpha,n,lhs,rhs,ratio");
}
