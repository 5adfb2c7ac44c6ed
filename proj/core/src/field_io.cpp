#include "rpl/field_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw InvalidParameter(name + ":" + std::to_string(line) + ": " + msg);
}

struct HeaderInfo {
    std::string kind;
    Grid grid;
};

HeaderInfo read_header(std::istream& in, const std::string& name, const std::string& expect) {
    std::string line;
    if (!std::getline(in, line)) fail(name, 1, "missing header line");
    std::istringstream hs(line);
    std::string kind;
    int n = 0;
    if (!(hs >> kind >> n)) fail(name, 1, "header must be '<scalar|vector|matrix> <n>'");
    std::string extra;
    if (hs >> extra) fail(name, 1, "trailing content after header");
    if (kind != expect)
        fail(name, 1, "expected a " + expect + " field, header says '" + kind + "'");
    if (n < 2) fail(name, 1, "cell count must be at least 2, got " + std::to_string(n));
    return {kind, Grid(n)};
}

std::vector<double> read_numbers(std::istream& in, const std::string& name, int count,
                                 int per_line) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count) * per_line);
    std::string line;
    int lineno = 1;
    int rows = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        ls.clear();
        ls.seekg(0);
        if (rows == count) fail(name, lineno, "more data lines than the header promises");
        for (int k = 0; k < per_line; ++k) {
            double v;
            if (!(ls >> v)) fail(name, lineno, "expected " + std::to_string(per_line) +
                                                   " numeric values on this line");
            if (!std::isfinite(v)) fail(name, lineno, "non-finite value");
            out.push_back(v);
        }
        std::string extra;
        if (ls >> extra) fail(name, lineno, "trailing content after values");
        ++rows;
    }
    if (rows != count)
        fail(name, lineno, "expected " + std::to_string(count) + " data lines, found " +
                               std::to_string(rows));
    return out;
}

} // namespace

ScalarField read_scalar_field(std::istream& in, const std::string& name) {
    const auto hdr = read_header(in, name, "scalar");
    auto vals = read_numbers(in, name, hdr.grid.node_count(), 1);
    return {hdr.grid, std::move(vals)};
}

VectorField read_vector_field(std::istream& in, const std::string& name) {
    const auto hdr = read_header(in, name, "vector");
    auto vals = read_numbers(in, name, hdr.grid.triangle_count(), 2);
    std::vector<Vec2> v(vals.size() / 2);
    for (size_t t = 0; t < v.size(); ++t) v[t] = {vals[2 * t], vals[2 * t + 1]};
    return {hdr.grid, std::move(v)};
}

MatrixField read_matrix_field(std::istream& in, const std::string& name) {
    const auto hdr = read_header(in, name, "matrix");
    auto vals = read_numbers(in, name, hdr.grid.triangle_count(), 3);
    std::vector<SymMatrix2> m(vals.size() / 3);
    for (size_t t = 0; t < m.size(); ++t)
        m[t] = {vals[3 * t], vals[3 * t + 1], vals[3 * t + 2]};
    return {hdr.grid, std::move(m)};
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open field file '" + path + "'");
    return in;
}
} // namespace

ScalarField read_scalar_field(const std::string& path) {
    auto in = open_or_throw(path);
    return read_scalar_field(in, path);
}

VectorField read_vector_field(const std::string& path) {
    auto in = open_or_throw(path);
    return read_vector_field(in, path);
}

MatrixField read_matrix_field(const std::string& path) {
    auto in = open_or_throw(path);
    return read_matrix_field(in, path);
}

void write_field(std::ostream& out, const ScalarField& f) {
    out << "scalar " << f.grid().cells() << "\n";
    char buf[64];
    for (int k = 0; k < f.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g\n", f[k]);
        out << buf;
    }
}

void write_field(std::ostream& out, const VectorField& f) {
    out << "vector " << f.grid().cells() << "\n";
    char buf[96];
    for (int t = 0; t < f.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", f[t].x, f[t].y);
        out << buf;
    }
}

namespace {
template <class Field>
void write_to_path(const std::string& path, const Field& f) {
    std::ofstream out(path);
    if (!out) throw InvalidParameter("cannot write field file '" + path + "'");
    write_field(out, f);
    if (!out) throw InvalidParameter("write to '" + path + "' failed");
}
} // namespace

void write_field(const std::string& path, const ScalarField& f) { write_to_path(path, f); }
void write_field(const std::string& path, const VectorField& f) { write_to_path(path, f); }

} // namespace rpl
