#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rpl/fields.hpp"
#include "rpl/sym2.hpp"

namespace rpl {

/// Per-triangle symmetric 2x2 coefficient data.
struct MatrixField {
    Grid grid;
    std::vector<SymMatrix2> values;
};

/// Text field files.  First line is a header `scalar N`, `vector N` or
/// `matrix N` with N the cell count per side; then one line per entry in
/// index order: nodal values for scalar fields (row-major, x fastest),
/// `fx fy` per triangle for vector fields, `a11 a12 a22` per triangle for
/// matrix fields.  Malformed input raises InvalidParameter with the line number.
ScalarField read_scalar_field(const std::string& path);
VectorField read_vector_field(const std::string& path);
MatrixField read_matrix_field(const std::string& path);

ScalarField read_scalar_field(std::istream& in, const std::string& name);
VectorField read_vector_field(std::istream& in, const std::string& name);
MatrixField read_matrix_field(std::istream& in, const std::string& name);

void write_field(const std::string& path, const ScalarField& f);
void write_field(const std::string& path, const VectorField& f);
void write_field(std::ostream& out, const ScalarField& f);
void write_field(std::ostream& out, const VectorField& f);

} // namespace rpl
