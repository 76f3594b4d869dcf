#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "cgt/element.hpp"
#include "cgt/length.hpp"
#include "cgt/matrix.hpp"

namespace cgt {

// Length function on GL(n, R):
//   l(A) = max{ ln(1 + ||A - I||), ln(1 + ||A^{-1} - I||) }.
// Restricting to any closed subgroup keeps all properties.
double gl_length(const SquareMatrix& a);

// d(A, B) = gl_length(B^{-1} A); left invariant up to float roundoff.
double gl_metric(const SquareMatrix& a, const SquareMatrix& b);

// For every sample with gl_length <= r, both operator norms must stay
// within e^r; lists any violations (there must be none).
struct PropernessProbe {
  double radius = 0.0;
  std::size_t checked = 0;  // samples with gl_length <= radius
  std::size_t skipped = 0;  // samples beyond the radius
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

PropernessProbe properness_probe(std::span<const SquareMatrix> samples, double r);

// Group operations adapter so the axiom validators run on matrices.
GroupOps<SquareMatrix> matrix_ops(int dim);

// Matrix samples from a JSON list of row-major arrays.
std::vector<SquareMatrix> load_matrices_json(std::istream& in);

// The integer Heisenberg element (x, y, z) as the unitriangular matrix
// [[1, x, z], [0, 1, y], [0, 0, 1]].
SquareMatrix heisenberg_matrix(const Element& h);

}  // namespace cgt
