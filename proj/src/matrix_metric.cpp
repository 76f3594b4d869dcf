#include "cgt/matrix_metric.hpp"

#include <cmath>
#include <istream>

#include <json.hpp>

#include "cgt/errors.hpp"

namespace cgt {
namespace {

std::vector<double> minus_identity(const SquareMatrix& a) {
  const int n = a.dim();
  std::vector<double> out(a.entries().begin(), a.entries().end());
  for (int i = 0; i < n; ++i) out[i * n + i] -= 1.0;
  return out;
}

std::vector<double> inverse_minus_identity(const SquareMatrix& a) {
  const int n = a.dim();
  std::vector<double> out(a.inverse_entries().begin(), a.inverse_entries().end());
  for (int i = 0; i < n; ++i) out[i * n + i] -= 1.0;
  return out;
}

}  // namespace

double gl_length(const SquareMatrix& a) {
  const double fwd = operator_norm(a.dim(), minus_identity(a));
  const double bwd = operator_norm(a.dim(), inverse_minus_identity(a));
  return std::max(std::log1p(fwd), std::log1p(bwd));
}

double gl_metric(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("gl_metric: dimension mismatch");
  return gl_length(b.inverse() * a);
}

PropernessProbe properness_probe(std::span<const SquareMatrix> samples, double r) {
  if (!(r > 0.0)) throw DomainError("properness_probe: r must be positive");
  PropernessProbe probe;
  probe.radius = r;
  const double bound = std::exp(r) * (1.0 + 1e-12);
  for (const SquareMatrix& a : samples) {
    if (gl_length(a) > r) {
      ++probe.skipped;
      continue;
    }
    ++probe.checked;
    if (a.norm() > bound) {
      probe.violations.push_back("||A|| = " + std::to_string(a.norm()) + " at " + a.str());
    }
    if (a.inverse_norm() > bound) {
      probe.violations.push_back("||A^{-1}|| = " + std::to_string(a.inverse_norm()) +
                                 " at " + a.str());
    }
  }
  return probe;
}

GroupOps<SquareMatrix> matrix_ops(int dim) {
  return GroupOps<SquareMatrix>{
      [](const SquareMatrix& a, const SquareMatrix& b) { return a * b; },
      [](const SquareMatrix& a) { return a.inverse(); },
      SquareMatrix::identity(dim),
      [](const SquareMatrix& a, const SquareMatrix& b) { return a == b; },
      [](const SquareMatrix& a) { return a.str(); },
  };
}

std::vector<SquareMatrix> load_matrices_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("matrix samples: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("matrix samples: expected a JSON array");
  std::vector<SquareMatrix> out;
  for (const auto& row : doc) {
    if (!row.is_array()) throw ConfigError("matrix samples: expected row-major arrays");
    std::vector<double> entries;
    for (const auto& v : row) {
      if (!v.is_number()) throw ConfigError("matrix samples: non-numeric entry");
      entries.push_back(v.get<double>());
    }
    const int dim = static_cast<int>(std::llround(std::sqrt(double(entries.size()))));
    if (dim < 1 || static_cast<std::size_t>(dim) * dim != entries.size()) {
      throw ConfigError("matrix samples: array length is not a perfect square");
    }
    out.emplace_back(dim, std::move(entries));
  }
  return out;
}

SquareMatrix heisenberg_matrix(const Element& h) {
  if (h.size() != 3) throw DomainError("heisenberg_matrix: expected a triple");
  const double x = static_cast<double>(h[0]);
  const double y = static_cast<double>(h[1]);
  const double z = static_cast<double>(h[2]);
  return SquareMatrix(3, {1.0, x, z, 0.0, 1.0, y, 0.0, 0.0, 1.0});
}

}  // namespace cgt
