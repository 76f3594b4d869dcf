#include "cgt/matrix.hpp"

#include <cmath>
#include <numbers>

#include "cgt/errors.hpp"

namespace cgt {
namespace {

// Cyclic Jacobi eigenvalue iteration on a symmetric matrix; returns the
// largest eigenvalue. For the small dimensions used here this converges to
// machine precision in a handful of sweeps, comfortably inside the 1e-9
// relative accuracy contract of operator_norm.
double largest_symmetric_eigenvalue(int n, std::vector<double> s) {
  const auto at = [&](int i, int j) -> double& { return s[i * n + j]; };
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < n; ++i) {
      diag += std::abs(at(i, i));
      for (int j = i + 1; j < n; ++j) off += std::abs(at(i, j));
    }
    if (off <= 1e-15 * (diag + off) || off == 0.0) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (at(p, q) == 0.0) continue;
        const double theta = 0.5 * std::atan2(2.0 * at(p, q), at(q, q) - at(p, p));
        const double c = std::cos(theta), d = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          const double skp = at(k, p), skq = at(k, q);
          at(k, p) = c * skp - d * skq;
          at(k, q) = d * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = at(p, k), sqk = at(q, k);
          at(p, k) = c * spk - d * sqk;
          at(q, k) = d * spk + c * sqk;
        }
      }
    }
  }
  double best = at(0, 0);
  for (int i = 1; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

std::vector<double> gauss_jordan_inverse(int n, std::vector<double> a) {
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;

  double scale = 0.0;
  for (const double v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw SingularMatrixError("zero matrix is not invertible");

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    }
    if (std::abs(a[pivot * n + col]) < scale * 1e-14 * n) {
      throw SingularMatrixError("matrix is singular to working precision");
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const double p = a[col * n + col];
    for (int j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[col * n + j];
        inv[r * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

double operator_norm(int dim, std::span<const double> row_major) {
  if (dim < 1 || row_major.size() != static_cast<std::size_t>(dim) * dim) {
    throw DomainError("operator_norm: bad dimensions");
  }
  for (const double v : row_major) {
    if (!std::isfinite(v)) throw NonFiniteError("operator_norm: non-finite entry");
  }
  // Largest singular value = sqrt of the top eigenvalue of A^T A.
  std::vector<double> gram(dim * dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int k = 0; k < dim; ++k) {
        acc += row_major[k * dim + i] * row_major[k * dim + j];
      }
      gram[i * dim + j] = acc;
    }
  }
  return std::sqrt(std::max(0.0, largest_symmetric_eigenvalue(dim, std::move(gram))));
}

SquareMatrix::SquareMatrix(int dim, std::vector<double> row_major) : dim_(dim) {
  if (dim < 1 || row_major.size() != static_cast<std::size_t>(dim) * dim) {
    throw DomainError("SquareMatrix: bad dimensions");
  }
  for (const double v : row_major) {
    if (!std::isfinite(v)) throw NonFiniteError("SquareMatrix: non-finite entry");
  }
  a_ = std::move(row_major);
  inv_ = gauss_jordan_inverse(dim_, a_);
  norm_ = operator_norm(dim_, a_);
  inv_norm_ = operator_norm(dim_, inv_);
  if (norm_ * inv_norm_ > 1e12) {
    throw SingularMatrixError("condition estimate exceeds 1e12");
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      double acc = 0.0;
      for (int k = 0; k < dim_; ++k) acc += a_[i * dim_ + k] * inv_[k * dim_ + j];
      if (std::abs(acc - (i == j ? 1.0 : 0.0)) > 1e-9) {
        throw SingularMatrixError("A * A^{-1} deviates from I beyond 1e-9");
      }
    }
  }
}

SquareMatrix::SquareMatrix(FromCaches, int dim, std::vector<double> a,
                           std::vector<double> inv, double norm, double inv_norm)
    : dim_(dim), a_(std::move(a)), inv_(std::move(inv)), norm_(norm),
      inv_norm_(inv_norm) {}

SquareMatrix SquareMatrix::identity(int dim) {
  std::vector<double> e(dim * dim, 0.0);
  for (int i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return SquareMatrix(dim, std::move(e));
}

SquareMatrix SquareMatrix::inverse() const {
  return SquareMatrix(FromCaches{}, dim_, inv_, a_, inv_norm_, norm_);
}

std::string SquareMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < dim_; ++i) {
    if (i) out += "; ";
    for (int j = 0; j < dim_; ++j) {
      if (j) out += ", ";
      out += std::to_string((*this)(i, j));
    }
  }
  return out + "]";
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix product: dimension mismatch");
  const int n = a.dim_;
  std::vector<double> out(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double f = a(i, k);
      for (int j = 0; j < n; ++j) out[i * n + j] += f * b(k, j);
    }
  }
  return SquareMatrix(n, std::move(out));
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
  return a.dim_ == b.dim_ && a.a_ == b.a_;
}

double operator_norm(const SquareMatrix& m) { return m.norm(); }

SquareMatrix random_well_conditioned(std::mt19937_64& rng, int dim) {
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const int n = dim;
  std::vector<double> m(n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    m[i * n + i] = 0.6 + 1.2 * uniform();
  }
  // Left/right Givens rotations with random angles.
  const auto rotate_rows = [&](int p, int q, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    for (int j = 0; j < n; ++j) {
      const double mp = m[p * n + j], mq = m[q * n + j];
      m[p * n + j] = c * mp - s * mq;
      m[q * n + j] = s * mp + c * mq;
    }
  };
  const auto rotate_cols = [&](int p, int q, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    for (int i = 0; i < n; ++i) {
      const double mp = m[i * n + p], mq = m[i * n + q];
      m[i * n + p] = c * mp - s * mq;
      m[i * n + q] = s * mp + c * mq;
    }
  };
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      rotate_rows(p, q, 2.0 * std::numbers::pi * uniform());
      rotate_cols(p, q, 2.0 * std::numbers::pi * uniform());
    }
  }
  if (n == 1) m[0] = 0.6 + 1.2 * uniform();
  return SquareMatrix(n, std::move(m));
}

}  // namespace cgt
