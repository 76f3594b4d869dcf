#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cgt/errors.hpp"
#include "cgt/group.hpp"

namespace cgt {

// Group operations over an arbitrary element representation, so the axiom
// validators below work both for Element-based groups and for matrix
// groups.
template <class T>
struct GroupOps {
  std::function<T(const T&, const T&)> mul;
  std::function<T(const T&)> inv;
  T identity;
  std::function<bool(const T&, const T&)> equal;
  std::function<std::string(const T&)> show;
};

GroupOps<Element> group_ops(const Group& g);

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  double worst = 0.0;    // largest violation found, 0 when passing
  std::string witness;   // offending tuple, empty when passing

  AxiomResult() = default;
  explicit AxiomResult(std::string name) : axiom(std::move(name)) {}
};

struct ValidationReport {
  std::vector<AxiomResult> axioms;
  bool pass() const {
    for (const auto& a : axioms) {
      if (!a.pass) return false;
    }
    return true;
  }
  const AxiomResult* find(const std::string& axiom) const {
    for (const auto& a : axioms) {
      if (a.axiom == axiom) return &a;
    }
    return nullptr;
  }
  std::string summary() const;
};

// A nonnegative function on the group: zero exactly at the identity,
// symmetric under inversion, subadditive.
struct LengthFunction {
  std::string name;
  std::function<double(const Element&)> eval;
};

// A two-point evaluator; the validators probe the metric axioms and left
// invariance on samples.
struct MetricView {
  std::string name;
  std::function<double(const Element&, const Element&)> eval;
};

// d(x, y) = l(y^{-1} x); left invariant by construction.
MetricView metric_from_length(const Group& g, LengthFunction l);
// l(x) = d(x, e); inverse of metric_from_length on evaluator outputs.
LengthFunction length_from_metric(const Group& g, MetricView d);

namespace detail {

inline void note_violation(AxiomResult& r, double excess, const std::string& witness) {
  if (excess > r.worst) {
    r.pass = false;
    r.worst = excess;
    r.witness = witness;
  }
}

}  // namespace detail

// Checks the three length axioms on a finite sample (which should be
// closed under inversion). Use tol = 0 for exact integer/rational-valued
// lengths and 1e-9 for float-valued ones.
template <class T>
ValidationReport validate_length_axioms(const GroupOps<T>& ops,
                                        const std::function<double(const T&)>& length,
                                        std::span<const T> sample, double tol) {
  if (sample.empty()) throw EmptySampleError("validate_length_axioms: empty sample");

  AxiomResult identity{"identity"};
  AxiomResult symmetry{"symmetry"};
  AxiomResult subadditivity{"subadditivity"};

  const double le = length(ops.identity);
  if (std::abs(le) > tol) {
    detail::note_violation(identity, std::abs(le), "l(e) = " + std::to_string(le));
  }
  for (const T& g : sample) {
    const double lg = length(g);
    if (lg < -tol) {
      detail::note_violation(identity, -lg, "l < 0 at " + ops.show(g));
    }
    if (!ops.equal(g, ops.identity) && lg <= tol) {
      detail::note_violation(identity, tol - lg + 1e-300, "l vanishes at " + ops.show(g));
    }
    const double li = length(ops.inv(g));
    if (std::abs(lg - li) > tol) {
      detail::note_violation(symmetry, std::abs(lg - li), ops.show(g));
    }
  }
  for (const T& g : sample) {
    const double lg = length(g);
    for (const T& h : sample) {
      const double lgh = length(ops.mul(g, h));
      const double excess = lgh - (lg + length(h));
      if (excess > tol) {
        detail::note_violation(subadditivity, excess,
                               ops.show(g) + " , " + ops.show(h));
      }
    }
  }
  return ValidationReport{{identity, symmetry, subadditivity}};
}

// Metric axioms plus left invariance, probed over sampled pairs/triples.
template <class T>
ValidationReport validate_metric_axioms(
    const GroupOps<T>& ops,
    const std::function<double(const T&, const T&)>& metric,
    std::span<const T> sample, double tol) {
  if (sample.empty()) throw EmptySampleError("validate_metric_axioms: empty sample");

  AxiomResult identity{"identity-of-indiscernibles"};
  AxiomResult symmetry{"symmetry"};
  AxiomResult triangle{"triangle"};
  AxiomResult invariance{"left-invariance"};

  for (const T& x : sample) {
    for (const T& y : sample) {
      const double d = metric(x, y);
      if (d < -tol) detail::note_violation(identity, -d, ops.show(x) + " , " + ops.show(y));
      const bool same = ops.equal(x, y);
      if (same && std::abs(d) > tol) {
        detail::note_violation(identity, std::abs(d), "d(x,x) != 0 at " + ops.show(x));
      }
      if (!same && d <= tol) {
        detail::note_violation(identity, tol - d + 1e-300,
                               "d = 0 at " + ops.show(x) + " , " + ops.show(y));
      }
      const double dr = metric(y, x);
      if (std::abs(d - dr) > tol) {
        detail::note_violation(symmetry, std::abs(d - dr), ops.show(x) + " , " + ops.show(y));
      }
    }
  }
  for (const T& x : sample) {
    for (const T& y : sample) {
      const double dxy = metric(x, y);
      for (const T& z : sample) {
        const double excess = metric(x, z) - (dxy + metric(y, z));
        if (excess > tol) {
          detail::note_violation(triangle, excess,
                                 ops.show(x) + " , " + ops.show(y) + " , " + ops.show(z));
        }
      }
    }
  }
  for (const T& g : sample) {
    for (const T& x : sample) {
      for (const T& y : sample) {
        const double drift =
            std::abs(metric(ops.mul(g, x), ops.mul(g, y)) - metric(x, y));
        if (drift > tol) {
          detail::note_violation(invariance, drift,
                                 ops.show(g) + " . (" + ops.show(x) + " , " + ops.show(y) + ")");
        }
      }
    }
  }
  return ValidationReport{{identity, symmetry, triangle, invariance}};
}

ValidationReport validate_length_axioms(const Group& g, const LengthFunction& l,
                                        std::span<const Element> sample, double tol);
ValidationReport validate_metric_axioms(const Group& g, const MetricView& d,
                                        std::span<const Element> sample, double tol);

}  // namespace cgt
