#include "cgt/length.hpp"

namespace cgt {

GroupOps<Element> group_ops(const Group& g) {
  return GroupOps<Element>{
      [&g](const Element& a, const Element& b) { return g.mul(a, b); },
      [&g](const Element& a) { return g.inv(a); },
      g.identity(),
      [](const Element& a, const Element& b) { return a == b; },
      [&g](const Element& a) { return g.show(a); },
  };
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& a : axioms) {
    out += a.axiom;
    out += a.pass ? ": pass" : ": FAIL (worst " + std::to_string(a.worst) +
                                   " at " + a.witness + ")";
    out += "\n";
  }
  return out;
}

MetricView metric_from_length(const Group& g, LengthFunction l) {
  auto eval = [&g, fn = std::move(l.eval)](const Element& x, const Element& y) {
    return fn(g.mul(g.inv(y), x));
  };
  return MetricView{"metric[" + l.name + "]", std::move(eval)};
}

LengthFunction length_from_metric(const Group& g, MetricView d) {
  auto eval = [e = g.identity(), fn = std::move(d.eval)](const Element& x) {
    return fn(x, e);
  };
  return LengthFunction{"length[" + d.name + "]", std::move(eval)};
}

ValidationReport validate_length_axioms(const Group& g, const LengthFunction& l,
                                        std::span<const Element> sample, double tol) {
  return validate_length_axioms<Element>(group_ops(g), l.eval, sample, tol);
}

ValidationReport validate_metric_axioms(const Group& g, const MetricView& d,
                                        std::span<const Element> sample, double tol) {
  return validate_metric_axioms<Element>(group_ops(g), d.eval, sample, tol);
}

}  // namespace cgt
