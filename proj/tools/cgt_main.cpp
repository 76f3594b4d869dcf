// Batch driver: reproducible experiments over the library with JSON
// configuration and CSV/JSON output.
//
// Exit codes: 0 all checks pass, 2 bound violation, 3 config error,
// 4 enumeration budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/coarse.hpp"
#include "cgt/cocycle.hpp"
#include "cgt/export.hpp"
#include "cgt/length.hpp"
#include "cgt/matrix_metric.hpp"
#include "cgt/metric_space.hpp"
#include "cgt/regularized.hpp"
#include "cgt/two_level.hpp"
#include "cgt/word_metric.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cgt;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<long> seed;
  std::optional<int> truncation;
};

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
  return doc;
}

int get_int(const json& j, const char* key, std::optional<int> fallback = {}) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(std::string("missing config field '") + key + "'");
  }
  if (!j[key].is_number_integer()) {
    throw ConfigError(std::string("config field '") + key + "' must be an integer");
  }
  return j[key].get<int>();
}

double get_double(const json& j, const char* key, std::optional<double> fallback = {}) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(std::string("missing config field '") + key + "'");
  }
  if (!j[key].is_number()) {
    throw ConfigError(std::string("config field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

Rational rational_field(const json& v, const char* what) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw ConfigError(std::string(what) + ": " + e.what());
    }
  }
  throw ConfigError(std::string(what) +
                    " must be an integer or a rational string like \"3/5\"");
}

std::unique_ptr<Group> make_group(const json& cfg) {
  if (!cfg.contains("group") || !cfg["group"].is_object()) {
    throw ConfigError("missing 'group' object");
  }
  const json& g = cfg["group"];
  const std::string kind = g.value("kind", "");
  if (kind == "integer-lattice") {
    return std::make_unique<IntegerLattice>(get_int(g, "rank"));
  }
  if (kind == "free") {
    return std::make_unique<FreeGroup>(get_int(g, "rank"));
  }
  if (kind == "heisenberg") {
    return std::make_unique<HeisenbergGroup>();
  }
  if (kind == "cyclic") {
    return std::make_unique<FiniteTableGroup>(FiniteTableGroup::cyclic(get_int(g, "order")));
  }
  if (kind == "table") {
    if (!g.contains("table") || !g["table"].is_array()) {
      throw ConfigError("table group needs a 'table' array of arrays");
    }
    std::vector<std::vector<int>> table;
    for (const auto& row : g["table"]) {
      table.push_back(row.get<std::vector<int>>());
    }
    return std::make_unique<FiniteTableGroup>(std::move(table));
  }
  throw ConfigError("unknown group kind '" + kind + "'");
}

Element parse_element(const Group& g, const json& v) {
  if (!v.is_array()) throw ConfigError("elements must be arrays of integers");
  std::vector<std::int64_t> data;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ConfigError("element entries must be integers");
    data.push_back(x.get<std::int64_t>());
  }
  Element e(std::move(data));
  if (!g.is_valid(e)) {
    throw ConfigError("element " + e.str() + " does not belong to " + g.name());
  }
  return e;
}

struct GeneratorChoice {
  WeightedGeneratingSet<Rational> set;
  bool graded_scheme = false;
};

GeneratorChoice make_generators(const Group& g, const json& cfg) {
  const json spec = cfg.value("generators", json{{"scheme", "unit"}});
  const std::string scheme = spec.value("scheme", "unit");
  if (scheme == "unit") {
    return {unit_generators(g), false};
  }
  if (scheme == "graded") {
    if (const auto* lattice = dynamic_cast<const IntegerLattice*>(&g);
        lattice && lattice->rank() == 1) {
      return {graded_integer_generators(g), true};
    }
    if (const auto* free = dynamic_cast<const FreeGroup*>(&g)) {
      return {graded_free_generators(*free), true};
    }
    throw ConfigError("graded scheme is defined for Z and free groups");
  }
  if (scheme == "explicit") {
    if (!spec.contains("entries") || !spec["entries"].is_array()) {
      throw ConfigError("explicit generators need an 'entries' array");
    }
    std::vector<std::pair<Element, Rational>> entries;
    for (const auto& entry : spec["entries"]) {
      if (!entry.contains("element") || !entry.contains("weight")) {
        throw ConfigError("generator entries need 'element' and 'weight'");
      }
      entries.emplace_back(parse_element(g, entry["element"]),
                           rational_field(entry["weight"], "generator weight"));
    }
    const bool symmetrize = spec.value("symmetrize", true);
    return {WeightedGeneratingSet<Rational>::from_entries(g, std::move(entries),
                                                          symmetrize),
            false};
  }
  throw ConfigError("unknown generator scheme '" + scheme + "'");
}

std::ofstream open_out(const Options& opt, const std::string& name) {
  fs::create_directories(opt.out_dir);
  const fs::path path = fs::path(opt.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write output file " + path.string());
  return out;
}

long seed_of(const Options& opt, const json& cfg) {
  if (opt.seed) return *opt.seed;
  if (cfg.contains("seed")) return cfg["seed"].get<long>();
  return 0;
}

// ------------------------------------------------------------------ growth

int cmd_growth(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  const auto group = make_group(cfg);
  const auto gens = make_generators(*group, cfg);
  const int radius = get_int(cfg, "radius");
  if (radius < 1) throw ConfigError("growth: radius must be >= 1");

  std::optional<GradedBoundReport> graded;
  BallCensus census;
  if (gens.graded_scheme) {
    graded = verify_3n_bound(gens.set, radius);
    census = graded->census;
  } else {
    census = sphere_counts(gens.set, radius);
  }
  const GrowthCertificate cert = growth_certificate(census);

  auto csv = open_out(opt, "census.csv");
  write_census_csv(csv, census, cert, graded ? &*graded : nullptr);
  auto js = open_out(opt, "growth.json");
  write_growth_json(js, census, cert, graded ? &*graded : nullptr);

  const bool pass = cert.holds_on(census) && (!graded || graded->pass);
  std::cout << (pass ? "growth: pass" : "growth: BOUND VIOLATION") << " (alpha="
            << cert.alpha << ", beta=" << cert.beta << ", rate=" << cert.growth_rate
            << ")\n";
  return pass ? 0 : 2;
}

// ------------------------------------------------------------------- embed

int cmd_embed(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  const auto group = make_group(cfg);
  const auto gens = make_generators(*group, cfg);
  const int radius = get_int(cfg, "radius");
  if (radius < 1) throw ConfigError("embed: radius must be >= 1");
  const int truncation = opt.truncation ? *opt.truncation : get_int(cfg, "truncation", 8);
  if (truncation < 1) throw ConfigError("embed: truncation must be >= 1");
  const double c3 = get_double(cfg, "c3", 3.0);
  const std::size_t pair_limit =
      static_cast<std::size_t>(get_int(cfg, "pair_limit", 4000));

  // Pair distances reach 2 * radius; the default horizon covers them. On
  // fast-growing groups a tighter horizon keeps the enumeration small, and
  // pairs whose distance escapes it are dropped (reported below).
  const int horizon = get_int(cfg, "horizon", std::max(2 * radius, truncation));
  if (horizon < radius || horizon < truncation) {
    throw ConfigError("embed: horizon must cover the radius and the truncation");
  }
  DiscreteMetricSpace space(*group, gens.set, Rational(horizon));
  const GrowthCertificate cert =
      growth_certificate(sphere_counts(gens.set, horizon));

  std::vector<Element> ball;
  for (const auto& [elem, dist] : space.enumeration().items) {
    if (dist.to_double() <= radius) ball.push_back(elem);
  }
  std::vector<std::pair<Element, Element>> pairs;
  std::size_t beyond_horizon = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = i + 1; j < ball.size(); ++j) {
      const Element rel = group->mul(group->inv(ball[j]), ball[i]);
      if (!space.try_length(rel)) {
        ++beyond_horizon;
        continue;
      }
      pairs.emplace_back(ball[i], ball[j]);
    }
  }
  if (pairs.size() > pair_limit) {
    std::vector<std::pair<Element, Element>> picked;
    const std::size_t stride = pairs.size() / pair_limit + 1;
    for (std::size_t i = 0; i < pairs.size(); i += stride) picked.push_back(pairs[i]);
    pairs = std::move(picked);
  }
  const EmbeddingReport report =
      embedding_constants(space, truncation, cert, pairs, c3);

  // Cocycle identity spot check over strided pairs of ball elements.
  const int identity_checks = get_int(cfg, "identity_checks", 200);
  double worst_identity = 0.0;
  std::size_t checked = 0;
  const std::size_t stride = std::max<std::size_t>(1, pairs.size() /
                                 std::max(1, identity_checks));
  for (std::size_t i = 0; i < pairs.size() && checked < static_cast<std::size_t>(identity_checks);
       i += stride, ++checked) {
    for (int n = 1; n <= std::min(truncation, 6); ++n) {
      const auto rep = check_cocycle_identity(space, n, pairs[i].first,
                                              pairs[i].second, 1e-12);
      worst_identity = std::max(worst_identity, rep.worst);
    }
  }
  const bool identity_pass = worst_identity <= 1e-12;

  auto csv = open_out(opt, "embedding.csv");
  write_embedding_csv(csv, report);
  auto js = open_out(opt, "embedding.json");
  write_embedding_json(js, report);

  const bool pass = report.pass && identity_pass;
  std::cout << (pass ? "embed: pass" : "embed: FAIL") << " (c1=" << report.constants.c1
            << ", c2=" << report.constants.c2 << ", cocycle worst=" << worst_identity
            << ", pairs beyond horizon=" << beyond_horizon << ")\n";
  return pass ? 0 : 2;
}

// ----------------------------------------------------------------- lattice

int cmd_lattice(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  const double separation = get_double(cfg, "separation", 1.0);
  if (!(separation > 0.0)) throw ConfigError("lattice: separation must be positive");
  std::vector<double> ms;
  if (cfg.contains("census_m")) {
    for (const auto& v : cfg["census_m"]) ms.push_back(v.get<double>());
  } else {
    ms = {1.0, 2.0, 3.0};
  }

  const int clouds = get_int(cfg, "clouds", 0);
  if (clouds > 0) {
    // Example fixture: proper but without bounded geometry. Gamma_1 must
    // grow with the number of clouds included.
    auto fixture_csv = open_out(opt, "cloud_growth.csv");
    fixture_csv << "clouds,gamma_1\n";
    std::size_t first_gamma = 0, last_gamma = 0;
    bool monotone = true;
    for (int k = 1; k <= clouds; ++k) {
      const auto points = discrete_cloud_points(k);
      const auto lattice =
          build_coarse_lattice(points, discrete_cloud_metric, separation);
      const auto census = bounded_geometry_census(lattice, discrete_cloud_metric, 1.0);
      fixture_csv << k << ',' << census.gamma << '\n';
      if (k == 1) first_gamma = census.gamma;
      monotone = monotone && census.gamma >= last_gamma;
      last_gamma = census.gamma;
    }
    const bool growing = monotone && (clouds == 1 || last_gamma > first_gamma);
    std::cout << (growing ? "lattice fixture: pass" : "lattice fixture: FAIL")
              << " (gamma_1 reaches " << last_gamma << " at " << clouds
              << " clouds)\n";
    return growing ? 0 : 2;
  }

  const auto group = make_group(cfg);
  const auto gens = make_generators(*group, cfg);
  const int radius = get_int(cfg, "radius");
  if (radius < 1) throw ConfigError("lattice: radius must be >= 1");

  DiscreteMetricSpace space(*group, gens.set, Rational(2 * radius));
  std::vector<Element> points;
  for (const auto& [elem, dist] : space.enumeration().items) {
    if (dist.to_double() <= radius) points.push_back(elem);
  }
  const MetricFn metric = [&space](const Element& a, const Element& b) {
    return space.dist(a, b);
  };
  const auto lattice = build_coarse_lattice(points, metric, separation);

  bool retract_ok = true;
  for (const Element& y : points) {
    const Element owner = retract_to_lattice(lattice, metric, y);
    if (metric(owner, y) > separation) retract_ok = false;
  }

  std::vector<GeometryCensus> censuses;
  bool ratio_ok = true;
  for (const double m : ms) {
    if (m + 0.5 > space.horizon()) {
      throw ConfigError("lattice: census radius exceeds the metric horizon");
    }
    censuses.push_back(bounded_geometry_census(
        lattice, metric, m, [&space](double r) { return space.open_ball_size(r); }));
    ratio_ok = ratio_ok && censuses.back().within_ratio;
  }

  auto lcsv = open_out(opt, "lattice.csv");
  write_lattice_csv(lcsv, lattice);
  auto ccsv = open_out(opt, "lattice_census.csv");
  write_lattice_census_csv(ccsv, censuses);

  const bool pass = retract_ok && ratio_ok && lattice.covering_radius <= separation;
  std::cout << (pass ? "lattice: pass" : "lattice: FAIL") << " (points="
            << lattice.points.size() << ", covering=" << lattice.covering_radius
            << ")\n";
  return pass ? 0 : 2;
}

// -------------------------------------------------------------------- gl

int cmd_gl(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  const json gl = cfg.value("gl", json::object());
  const int dim = get_int(gl, "dim", 2);
  if (dim < 1) throw ConfigError("gl: dim must be >= 1");
  const int count = get_int(gl, "count", 200);
  if (count < 2) throw ConfigError("gl: count must be >= 2");
  const double tol = get_double(gl, "tol", 1e-9);
  const double probe_radius = get_double(gl, "probe_radius", 5.0);

  std::vector<SquareMatrix> samples;
  if (gl.contains("samples")) {
    std::ifstream in(gl["samples"].get<std::string>());
    if (!in) throw ConfigError("gl: cannot open samples file");
    samples = load_matrices_json(in);
  } else {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed_of(opt, cfg)));
    for (int i = 0; i < count; ++i) samples.push_back(random_well_conditioned(rng, dim));
  }

  const auto ops = matrix_ops(dim);
  const std::function<double(const SquareMatrix&)> length = [](const SquareMatrix& a) {
    return gl_length(a);
  };
  const ValidationReport axioms =
      validate_length_axioms<SquareMatrix>(ops, length, samples, tol);

  // Triangle inequality of the induced metric over sampled triples, and
  // left invariance within float headroom.
  double worst_triangle = 0.0, worst_invariance = 0.0;
  const std::size_t stride = std::max<std::size_t>(1, samples.size() / 24);
  for (std::size_t i = 0; i < samples.size(); i += stride) {
    for (std::size_t j = 0; j < samples.size(); j += stride) {
      for (std::size_t k = 0; k < samples.size(); k += stride) {
        const double excess = gl_metric(samples[i], samples[k]) -
                              gl_metric(samples[i], samples[j]) -
                              gl_metric(samples[j], samples[k]);
        worst_triangle = std::max(worst_triangle, excess);
        const double drift = std::abs(gl_metric(samples[j] * samples[i],
                                                samples[j] * samples[k]) -
                                      gl_metric(samples[i], samples[k]));
        worst_invariance = std::max(worst_invariance, drift);
      }
    }
  }
  const PropernessProbe probe = properness_probe(samples, probe_radius);

  json doc;
  doc["axioms_pass"] = axioms.pass();
  doc["worst_triangle_excess"] = worst_triangle;
  doc["worst_left_invariance_drift"] = worst_invariance;
  doc["properness_checked"] = probe.checked;
  doc["properness_violations"] = probe.violations.size();
  auto out = open_out(opt, "gl_report.json");
  out << doc.dump(2) << '\n';

  const bool pass = axioms.pass() && worst_triangle <= tol &&
                    worst_invariance <= 1e-6 && probe.pass();
  std::cout << (pass ? "gl: pass" : "gl: FAIL") << "\n" << axioms.summary();
  return pass ? 0 : 2;
}

// ------------------------------------------------------------------ verify

struct CheckLog {
  bool all_pass = true;
  void report(const std::string& name, bool pass, const std::string& detail = "") {
    all_pass = all_pass && pass;
    std::cout << (pass ? "[pass] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
  }
};

int cmd_verify(const Options& opt) {
  const json cfg = load_config(opt.config_path);
  CheckLog log;

  // Configured group: generating-set invariants and the word-length axioms.
  try {
    const auto group = make_group(cfg);
    const auto gens = make_generators(*group, cfg);
    const int radius = get_int(cfg, "radius", 4);
    if (radius < 1) throw ConfigError("verify: radius must be >= 1");
    DiscreteMetricSpace space(*group, gens.set, Rational(2 * radius));
    std::vector<Element> sample;
    for (const auto& [elem, dist] : space.enumeration().items) {
      if (dist.to_double() <= radius) sample.push_back(elem);
    }
    bool integer_weights = true;
    for (const auto& e : gens.set.within(Rational(radius))) {
      integer_weights = integer_weights && e.weight.is_integer();
    }
    const double tol = integer_weights ? 0.0 : 1e-12;
    const LengthFunction word{"word-length", [&space](const Element& g) {
                                return space.length(g);
                              }};
    const auto report = validate_length_axioms(*group, word, sample, tol);
    for (const auto& axiom : report.axioms) {
      log.report("word-length axiom (" + axiom.axiom + ")", axiom.pass, axiom.witness);
    }
    const auto metric_report = validate_metric_axioms(
        *group, metric_from_length(*group, word), sample, tol);
    for (const auto& axiom : metric_report.axioms) {
      log.report("word-metric axiom (" + axiom.axiom + ")", axiom.pass, axiom.witness);
    }
  } catch (const NonSymmetricGeneratingSetError& e) {
    log.report("generating-set axiom (symmetry: l(s) = l(s^-1))", false, e.what());
  } catch (const NonPositiveWeightError& e) {
    log.report("generating-set axiom (positive weights)", false, e.what());
  }

  // Graded-scheme bounds on the stock fixtures.
  {
    IntegerLattice z(1);
    const auto bound_z = verify_3n_bound(graded_integer_generators(z), 6);
    log.report("graded bounds on Z (N=6)", bound_z.pass);
    FreeGroup f5(5);
    const auto bound_f = verify_3n_bound(graded_free_generators(f5), 5);
    log.report("graded bounds on free(5) (N=5)", bound_f.pass);
  }

  // GL(2) random suite.
  {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed_of(opt, cfg)));
    std::vector<SquareMatrix> samples;
    for (int i = 0; i < 50; ++i) samples.push_back(random_well_conditioned(rng, 2));
    const std::function<double(const SquareMatrix&)> length =
        [](const SquareMatrix& a) { return gl_length(a); };
    const auto report =
        validate_length_axioms<SquareMatrix>(matrix_ops(2), length, samples, 1e-9);
    log.report("gl(2) length axioms (1e-9)", report.pass());
  }

  // Cocycle identity and translation identity.
  {
    FreeGroup f2(2);
    DiscreteMetricSpace space(f2, unit_generators(f2), Rational(4));
    double worst = 0.0;
    const auto ball = space.open_ball(2.5);
    for (const Element& s : ball) {
      for (const Element& t : ball) {
        for (int n = 1; n <= 4; ++n) {
          worst = std::max(worst, check_cocycle_identity(space, n, s, t, 1e-12).worst);
        }
      }
    }
    log.report("cocycle identity on F2 (1e-12)", worst <= 1e-12,
               "worst " + fmt_double(worst));
  }

  // Regularized length: ball inclusion and witness bounds on Z^2.
  {
    IntegerLattice z2(2);
    const auto u = DeltaLengths::make(
        z2, {{Element({1, 0}), Rational(3, 5)},
             {Element({-1, 0}), Rational(3, 5)},
             {Element({0, 1}), Rational(3, 5)},
             {Element({0, -1}), Rational(3, 5)}});
    const auto inclusion = verify_ball_inclusion(u, 3);
    bool witnesses_ok = true;
    for (std::int64_t x = -2; x <= 2 && witnesses_ok; ++x) {
      for (std::int64_t y = -2; y <= 2; ++y) {
        if (x == 0 && y == 0) continue;
        const auto r = regularized_length(u, Element({x, y}), Rational(4));
        if (!adjacent_pair_bound_holds(u, r.witness)) {
          witnesses_ok = false;
          break;
        }
      }
    }
    log.report("regularized balls inside U^(2n-1) on Z^2 (n<=3)", inclusion.pass);
    log.report("regularized witnesses obey the adjacent-pair bound", witnesses_ok);
  }

  // Two-level lengths against frozen values on Z^2.
  {
    IntegerLattice z2(2);
    const auto base = WeightedGeneratingSet<Rational>::from_entries(
        z2, {{Element({1, 0}), Rational(1)}}, true);
    const auto spec = make_two_level(
        z2, base, {Element({0, 1}), Element({0, -1}), Element({0, 2})});
    // (3, 1) costs 3 + l1((0,1)) forward and 3 + l1((0,-1)) backward.
    const bool frozen =
        two_level_length(spec, Element({3, 1}), Rational(10)) == Rational(5) &&
        two_level_length(spec, z2.identity(), Rational(2)) == Rational(0);
    bool dominated = true;
    for (std::int64_t k = 1; k <= 3; ++k) {
      const auto l = two_level_length(spec, Element({k, 0}), Rational(8));
      if (!l || Rational(k) < *l) dominated = false;
    }
    log.report("two-level length: frozen values and subgroup domination",
               frozen && dominated);
  }

  // Coarse lattice invariants on Z^2.
  {
    IntegerLattice z2(2);
    DiscreteMetricSpace space(z2, unit_generators(z2), Rational(12));
    std::vector<Element> points;
    for (const auto& [elem, dist] : space.enumeration().items) {
      if (dist.to_double() <= 6.0) points.push_back(elem);
    }
    const MetricFn metric = [&space](const Element& a, const Element& b) {
      return space.dist(a, b);
    };
    const auto lattice = build_coarse_lattice(points, metric, 1.0);
    bool separated = true;
    for (std::size_t i = 0; i < lattice.points.size() && separated; ++i) {
      for (std::size_t j = i + 1; j < lattice.points.size(); ++j) {
        if (metric(lattice.points[i], lattice.points[j]) < 1.0) {
          separated = false;
          break;
        }
      }
    }
    const auto census = bounded_geometry_census(
        lattice, metric, 2.0, [&space](double r) { return space.open_ball_size(r); });
    log.report("coarse lattice on Z^2 (separated, covered, ratio)",
               separated && lattice.covering_radius <= 1.0 && census.within_ratio);
  }

  std::cout << (log.all_pass ? "verify: all checks passed\n"
                             : "verify: CHECKS FAILED\n");
  return log.all_pass ? 0 : 2;
}

int dispatch(const std::string& cmd, const Options& opt) {
  try {
    if (cmd == "growth") return cmd_growth(opt);
    if (cmd == "embed") return cmd_embed(opt);
    if (cmd == "lattice") return cmd_lattice(opt);
    if (cmd == "verify") return cmd_verify(opt);
    if (cmd == "gl") return cmd_gl(opt);
    std::cerr << "unknown subcommand " << cmd << "\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metrics, growth and embeddings on countable groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "experiment config (JSON)");
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--seed", opt.seed, "seed override");
  app.add_option("--truncation", opt.truncation, "truncation override");

  for (const char* name : {"growth", "embed", "lattice", "verify", "gl"}) {
    app.add_subcommand(name)->fallthrough();
  }
  CLI11_PARSE(app, argc, argv);

  if (opt.config_path.empty()) {
    std::cerr << "config error: --config is required\n";
    return 3;
  }
  return dispatch(app.get_subcommands().front()->get_name(), opt);
}
