#include "cgt/export.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace cgt {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string pow3_string(int n) {
  unsigned __int128 v = 1;
  for (int i = 0; i < n; ++i) v *= 3;  // exact up to n = 80
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

void write_census_csv(std::ostream& out, const BallCensus& census,
                      const GrowthCertificate& cert,
                      const GradedBoundReport* graded) {
  out << "n,ball_size,sphere_size,bound_3n,pass\n";
  for (int n = 0; n <= census.max_radius; ++n) {
    bool pass;
    if (graded) {
      pass = graded->rows.at(n).pass;
    } else {
      pass = n == 0 || static_cast<double>(census.ball(n)) <=
                           cert.beta * std::exp(cert.alpha * n);
    }
    out << n << ',' << census.ball(n) << ',' << census.sphere(n) << ','
        << pow3_string(n) << ',' << (pass ? "true" : "false") << '\n';
  }
}

void write_growth_json(std::ostream& out, const BallCensus& census,
                       const GrowthCertificate& cert,
                       const GradedBoundReport* graded) {
  nlohmann::json doc;
  doc["alpha"] = cert.alpha;
  doc["beta"] = cert.beta;
  doc["grid_max"] = cert.grid_max;
  doc["growth_rate"] = cert.growth_rate;
  doc["ball_sizes"] = census.ball_sizes;
  doc["sphere_sizes"] = census.sphere_sizes;
  doc["envelope_holds"] = cert.holds_on(census);
  if (graded) doc["graded_bounds_pass"] = graded->pass;
  out << doc.dump(2) << '\n';
}

void write_envelope_csv(std::ostream& out, const EmbeddingEnvelope& env) {
  out << "t,rho_minus,rho_plus\n";
  for (std::size_t i = 0; i < env.grid.size(); ++i) {
    out << fmt_double(env.grid[i]) << ',' << fmt_double(env.rho_minus[i]) << ','
        << fmt_double(env.rho_plus[i]) << '\n';
  }
}

void write_expansiveness_csv(std::ostream& out, const ExpansivenessEnvelope& env) {
  out << "t,bound\n";
  for (std::size_t i = 0; i < env.grid.size(); ++i) {
    out << fmt_double(env.grid[i]) << ',' << fmt_double(env.bound[i]) << '\n';
  }
}

void write_embedding_csv(std::ostream& out, const EmbeddingReport& report) {
  out << "d,norm_lower,norm,norm_plus_tail\n";
  for (const EmbeddingRow& row : report.rows) {
    out << fmt_double(row.dist) << ',' << fmt_double(row.norm_lower) << ','
        << fmt_double(row.norm) << ',' << fmt_double(row.norm_upper) << '\n';
  }
}

void write_embedding_json(std::ostream& out, const EmbeddingReport& report) {
  nlohmann::json doc;
  doc["c1"] = report.constants.c1;
  doc["c2"] = report.constants.c2;
  doc["c3"] = report.constants.c3;
  doc["alpha"] = report.alpha;
  doc["beta"] = report.beta;
  doc["N_trunc"] = report.truncation;
  doc["pairs_used"] = report.pairs_used;
  doc["pairs_skipped"] = report.pairs_skipped;
  doc["translation_worst"] = report.translation_worst;
  doc["translation_pass"] = report.translation_pass;
  doc["pass"] = report.pass;
  out << doc.dump(2) << '\n';
}

void write_lattice_csv(std::ostream& out, const CoarseLattice& lattice) {
  out << "index,point,separation,covering_radius\n";
  for (std::size_t i = 0; i < lattice.points.size(); ++i) {
    out << i << ",\"" << lattice.points[i].str() << "\","
        << fmt_double(lattice.separation) << ',' << fmt_double(lattice.covering_radius)
        << '\n';
  }
}

void write_lattice_census_csv(std::ostream& out,
                              std::span<const GeometryCensus> censuses) {
  out << "M,gamma,ratio_bound,within_ratio\n";
  for (const GeometryCensus& c : censuses) {
    out << fmt_double(c.m) << ',' << c.gamma << ',';
    if (c.ratio_bound) {
      out << fmt_double(*c.ratio_bound);
    } else {
      out << "nan";
    }
    out << ',' << (c.within_ratio ? "true" : "false") << '\n';
  }
}

}  // namespace cgt
