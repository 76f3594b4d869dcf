#pragma once

#include <iosfwd>
#include <string>

#include "cgt/coarse.hpp"
#include "cgt/cocycle.hpp"
#include "cgt/word_metric.hpp"

namespace cgt {

// Full-precision decimal rendering ("%.17g"), so equal doubles serialize
// identically and files diff cleanly.
std::string fmt_double(double v);

// Census CSV: n, ball_size, sphere_size, bound_3n, pass. With a graded
// report the pass column tracks the 3^n / 2*3^(n-1) bounds; otherwise it
// tracks the fitted growth envelope.
void write_census_csv(std::ostream& out, const BallCensus& census,
                      const GrowthCertificate& cert,
                      const GradedBoundReport* graded);

void write_growth_json(std::ostream& out, const BallCensus& census,
                       const GrowthCertificate& cert, const GradedBoundReport* graded);

// Envelope CSV: t, rho_minus, rho_plus.
void write_envelope_csv(std::ostream& out, const EmbeddingEnvelope& env);

// Probe CSV: t, bound (one file per direction).
void write_expansiveness_csv(std::ostream& out, const ExpansivenessEnvelope& env);

// Embedding CSV: d, norm_lower, norm, norm_plus_tail.
void write_embedding_csv(std::ostream& out, const EmbeddingReport& report);
// Embedding JSON: c1, c2, c3, alpha, beta, N_trunc (+ verdicts).
void write_embedding_json(std::ostream& out, const EmbeddingReport& report);

void write_lattice_csv(std::ostream& out, const CoarseLattice& lattice);
void write_lattice_census_csv(std::ostream& out,
                              std::span<const GeometryCensus> censuses);

}  // namespace cgt
