#pragma once

#include <random>
#include <string>
#include <utility>

#include "ccycle/arrangements.hpp"
#include "ccycle/json_io.hpp"
#include "ccycle/microlocal.hpp"

namespace ccycle {

/// Random arrangement of `count` hyperplanes whose forms are supported on the
/// coordinate block [lo, hi]; pairwise non-proportional by redraw.
Arrangement random_arrangement_in_block(int n, int lo, int hi, int count, std::mt19937_64& rng);

/// Pair of arrangements on disjoint coordinate blocks split after `split`:
/// splayed by construction for any choice of functions.
std::pair<Arrangement, Arrangement> splayed_coordinate_pair(int n, int split, int ka, int kb,
                                                            std::mt19937_64& rng);

/// Pair of random arrangements redrawn until every pair of flats (one from
/// each lattice) meets transversally, so the diagonal non-characteristic
/// condition holds for any supported cycles.
std::pair<Arrangement, Arrangement> generic_arrangement_pair(int n, int ka, int kb,
                                                             std::mt19937_64& rng);

/// Random integer combination of indicator functions of flat closures.
ConstructibleFunction random_flat_function(const ArrangementModel& m, std::mt19937_64& rng);

/// Conic support containing the conormal of every flat of the model.
ConicSupport full_flat_support(const ArrangementModel& m);

/// Random full-row-rank (k+1)x(n+1) integer matrix defining an embedding
/// P^k -> P^n, redrawn until it is non-characteristic for the given support.
QMat random_transversal_embedding(int n, int k, const ConicSupport& s, std::mt19937_64& rng);

/// Casefile for the CLI: {"cases": [{id, kind, inputs, expectations}]}.
/// Families: splayed-coordinate-pair | generic-arrangement-pair | flag-of-flats.
json generate_casefile(const std::string& family, int n, unsigned long long seed);

}  // namespace ccycle
