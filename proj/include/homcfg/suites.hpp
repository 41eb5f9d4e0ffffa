#pragma once

// Exhaustive cross-checks between independent computations of the same
// quantity. Each sweep counts the cases it compared and keeps the first few
// mismatches as text. Shared by the verify subcommand and the acceptance
// binary.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "homcfg/arc_model.hpp"

namespace homcfg::suites {

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches

  bool ok() const { return mismatches == 0 && checked > 0; }
  void merge(const SuiteResult& other);
  void record(std::string what);
};

// "<name>: ok (N checked)" or "<name>: FAIL (M of N mismatched; first: ...)".
std::string summary(const SuiteResult& r);

// Hom(x, y) = Hom(y, S x) and Ext^j by closed form = Ext^j by fountains,
// j in [w - 2, 2], all admissible pairs of [1, window_size].
SuiteResult serre_and_hammock(std::span<const int> ws, Vertex window_size, int workers = 0);

// compatible(a, b) iff Ext^i(a, b) = 0 for i in {w, ..., 0}.
SuiteResult compatibility_bridge(std::span<const int> ws, Vertex window_size, int workers = 0);

// Sweep enumerator against maximal compatible sets on [1, s], s in [min_size, max_size].
SuiteResult enumerator_agreement(std::span<const int> ws, Vertex min_size, Vertex max_size, int workers = 0);

// Counting check against both defining Riedtmann checks on every enumerated config.
SuiteResult riedtmann_agreement(std::span<const int> ws, Vertex min_size, Vertex max_size, int workers = 0);

// Diagonal configurations for m = 1 and w = -1 configurations on 2n
// vertices both count Catalan(n), n in [1, n_max].
SuiteResult catalan_counts(int n_max, int workers = 0);

// F is a bijection from the fundamental domain onto C1 that carries
// Nakayama Hom to arc Hom, for every level up to n_max + 1.
SuiteResult orbit_functor(std::span<const int> ws, int n_max);

// The C2 splice preserves Hom on seeded random pairs and round-trips.
SuiteResult splice_hom(std::span<const int> ws, std::uint64_t samples, std::uint64_t seed);

// Exhaustive form of splice_hom: every pair of C2 arcs within margin of the
// base arcs (level(a) - 1, 0), levels 1..max_level.
SuiteResult splice_hom_exhaustive(std::span<const int> ws, Vertex max_level, Vertex margin);

// Stable translation axioms and vertex counts for Gamma(n, m).
SuiteResult translation_quivers(int n_max, int m_max);

// n in [2, n_max]. The edge model maps onto Gamma(n, 1) bijectively, arrows to arrows, commuting with tau.
SuiteResult edge_model_iso(int n_max);

// n in [2, n_max]. For every m = 1 diagonal configuration, rho of the successor partition read
// off the edge labels gives back the diagonal labels.
SuiteResult pair_partition_labels(int n_max, int workers = 0);

// g = K(f) on every w = -1 configuration of windows [lo, lo + s - 1],
// lo in {0, 1}, s <= max_size.
SuiteResult kreweras_of_f(Vertex max_size, int workers = 0);

// Block shapes of f and g on the canonical families under the boundary reading.
SuiteResult canonical_partitions(Vertex max_size);

}  // namespace homcfg::suites
