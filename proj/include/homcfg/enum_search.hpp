#pragma once

// Exhaustive enumeration of window Hom-configurations by two independent
// methods: a vertex-sweep backtracking search driven by the counting
// conditions, and maximal cliques of the Ext-vanishing compatibility graph.
//
// Each method has a serial reference and an OpenMP kernel that splits the
// search tree at a fixed shallow depth. Both produce the same canonically
// sorted output for any worker count.

#include <cstdint>
#include <optional>
#include <vector>

#include "homcfg/config_kernel.hpp"

namespace homcfg {

enum class EnumMethod { CheckerBacktrack, OracleMaximal };

struct EnumResult {
  std::uint64_t count = 0;
  std::optional<std::vector<ArcConfig>> configs;
  EnumMethod method = EnumMethod::CheckerBacktrack;
};

inline constexpr Vertex kDefaultSweepLimit = 24;
inline constexpr Vertex kDefaultOracleLimit = 16;

struct EnumOptions {
  bool emit = true;
  int workers = 0;  // 0 = OpenMP default
  Vertex window_limit = kDefaultSweepLimit;
};

// Throws std::invalid_argument when the window exceeds the limit.
EnumResult enumerate_configs(const CyContext& ctx, const Window& win, const EnumOptions& opts = {});
EnumResult enumerate_configs_serial(const CyContext& ctx, const Window& win, const EnumOptions& opts = {});

EnumResult enumerate_maximal_compatible(const CyContext& ctx, const Window& win, int workers = 0,
                                        Vertex window_limit = kDefaultOracleLimit);
EnumResult enumerate_maximal_compatible_serial(const CyContext& ctx, const Window& win,
                                               Vertex window_limit = kDefaultOracleLimit);

struct EquivalenceReport {
  std::uint64_t checker_count = 0;
  std::uint64_t oracle_count = 0;
  bool equal = false;
  std::vector<ArcConfig> only_checker;
  std::vector<ArcConfig> only_oracle;
};

EquivalenceReport equivalence_report(const CyContext& ctx, const Window& win, int workers = 0);

// Runs fn(i) for i in [0, n) across workers; the caller merges per-index
// results in index order so output does not depend on scheduling.
template <class Fn>
void parallel_indexed(std::size_t n, int workers, Fn&& fn) {
  const long long total = static_cast<long long>(n);
  if (workers == 1) {
    for (long long i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
  if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long long i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
  }
}

}  // namespace homcfg
