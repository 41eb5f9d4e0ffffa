#pragma once

// Noncrossing partitions of finite ground sets and of windows of the two
// half-integer copies Z' = {2k + 1/2} and Z'' = {2k - 1/2} of the
// infinity-gon, Kreweras complements, the hull-outline bijection rho onto
// noncrossing pair partitions, and the maps f, g from w = -1
// Hom-configurations to partitions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcfg/config_kernel.hpp"

namespace homcfg {

using Label = std::int64_t;

// Blocks are sorted internally and ordered by their minimum.
struct NCPartition {
  std::vector<Label> ground;
  std::vector<std::vector<Label>> blocks;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;
};

class MalformedPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Normalizes block order. Throws MalformedPartition on empty, overlapping or
// non-covering blocks.
NCPartition make_partition(std::vector<Label> ground, std::vector<std::vector<Label>> blocks);

NCPartition singletons(const std::vector<Label>& ground);
std::vector<Label> iota_ground(Label n);  // {1, ..., n}

// Exhaustive a < b < c < d test. Throws MalformedPartition for a partition
// that was not built with make_partition and fails its checks.
bool is_noncrossing(const NCPartition& p);

std::string to_string(const NCPartition& p);

enum class Copy { ZPrime, ZDoublePrime };

Copy other(Copy c);

// Index k of copy c sits at position 2k + 1/2 (Z') or 2k - 1/2 (Z''). The
// value returned is twice the position, so both copies interleave on the
// integers: k'' < k' < (k+1)''.
std::int64_t doubled_position(Label k, Copy c);

class CrossingPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The coarsest partition of complement_ground (in copy other(p_copy)) whose
// union with p is noncrossing on the merged order. Throws CrossingPartition
// when p crosses itself.
NCPartition kreweras(const NCPartition& p, Copy p_copy, const std::vector<Label>& complement_ground);

// p on {1..n} read in Z', complement on {1..n} in Z''.
NCPartition kreweras(const NCPartition& p);

// Outline of the block hulls: for each block b_1 < ... < b_k pair
// (2 b_j - 1)' with (2 b_{j+1} - 2)' cyclically, indices mod 2n with 0 as 2n.
// Throws CrossingPartition for a crossing input.
NCPartition rho(const NCPartition& p, Label n);

class NotInImage : public std::invalid_argument {
 public:
  NotInImage(const std::string& what, Label a, Label b) : std::invalid_argument(what), first(a), second(b) {}
  Label first;
  Label second;
};

// Throws CrossingPartition for crossing input, MalformedPartition if a block
// is not a pair, NotInImage when q is not rho of any partition.
NCPartition rho_inverse(const NCPartition& q, Label n);

// The slots of a window [lo, hi] are the half-integers v + 1/2 for
// v in [lo - 1, hi]; even v belong to Z' (k = v / 2), odd v to Z''
// (k = (v + 1) / 2).
struct WindowPartition {
  Copy copy;
  Window win;
  NCPartition partition;
};

std::optional<Label> slot_index(Vertex v, Copy c);
std::vector<Label> slot_ground(const Window& win, Copy c);

// f (Copy::ZPrime) or g (Copy::ZDoublePrime): the slot after v continues to
// the slot after t when (t, v + 1) is an arc of cfg, and ends its block
// otherwise. Throws std::invalid_argument unless w = -1 and cfg is a
// Hom-configuration.
WindowPartition config_to_partition(const ArcConfig& cfg, Copy c);

enum class BlockClass { Interior, TouchesLower, TouchesUpper, Spans };

std::string to_string(BlockClass b);

// A block touches the lower (upper) boundary when it holds the slot after
// lo - 1 (after hi). Parallel to p.partition.blocks.
std::vector<BlockClass> classify_blocks(const WindowPartition& p);

// All noncrossing partitions of {1..n}, in restricted-growth order.
std::vector<NCPartition> all_noncrossing_partitions(Label n);

}  // namespace homcfg
