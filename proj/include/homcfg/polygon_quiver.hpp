#pragma once

// Geometric model of C_m(A_n): (m+1)-diagonals of an N-gon with
// N = (n+1)(m+1) - 2, the stable translation quiver Gamma(n, m) they span,
// the oriented-edge model Gamma'(n) for m = 1, and the maps tying these to
// the arc model.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcfg/arc_model.hpp"

namespace homcfg {

class Polygon {
 public:
  // Throws std::invalid_argument unless n, m >= 1.
  Polygon(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int N() const { return (n_ + 1) * (m_ + 1) - 2; }

  // Residue of v in [1, N].
  int canon(long long v) const;

 private:
  int n_;
  int m_;
};

// Unordered pair stored with i < j.
struct Diagonal {
  int i = 0;
  int j = 0;

  Diagonal() = default;
  Diagonal(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

  bool has(int v) const { return i == v || j == v; }

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& dg);

// Oriented edge [i, j] of an n-gon, loops allowed.
struct OrientedEdge {
  int i = 1;
  int j = 1;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

std::string to_string(const OrientedEdge& e);

// Throws std::invalid_argument when i == j or a vertex is outside [1, N].
bool is_m_diagonal(const Polygon& poly, int i, int j);

// Sorted; size (m+1) n (n+1) / 2 - n.
std::vector<Diagonal> all_diagonals(const Polygon& poly);

// Chords cross in the interior of the disc.
bool chords_cross(const Diagonal& a, const Diagonal& b);

struct TranslationQuiver {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // sorted, unique
  std::vector<std::size_t> tau;

  std::size_t size() const { return labels.size(); }
};

struct GammaQuiver {
  Polygon polygon;
  std::vector<Diagonal> diagonals;  // vertex index -> diagonal
  TranslationQuiver quiver;

  std::size_t index_of(const Diagonal& dg) const;
};

struct GammaPrimeQuiver {
  int n;
  std::vector<OrientedEdge> edges;  // vertex index -> oriented edge
  TranslationQuiver quiver;

  std::size_t index_of(const OrientedEdge& e) const;
};

// Arrow D -> D' when D' is D rotated m+1 steps clockwise about a shared
// vertex without sweeping across it; tau{i, j} = {i - m - 1, j - m - 1}.
GammaQuiver build_gamma(int n, int m);

// Arrows [i, j] -> [i+1, j] for j != i+1 and [i, j] -> [i, j+1] for i != j;
// tau[i, j] = [i-1, j-1], indices mod n.
GammaPrimeQuiver build_gamma_prime(int n);

struct TranslationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// tau bijective, tau an automorphism, and for every x the immediate
// predecessors of x equal the immediate successors of tau(x).
TranslationReport verify_stable_translation(const TranslationQuiver& q);

// [i, j] -> {2((i-1) mod n) + 1, 2((j-1) mod n)} mod 2n, residue 0 as 2n.
Diagonal iso_edge_to_diagonal(int n, const OrientedEdge& e);

// {i, j} -> (N + 1 - i, N + 1 - j) ordered, inside the base arc (N + 1, 0) for w = -m.
// Throws std::invalid_argument when ctx.w() != -m or dg is not an (m+1)-diagonal.
Arc diagonal_to_arc(const CyContext& ctx, int n, int m, const Diagonal& dg);

// Inverse of diagonal_to_arc on C1 of (N + 1, 0).
Diagonal arc_to_diagonal(const CyContext& ctx, int n, int m, const Arc& arc);

struct DiagonalEnumResult {
  std::uint64_t count = 0;
  std::optional<std::vector<std::vector<Diagonal>>> configs;
};

inline constexpr int kDiagonalVertexLimit = 40;

// n-element sets of pairwise noncrossing, vertex-disjoint (m+1)-diagonals.
// Throws std::invalid_argument when N exceeds kDiagonalVertexLimit.
DiagonalEnumResult enumerate_diagonal_configs(int n, int m, bool emit = true, int workers = 0);
DiagonalEnumResult enumerate_diagonal_configs_serial(int n, int m, bool emit = true);

std::string export_dot(const TranslationQuiver& q, const std::string& name = "quiver");

}  // namespace homcfg
