#pragma once

// The perpendicular category of an arc a = (t, u) splits into the arcs
// strictly inside ]u, t[ (C1, equivalent to the orbit category C_m(A_n) with
// m = |w| and n = k - 1) and the arcs avoiding [u, t] (C2, equivalent to the
// whole arc model). This module holds the Nakayama model of C_m(A_n), the
// coordinate functor onto C1 and the vertex splice that re-indexes C2.

#include <iosfwd>
#include <string>
#include <vector>

#include "homcfg/arc_model.hpp"

namespace homcfg {

// Sigma^degree of the indecomposable A_n-module with socle S_socle and the
// given composition length, Q = n -> n-1 -> ... -> 1.
struct NakayamaObject {
  int n = 1;
  int m = 1;
  int degree = 0;
  int socle = 1;
  int length = 1;

  int top() const { return socle + length - 1; }

  friend bool operator==(const NakayamaObject&, const NakayamaObject&) = default;
};

// Throws std::invalid_argument unless the object lies in the fundamental
// domain: 0 <= degree <= m, 1 <= socle, top <= n, and top != n at degree m.
void require_valid(const NakayamaObject& obj);

std::ostream& operator<<(std::ostream& os, const NakayamaObject& obj);
std::string to_string(const NakayamaObject& obj);

enum class PerpSide { C1, C2, Neither };

std::string to_string(PerpSide side);

PerpSide perp_membership(const CyContext& ctx, const Arc& a, const Arc& x);

enum class SpliceDirection { Fold, Unfold };

// fold sends vertex t + i to i - 1 and u - i to -i (i >= 1); unfold inverts it.
// Throws std::invalid_argument when fold is applied outside C2.
Arc splice_c2(const CyContext& ctx, const Arc& a, const Arc& x, SpliceDirection dir);

// Ordered by degree, then socle, then length.
std::vector<NakayamaObject> fundamental_domain(int n, int m);

// Throws std::invalid_argument when the objects come from different domains.
int nakayama_hom(const NakayamaObject& M, const NakayamaObject& N);

// Case rule (1) in its original form: some top segment of M equals a bottom
// segment of N.
bool same_degree_hom_by_sequence(const NakayamaObject& M, const NakayamaObject& N);

// n of the orbit category attached to a: level(a) - 1.
int orbit_rank(const CyContext& ctx, const Arc& a);

// Throws std::invalid_argument when M's (n, m) disagree with a and w.
Arc functor_F(const CyContext& ctx, const Arc& a, const NakayamaObject& M);

// Throws std::invalid_argument when x is not in C1 of a.
NakayamaObject functor_F_inverse(const CyContext& ctx, const Arc& a, const Arc& x);

// All C1 arcs of a in canonical order.
std::vector<Arc> c1_arcs(const CyContext& ctx, const Arc& a);

}  // namespace homcfg
