#pragma once

// Arc model of the indecomposables of a triangulated category generated by a
// w-spherical object (w <= -1). Objects are d-admissible arcs (t, u) of the
// infinity-gon with d = w - 1; Hom and Ext dimensions are 0 or 1.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace homcfg {

using Vertex = std::int64_t;

class CyContext {
 public:
  // Throws std::invalid_argument unless w <= -1.
  explicit CyContext(int w);

  int w() const { return w_; }
  int d() const { return w_ - 1; }
  int abs_d() const { return 1 - w_; }
  int abs_w() const { return -w_; }

  friend bool operator==(const CyContext&, const CyContext&) = default;

 private:
  int w_;
};

// An arc (t, u) with t > u. Ordering is lexicographic by (u, t), which is the
// canonical order for every set-valued result in this library.
struct Arc {
  Vertex t = 0;
  Vertex u = 0;

  Vertex span() const { return t - u; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend std::strong_ordering operator<=>(const Arc& a, const Arc& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.t <=> b.t;
  }
};

std::ostream& operator<<(std::ostream& os, const Arc& a);
std::string to_string(const Arc& a);

struct Window {
  Vertex lo = 0;
  Vertex hi = 0;

  Window() = default;
  // Throws std::invalid_argument when lo > hi.
  Window(Vertex lo, Vertex hi);

  Vertex size() const { return hi - lo + 1; }
  bool contains(Vertex v) const { return lo <= v && v <= hi; }
  bool contains(const Arc& a) const { return contains(a.u) && contains(a.t); }

  friend bool operator==(const Window&, const Window&) = default;
};

bool is_admissible(const CyContext& ctx, Vertex t, Vertex u);
inline bool is_admissible(const CyContext& ctx, const Arc& a) { return is_admissible(ctx, a.t, a.u); }

// Throws std::invalid_argument if a is not admissible.
void require_admissible(const CyContext& ctx, const Arc& a);

// Level k = (t - u + 1) / |d| of an admissible arc; minimum-length arcs have k = 1.
Vertex level(const CyContext& ctx, const Arc& a);

// Sigma^j (t, u) = (t - j, u - j). Throws std::range_error on overflow.
Arc shift(const CyContext& ctx, const Arc& a, Vertex j);
inline Arc tau(const CyContext& ctx, const Arc& a) { return shift(ctx, a, ctx.d()); }
inline Arc serre(const CyContext& ctx, const Arc& a) { return shift(ctx, a, ctx.w()); }

int component_index(const CyContext& ctx, const Arc& a);

// Partial fountains. LF(anchor; bound) holds the admissible arcs (anchor, y)
// with y <= bound; RF(anchor; bound) holds the admissible arcs (x, anchor)
// with x >= bound.
enum class FountainKind { Left, Right };

struct Fountain {
  FountainKind kind;
  Vertex anchor;
  Vertex bound;

  bool contains(const CyContext& ctx, const Arc& a) const;
  std::vector<Arc> within(const CyContext& ctx, const Window& win) const;
};

enum class Direction { Forward, Backward };

// Closed-form membership in the forward hammock F+(x) and backward hammock
// F-(x) of an admissible arc x.
bool in_forward_hammock(const CyContext& ctx, const Arc& x, const Arc& y);
bool in_backward_hammock(const CyContext& ctx, const Arc& x, const Arc& y);

// The windowed hammock, sorted canonically. Throws std::invalid_argument when
// a is inadmissible or does not fit in win.
std::vector<Arc> hammock(const CyContext& ctx, const Arc& a, Direction dir, const Window& win);

int hom_dim(const CyContext& ctx, const Arc& x, const Arc& y);

// Ext^j(x, y) := Hom(x, Sigma^j y).
int ext_dim(const CyContext& ctx, const Arc& x, const Arc& y, Vertex j);

// Ext^j(x, y) evaluated as membership in the union of partial fountains
// LF(v; u + j) and RF(v; t - d - 1 + j) over v in {t + i d + j : 0 <= i < k}.
// Cost is linear in the level of x.
int ext_dim_hammock(const CyContext& ctx, const Arc& x, const Arc& y, Vertex j);

// All admissible arcs with both endpoints in win, canonical order.
std::vector<Arc> window_arcs(const CyContext& ctx, const Window& win);

}  // namespace homcfg
