#include "homcfg/arc_model.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace homcfg {

namespace {

using Wide = __int128;

// Non-negative remainder.
Wide mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

Vertex checked_sub(Vertex a, Vertex b) {
  Vertex r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::range_error("vertex arithmetic overflows");
  return r;
}

// Caps the fountain-union loop of the literal Ext route.
constexpr Vertex kMaxLiteralLevel = Vertex{1} << 24;

}  // namespace

CyContext::CyContext(int w) : w_(w) {
  if (w > -1) throw std::invalid_argument("CY dimension w must be <= -1");
  if (w < -(1 << 20)) throw std::range_error("CY dimension w out of range");
}

std::ostream& operator<<(std::ostream& os, const Arc& a) { return os << '(' << a.t << ',' << a.u << ')'; }

std::string to_string(const Arc& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

Window::Window(Vertex lo_, Vertex hi_) : lo(lo_), hi(hi_) {
  if (lo > hi) throw std::invalid_argument("window lower bound exceeds upper bound");
  checked_sub(hi, lo);
}

bool is_admissible(const CyContext& ctx, Vertex t, Vertex u) {
  const Wide diff = Wide{t} - Wide{u};
  const Wide abs_d = ctx.abs_d();
  return diff > 0 && diff >= abs_d - 1 && mod(diff + 1, abs_d) == 0;
}

void require_admissible(const CyContext& ctx, const Arc& a) {
  if (!is_admissible(ctx, a)) {
    throw std::invalid_argument("arc " + to_string(a) + " is not admissible for w = " + std::to_string(ctx.w()));
  }
}

Vertex level(const CyContext& ctx, const Arc& a) {
  require_admissible(ctx, a);
  return static_cast<Vertex>((Wide{a.t} - Wide{a.u} + 1) / ctx.abs_d());
}

Arc shift(const CyContext&, const Arc& a, Vertex j) { return Arc{checked_sub(a.t, j), checked_sub(a.u, j)}; }

int component_index(const CyContext& ctx, const Arc& a) {
  require_admissible(ctx, a);
  return static_cast<int>(mod(a.t, ctx.abs_d()));
}

bool Fountain::contains(const CyContext& ctx, const Arc& a) const {
  if (!is_admissible(ctx, a)) return false;
  if (kind == FountainKind::Left) return a.t == anchor && a.u <= bound;
  return a.u == anchor && a.t >= bound;
}

std::vector<Arc> Fountain::within(const CyContext& ctx, const Window& win) const {
  std::vector<Arc> out;
  if (!win.contains(anchor)) return out;
  if (kind == FountainKind::Left) {
    for (Vertex y = win.lo; y <= std::min(bound, win.hi); ++y) {
      if (is_admissible(ctx, anchor, y)) out.push_back(Arc{anchor, y});
    }
  } else {
    for (Vertex x = std::max(bound, win.lo); x <= win.hi; ++x) {
      if (is_admissible(ctx, x, anchor)) out.push_back(Arc{x, anchor});
    }
  }
  return out;
}

// F+(t, u) is the union of LF(t + i d; u) for 0 <= i < k: the right endpoint
// steps down from t by multiples of |d|, the left endpoint is at most u.
bool in_forward_hammock(const CyContext& ctx, const Arc& x, const Arc& y) {
  if (!is_admissible(ctx, x) || !is_admissible(ctx, y)) return false;
  const Wide abs_d = ctx.abs_d();
  const Wide k = (Wide{x.t} - x.u + 1) / abs_d;
  const Wide drop = Wide{x.t} - y.t;
  return drop >= 0 && mod(drop, abs_d) == 0 && drop / abs_d < k && y.u <= x.u;
}

// F-(t, u) is the union of RF(u - i d; t) for 0 <= i < k.
bool in_backward_hammock(const CyContext& ctx, const Arc& x, const Arc& y) {
  if (!is_admissible(ctx, x) || !is_admissible(ctx, y)) return false;
  const Wide abs_d = ctx.abs_d();
  const Wide k = (Wide{x.t} - x.u + 1) / abs_d;
  const Wide rise = Wide{y.u} - x.u;
  return rise >= 0 && mod(rise, abs_d) == 0 && rise / abs_d < k && y.t >= x.t;
}

std::vector<Arc> hammock(const CyContext& ctx, const Arc& a, Direction dir, const Window& win) {
  require_admissible(ctx, a);
  if (!win.contains(a)) throw std::invalid_argument("window does not contain arc " + to_string(a));
  const Vertex k = level(ctx, a);
  std::vector<Arc> out;
  for (Vertex i = 0; i < k; ++i) {
    const Fountain f = dir == Direction::Forward ? Fountain{FountainKind::Left, a.t + i * ctx.d(), a.u}
                                                 : Fountain{FountainKind::Right, a.u - i * ctx.d(), a.t};
    auto part = f.within(ctx, win);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int hom_dim(const CyContext& ctx, const Arc& x, const Arc& y) {
  require_admissible(ctx, x);
  require_admissible(ctx, y);
  return in_forward_hammock(ctx, x, y) || in_backward_hammock(ctx, serre(ctx, x), y) ? 1 : 0;
}

int ext_dim(const CyContext& ctx, const Arc& x, const Arc& y, Vertex j) {
  return hom_dim(ctx, x, shift(ctx, y, j));
}

int ext_dim_hammock(const CyContext& ctx, const Arc& x, const Arc& y, Vertex j) {
  require_admissible(ctx, x);
  require_admissible(ctx, y);
  const Vertex k = level(ctx, x);
  if (k > kMaxLiteralLevel) throw std::range_error("arc level too large for the literal Ext route");
  const Vertex left_bound = checked_sub(x.u, -j);
  const Vertex right_bound = checked_sub(checked_sub(x.t, ctx.d() + 1), -j);
  for (Vertex i = 0; i < k; ++i) {
    const Vertex v = checked_sub(checked_sub(x.t, -i * ctx.d()), -j);
    if (Fountain{FountainKind::Left, v, left_bound}.contains(ctx, y)) return 1;
    if (Fountain{FountainKind::Right, v, right_bound}.contains(ctx, y)) return 1;
  }
  return 0;
}

std::vector<Arc> window_arcs(const CyContext& ctx, const Window& win) {
  std::vector<Arc> out;
  for (Vertex u = win.lo; u <= win.hi; ++u) {
    for (Vertex t = u + 1; t <= win.hi; ++t) {
      if (is_admissible(ctx, t, u)) out.push_back(Arc{t, u});
    }
  }
  return out;
}

}  // namespace homcfg
