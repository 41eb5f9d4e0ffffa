#include "homcfg/perp_orbit.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace homcfg {

void require_valid(const NakayamaObject& obj) {
  if (obj.n < 1 || obj.m < 1) throw std::invalid_argument("orbit category needs n >= 1 and m >= 1");
  if (obj.degree < 0 || obj.degree > obj.m) throw std::invalid_argument("degree outside [0, m]");
  if (obj.socle < 1 || obj.length < 1 || obj.top() > obj.n) throw std::invalid_argument("module outside A_n");
  if (obj.degree == obj.m && obj.top() == obj.n) {
    throw std::invalid_argument("injective module at degree m lies outside the fundamental domain");
  }
}

std::ostream& operator<<(std::ostream& os, const NakayamaObject& obj) {
  return os << "deg:" << obj.degree << " socle:" << obj.socle << " len:" << obj.length;
}

std::string to_string(const NakayamaObject& obj) {
  std::ostringstream os;
  os << obj;
  return os.str();
}

std::string to_string(PerpSide side) {
  switch (side) {
    case PerpSide::C1:
      return "C1";
    case PerpSide::C2:
      return "C2";
    case PerpSide::Neither:
      return "neither";
  }
  return "unknown";
}

PerpSide perp_membership(const CyContext& ctx, const Arc& a, const Arc& x) {
  require_admissible(ctx, a);
  require_admissible(ctx, x);
  if (a.u < x.u && x.t < a.t) return PerpSide::C1;
  const auto outside = [&](Vertex v) { return v < a.u || v > a.t; };
  if (outside(x.u) && outside(x.t)) return PerpSide::C2;
  return PerpSide::Neither;
}

Arc splice_c2(const CyContext& ctx, const Arc& a, const Arc& x, SpliceDirection dir) {
  require_admissible(ctx, a);
  require_admissible(ctx, x);
  if (dir == SpliceDirection::Fold) {
    if (perp_membership(ctx, a, x) != PerpSide::C2) {
      throw std::invalid_argument("arc " + to_string(x) + " is not in C2 of " + to_string(a));
    }
    const auto fold = [&](Vertex v) { return v > a.t ? v - a.t - 1 : v - a.u; };
    return Arc{fold(x.t), fold(x.u)};
  }
  const auto unfold = [&](Vertex v) { return v >= 0 ? v + a.t + 1 : v + a.u; };
  return Arc{unfold(x.t), unfold(x.u)};
}

std::vector<NakayamaObject> fundamental_domain(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("orbit category needs n >= 1 and m >= 1");
  std::vector<NakayamaObject> out;
  for (int deg = 0; deg <= m; ++deg) {
    for (int socle = 1; socle <= n; ++socle) {
      for (int len = 1; socle + len - 1 <= n; ++len) {
        NakayamaObject obj{n, m, deg, socle, len};
        if (deg == m && obj.top() == n) continue;
        out.push_back(obj);
      }
    }
  }
  return out;
}

int nakayama_hom(const NakayamaObject& M, const NakayamaObject& N) {
  require_valid(M);
  require_valid(N);
  if (M.n != N.n || M.m != N.m) throw std::invalid_argument("objects from different orbit categories");
  const int a1 = M.socle, al = M.top();
  const int b1 = N.socle, bm = N.top();
  if (M.degree == N.degree) return a1 <= b1 && b1 <= al && al <= bm ? 1 : 0;
  if (N.degree == M.degree + 1) return b1 <= a1 - 1 && a1 - 1 <= bm && bm <= al - 1 ? 1 : 0;
  if (M.degree == M.m && N.degree == 0) return b1 <= a1 && a1 <= bm && bm <= al ? 1 : 0;
  return 0;
}

bool same_degree_hom_by_sequence(const NakayamaObject& M, const NakayamaObject& N) {
  // M = (a_l, ..., a_1) with a_i = socle + i - 1, likewise N = (b_len, ..., b_1).
  const auto a = [&](int i) { return M.socle + i - 1; };
  const auto b = [&](int i) { return N.socle + i - 1; };
  for (int j = 1; j <= M.length; ++j) {
    const int seg = M.length - j + 1;
    if (seg > N.length) continue;
    bool match = true;
    for (int r = 0; r < seg && match; ++r) match = a(j + r) == b(1 + r);
    if (match) return true;
  }
  return false;
}

int orbit_rank(const CyContext& ctx, const Arc& a) { return static_cast<int>(level(ctx, a) - 1); }

Arc functor_F(const CyContext& ctx, const Arc& a, const NakayamaObject& M) {
  require_valid(M);
  if (M.n != orbit_rank(ctx, a)) throw std::invalid_argument("object's n does not match the base arc");
  if (M.m != ctx.abs_w()) throw std::invalid_argument("object's m does not match |w|");
  const Vertex d = ctx.d();
  const Vertex i = M.degree;
  return Arc{a.t - i - 1 + (M.socle - 1) * d, a.u - i - 1 - (M.n + 2 - M.length - M.socle) * d};
}

NakayamaObject functor_F_inverse(const CyContext& ctx, const Arc& a, const Arc& x) {
  if (perp_membership(ctx, a, x) != PerpSide::C1) {
    throw std::invalid_argument("arc " + to_string(x) + " is not in C1 of " + to_string(a));
  }
  const Vertex abs_d = ctx.abs_d();
  const Vertex top_gap = a.t - 1 - x.t;  // = i + (a_1 - 1)|d|
  const Vertex i = ((top_gap % abs_d) + abs_d) % abs_d;
  const Vertex socle = (top_gap - i) / abs_d + 1;
  const Vertex bottom = x.u - a.u + i + 1;  // = (n + 2 - l - a_1)|d|
  if (bottom % abs_d != 0) throw std::logic_error("C1 arc without a preimage under F");
  const int n = orbit_rank(ctx, a);
  const Vertex length = n + 2 - socle - bottom / abs_d;
  NakayamaObject obj{n, ctx.abs_w(), static_cast<int>(i), static_cast<int>(socle), static_cast<int>(length)};
  require_valid(obj);
  if (functor_F(ctx, a, obj) != x) throw std::logic_error("F inverse failed to round-trip");
  return obj;
}

std::vector<Arc> c1_arcs(const CyContext& ctx, const Arc& a) {
  require_admissible(ctx, a);
  if (a.t - a.u < 2) return {};
  return window_arcs(ctx, Window{a.u + 1, a.t - 1});
}

}  // namespace homcfg
