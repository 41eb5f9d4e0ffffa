#include "homcfg/polygon_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "homcfg/enum_search.hpp"

namespace homcfg {

Polygon::Polygon(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw std::invalid_argument("polygon needs n >= 1 and m >= 1");
  if (n > 1000 || m > 1000) throw std::range_error("polygon parameters too large");
}

int Polygon::canon(long long v) const {
  const long long r = ((v % N()) + N()) % N();
  return r == 0 ? N() : static_cast<int>(r);
}

std::string to_string(const Diagonal& dg) { return "{" + std::to_string(dg.i) + "," + std::to_string(dg.j) + "}"; }

std::string to_string(const OrientedEdge& e) { return "[" + std::to_string(e.i) + "," + std::to_string(e.j) + "]"; }

bool is_m_diagonal(const Polygon& poly, int i, int j) {
  const int N = poly.N();
  if (i == j) throw std::invalid_argument("a diagonal needs two distinct vertices");
  if (i < 1 || i > N || j < 1 || j > N) throw std::invalid_argument("vertex outside [1, N]");
  const int g = ((j - i) % N + N) % N;
  const int step = poly.m() + 1;
  return (g + 1) % step == 0 && (N - g + 1) % step == 0;
}

std::vector<Diagonal> all_diagonals(const Polygon& poly) {
  std::vector<Diagonal> out;
  for (int i = 1; i <= poly.N(); ++i) {
    for (int j = i + 1; j <= poly.N(); ++j) {
      if (is_m_diagonal(poly, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool chords_cross(const Diagonal& a, const Diagonal& b) {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

std::size_t GammaQuiver::index_of(const Diagonal& dg) const {
  auto it = std::lower_bound(diagonals.begin(), diagonals.end(), dg);
  if (it == diagonals.end() || *it != dg) throw std::invalid_argument(to_string(dg) + " is not a vertex of Gamma");
  return static_cast<std::size_t>(it - diagonals.begin());
}

std::size_t GammaPrimeQuiver::index_of(const OrientedEdge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw std::invalid_argument(to_string(e) + " is not a vertex of Gamma'");
  return static_cast<std::size_t>(it - edges.begin());
}

namespace {

void finalize_arrows(TranslationQuiver& q) {
  std::sort(q.arrows.begin(), q.arrows.end());
  q.arrows.erase(std::unique(q.arrows.begin(), q.arrows.end()), q.arrows.end());
}

}  // namespace

GammaQuiver build_gamma(int n, int m) {
  GammaQuiver g{Polygon(n, m), {}, {}};
  const Polygon& poly = g.polygon;
  const int N = poly.N();
  const int step = m + 1;
  g.diagonals = all_diagonals(poly);
  for (const Diagonal& dg : g.diagonals) g.quiver.labels.push_back(to_string(dg));

  for (std::size_t s = 0; s < g.diagonals.size(); ++s) {
    const Diagonal& dg = g.diagonals[s];
    for (const auto& [pivot, other] : {std::pair{dg.i, dg.j}, std::pair{dg.j, dg.i}}) {
      const int gap = ((other - pivot) % N + N) % N;
      if (gap + step > N - 1) continue;  // the rotation would sweep across the pivot
      const int moved = poly.canon(static_cast<long long>(other) + step);
      if (!is_m_diagonal(poly, pivot, moved)) continue;
      g.quiver.arrows.emplace_back(s, g.index_of(Diagonal(pivot, moved)));
    }
    const Diagonal shifted(poly.canon(static_cast<long long>(dg.i) - step), poly.canon(static_cast<long long>(dg.j) - step));
    g.quiver.tau.push_back(g.index_of(shifted));
  }
  finalize_arrows(g.quiver);
  return g;
}

GammaPrimeQuiver build_gamma_prime(int n) {
  if (n < 1) throw std::invalid_argument("Gamma' needs n >= 1");
  GammaPrimeQuiver g{n, {}, {}};
  const auto wrap = [n](int v) { return ((v - 1) % n + n) % n + 1; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) g.edges.push_back(OrientedEdge{i, j});
  }
  for (const OrientedEdge& e : g.edges) g.quiver.labels.push_back(to_string(e));
  for (std::size_t s = 0; s < g.edges.size(); ++s) {
    const OrientedEdge e = g.edges[s];
    if (e.j != wrap(e.i + 1)) g.quiver.arrows.emplace_back(s, g.index_of(OrientedEdge{wrap(e.i + 1), e.j}));
    if (e.i != e.j) g.quiver.arrows.emplace_back(s, g.index_of(OrientedEdge{e.i, wrap(e.j + 1)}));
    g.quiver.tau.push_back(g.index_of(OrientedEdge{wrap(e.i - 1), wrap(e.j - 1)}));
  }
  finalize_arrows(g.quiver);
  return g;
}

TranslationReport verify_stable_translation(const TranslationQuiver& q) {
  TranslationReport rep;
  const std::size_t n = q.size();
  const auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  if (q.tau.size() != n) {
    fail("tau is not defined on every vertex");
    return rep;
  }
  std::vector<int> hits(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (q.tau[x] >= n) {
      fail("tau(" + q.labels[x] + ") is not a vertex");
      return rep;
    }
    ++hits[q.tau[x]];
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (hits[x] != 1) fail("tau is not a bijection at " + q.labels[x]);
  }
  if (!rep.ok) return rep;

  const std::set<std::pair<std::size_t, std::size_t>> arrows(q.arrows.begin(), q.arrows.end());
  std::vector<std::vector<std::size_t>> preds(n), succs(n);
  for (const auto& [s, t] : q.arrows) {
    if (s >= n || t >= n) {
      fail("arrow with an endpoint outside the vertex set");
      return rep;
    }
    preds[t].push_back(s);
    succs[s].push_back(t);
    if (!arrows.count({q.tau[s], q.tau[t]})) {
      fail("tau does not preserve arrow " + q.labels[s] + " -> " + q.labels[t]);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto into = preds[x];
    auto out_of_tau = succs[q.tau[x]];
    std::sort(into.begin(), into.end());
    std::sort(out_of_tau.begin(), out_of_tau.end());
    if (into != out_of_tau) {
      fail("mesh at " + q.labels[x] + ": " + std::to_string(into.size()) + " arrows in, " +
           std::to_string(out_of_tau.size()) + " arrows out of tau = " + q.labels[q.tau[x]]);
    }
  }
  return rep;
}

Diagonal iso_edge_to_diagonal(int n, const OrientedEdge& e) {
  if (n < 2) throw std::invalid_argument("the edge-to-diagonal isomorphism needs n >= 2");
  if (e.i < 1 || e.i > n || e.j < 1 || e.j > n) throw std::invalid_argument("edge endpoint outside [1, n]");
  const auto mod = [](int v, int k) { return ((v % k) + k) % k; };
  const auto label = [&](int r) { return r == 0 ? 2 * n : r; };
  const int a = label(mod(2 * mod(e.i - 1, n) + 1, 2 * n));
  const int b = label(mod(2 * mod(e.j - 1, n), 2 * n));
  return Diagonal(a, b);
}

Arc diagonal_to_arc(const CyContext& ctx, int n, int m, const Diagonal& dg) {
  if (ctx.w() != -m) throw std::invalid_argument("diagonal_to_arc needs w = -m");
  const Polygon poly(n, m);
  if (!is_m_diagonal(poly, dg.i, dg.j)) throw std::invalid_argument(to_string(dg) + " is not an (m+1)-diagonal");
  const Vertex N = poly.N();
  return Arc{N + 1 - dg.i, N + 1 - dg.j};
}

Diagonal arc_to_diagonal(const CyContext& ctx, int n, int m, const Arc& arc) {
  if (ctx.w() != -m) throw std::invalid_argument("arc_to_diagonal needs w = -m");
  const Polygon poly(n, m);
  const Vertex N = poly.N();
  if (!is_admissible(ctx, arc) || arc.u < 1 || arc.t > N) {
    throw std::invalid_argument("arc " + to_string(arc) + " is not in C1 of (N+1, 0)");
  }
  return Diagonal(static_cast<int>(N + 1 - arc.t), static_cast<int>(N + 1 - arc.u));
}

namespace {

class DiagonalSearch {
 public:
  DiagonalSearch(const std::vector<Diagonal>& diagonals, int target, bool emit)
      : d_(diagonals), target_(target), emit_(emit) {}

  void run_from(std::size_t first) {
    chosen_.push_back(d_[first]);
    extend(first + 1);
    chosen_.pop_back();
  }

  void run_all() { extend(0); }

  std::uint64_t count() const { return count_; }
  std::vector<std::vector<Diagonal>>& found() { return found_; }

 private:
  void extend(std::size_t next) {
    if (static_cast<int>(chosen_.size()) == target_) {
      ++count_;
      if (emit_) found_.push_back(chosen_);
      return;
    }
    if (d_.size() - next < static_cast<std::size_t>(target_) - chosen_.size()) return;
    for (std::size_t k = next; k < d_.size(); ++k) {
      const Diagonal& cand = d_[k];
      bool ok = true;
      for (const Diagonal& c : chosen_) {
        if (chords_cross(c, cand) || c.has(cand.i) || c.has(cand.j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen_.push_back(cand);
      extend(k + 1);
      chosen_.pop_back();
    }
  }

  const std::vector<Diagonal>& d_;
  int target_;
  bool emit_;
  std::vector<Diagonal> chosen_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<Diagonal>> found_;
};

void check_diagonal_limit(const Polygon& poly) {
  if (poly.N() > kDiagonalVertexLimit) {
    throw std::invalid_argument("polygon with " + std::to_string(poly.N()) + " vertices exceeds the limit of " +
                                std::to_string(kDiagonalVertexLimit));
  }
}

}  // namespace

DiagonalEnumResult enumerate_diagonal_configs_serial(int n, int m, bool emit) {
  const Polygon poly(n, m);
  check_diagonal_limit(poly);
  const auto diagonals = all_diagonals(poly);
  DiagonalSearch search(diagonals, n, emit);
  search.run_all();
  DiagonalEnumResult r;
  r.count = search.count();
  if (emit) {
    r.configs = std::move(search.found());
    std::sort(r.configs->begin(), r.configs->end());
  }
  return r;
}

DiagonalEnumResult enumerate_diagonal_configs(int n, int m, bool emit, int workers) {
  const Polygon poly(n, m);
  check_diagonal_limit(poly);
  const auto diagonals = all_diagonals(poly);
  std::vector<std::uint64_t> counts(diagonals.size(), 0);
  std::vector<std::vector<std::vector<Diagonal>>> parts(diagonals.size());
  // Subtree i holds the configurations whose smallest diagonal is diagonals[i].
  parallel_indexed(diagonals.size(), workers, [&](std::size_t i) {
    DiagonalSearch search(diagonals, n, emit);
    search.run_from(i);
    counts[i] = search.count();
    if (emit) parts[i] = std::move(search.found());
  });
  DiagonalEnumResult r;
  std::vector<std::vector<Diagonal>> merged;
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    r.count += counts[i];
    merged.insert(merged.end(), parts[i].begin(), parts[i].end());
  }
  if (emit) {
    std::sort(merged.begin(), merged.end());
    r.configs = std::move(merged);
  }
  return r;
}

std::string export_dot(const TranslationQuiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < q.size(); ++v) os << "  v" << v << " [label=\"" << q.labels[v] << "\"];\n";
  for (const auto& [s, t] : q.arrows) os << "  v" << s << " -> v" << t << ";\n";
  for (std::size_t v = 0; v < q.tau.size(); ++v) {
    os << "  v" << v << " -> v" << q.tau[v] << " [style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace homcfg
