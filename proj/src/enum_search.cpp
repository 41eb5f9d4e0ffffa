#include "homcfg/enum_search.hpp"

#include <algorithm>
#include <bitset>
#include <iterator>
#include <stdexcept>

namespace homcfg {

namespace {

void check_limit(const Window& win, Vertex limit) {
  if (win.size() > limit) {
    throw std::invalid_argument("window of " + std::to_string(win.size()) + " vertices exceeds the limit of " +
                                std::to_string(limit));
  }
}

// ---------------------------------------------------------------------------
// Vertex sweep. Vertices are resolved left to right; each is isolated, opens
// an arc, or closes the innermost open arc. The open arcs form a stack, so
// crossings and shared endpoints cannot arise.

struct OpenArc {
  Vertex u;
  int under;  // isolated vertices whose smallest overarc is this arc
};

struct SweepState {
  Vertex next;
  std::vector<OpenArc> open;
  int free = 0;
  std::vector<Arc> chosen;
};

class Sweep {
 public:
  Sweep(const CyContext& ctx, const Window& win, bool emit) : ctx_(ctx), win_(win), emit_(emit) {}

  // Explores the subtree below s. With a stop vertex, states reaching it are
  // collected into frontier instead of being expanded.
  void run(SweepState& s, std::optional<Vertex> stop = std::nullopt, std::vector<SweepState>* frontier = nullptr) {
    stop_ = stop;
    frontier_ = frontier;
    visit(s);
  }

  std::uint64_t count() const { return count_; }
  std::vector<std::vector<Arc>>& found() { return found_; }

 private:
  void visit(SweepState& s) {
    if (stop_ && s.next == *stop_ && s.next <= win_.hi) {
      frontier_->push_back(s);
      return;
    }
    if (s.next > win_.hi) {
      if (s.open.empty()) {
        ++count_;
        if (emit_) found_.push_back(s.chosen);
      }
      return;
    }
    const Vertex v = s.next;
    const Vertex remaining_after = win_.hi - v;
    ++s.next;

    // v isolated
    if (!s.open.empty()) {
      if (s.open.back().under < ctx_.abs_w() - 1 && static_cast<Vertex>(s.open.size()) <= remaining_after) {
        ++s.open.back().under;
        visit(s);
        --s.open.back().under;
      }
    } else if (s.free < ctx_.abs_w()) {
      ++s.free;
      visit(s);
      --s.free;
    }

    // v opens an arc
    if (v + ctx_.abs_d() - 1 <= win_.hi && static_cast<Vertex>(s.open.size()) + 1 <= remaining_after) {
      s.open.push_back(OpenArc{v, 0});
      visit(s);
      s.open.pop_back();
    }

    // v closes the innermost open arc
    if (!s.open.empty()) {
      const OpenArc top = s.open.back();
      if (top.under == ctx_.abs_w() - 1 && is_admissible(ctx_, v, top.u) &&
          static_cast<Vertex>(s.open.size()) - 1 <= remaining_after) {
        s.open.pop_back();
        s.chosen.push_back(Arc{v, top.u});
        visit(s);
        s.chosen.pop_back();
        s.open.push_back(top);
      }
    }
    --s.next;
  }

  CyContext ctx_;
  Window win_;
  bool emit_;
  std::optional<Vertex> stop_;
  std::vector<SweepState>* frontier_ = nullptr;
  std::uint64_t count_ = 0;
  std::vector<std::vector<Arc>> found_;
};

EnumResult finish(const CyContext& ctx, const Window& win, EnumMethod method, std::uint64_t count,
                  std::vector<std::vector<Arc>>* arc_sets) {
  EnumResult r;
  r.method = method;
  r.count = count;
  if (arc_sets) {
    std::vector<ArcConfig> configs;
    configs.reserve(arc_sets->size());
    for (auto& arcs : *arc_sets) configs.emplace_back(ctx, win, std::move(arcs));
    std::sort(configs.begin(), configs.end());
    r.configs = std::move(configs);
  }
  return r;
}

// Depth of the parallel split: enough subtrees to balance, few enough that
// the frontier stays small.
constexpr Vertex kSplitDepth = 8;

// ---------------------------------------------------------------------------
// Maximal cliques of the compatibility graph (Bron-Kerbosch with pivoting).

constexpr std::size_t kMaxUniverse = 128;
using ArcSet = std::bitset<kMaxUniverse>;

struct CompatGraph {
  std::vector<Arc> arcs;
  std::vector<ArcSet> adj;
};

CompatGraph build_compat_graph(const CyContext& ctx, const Window& win) {
  CompatGraph g;
  const int w = ctx.w();
  for (const Arc& h : window_arcs(ctx, win)) {
    bool self_ok = true;
    for (int i = w + 1; i <= -1 && self_ok; ++i) self_ok = ext_dim(ctx, h, h, i) == 0;
    if (self_ok) g.arcs.push_back(h);
  }
  if (g.arcs.size() > kMaxUniverse) throw std::invalid_argument("window has too many admissible arcs for the oracle");
  g.adj.assign(g.arcs.size(), ArcSet{});
  for (std::size_t a = 0; a < g.arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < g.arcs.size(); ++b) {
      bool ok = true;
      for (int i = w; i <= 0 && ok; ++i) {
        ok = ext_dim(ctx, g.arcs[a], g.arcs[b], i) == 0 && ext_dim(ctx, g.arcs[b], g.arcs[a], i) == 0;
      }
      if (ok) {
        g.adj[a].set(b);
        g.adj[b].set(a);
      }
    }
  }
  return g;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const CompatGraph& g) : g_(g) {}

  void run(ArcSet r, ArcSet p, ArcSet x) {
    if (p.none()) {
      if (x.none()) out_.push_back(r);
      return;
    }
    // pivot with the most neighbours in p
    std::size_t pivot = 0, best = 0;
    const ArcSet px = p | x;
    for (std::size_t u = 0; u < g_.arcs.size(); ++u) {
      if (!px.test(u)) continue;
      const std::size_t c = (p & g_.adj[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    const ArcSet candidates = p & ~g_.adj[pivot];
    for (std::size_t v = 0; v < g_.arcs.size(); ++v) {
      if (!candidates.test(v)) continue;
      ArcSet r2 = r;
      r2.set(v);
      run(r2, p & g_.adj[v], x & g_.adj[v]);
      p.reset(v);
      x.set(v);
    }
  }

  std::vector<ArcSet>& found() { return out_; }

 private:
  const CompatGraph& g_;
  std::vector<ArcSet> out_;
};

ArcSet full_set(std::size_t n) {
  ArcSet s;
  for (std::size_t i = 0; i < n; ++i) s.set(i);
  return s;
}

std::vector<std::vector<Arc>> to_arc_lists(const CompatGraph& g, const std::vector<ArcSet>& cliques) {
  std::vector<std::vector<Arc>> out;
  out.reserve(cliques.size());
  for (const ArcSet& c : cliques) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      if (c.test(i)) arcs.push_back(g.arcs[i]);
    }
    out.push_back(std::move(arcs));
  }
  return out;
}

}  // namespace

EnumResult enumerate_configs_serial(const CyContext& ctx, const Window& win, const EnumOptions& opts) {
  check_limit(win, opts.window_limit);
  Sweep sweep(ctx, win, opts.emit);
  SweepState s{win.lo, {}, 0, {}};
  sweep.run(s);
  return finish(ctx, win, EnumMethod::CheckerBacktrack, sweep.count(), opts.emit ? &sweep.found() : nullptr);
}

EnumResult enumerate_configs(const CyContext& ctx, const Window& win, const EnumOptions& opts) {
  check_limit(win, opts.window_limit);
  std::vector<SweepState> frontier;
  Sweep splitter(ctx, win, opts.emit);
  SweepState root{win.lo, {}, 0, {}};
  splitter.run(root, win.lo + kSplitDepth, &frontier);

  std::vector<std::uint64_t> counts(frontier.size(), 0);
  std::vector<std::vector<std::vector<Arc>>> parts(frontier.size());
  parallel_indexed(frontier.size(), opts.workers, [&](std::size_t i) {
    Sweep sweep(ctx, win, opts.emit);
    sweep.run(frontier[i]);
    counts[i] = sweep.count();
    if (opts.emit) parts[i] = std::move(sweep.found());
  });

  std::uint64_t total = splitter.count();
  std::vector<std::vector<Arc>> merged = std::move(splitter.found());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    total += counts[i];
    std::move(parts[i].begin(), parts[i].end(), std::back_inserter(merged));
  }
  return finish(ctx, win, EnumMethod::CheckerBacktrack, total, opts.emit ? &merged : nullptr);
}

EnumResult enumerate_maximal_compatible_serial(const CyContext& ctx, const Window& win, Vertex window_limit) {
  check_limit(win, window_limit);
  const CompatGraph g = build_compat_graph(ctx, win);
  CliqueSearch search(g);
  search.run(ArcSet{}, full_set(g.arcs.size()), ArcSet{});
  auto lists = to_arc_lists(g, search.found());
  return finish(ctx, win, EnumMethod::OracleMaximal, lists.size(), &lists);
}

EnumResult enumerate_maximal_compatible(const CyContext& ctx, const Window& win, int workers, Vertex window_limit) {
  check_limit(win, window_limit);
  const CompatGraph g = build_compat_graph(ctx, win);
  const std::size_t n = g.arcs.size();

  // Top level of Bron-Kerbosch without pivot: branch i takes arc i with the
  // later arcs as candidates and the earlier ones as excluded.
  std::vector<std::vector<ArcSet>> parts(n);
  parallel_indexed(n, workers, [&](std::size_t i) {
    ArcSet r, p, x;
    r.set(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!g.adj[i].test(j)) continue;
      (j > i ? p : x).set(j);
    }
    CliqueSearch search(g);
    search.run(r, p, x);
    parts[i] = std::move(search.found());
  });

  std::vector<ArcSet> cliques;
  for (auto& part : parts) cliques.insert(cliques.end(), part.begin(), part.end());
  if (n == 0) cliques.push_back(ArcSet{});
  auto lists = to_arc_lists(g, cliques);
  return finish(ctx, win, EnumMethod::OracleMaximal, lists.size(), &lists);
}

EquivalenceReport equivalence_report(const CyContext& ctx, const Window& win, int workers) {
  const EnumResult checker = enumerate_configs(ctx, win, EnumOptions{true, workers, kDefaultOracleLimit});
  const EnumResult oracle = enumerate_maximal_compatible(ctx, win, workers);
  EquivalenceReport rep;
  rep.checker_count = checker.count;
  rep.oracle_count = oracle.count;
  std::set_difference(checker.configs->begin(), checker.configs->end(), oracle.configs->begin(),
                      oracle.configs->end(), std::back_inserter(rep.only_checker));
  std::set_difference(oracle.configs->begin(), oracle.configs->end(), checker.configs->begin(),
                      checker.configs->end(), std::back_inserter(rep.only_oracle));
  rep.equal = rep.only_checker.empty() && rep.only_oracle.empty() && rep.checker_count == rep.oracle_count;
  return rep;
}

}  // namespace homcfg
