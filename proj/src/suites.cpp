#include "homcfg/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "homcfg/config_kernel.hpp"
#include "homcfg/enum_search.hpp"
#include "homcfg/noncross.hpp"
#include "homcfg/perp_orbit.hpp"
#include "homcfg/polygon_quiver.hpp"

namespace homcfg::suites {

namespace {

constexpr std::size_t kKeptExamples = 5;

std::string ctx_tag(const CyContext& ctx) { return "w=" + std::to_string(ctx.w()); }

std::string window_tag(const Window& win) {
  return "[" + std::to_string(win.lo) + "," + std::to_string(win.hi) + "]";
}

// Runs body(i, partial) in parallel and merges partials in index order.
template <class Fn>
SuiteResult indexed_sweep(const std::string& name, std::size_t n, int workers, Fn&& body) {
  std::vector<SuiteResult> parts(n);
  parallel_indexed(n, workers, [&](std::size_t i) { body(i, parts[i]); });
  SuiteResult out{name, 0, 0, {}};
  for (const auto& p : parts) out.merge(p);
  return out;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

void SuiteResult::merge(const SuiteResult& other) {
  checked += other.checked;
  mismatches += other.mismatches;
  for (const auto& e : other.examples) {
    if (examples.size() >= kKeptExamples) break;
    examples.push_back(e);
  }
}

void SuiteResult::record(std::string what) {
  ++mismatches;
  if (examples.size() < kKeptExamples) examples.push_back(std::move(what));
}

std::string summary(const SuiteResult& r) {
  std::ostringstream os;
  if (r.ok()) {
    os << r.name << ": ok (" << r.checked << " checked)";
  } else if (r.checked == 0) {
    os << r.name << ": FAIL (nothing checked)";
  } else {
    os << r.name << ": FAIL (" << r.mismatches << " of " << r.checked << " mismatched";
    if (!r.examples.empty()) os << "; first: " << r.examples.front();
    os << ")";
  }
  return os.str();
}

SuiteResult serre_and_hammock(std::span<const int> ws, Vertex window_size, int workers) {
  SuiteResult out{"serre-and-hammock", 0, 0, {}};
  const Window win(1, window_size);
  for (int w : ws) {
    const CyContext ctx(w);
    const auto arcs = window_arcs(ctx, win);
    out.merge(indexed_sweep(out.name, arcs.size(), workers, [&](std::size_t i, SuiteResult& r) {
      const Arc& x = arcs[i];
      for (const Arc& y : arcs) {
        ++r.checked;
        if (hom_dim(ctx, x, y) != hom_dim(ctx, y, serre(ctx, x))) {
          r.record(ctx_tag(ctx) + " duality " + to_string(x) + " " + to_string(y));
        }
        for (Vertex j = w - 2; j <= 2; ++j) {
          ++r.checked;
          if (ext_dim(ctx, x, y, j) != ext_dim_hammock(ctx, x, y, j)) {
            r.record(ctx_tag(ctx) + " ext^" + std::to_string(j) + " " + to_string(x) + " " + to_string(y));
          }
        }
      }
    }));
  }
  return out;
}

SuiteResult compatibility_bridge(std::span<const int> ws, Vertex window_size, int workers) {
  SuiteResult out{"compatibility-bridge", 0, 0, {}};
  const Window win(1, window_size);
  for (int w : ws) {
    const CyContext ctx(w);
    const auto arcs = window_arcs(ctx, win);
    out.merge(indexed_sweep(out.name, arcs.size(), workers, [&](std::size_t i, SuiteResult& r) {
      const Arc& a = arcs[i];
      for (const Arc& b : arcs) {
        if (a == b) continue;
        bool vanish = true;
        for (Vertex k = w; k <= 0 && vanish; ++k) vanish = ext_dim(ctx, a, b, k) == 0;
        ++r.checked;
        if (compatible(ctx, a, b) != vanish) r.record(ctx_tag(ctx) + " " + to_string(a) + " " + to_string(b));
      }
    }));
  }
  return out;
}

SuiteResult enumerator_agreement(std::span<const int> ws, Vertex min_size, Vertex max_size, int workers) {
  SuiteResult out{"enumerator-agreement", 0, 0, {}};
  for (int w : ws) {
    const CyContext ctx(w);
    for (Vertex s = min_size; s <= max_size; ++s) {
      const Window win(1, s);
      const auto rep = equivalence_report(ctx, win, workers);
      out.checked += rep.checker_count + rep.only_oracle.size();
      for (const auto& c : rep.only_checker) out.record(ctx_tag(ctx) + " only sweep " + to_string(c));
      for (const auto& c : rep.only_oracle) out.record(ctx_tag(ctx) + " only oracle " + to_string(c));
    }
  }
  return out;
}

SuiteResult riedtmann_agreement(std::span<const int> ws, Vertex min_size, Vertex max_size, int workers) {
  SuiteResult out{"riedtmann-agreement", 0, 0, {}};
  for (int w : ws) {
    const CyContext ctx(w);
    for (Vertex s = min_size; s <= max_size; ++s) {
      const Window win(1, s);
      const auto configs = *enumerate_configs(ctx, win, {.emit = true, .workers = workers}).configs;
      out.merge(indexed_sweep(out.name, configs.size(), workers, [&](std::size_t i, SuiteResult& r) {
        const ArcConfig& cfg = configs[i];
        const bool count = check_riedtmann(cfg);
        const bool left = brute_check_riedtmann(cfg, Side::Left);
        const bool right = brute_check_riedtmann(cfg, Side::Right);
        ++r.checked;
        if (count != left || count != right) {
          r.record(ctx_tag(ctx) + " " + window_tag(win) + " " + to_string(cfg) + " counting=" + std::to_string(count) +
                   " left=" + std::to_string(left) + " right=" + std::to_string(right));
        }
      }));
    }
  }
  return out;
}

SuiteResult catalan_counts(int n_max, int workers) {
  SuiteResult out{"catalan-counts", 0, 0, {}};
  const CyContext ctx(-1);
  for (int n = 1; n <= n_max; ++n) {
    const auto expect = catalan(n);
    const auto diag = enumerate_diagonal_configs(n, 1, false, workers).count;
    const auto arcs = enumerate_configs(ctx, Window(1, 2 * n), {.emit = false, .workers = workers}).count;
    out.checked += 2;
    if (diag != expect) {
      out.record("n=" + std::to_string(n) + " diagonals " + std::to_string(diag) + " != " + std::to_string(expect));
    }
    if (arcs != expect) {
      out.record("n=" + std::to_string(n) + " arcs " + std::to_string(arcs) + " != " + std::to_string(expect));
    }
  }
  return out;
}

SuiteResult orbit_functor(std::span<const int> ws, int n_max) {
  SuiteResult out{"orbit-functor", 0, 0, {}};
  for (int w : ws) {
    const CyContext ctx(w);
    for (int n = 1; n <= n_max; ++n) {
      for (Vertex u : {Vertex{0}, Vertex{5}}) {
        const Arc a{u + (n + 1) * ctx.abs_d() - 1, u};
        const std::string tag = ctx_tag(ctx) + " a=" + to_string(a);
        const auto domain = fundamental_domain(n, ctx.abs_w());
        std::vector<Arc> image;
        for (const auto& M : domain) {
          const Arc x = functor_F(ctx, a, M);
          image.push_back(x);
          ++out.checked;
          if (functor_F_inverse(ctx, a, x) != M) out.record(tag + " inverse fails at " + to_string(M));
        }
        std::vector<Arc> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        ++out.checked;
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) out.record(tag + " F not injective");
        ++out.checked;
        if (sorted != c1_arcs(ctx, a)) out.record(tag + " image differs from C1");
        for (std::size_t i = 0; i < domain.size(); ++i) {
          for (std::size_t j = 0; j < domain.size(); ++j) {
            ++out.checked;
            if (nakayama_hom(domain[i], domain[j]) != hom_dim(ctx, image[i], image[j])) {
              out.record(tag + " hom " + to_string(domain[i]) + " -> " + to_string(domain[j]));
            }
          }
        }
      }
    }
  }
  return out;
}

SuiteResult splice_hom(std::span<const int> ws, std::uint64_t samples, std::uint64_t seed) {
  SuiteResult out{"splice-hom", 0, 0, {}};
  std::mt19937_64 rng(seed);
  auto uniform = [&](Vertex lo, Vertex hi) { return std::uniform_int_distribution<Vertex>(lo, hi)(rng); };
  for (int w : ws) {
    const CyContext ctx(w);
    auto random_arc = [&](Vertex lo, Vertex hi, Vertex max_level) {
      const Vertex u = uniform(lo, hi);
      return Arc{u + uniform(1, max_level) * ctx.abs_d() - 1, u};
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Arc a = random_arc(-10, 10, 4);
      Arc x, y;
      do x = random_arc(a.u - 20, a.t + 10, 6);
      while (perp_membership(ctx, a, x) != PerpSide::C2);
      do y = random_arc(a.u - 20, a.t + 10, 6);
      while (perp_membership(ctx, a, y) != PerpSide::C2);
      const Arc fx = splice_c2(ctx, a, x, SpliceDirection::Fold);
      const Arc fy = splice_c2(ctx, a, y, SpliceDirection::Fold);
      const std::string tag = ctx_tag(ctx) + " a=" + to_string(a) + " " + to_string(x) + " " + to_string(y);
      out.checked += 2;
      if (!is_admissible(ctx, fx) || splice_c2(ctx, a, fx, SpliceDirection::Unfold) != x) {
        out.record(tag + " round trip");
      }
      if (hom_dim(ctx, x, y) != hom_dim(ctx, fx, fy)) out.record(tag + " hom");
    }
  }
  return out;
}

SuiteResult splice_hom_exhaustive(std::span<const int> ws, Vertex max_level, Vertex margin) {
  SuiteResult out{"splice-hom", 0, 0, {}};
  for (int w : ws) {
    const CyContext ctx(w);
    for (Vertex k = 1; k <= max_level; ++k) {
      const Arc a{k * ctx.abs_d() - 1, 0};
      std::vector<Arc> c2;
      for (const Arc& x : window_arcs(ctx, Window(a.u - margin, a.t + margin))) {
        if (perp_membership(ctx, a, x) == PerpSide::C2) c2.push_back(x);
      }
      std::vector<Arc> folded;
      for (const Arc& x : c2) {
        folded.push_back(splice_c2(ctx, a, x, SpliceDirection::Fold));
        ++out.checked;
        if (!is_admissible(ctx, folded.back()) || splice_c2(ctx, a, folded.back(), SpliceDirection::Unfold) != x) {
          out.record(ctx_tag(ctx) + " a=" + to_string(a) + " " + to_string(x) + " round trip");
        }
      }
      for (std::size_t i = 0; i < c2.size(); ++i) {
        for (std::size_t j = 0; j < c2.size(); ++j) {
          ++out.checked;
          if (hom_dim(ctx, c2[i], c2[j]) != hom_dim(ctx, folded[i], folded[j])) {
            out.record(ctx_tag(ctx) + " a=" + to_string(a) + " " + to_string(c2[i]) + " " + to_string(c2[j]) + " hom");
          }
        }
      }
    }
  }
  return out;
}

SuiteResult translation_quivers(int n_max, int m_max) {
  SuiteResult out{"translation-quivers", 0, 0, {}};
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= m_max; ++m) {
      const auto g = build_gamma(n, m);
      const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      const auto rep = verify_stable_translation(g.quiver);
      out.checked += 2;
      if (!rep.ok) out.record(tag + " " + (rep.violations.empty() ? std::string("?") : rep.violations.front()));
      const std::size_t expect = static_cast<std::size_t>((m + 1) * n * (n + 1) / 2 - n);
      if (g.quiver.size() != expect) {
        out.record(tag + " has " + std::to_string(g.quiver.size()) + " vertices, expected " + std::to_string(expect));
      }
    }
  }
  return out;
}

SuiteResult edge_model_iso(int n_max) {
  SuiteResult out{"edge-model-iso", 0, 0, {}};
  for (int n = 2; n <= n_max; ++n) {
    const auto gp = build_gamma_prime(n);
    const auto g = build_gamma(n, 1);
    const std::string tag = "n=" + std::to_string(n);
    ++out.checked;
    if (gp.quiver.size() != g.quiver.size()) {
      out.record(tag + " vertex counts differ");
      continue;
    }
    std::vector<std::size_t> phi(gp.edges.size());
    std::set<std::size_t> hit;
    bool mapped = true;
    for (std::size_t i = 0; i < gp.edges.size(); ++i) {
      const Diagonal dg = iso_edge_to_diagonal(n, gp.edges[i]);
      const std::size_t k = g.index_of(dg);
      if (k >= g.quiver.size()) {
        out.record(tag + " " + to_string(gp.edges[i]) + " lands outside Gamma");
        mapped = false;
        break;
      }
      phi[i] = k;
      hit.insert(k);
    }
    ++out.checked;
    if (!mapped) continue;
    if (hit.size() != phi.size()) out.record(tag + " not injective");
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    for (auto [s, t] : gp.quiver.arrows) arrows.emplace_back(phi[s], phi[t]);
    std::sort(arrows.begin(), arrows.end());
    ++out.checked;
    if (arrows != g.quiver.arrows) out.record(tag + " arrows not preserved");
    for (std::size_t i = 0; i < phi.size(); ++i) {
      ++out.checked;
      if (phi[gp.quiver.tau[i]] != g.quiver.tau[phi[i]]) out.record(tag + " tau at " + to_string(gp.edges[i]));
    }
  }
  return out;
}

SuiteResult pair_partition_labels(int n_max, int workers) {
  SuiteResult out{"pair-partition-labels", 0, 0, {}};
  for (int n = 2; n <= n_max; ++n) {
    const auto gp = build_gamma_prime(n);
    std::map<Diagonal, OrientedEdge> edge_of;
    for (const auto& e : gp.edges) edge_of.emplace(iso_edge_to_diagonal(n, e), e);
    const auto configs = *enumerate_diagonal_configs(n, 1, true, workers).configs;
    out.merge(indexed_sweep(out.name, configs.size(), workers, [&](std::size_t c, SuiteResult& r) {
      const auto& diags = configs[c];
      std::string tag = "n=" + std::to_string(n) + " ";
      for (const auto& dg : diags) tag += to_string(dg);
      ++r.checked;
      std::vector<int> next(static_cast<std::size_t>(n + 1), 0);
      for (const auto& dg : diags) {
        const auto it = edge_of.find(dg);
        if (it == edge_of.end() || next[static_cast<std::size_t>(it->second.i)] != 0) {
          r.record(tag + " is not a successor function");
          return;
        }
        next[static_cast<std::size_t>(it->second.i)] = it->second.j;
      }
      std::vector<std::vector<Label>> blocks;
      std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
      for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Label> block;
        for (int v = s; !seen[static_cast<std::size_t>(v)]; v = next[static_cast<std::size_t>(v)]) {
          if (v == 0) break;
          seen[static_cast<std::size_t>(v)] = true;
          block.push_back(v);
        }
        blocks.push_back(std::move(block));
      }
      try {
        const auto p = make_partition(iota_ground(n), std::move(blocks));
        std::vector<std::vector<Label>> pairs;
        for (const auto& dg : diags) pairs.push_back({dg.i, dg.j});
        const auto expect = make_partition(iota_ground(2 * n), std::move(pairs));
        if (rho(p, n) != expect) r.record(tag + " rho gives " + to_string(rho(p, n)));
      } catch (const std::invalid_argument& e) {
        r.record(tag + " " + e.what());
      }
    }));
  }
  return out;
}

SuiteResult kreweras_of_f(Vertex max_size, int workers) {
  SuiteResult out{"kreweras-of-f", 0, 0, {}};
  const CyContext ctx(-1);
  for (Vertex lo : {Vertex{0}, Vertex{1}}) {
    for (Vertex s = 1; s <= max_size; ++s) {
      const Window win(lo, lo + s - 1);
      const auto configs = *enumerate_configs(ctx, win, {.emit = true, .workers = workers}).configs;
      out.merge(indexed_sweep(out.name, configs.size(), workers, [&](std::size_t i, SuiteResult& r) {
        const auto f = config_to_partition(configs[i], Copy::ZPrime);
        const auto g = config_to_partition(configs[i], Copy::ZDoublePrime);
        ++r.checked;
        const auto k = kreweras(f.partition, Copy::ZPrime, g.partition.ground);
        if (k != g.partition) {
          r.record(window_tag(win) + " " + to_string(configs[i]) + " K(f)=" + to_string(k) +
                   " g=" + to_string(g.partition));
        }
      }));
    }
  }
  return out;
}

namespace {

// One block of the given class holding exactly the labels selected by in_block;
// every other block an interior singleton.
void expect_one_boundary_block(const WindowPartition& p, BlockClass cls, auto in_block, const std::string& tag,
                               SuiteResult& r) {
  const auto classes = classify_blocks(p);
  std::size_t special = 0;
  bool ok = true;
  for (std::size_t b = 0; b < classes.size(); ++b) {
    const auto& block = p.partition.blocks[b];
    if (in_block(block.front())) {
      ++special;
      ok = ok && classes[b] == cls && std::all_of(block.begin(), block.end(), in_block);
    } else {
      ok = ok && block.size() == 1 && classes[b] == BlockClass::Interior;
    }
  }
  ++r.checked;
  if (!ok || special != 1) r.record(tag + " " + to_string(p.partition));
}

}  // namespace

SuiteResult canonical_partitions(Vertex max_size) {
  SuiteResult out{"canonical-partitions", 0, 0, {}};
  const CyContext ctx(-1);
  for (Vertex lo = -7; lo <= 2; ++lo) {
    for (Vertex hi = lo + 1; hi - lo + 1 <= max_size; ++hi) {
      const Window win(lo, hi);
      // H1 with even right endpoints: lo odd, hi even.
      if (floor_div(lo, 2) * 2 != lo && floor_div(hi, 2) * 2 == hi) {
        const auto cfg = canonical_config(ctx, Family::H1, 0, win);
        const std::string tag = "H1 " + window_tag(win);
        const auto f = config_to_partition(cfg, Copy::ZPrime);
        const auto g = config_to_partition(cfg, Copy::ZDoublePrime);
        const auto fc = classify_blocks(f);
        out.checked += 2;
        if (fc.size() != 1 || fc.front() != BlockClass::Spans) out.record(tag + " f=" + to_string(f.partition));
        if (g.partition != singletons(g.partition.ground)) out.record(tag + " g=" + to_string(g.partition));
      }
      // H2 with even free vertex i: lo, hi even.
      if (floor_div(lo, 2) * 2 == lo && floor_div(hi, 2) * 2 == hi) {
        for (Vertex i = lo; i <= hi; i += 2) {
          const auto cfg = canonical_config(ctx, Family::H2, i, win);
          const std::string tag = "H2 i=" + std::to_string(i) + " " + window_tag(win);
          const Label pivot = i / 2;
          expect_one_boundary_block(config_to_partition(cfg, Copy::ZPrime), BlockClass::TouchesUpper,
                                    [pivot](Label k) { return k >= pivot; }, tag + " f", out);
          expect_one_boundary_block(config_to_partition(cfg, Copy::ZDoublePrime), BlockClass::TouchesLower,
                                    [pivot](Label k) { return k <= pivot; }, tag + " g", out);
        }
      }
    }
  }
  return out;
}

}  // namespace homcfg::suites
