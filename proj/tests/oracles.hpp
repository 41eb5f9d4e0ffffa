#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "homcfg/arc_model.hpp"
#include "homcfg/noncross.hpp"

namespace oracle {

using homcfg::Arc;
using homcfg::CyContext;
using homcfg::Vertex;
using homcfg::Window;

inline bool admissible(int w, Vertex t, Vertex u) {
  const Vertex ad = 1 - w;
  return t > u && (t - u + 1) % ad == 0;
}

// Hom(x, y) by listing the fountain arcs of both hammocks explicitly inside a
// box large enough to hold y.
inline int hom(int w, const Arc& x, const Arc& y) {
  const Vertex ad = 1 - w;
  const Vertex k = (x.t - x.u + 1) / ad;
  for (Vertex i = 0; i < k; ++i) {
    if (y.t == x.t - i * ad && y.u <= x.u) return 1;
  }
  const Arc s{x.t - w, x.u - w};
  for (Vertex i = 0; i < k; ++i) {
    if (y.u == s.u + i * ad && y.t >= s.t) return 1;
  }
  return 0;
}

inline int ext(int w, const Arc& x, const Arc& y, Vertex j) { return hom(w, x, Arc{y.t - j, y.u - j}); }

inline std::vector<Arc> arcs_in(int w, const Window& win) {
  std::vector<Arc> out;
  for (Vertex u = win.lo; u <= win.hi; ++u) {
    for (Vertex t = u + 1; t <= win.hi; ++t) {
      if (admissible(w, t, u)) out.push_back({t, u});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The defining membership condition, literally.
inline bool is_hom_config(int w, const Window& win, const std::vector<Arc>& h) {
  auto cond = [&](const Arc& z) {
    for (const Arc& x : h) {
      for (Vertex i = w + 1; i <= -1; ++i) {
        if (ext(w, x, z, i) != 0) return false;
      }
      if (x != z && (ext(w, x, z, 0) != 0 || ext(w, x, z, w) != 0)) return false;
    }
    return true;
  };
  for (const Arc& z : arcs_in(w, win)) {
    const bool member = std::find(h.begin(), h.end(), z) != h.end();
    if (member != cond(z)) return false;
  }
  return true;
}

// Every subset of window arcs passing is_hom_config. Feasible for about 20 arcs.
inline std::vector<std::vector<Arc>> all_hom_configs(int w, const Window& win) {
  const auto arcs = arcs_in(w, win);
  std::vector<std::vector<Arc>> out;
  const std::uint64_t n = arcs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Arc> h;
    for (std::uint64_t b = 0; b < n; ++b) {
      if (mask >> b & 1) h.push_back(arcs[b]);
    }
    if (is_hom_config(w, win, h)) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * (n + i) / i;
  return c / (n + 1);
}

// Every set partition of ground, as block lists.
inline std::vector<std::vector<std::vector<homcfg::Label>>> set_partitions(const std::vector<homcfg::Label>& ground) {
  std::vector<std::vector<std::vector<homcfg::Label>>> out;
  std::vector<std::vector<homcfg::Label>> cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == ground.size()) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(ground[i]);
      go(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({ground[i]});
    go(i + 1);
    cur.pop_back();
  };
  go(0);
  return out;
}

// Blocks given by an owner id per position; positions in increasing order.
inline bool crossing_free(const std::vector<int>& owner) {
  const std::size_t n = owner.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) return false;
  return true;
}

// Coarsest partition of the Z'' copy of {1..n} that stays noncrossing when
// merged with p on the Z' copy (k'' before k').
inline std::vector<std::vector<homcfg::Label>> kreweras(const std::vector<std::vector<homcfg::Label>>& p, int n) {
  std::vector<int> base(static_cast<std::size_t>(2 * n));
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (auto k : p[b]) base[static_cast<std::size_t>(2 * (k - 1) + 1)] = static_cast<int>(b);
  }
  std::vector<std::vector<homcfg::Label>> best;
  std::size_t best_blocks = SIZE_MAX;
  for (const auto& q : set_partitions(homcfg::iota_ground(n))) {
    auto owner = base;
    for (std::size_t b = 0; b < q.size(); ++b) {
      for (auto k : q[b]) owner[static_cast<std::size_t>(2 * (k - 1))] = static_cast<int>(1000 + b);
    }
    if (crossing_free(owner) && q.size() < best_blocks) {
      best_blocks = q.size();
      best = q;
    }
  }
  return best;
}

}  // namespace oracle
