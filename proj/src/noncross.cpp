#include "homcfg/noncross.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace homcfg {

NCPartition make_partition(std::vector<Label> ground, std::vector<std::vector<Label>> blocks) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw MalformedPartition("ground set has a repeated element");
  }
  std::vector<Label> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw MalformedPartition("empty block");
    std::sort(b.begin(), b.end());
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    throw MalformedPartition("element " + std::to_string(*dup) + " lies in two blocks");
  }
  if (seen != ground) throw MalformedPartition("blocks do not cover the ground set exactly");
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return NCPartition{std::move(ground), std::move(blocks)};
}

NCPartition singletons(const std::vector<Label>& ground) {
  std::vector<std::vector<Label>> blocks;
  for (Label x : ground) blocks.push_back({x});
  return make_partition(ground, std::move(blocks));
}

std::vector<Label> iota_ground(Label n) {
  std::vector<Label> g(static_cast<std::size_t>(std::max<Label>(n, 0)));
  std::iota(g.begin(), g.end(), Label{1});
  return g;
}

namespace {

// Block id per element of an ordered sequence of (key, block) pairs.
bool sequence_noncrossing(const std::vector<std::size_t>& ids) {
  const std::size_t n = ids.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (ids[b] == ids[a]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (ids[c] != ids[a]) continue;
        for (std::size_t d = c + 1; d < n; ++d) {
          if (ids[d] == ids[b]) return false;
        }
      }
    }
  return true;
}

void validate(const NCPartition& p) { make_partition(p.ground, p.blocks); }

}  // namespace

bool is_noncrossing(const NCPartition& p) {
  validate(p);
  std::map<Label, std::size_t> block_of;
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (Label x : p.blocks[b]) block_of[x] = b;
  std::vector<std::size_t> ids;
  for (const auto& [x, b] : block_of) ids.push_back(b);
  return sequence_noncrossing(ids);
}

std::string to_string(const NCPartition& p) {
  std::ostringstream os;
  for (const auto& b : p.blocks) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

Copy other(Copy c) { return c == Copy::ZPrime ? Copy::ZDoublePrime : Copy::ZPrime; }

std::int64_t doubled_position(Label k, Copy c) { return c == Copy::ZPrime ? 4 * k + 1 : 4 * k - 1; }

NCPartition kreweras(const NCPartition& p, Copy p_copy, const std::vector<Label>& complement_ground) {
  if (!is_noncrossing(p)) throw CrossingPartition("Kreweras complement needs a noncrossing partition");
  const Copy k_copy = other(p_copy);
  std::vector<Label> ground = complement_ground;
  std::sort(ground.begin(), ground.end());

  // Complement elements x < y share a block iff no block of p has elements
  // both strictly between them and outside them.
  struct Span {
    std::vector<std::int64_t> pos;
  };
  std::vector<Span> spans;
  for (const auto& b : p.blocks) {
    Span s;
    for (Label x : b) s.pos.push_back(doubled_position(x, p_copy));
    spans.push_back(std::move(s));
  }
  const auto separated = [&](std::int64_t lo, std::int64_t hi) {
    for (const Span& s : spans) {
      bool inside = false, outside = false;
      for (std::int64_t q : s.pos) (lo < q && q < hi ? inside : outside) = true;
      if (inside && outside) return true;
    }
    return false;
  };

  std::vector<std::size_t> parent(ground.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < ground.size(); ++a) {
    for (std::size_t b = a + 1; b < ground.size(); ++b) {
      if (!separated(doubled_position(ground[a], k_copy), doubled_position(ground[b], k_copy))) {
        parent[find(b)] = find(a);
      }
    }
  }
  std::map<std::size_t, std::vector<Label>> groups;
  for (std::size_t a = 0; a < ground.size(); ++a) groups[find(a)].push_back(ground[a]);
  std::vector<std::vector<Label>> blocks;
  for (auto& [root, b] : groups) blocks.push_back(std::move(b));
  return make_partition(std::move(ground), std::move(blocks));
}

NCPartition kreweras(const NCPartition& p) { return kreweras(p, Copy::ZPrime, p.ground); }

NCPartition rho(const NCPartition& p, Label n) {
  if (p.ground != iota_ground(n)) throw MalformedPartition("rho needs a partition of {1..n}");
  if (!is_noncrossing(p)) throw CrossingPartition("rho needs a noncrossing partition");
  const auto label = [n](Label v) {
    const Label r = ((v % (2 * n)) + 2 * n) % (2 * n);
    return r == 0 ? 2 * n : r;
  };
  std::vector<std::vector<Label>> pairs;
  for (const auto& b : p.blocks) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Label next = j + 1 < b.size() ? b[j + 1] : b.front() + n;
      pairs.push_back({label(2 * b[j] - 1), label(2 * next - 2)});
    }
  }
  return make_partition(iota_ground(2 * n), std::move(pairs));
}

NCPartition rho_inverse(const NCPartition& q, Label n) {
  if (q.ground != iota_ground(2 * n)) throw MalformedPartition("rho inverse needs a pair partition of {1..2n}");
  if (!is_noncrossing(q)) throw CrossingPartition("rho inverse needs a noncrossing pair partition");
  // An odd label 2b - 1 paired with an even label 2c - 2 says c follows b.
  std::vector<Label> next(static_cast<std::size_t>(n + 1), 0);
  for (const auto& pr : q.blocks) {
    if (pr.size() != 2) throw MalformedPartition("rho inverse needs blocks of size two");
    const Label odd = pr[0] % 2 ? pr[0] : pr[1];
    const Label even = pr[0] % 2 ? pr[1] : pr[0];
    if (odd % 2 == 0 || even % 2 != 0) throw NotInImage("pair joins labels of equal parity", pr[0], pr[1]);
    const Label b = (odd + 1) / 2;
    const Label c = (even == 2 * n ? 1 : even / 2 + 1);
    next[static_cast<std::size_t>(b)] = c;
  }
  std::vector<bool> done(static_cast<std::size_t>(n + 1), false);
  std::vector<std::vector<Label>> blocks;
  for (Label b = 1; b <= n; ++b) {
    if (done[static_cast<std::size_t>(b)]) continue;
    std::vector<Label> cycle;
    for (Label x = b; !done[static_cast<std::size_t>(x)]; x = next[static_cast<std::size_t>(x)]) {
      done[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    blocks.push_back(std::move(cycle));
  }
  NCPartition p = make_partition(iota_ground(n), std::move(blocks));
  if (!is_noncrossing(p) || rho(p, n) != q) {
    // Report the first pair that the recomputed outline lacks.
    NCPartition back = is_noncrossing(p) ? rho(p, n) : NCPartition{};
    for (const auto& pr : q.blocks) {
      if (std::find(back.blocks.begin(), back.blocks.end(), pr) == back.blocks.end()) {
        throw NotInImage("pair is not part of a hull outline", pr[0], pr[1]);
      }
    }
    throw NotInImage("pair partition is not a hull outline", q.blocks.front()[0], q.blocks.front()[1]);
  }
  return p;
}

std::optional<Label> slot_index(Vertex v, Copy c) {
  const bool even = ((v % 2) + 2) % 2 == 0;
  if (c == Copy::ZPrime) return even ? std::optional<Label>(v / 2) : std::nullopt;
  return even ? std::nullopt : std::optional<Label>((v + 1) / 2);
}

std::vector<Label> slot_ground(const Window& win, Copy c) {
  std::vector<Label> out;
  for (Vertex v = win.lo - 1; v <= win.hi; ++v) {
    if (auto k = slot_index(v, c)) out.push_back(*k);
  }
  return out;
}

WindowPartition config_to_partition(const ArcConfig& cfg, Copy c) {
  if (cfg.ctx().w() != -1) throw std::invalid_argument("configuration-to-partition maps need w = -1");
  if (!check_hom_configuration(cfg).verdict) throw std::invalid_argument("input is not a Hom-configuration");
  const Window& win = cfg.window();

  std::map<Vertex, Vertex> right_of;  // left endpoint -> right endpoint
  for (const Arc& a : cfg.arcs()) right_of[a.u] = a.t;

  // Slot after v continues to the slot after t when (t, v + 1) is an arc.
  std::map<Vertex, Vertex> successor;
  std::vector<bool> has_pred(static_cast<std::size_t>(win.size() + 1), false);
  for (Vertex v = win.lo - 1; v <= win.hi; ++v) {
    if (!slot_index(v, c)) continue;
    if (auto it = right_of.find(v + 1); it != right_of.end()) {
      successor[v] = it->second;
      has_pred[static_cast<std::size_t>(it->second - (win.lo - 1))] = true;
    }
  }
  std::vector<std::vector<Label>> blocks;
  for (Vertex v = win.lo - 1; v <= win.hi; ++v) {
    if (!slot_index(v, c) || has_pred[static_cast<std::size_t>(v - (win.lo - 1))]) continue;
    std::vector<Label> block;
    for (Vertex s = v;;) {
      block.push_back(*slot_index(s, c));
      auto it = successor.find(s);
      if (it == successor.end()) break;
      s = it->second;
    }
    blocks.push_back(std::move(block));
  }
  return WindowPartition{c, win, make_partition(slot_ground(win, c), std::move(blocks))};
}

std::string to_string(BlockClass b) {
  switch (b) {
    case BlockClass::Interior:
      return "interior";
    case BlockClass::TouchesLower:
      return "touches_lower";
    case BlockClass::TouchesUpper:
      return "touches_upper";
    case BlockClass::Spans:
      return "spans";
  }
  return "unknown";
}

std::vector<BlockClass> classify_blocks(const WindowPartition& p) {
  const auto lower = slot_index(p.win.lo - 1, p.copy);
  const auto upper = slot_index(p.win.hi, p.copy);
  std::vector<BlockClass> out;
  for (const auto& b : p.partition.blocks) {
    const bool lo = lower && std::binary_search(b.begin(), b.end(), *lower);
    const bool hi = upper && std::binary_search(b.begin(), b.end(), *upper);
    out.push_back(lo && hi ? BlockClass::Spans
                  : lo     ? BlockClass::TouchesLower
                  : hi     ? BlockClass::TouchesUpper
                           : BlockClass::Interior);
  }
  return out;
}

std::vector<NCPartition> all_noncrossing_partitions(Label n) {
  std::vector<NCPartition> out;
  if (n < 0) return out;
  std::vector<std::size_t> rgs(static_cast<std::size_t>(n), 0);
  const auto emit = [&] {
    if (!sequence_noncrossing(rgs)) return;
    std::size_t nb = 0;
    for (std::size_t x : rgs) nb = std::max(nb, x + 1);
    std::vector<std::vector<Label>> blocks(nb);
    for (std::size_t i = 0; i < rgs.size(); ++i) blocks[rgs[i]].push_back(static_cast<Label>(i + 1));
    out.push_back(make_partition(iota_ground(n), std::move(blocks)));
  };
  // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
  const auto rec = [&](auto&& self, std::size_t i, std::size_t max_so_far) -> void {
    if (i == rgs.size()) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= max_so_far + 1; ++b) {
      if (i == 0 && b > 0) break;
      rgs[i] = b;
      self(self, i + 1, std::max(max_so_far, b));
    }
  };
  if (n == 0) {
    out.push_back(make_partition({}, {}));
    return out;
  }
  rec(rec, 0, 0);
  return out;
}

}  // namespace homcfg
