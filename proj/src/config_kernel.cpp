#include "homcfg/config_kernel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace homcfg {

ArcConfig::ArcConfig(CyContext ctx, Window win, std::vector<Arc> arcs)
    : ctx_(ctx), win_(win), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    require_admissible(ctx_, a);
    if (!win_.contains(a)) {
      throw std::invalid_argument("arc " + to_string(a) + " leaves window [" + std::to_string(win_.lo) + "," +
                                  std::to_string(win_.hi) + "]");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw std::invalid_argument("arc " + to_string(*dup) + " occurs twice");
  }
}

bool ArcConfig::contains(const Arc& a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

bool operator<(const ArcConfig& a, const ArcConfig& b) {
  if (a.win_.lo != b.win_.lo) return a.win_.lo < b.win_.lo;
  if (a.win_.hi != b.win_.hi) return a.win_.hi < b.win_.hi;
  return std::lexicographical_compare(a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin(), b.arcs_.end());
}

std::string to_string(const ArcConfig& cfg) {
  std::ostringstream os;
  bool first = true;
  for (const Arc& a : cfg.arcs()) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  return os.str();
}

bool crosses(const Arc& a, const Arc& b) {
  return (a.u < b.u && b.u < a.t && a.t < b.t) || (b.u < a.u && a.u < b.t && b.t < a.t);
}

bool share_endpoint(const Arc& a, const Arc& b) {
  return a.t == b.t || a.t == b.u || a.u == b.t || a.u == b.u;
}

bool compatible(const CyContext& ctx, const Arc& a, const Arc& b) {
  require_admissible(ctx, a);
  require_admissible(ctx, b);
  if (a == b) throw std::invalid_argument("compatibility is defined for distinct arcs only");
  return !crosses(a, b) && !share_endpoint(a, b);
}

CrossingError::CrossingError(const Arc& a, const Arc& b)
    : std::invalid_argument("arcs " + to_string(a) + " and " + to_string(b) + " cross"), first(a), second(b) {}

std::vector<Vertex> isolated_vertices(const ArcConfig& cfg) {
  std::vector<Vertex> endpoints;
  for (const Arc& a : cfg.arcs()) {
    endpoints.push_back(a.u);
    endpoints.push_back(a.t);
  }
  std::sort(endpoints.begin(), endpoints.end());
  std::vector<Vertex> out;
  for (Vertex v = cfg.window().lo; v <= cfg.window().hi; ++v) {
    if (!std::binary_search(endpoints.begin(), endpoints.end(), v)) out.push_back(v);
  }
  return out;
}

namespace {

std::optional<std::pair<Arc, Arc>> first_crossing(std::span<const Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (crosses(arcs[i], arcs[j])) return std::pair{arcs[i], arcs[j]};
    }
  }
  return std::nullopt;
}

std::optional<Arc> tightest_overarc(std::span<const Arc> arcs, Vertex v) {
  std::optional<Arc> best;
  for (const Arc& a : arcs) {
    if (a.u < v && v < a.t && (!best || a.span() < best->span())) best = a;
  }
  return best;
}

}  // namespace

std::optional<Arc> smallest_overarc(const ArcConfig& cfg, Vertex v) {
  if (!cfg.window().contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " outside window");
  if (auto c = first_crossing(cfg.arcs())) throw CrossingError(c->first, c->second);
  return tightest_overarc(cfg.arcs(), v);
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::CrossingOrIncidence:
      return "crossing_or_incidence";
    case Condition::UnderArcCount:
      return "under_arc_count";
    case Condition::FreeIsolatedCount:
      return "free_isolated_count";
  }
  return "unknown";
}

std::string describe(const ConfigReport& report) {
  if (report.verdict) return "ok";
  std::ostringstream os;
  os << to_string(*report.failed);
  if (report.witness) {
    os << " witness:";
    for (const Arc& a : report.witness->arcs) os << ' ' << a;
    if (!report.witness->vertices.empty()) {
      os << " {";
      for (std::size_t i = 0; i < report.witness->vertices.size(); ++i) {
        os << (i ? "," : "") << report.witness->vertices[i];
      }
      os << '}';
    }
  }
  return os.str();
}

ConfigReport check_hom_configuration(const ArcConfig& cfg) {
  const auto arcs = cfg.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (crosses(arcs[i], arcs[j]) || share_endpoint(arcs[i], arcs[j])) {
        return {false, Condition::CrossingOrIncidence, Witness{{arcs[i], arcs[j]}, {}}};
      }
    }
  }

  std::map<Arc, std::vector<Vertex>> under;
  std::vector<Vertex> free;
  for (Vertex v : isolated_vertices(cfg)) {
    if (auto over = tightest_overarc(arcs, v)) {
      under[*over].push_back(v);
    } else {
      free.push_back(v);
    }
  }

  const auto expected = static_cast<std::size_t>(cfg.ctx().abs_w() - 1);
  for (const Arc& a : arcs) {
    auto it = under.find(a);
    const std::size_t count = it == under.end() ? 0 : it->second.size();
    if (count != expected) {
      return {false, Condition::UnderArcCount, Witness{{a}, it == under.end() ? std::vector<Vertex>{} : it->second}};
    }
  }

  if (free.size() > static_cast<std::size_t>(cfg.ctx().abs_w())) {
    return {false, Condition::FreeIsolatedCount, Witness{{}, free}};
  }
  return {};
}

bool brute_check_hom_configuration(const ArcConfig& cfg) {
  const CyContext& ctx = cfg.ctx();
  const int w = ctx.w();
  for (const Arc& z : window_arcs(ctx, cfg.window())) {
    bool admitted = true;
    for (const Arc& x : cfg.arcs()) {
      for (int i = w + 1; i <= -1 && admitted; ++i) {
        if (ext_dim(ctx, x, z, i) != 0) admitted = false;
      }
      if (x != z && (ext_dim(ctx, x, z, 0) != 0 || ext_dim(ctx, x, z, w) != 0)) admitted = false;
      if (!admitted) break;
    }
    if (admitted != cfg.contains(z)) return false;
  }
  return true;
}

bool check_riedtmann(const ArcConfig& cfg) {
  if (!check_hom_configuration(cfg).verdict) return false;
  std::size_t free = 0;
  for (Vertex v : isolated_vertices(cfg)) {
    if (!tightest_overarc(cfg.arcs(), v)) ++free;
  }
  return free <= static_cast<std::size_t>(cfg.ctx().abs_w() - 1);
}

bool brute_check_riedtmann(const ArcConfig& cfg, Side side) {
  const CyContext& ctx = cfg.ctx();
  const int w = ctx.w();
  for (const Arc& x : cfg.arcs()) {
    for (const Arc& y : cfg.arcs()) {
      if (x == y) continue;
      for (int i = w; i <= 0; ++i) {
        if (ext_dim(ctx, x, y, i) != 0) return false;
      }
    }
  }
  for (const Arc& z : window_arcs(ctx, cfg.window())) {
    bool generated = false;
    for (const Arc& x : cfg.arcs()) {
      for (int i = w + 1; i <= 0 && !generated; ++i) {
        generated = side == Side::Left ? ext_dim(ctx, x, z, i) != 0 : ext_dim(ctx, z, x, i) != 0;
      }
      if (generated) break;
    }
    if (!generated) return false;
  }
  return true;
}

Vertex floor_div(Vertex a, Vertex b) {
  Vertex q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::optional<ProbeWitness> alternative_riedtmann_witness(const ArcConfig& cfg, const Arc& z) {
  const CyContext& ctx = cfg.ctx();
  const Vertex lowest = floor_div(ctx.w(), 2);
  for (const Arc& x : cfg.arcs()) {
    for (Vertex i = lowest; i <= 0; ++i) {
      if (ext_dim(ctx, z, x, i) != 0) return ProbeWitness{x, i};
    }
  }
  return std::nullopt;
}

std::optional<Arc> alternative_riedtmann_probe(const ArcConfig& cfg) {
  if (!check_hom_configuration(cfg).verdict) {
    throw std::invalid_argument("alternative Riedtmann probe needs a Hom-configuration");
  }
  const CyContext& ctx = cfg.ctx();
  for (const Arc& a : cfg.arcs()) {
    if (a.span() != ctx.abs_d() - 1) continue;
    const Arc z = shift(ctx, a, 1);
    if (!cfg.window().contains(z)) continue;
    if (alternative_riedtmann_witness(cfg, z)) return std::nullopt;
    return z;
  }
  throw std::invalid_argument("configuration has no minimum-length arc whose shift stays in the window");
}

ArcConfig canonical_config(const CyContext& ctx, Family family, Vertex parameter, const Window& win) {
  if (ctx.w() != -1) throw std::invalid_argument("canonical families are defined for w = -1");
  const auto parity = [](Vertex v) { return ((v % 2) + 2) % 2; };
  std::vector<Arc> arcs;
  if (family == Family::H1) {
    const Vertex p = parity(parameter);
    if (parity(win.lo) == p || parity(win.hi) != p) {
      throw std::invalid_argument("window does not truncate H1 cleanly: it must start on a left endpoint and end on a "
                                  "right endpoint");
    }
    for (Vertex j = win.lo + 1; j <= win.hi; j += 2) arcs.push_back(Arc{j, j - 1});
  } else {
    const Vertex i = parameter;
    if (!win.contains(i) || parity(win.hi - i) != 0 || parity(i - win.lo) != 0) {
      throw std::invalid_argument("window does not truncate H2 cleanly: it must contain the free vertex and have "
                                  "both ends at the same parity");
    }
    for (Vertex j = i + 1; j + 1 <= win.hi; j += 2) arcs.push_back(Arc{j + 1, j});
    for (Vertex j = i - 1; j - 1 >= win.lo; j -= 2) arcs.push_back(Arc{j, j - 1});
  }
  ArcConfig cfg(ctx, win, std::move(arcs));
  if (!check_hom_configuration(cfg).verdict) {
    throw std::invalid_argument("window truncation of the family is not a Hom-configuration");
  }
  return cfg;
}

}  // namespace homcfg
