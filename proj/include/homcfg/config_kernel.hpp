#pragma once

// Predicates and checkers for |w|-Hom-configurations and Riedtmann
// configurations over a finite window of the infinity-gon. The window is
// treated as the whole vertex set: "isolated", "no overarc" and "for every
// object z" all range over the window.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcfg/arc_model.hpp"

namespace homcfg {

class ArcConfig {
 public:
  // Sorts the arcs canonically. Throws std::invalid_argument for an arc that
  // is inadmissible, leaves the window, or occurs twice.
  ArcConfig(CyContext ctx, Window win, std::vector<Arc> arcs);

  const CyContext& ctx() const { return ctx_; }
  const Window& window() const { return win_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool contains(const Arc& a) const;

  friend bool operator==(const ArcConfig&, const ArcConfig&) = default;
  // Canonical arc-list order; configs over different windows compare by window first.
  friend bool operator<(const ArcConfig& a, const ArcConfig& b);

 private:
  CyContext ctx_;
  Window win_;
  std::vector<Arc> arcs_;
};

std::string to_string(const ArcConfig& cfg);

bool crosses(const Arc& a, const Arc& b);
bool share_endpoint(const Arc& a, const Arc& b);

// Throws std::invalid_argument when a == b.
bool compatible(const CyContext& ctx, const Arc& a, const Arc& b);

class CrossingError : public std::invalid_argument {
 public:
  CrossingError(const Arc& a, const Arc& b);
  Arc first;
  Arc second;
};

std::vector<Vertex> isolated_vertices(const ArcConfig& cfg);

// Throws CrossingError if two arcs cross, std::invalid_argument if v is
// outside the window.
std::optional<Arc> smallest_overarc(const ArcConfig& cfg, Vertex v);

enum class Condition { CrossingOrIncidence, UnderArcCount, FreeIsolatedCount };

std::string to_string(Condition c);

struct Witness {
  std::vector<Arc> arcs;
  std::vector<Vertex> vertices;
};

struct ConfigReport {
  bool verdict = true;
  std::optional<Condition> failed;
  std::optional<Witness> witness;
};

std::string describe(const ConfigReport& report);

// Counts the three conditions of the arc classification in order and stops
// at the first failure.
ConfigReport check_hom_configuration(const ArcConfig& cfg);

// The defining membership condition taken literally with ext_dim, quantified
// over every admissible window arc.
bool brute_check_hom_configuration(const ArcConfig& cfg);

// Hom-configuration with at most |w| - 1 isolated vertices lacking an overarc.
bool check_riedtmann(const ArcConfig& cfg);

enum class Side { Left, Right };

// Pairwise Ext-vanishing over {w, ..., 0} plus the generating condition over
// {w + 1, ..., 0} for every admissible window arc.
bool brute_check_riedtmann(const ArcConfig& cfg, Side side);

struct ProbeWitness {
  Arc x;
  Vertex degree;
};

// For the first minimum-length arc (t, u) of cfg whose shift (t - 1, u - 1)
// lies in the window, returns z = (t - 1, u - 1) when no x in cfg has
// Ext^i(z, x) != 0 for i in {floor(w/2), ..., 0}; nullopt otherwise.
// Throws std::invalid_argument when cfg is not a Hom-configuration or has no
// usable minimum-length arc.
std::optional<Arc> alternative_riedtmann_probe(const ArcConfig& cfg);

// Same scan as alternative_riedtmann_probe but returns the first (x, i)
// found, in canonical x order then increasing i.
std::optional<ProbeWitness> alternative_riedtmann_witness(const ArcConfig& cfg, const Arc& z);

enum class Family { H1, H2 };

// Windowed truncation of the canonical w = -1 families. For H1 the parameter
// is the parity of the right endpoints; for H2 it is the free vertex i.
// Throws std::invalid_argument unless w = -1 and the window truncates the
// family without leaving extra isolated vertices.
ArcConfig canonical_config(const CyContext& ctx, Family family, Vertex parameter, const Window& win);

Vertex floor_div(Vertex a, Vertex b);

}  // namespace homcfg
