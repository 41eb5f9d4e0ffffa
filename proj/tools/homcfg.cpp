// Command-line front end. Exit status: 0 success or verdict true, 1 verdict
// false, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homcfg/config_kernel.hpp"
#include "homcfg/enum_search.hpp"
#include "homcfg/io.hpp"
#include "homcfg/noncross.hpp"
#include "homcfg/perp_orbit.hpp"
#include "homcfg/polygon_quiver.hpp"
#include "homcfg/suites.hpp"

using namespace homcfg;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ArcConfig load_config(const std::string& path, std::optional<int> w) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  ArcConfig cfg = io::read_config(in);
  if (w && *w != cfg.ctx().w()) throw UsageError("--w disagrees with the w in " + path);
  return cfg;
}

std::string arc_list(const std::vector<Arc>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) out += (i ? "," : "") + to_string(arcs[i]);
  return out;
}

std::vector<int> ws_or(std::optional<int> w, std::vector<int> fallback) {
  return w ? std::vector<int>{*w} : fallback;
}

struct Options {
  int w = -1;
  std::optional<int> w_opt;
  std::string x, y, a, window, config, dir = "forward", object, partition, copy = "f", op, model = "gamma", out,
                                       suite, splice;
  long long j = 0;
  int n = 3, m = 1, workers = 0, degree = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 10000;
  bool oracle = false, count_only = false, inverse = false, dot = false, verify = false, enumerate_configs = false;
};

int run_hom(const Options& o, std::ostream& os) {
  const CyContext ctx(o.w);
  os << hom_dim(ctx, io::parse_arc(o.x), io::parse_arc(o.y)) << '\n';
  return kOk;
}

int run_ext(const Options& o, std::ostream& os) {
  const CyContext ctx(o.w);
  const Arc x = io::parse_arc(o.x), y = io::parse_arc(o.y);
  os << (o.oracle ? ext_dim_hammock(ctx, x, y, o.j) : ext_dim(ctx, x, y, o.j)) << '\n';
  return kOk;
}

int run_hammock(const Options& o, std::ostream& os) {
  Direction dir;
  if (o.dir == "forward") {
    dir = Direction::Forward;
  } else if (o.dir == "backward") {
    dir = Direction::Backward;
  } else {
    throw UsageError("--dir must be forward or backward");
  }
  os << arc_list(hammock(CyContext(o.w), io::parse_arc(o.x), dir, io::parse_window(o.window))) << '\n';
  return kOk;
}

int run_check(const Options& o, std::ostream& os) {
  const ArcConfig cfg = load_config(o.config, o.w_opt);
  const auto rep = check_hom_configuration(cfg);
  const bool ried = rep.verdict && check_riedtmann(cfg);
  os << "hom-configuration: " << yes_no(rep.verdict) << "; riedtmann: " << yes_no(ried) << '\n';
  if (!rep.verdict) os << describe(rep) << '\n';
  if (o.oracle) {
    os << "definition: " << yes_no(brute_check_hom_configuration(cfg))
       << "; left: " << yes_no(brute_check_riedtmann(cfg, Side::Left))
       << "; right: " << yes_no(brute_check_riedtmann(cfg, Side::Right)) << '\n';
  }
  return rep.verdict ? kOk : kFalse;
}

int run_enumerate(const Options& o, std::ostream& os) {
  const CyContext ctx(o.w);
  const Window win = io::parse_window(o.window);
  const EnumResult r = o.oracle ? enumerate_maximal_compatible(ctx, win, o.workers)
                                : enumerate_configs(ctx, win, {.emit = !o.count_only, .workers = o.workers});
  if (!o.count_only && r.configs) {
    for (const auto& c : *r.configs) os << io::config_line(c) << '\n';
  }
  os << "count=" << r.count << '\n';
  return kOk;
}

int run_perp(const Options& o, std::ostream& os) {
  const CyContext ctx(o.w);
  const Arc a = io::parse_arc(o.a), x = io::parse_arc(o.x);
  require_admissible(ctx, a);
  require_admissible(ctx, x);
  if (o.splice.empty()) {
    os << to_string(perp_membership(ctx, a, x)) << '\n';
  } else if (o.splice == "fold") {
    os << to_string(splice_c2(ctx, a, x, SpliceDirection::Fold)) << '\n';
  } else if (o.splice == "unfold") {
    os << to_string(splice_c2(ctx, a, x, SpliceDirection::Unfold)) << '\n';
  } else {
    throw UsageError("--splice must be fold or unfold");
  }
  return kOk;
}

int run_functor(const Options& o, std::ostream& os) {
  const CyContext ctx(o.w);
  const Arc a = io::parse_arc(o.a);
  require_admissible(ctx, a);
  if (o.inverse) {
    os << functor_F_inverse(ctx, a, io::parse_arc(o.x)) << '\n';
  } else {
    if (o.object.empty()) throw UsageError("functor-f needs --object (or --inverse with --x)");
    const NakayamaObject M = io::parse_nakayama(o.object, orbit_rank(ctx, a), ctx.abs_w(), o.degree);
    os << to_string(functor_F(ctx, a, M)) << '\n';
  }
  return kOk;
}

int run_quiver(const Options& o, std::ostream& os) {
  TranslationQuiver q;
  if (o.model == "gamma") {
    q = build_gamma(o.n, o.m).quiver;
  } else if (o.model == "gamma-prime") {
    q = build_gamma_prime(o.n).quiver;
  } else {
    throw UsageError("--model must be gamma or gamma-prime");
  }
  bool ok = true;
  if (o.dot) {
    const std::string dot = export_dot(q);
    if (o.out.empty()) {
      os << dot;
    } else {
      std::ofstream f(o.out);
      if (!f) throw UsageError("cannot write " + o.out);
      f << dot;
    }
  } else {
    os << "vertices=" << q.size() << " arrows=" << q.arrows.size() << '\n';
  }
  if (o.verify) {
    const auto rep = verify_stable_translation(q);
    ok = rep.ok;
    std::ostream& vs = o.dot && o.out.empty() ? std::cerr : os;
    vs << "stable translation quiver: " << yes_no(rep.ok) << '\n';
    for (const auto& v : rep.violations) vs << "  " << v << '\n';
  }
  return ok ? kOk : kFalse;
}

int run_diagonals(const Options& o, std::ostream& os) {
  if (o.enumerate_configs) {
    const auto r = enumerate_diagonal_configs(o.n, o.m, !o.count_only, o.workers);
    if (r.configs) {
      for (const auto& c : *r.configs) os << io::diagonal_line(c) << '\n';
    }
    os << "count=" << r.count << '\n';
  } else {
    const auto all = all_diagonals(Polygon(o.n, o.m));
    os << io::diagonal_line(all) << '\n';
    os << "count=" << all.size() << '\n';
  }
  return kOk;
}

int run_nc(const Options& o, std::ostream& os) {
  if (o.op == "from-config") {
    const ArcConfig cfg = load_config(o.config, o.w_opt);
    if (o.copy != "f" && o.copy != "g") throw UsageError("--copy must be f or g");
    const auto wp = config_to_partition(cfg, o.copy == "f" ? Copy::ZPrime : Copy::ZDoublePrime);
    os << to_string(wp.partition) << '\n';
    const auto classes = classify_blocks(wp);
    for (std::size_t b = 0; b < classes.size(); ++b) os << (b ? " " : "") << to_string(classes[b]);
    os << '\n';
    return kOk;
  }
  const NCPartition p = io::parse_partition(o.partition);
  if (o.op == "kreweras") {
    os << to_string(kreweras(p)) << '\n';
  } else if (o.op == "rho") {
    os << to_string(rho(p, o.n)) << '\n';
  } else if (o.op == "rho-inv") {
    os << to_string(rho_inverse(p, o.n)) << '\n';
  } else {
    throw UsageError("--op must be kreweras, rho, rho-inv or from-config");
  }
  return kOk;
}

int report(const std::vector<suites::SuiteResult>& results, std::ostream& os) {
  bool ok = true;
  for (const auto& r : results) {
    os << suites::summary(r) << '\n';
    for (std::size_t i = 1; i < r.examples.size(); ++i) os << "  " << r.examples[i] << '\n';
    ok = ok && r.ok();
  }
  return ok ? kOk : kFalse;
}

int run_verify(const Options& o, std::ostream& os) {
  const std::string& s = o.suite;
  if (s == "lemma2.3") {
    const auto ws = ws_or(o.w_opt, {-1, -2, -3});
    return report({suites::serre_and_hammock(ws, 30, o.workers), suites::compatibility_bridge(ws, 30, o.workers)}, os);
  }
  if (s == "thm3.4") {
    if (!o.window.empty()) {
      const auto rep = equivalence_report(CyContext(o.w), io::parse_window(o.window), o.workers);
      if (rep.equal) {
        os << "equal (counts " << rep.checker_count << " = " << rep.oracle_count << ")\n";
      } else {
        os << "differ (counts " << rep.checker_count << " vs " << rep.oracle_count << ")\n";
        for (const auto& c : rep.only_checker) os << "  only checker: " << io::config_line(c) << '\n';
        for (const auto& c : rep.only_oracle) os << "  only oracle: " << io::config_line(c) << '\n';
      }
      return rep.equal ? kOk : kFalse;
    }
    return report({suites::enumerator_agreement(ws_or(o.w_opt, {-1, -2}), 2, 14, o.workers)}, os);
  }
  if (s == "thm4.3") return report({suites::riedtmann_agreement(ws_or(o.w_opt, {-1, -2}), 2, 14, o.workers)}, os);
  if (s == "thm5.1") {
    const auto ws = ws_or(o.w_opt, {-1, -2});
    auto splice = o.seed ? suites::splice_hom(ws, o.samples, *o.seed) : suites::splice_hom_exhaustive(ws, 4, 10);
    return report({suites::orbit_functor(ws, 4), splice}, os);
  }
  if (s == "lemma6.1") return report({suites::translation_quivers(5, 3)}, os);
  if (s == "rem6.6") return report({suites::edge_model_iso(6)}, os);
  if (s == "thm6.5") return report({suites::catalan_counts(6, o.workers)}, os);
  if (s == "prop6.8") return report({suites::pair_partition_labels(5, o.workers)}, os);
  if (s == "rem7.4") {
    return report({suites::kreweras_of_f(14, o.workers), suites::canonical_partitions(14)}, os);
  }
  throw UsageError("unknown suite " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-configurations in the arc model of a w-spherical category"};
  app.require_subcommand(1);
  Options o;

  auto add_w = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--w", o.w_opt, "w <= -1");
    if (required) opt->required();
  };

  auto* hom = app.add_subcommand("hom", "dim Hom(x, y)");
  add_w(hom, true);
  hom->add_option("--x", o.x, "arc t,u")->required();
  hom->add_option("--y", o.y, "arc t,u")->required();

  auto* ext = app.add_subcommand("ext", "dim Ext^j(x, y)");
  add_w(ext, true);
  ext->add_option("--x", o.x)->required();
  ext->add_option("--y", o.y)->required();
  ext->add_option("--j", o.j)->required();
  ext->add_flag("--oracle", o.oracle, "evaluate through partial fountains");

  auto* ham = app.add_subcommand("hammock", "windowed forward or backward hammock");
  add_w(ham, true);
  ham->add_option("--x", o.x)->required();
  ham->add_option("--dir", o.dir, "forward|backward");
  ham->add_option("--window", o.window, "lo..hi")->required();

  auto* check = app.add_subcommand("check", "classify a configuration file");
  add_w(check, false);
  check->add_option("--config", o.config)->required();
  check->add_flag("--oracle", o.oracle, "also run the defining checks");

  auto* en = app.add_subcommand("enumerate", "all Hom-configurations of a window");
  add_w(en, true);
  en->add_option("--window", o.window, "lo..hi")->required();
  en->add_flag("--oracle", o.oracle, "maximal compatible sets instead of the sweep");
  en->add_flag("--count-only", o.count_only);
  en->add_option("--workers", o.workers);

  auto* perp = app.add_subcommand("perp", "perpendicular side of x for base arc a, or the C2 splice");
  add_w(perp, true);
  perp->add_option("--a", o.a)->required();
  perp->add_option("--x", o.x)->required();
  perp->add_option("--splice", o.splice, "fold|unfold");

  auto* fun = app.add_subcommand("functor-f", "orbit-category object to C1 arc, or back");
  add_w(fun, true);
  fun->add_option("--a", o.a)->required();
  fun->add_option("--object", o.object, "\"deg:i socle:a len:l\" or \"(a_l,...,a_1)\"");
  fun->add_option("--degree", o.degree, "degree for the sequence form");
  fun->add_flag("--inverse", o.inverse);
  fun->add_option("--x", o.x, "C1 arc for --inverse");

  auto* quiv = app.add_subcommand("quiver", "translation quiver of diagonals or oriented edges");
  quiv->add_option("--model", o.model, "gamma|gamma-prime");
  quiv->add_option("--n", o.n);
  quiv->add_option("--m", o.m);
  quiv->add_flag("--dot", o.dot);
  quiv->add_option("--out", o.out);
  quiv->add_flag("--verify", o.verify);

  auto* diag = app.add_subcommand("diagonals", "(m+1)-diagonals of the N-gon");
  diag->add_option("--n", o.n);
  diag->add_option("--m", o.m);
  diag->add_flag("--enumerate-configs", o.enumerate_configs);
  diag->add_flag("--count-only", o.count_only);
  diag->add_option("--workers", o.workers);

  auto* nc = app.add_subcommand("nc", "noncrossing partition operations");
  nc->add_option("--op", o.op, "kreweras|rho|rho-inv|from-config")->required();
  nc->add_option("--partition", o.partition, "{1,3}{2}");
  nc->add_option("--n", o.n);
  add_w(nc, false);
  nc->add_option("--config", o.config);
  nc->add_option("--copy", o.copy, "f|g");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", o.suite,
                  "lemma2.3|thm3.4|thm4.3|thm5.1|lemma6.1|rem6.6|thm6.5|prop6.8|rem7.4")
      ->required();
  add_w(ver, false);
  ver->add_option("--window", o.window, "lo..hi (thm3.4)");
  ver->add_option("--seed", o.seed, "sample instead of exhausting (thm5.1)");
  ver->add_option("--samples", o.samples);
  ver->add_option("--workers", o.workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (o.w_opt) o.w = *o.w_opt;

  std::ostringstream os;
  int code = kOk;
  try {
    if (*hom) code = run_hom(o, os);
    else if (*ext) code = run_ext(o, os);
    else if (*ham) code = run_hammock(o, os);
    else if (*check) code = run_check(o, os);
    else if (*en) code = run_enumerate(o, os);
    else if (*perp) code = run_perp(o, os);
    else if (*fun) code = run_functor(o, os);
    else if (*quiv) code = run_quiver(o, os);
    else if (*diag) code = run_diagonals(o, os);
    else if (*nc) code = run_nc(o, os);
    else if (*ver) code = run_verify(o, os);
  } catch (const std::exception& e) {
    std::cout << os.str();
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::cout << os.str();
  return code;
}
