// Command-line frontend: config ingestion, subcommand dispatch, persistence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "secmac/dm_region.hpp"
#include "secmac/experiments.hpp"
#include "secmac/format.hpp"
#include "secmac/gaussian_bounds.hpp"
#include "secmac/gaussian_model.hpp"
#include "secmac/numerics.hpp"

using json = nlohmann::json;
using namespace secmac;

namespace {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitSchema = 2;
constexpr int kExitBudget = 3;

double require_number(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number())
    throw SchemaError("missing or invalid field: " + field);
  return j[field].get<double>();
}

int require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw SchemaError("missing or invalid field: " + field);
  return j[field].get<int>();
}

// c12 is a nonnegative number or the string "inf".
double parse_c12(const json& v, const std::string& field) {
  if (v.is_string() && v.get<std::string>() == "inf") return kInfiniteC12;
  if (v.is_number()) return v.get<double>();
  throw SchemaError("missing or invalid field: " + field);
}

double require_c12(const json& j, const std::string& field) {
  if (!j.contains(field)) throw SchemaError("missing or invalid field: " + field);
  return parse_c12(j[field], field);
}

Point2 require_point(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 ||
      !j[field][0].is_number() || !j[field][1].is_number())
    throw SchemaError("missing or invalid field: " + field + " (expected [x, y])");
  return {j[field][0].get<double>(), j[field][1].get<double>()};
}

std::vector<double> require_number_array(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw SchemaError("missing or invalid field: " + field);
  std::vector<double> out;
  for (const auto& v : j[field]) {
    if (!v.is_number()) throw SchemaError("missing or invalid field: " + field);
    out.push_back(v.get<double>());
  }
  return out;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

std::string require_kind(const json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw SchemaError("missing or invalid field: kind");
  return j["kind"].get<std::string>();
}

GaussianMacChannel parse_channel(const json& j) {
  GaussianMacChannel ch;
  ch.h1d = require_number(j, "h1d");
  ch.h2d = require_number(j, "h2d");
  ch.h1e = require_number(j, "h1e");
  ch.h2e = require_number(j, "h2e");
  ch.sigma1_sq = require_number(j, "sigma1_sq");
  ch.sigma2_sq = require_number(j, "sigma2_sq");
  ch.p1 = require_number(j, "p1");
  ch.p2 = require_number(j, "p2");
  ch.c12 = require_c12(j, "c12");
  try {
    ch.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return ch;
}

NetworkGeometry parse_geometry(const json& j, bool need_enc2) {
  NetworkGeometry g;
  g.pos_enc1 = require_point(j, "pos_enc1");
  if (need_enc2) g.pos_enc2 = require_point(j, "pos_enc2");
  g.pos_dest = require_point(j, "pos_dest");
  g.pos_eave = require_point(j, "pos_eave");
  g.gamma = require_number(j, "gamma");
  g.p1 = require_number(j, "p1");
  g.p2 = require_number(j, "p2");
  g.sigma1_sq = require_number(j, "sigma1_sq");
  g.sigma2_sq = require_number(j, "sigma2_sq");
  g.c12 = require_c12(j, "c12");
  if (j.contains("min_distance")) g.min_distance = require_number(j, "min_distance");
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return g;
}

// Accepts "channel" directly or "geometry" compiled to gains.
GaussianMacChannel parse_gaussian_input(const json& j) {
  std::string kind = require_kind(j);
  if (kind == "channel") return parse_channel(j);
  if (kind == "geometry") return compile_geometry(parse_geometry(j, true));
  throw SchemaError("kind must be \"channel\" or \"geometry\"");
}

DiscreteMemorylessChannel parse_dm_channel(const json& j) {
  if (require_kind(j) != "dm_channel")
    throw SchemaError("kind must be \"dm_channel\"");
  DiscreteMemorylessChannel ch;
  ch.n_x1 = require_int(j, "n_x1");
  ch.n_x2 = require_int(j, "n_x2");
  ch.n_y = require_int(j, "n_y");
  ch.n_z = require_int(j, "n_z");
  ch.law = require_number_array(j, "law");
  try {
    ch.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return ch;
}

json bound_report_json(const BoundReport& rep, bool lower) {
  json j;
  j["value_bits"] = round_sig9(rep.value);
  j["raw_value_bits"] = round_sig9(rep.raw_value);
  json arg = json::array();
  for (double a : rep.argmax) arg.push_back(round_sig9(a));
  j["argmax"] = arg;
  if (lower) {
    j["noise_power_w"] = round_sig9(rep.noise_power);
    j["conf_power_w"] = round_sig9(rep.conf_power);
  }
  return j;
}

void emit(const json& report, const std::string& output, const std::string& suffix) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!output.empty()) {
    std::ofstream out(output + suffix);
    out << text;
  }
}

struct GridFlags {
  int grid_steps = 0;
  int refine_rounds = -1;

  BoundOptions options() const {
    BoundOptions o;
    if (grid_steps > 0) o.grid_steps = grid_steps;
    if (refine_rounds >= 0) o.refine_rounds = refine_rounds;
    return o;
  }
};

int cmd_bounds(const std::string& input, const std::string& output, const GridFlags& gf) {
  GaussianMacChannel ch = parse_gaussian_input(load_config(input));
  BoundReport low = lower_bound(ch, gf.options());
  BoundReport up = upper_bound(ch, gf.options());
  json report;
  report["lower"] = bound_report_json(low, true);
  report["upper"] = bound_report_json(up, false);
  report["c12"] = is_infinite_c12(ch.c12) ? json("inf") : json(round_sig9(ch.c12));
  emit(report, output, ".bounds.json");
  return 0;
}

int cmd_sweep(const std::string& input, const std::string& output, const GridFlags& gf,
              bool svg) {
  json j = load_config(input);
  SweepConfig cfg;
  cfg.base = parse_geometry(j, false);
  if (!j.contains("sweep") || !j["sweep"].is_object())
    throw SchemaError("missing or invalid field: sweep");
  cfg.start = require_number(j["sweep"], "start");
  cfg.stop = require_number(j["sweep"], "stop");
  cfg.step = require_number(j["sweep"], "step");
  if (!j.contains("c12_list") || !j["c12_list"].is_array() || j["c12_list"].empty())
    throw SchemaError("missing or invalid field: c12_list");
  for (const auto& v : j["c12_list"]) cfg.c12_list.push_back(parse_c12(v, "c12_list"));
  if (j.contains("include_wiretap_baseline")) {
    if (!j["include_wiretap_baseline"].is_boolean())
      throw SchemaError("missing or invalid field: include_wiretap_baseline");
    cfg.include_wiretap_baseline = j["include_wiretap_baseline"].get<bool>();
  }
  cfg.bounds = gf.options();
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }

  std::vector<SweepRow> rows = run_sweep(cfg);
  std::string csv = sweep_csv(rows);
  std::cout << csv;
  if (!output.empty()) {
    std::ofstream(output + ".csv") << csv;
    if (svg) {
      std::ofstream(output + ".bounds.svg") << sweep_bounds_svg(rows);
      std::ofstream(output + ".power_split.svg") << power_split_svg(rows);
    }
  }
  return 0;
}

InnerAuxDistribution parse_inner_distribution(const json& j,
                                              const DiscreteMemorylessChannel& ch) {
  if (!j.contains("distribution") || !j["distribution"].is_object())
    throw SchemaError("missing or invalid field: distribution");
  const json& d = j["distribution"];
  InnerAuxDistribution dist;
  dist.n_u = require_int(d, "n_u");
  dist.n_v = require_int(d, "n_v");
  dist.n_v1 = require_int(d, "n_v1");
  dist.n_v2 = require_int(d, "n_v2");
  dist.p_u = require_number_array(d, "p_u");
  dist.p_v_given_u = require_number_array(d, "p_v_given_u");
  dist.p_v1_given_vu = require_number_array(d, "p_v1_given_vu");
  dist.p_v2_given_vu = require_number_array(d, "p_v2_given_vu");
  dist.p_x1_given_v1 = require_number_array(d, "p_x1_given_v1");
  dist.p_x2_given_v2 = require_number_array(d, "p_x2_given_v2");
  try {
    dist.validate(ch);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return dist;
}

OuterAuxDistribution parse_outer_distribution(const json& j,
                                              const DiscreteMemorylessChannel& ch) {
  if (!j.contains("distribution") || !j["distribution"].is_object())
    throw SchemaError("missing or invalid field: distribution");
  const json& d = j["distribution"];
  OuterAuxDistribution dist;
  dist.n_u = require_int(d, "n_u");
  dist.n_v1 = require_int(d, "n_v1");
  dist.n_v2 = require_int(d, "n_v2");
  dist.p_u = require_number_array(d, "p_u");
  dist.p_v1v2_given_u = require_number_array(d, "p_v1v2_given_u");
  dist.p_x1x2_given_v1v2 = require_number_array(d, "p_x1x2_given_v1v2");
  try {
    dist.validate(ch);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return dist;
}

json point_json(const RateEquivocationPoint& p) {
  return json{{"r_bits", round_sig9(p.r)}, {"re_bits", round_sig9(p.re)}};
}

int cmd_dm_point(const std::string& input, const std::string& output, bool inner) {
  json j = load_config(input);
  DiscreteMemorylessChannel ch = parse_dm_channel(j);
  double c12 = require_c12(j, "c12");
  RateEquivocationPoint pt = inner
      ? inner_bound_point(parse_inner_distribution(j, ch), ch, c12)
      : outer_bound_point(parse_outer_distribution(j, ch), ch, c12);
  json report;
  report["bound"] = inner ? "inner" : "outer";
  report["point"] = point_json(pt);
  emit(report, output, inner ? ".dm_inner.json" : ".dm_outer.json");
  return 0;
}

int cmd_dm_frontier(const std::string& input, const std::string& output,
                    unsigned long long budget_flag) {
  json j = load_config(input);
  DiscreteMemorylessChannel ch = parse_dm_channel(j);
  FrontierConfig cfg;
  cfg.c12 = require_c12(j, "c12");
  if (!j.contains("bound") || !j["bound"].is_string())
    throw SchemaError("missing or invalid field: bound");
  std::string bound = j["bound"].get<std::string>();
  if (bound == "inner")
    cfg.kind = BoundKind::inner;
  else if (bound == "outer")
    cfg.kind = BoundKind::outer;
  else
    throw SchemaError("missing or invalid field: bound (expected \"inner\" or \"outer\")");
  if (j.contains("cards")) {
    const json& c = j["cards"];
    if (c.contains("n_u")) cfg.cards.n_u = require_int(c, "n_u");
    if (c.contains("n_v")) cfg.cards.n_v = require_int(c, "n_v");
    cfg.cards.n_v1 = c.contains("n_v1") ? require_int(c, "n_v1") : ch.n_x1 + 1;
    cfg.cards.n_v2 = c.contains("n_v2") ? require_int(c, "n_v2") : ch.n_x2 + 1;
  } else {
    cfg.cards = {2, 2, ch.n_x1 + 1, ch.n_x2 + 1};
  }
  cfg.grid.denominator = j.contains("grid_denominator")
                             ? require_int(j, "grid_denominator")
                             : 8;
  if (cfg.grid.denominator < 1)
    throw SchemaError("missing or invalid field: grid_denominator");
  if (j.contains("budget")) cfg.grid.budget = require_number(j, "budget");
  if (budget_flag > 0) cfg.grid.budget = budget_flag;
  if (j.contains("identity_inputs")) {
    if (!j["identity_inputs"].is_boolean())
      throw SchemaError("missing or invalid field: identity_inputs");
    cfg.identity_inputs = j["identity_inputs"].get<bool>();
  }

  FrontierResult fr = enumerate_frontier(ch, cfg);
  json report;
  report["bound"] = bound;
  report["lattice_size"] = fr.lattice_size;
  report["budget_truncated"] = false;  // exceeding the budget is a hard error
  json pareto = json::array();
  for (const auto& p : fr.pareto) pareto.push_back(point_json(p));
  report["pareto"] = pareto;
  if (cfg.kind == BoundKind::inner) {
    json hull = json::array();
    for (const auto& p : fr.hull) hull.push_back(point_json(p));
    report["hull"] = hull;
  }
  emit(report, output, ".dm_frontier.json");
  return 0;
}

int cmd_special(const std::string& input, const std::string& output, const GridFlags& gf) {
  GaussianMacChannel ch = parse_gaussian_input(load_config(input));
  C12ZeroResult zero = c12_zero_bounds(ch, gf.options());
  BoundReport full = full_cooperation_capacity(ch, gf.options());
  json report;
  report["c12_zero"] = {
      {"upper", bound_report_json(zero.upper, false)},
      {"lower", bound_report_json(zero.lower, false)},
      {"coincide", zero.coincide},
  };
  report["full_cooperation"] = bound_report_json(full, false);
  emit(report, output, ".special.json");
  return 0;
}

// ---------------------------------------------------------------------------
// Self-check: invariant suites on internally sampled channels.

GaussianMacChannel sample_channel(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gain(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  std::uniform_real_distribution<double> c12d(0.0, 4.0);
  GaussianMacChannel ch;
  ch.h1d = gain(rng);
  ch.h2d = gain(rng);
  ch.h1e = gain(rng);
  ch.h2e = gain(rng);
  ch.sigma1_sq = pos(rng);
  ch.sigma2_sq = pos(rng);
  ch.p1 = pos(rng);
  ch.p2 = pos(rng);
  ch.c12 = c12d(rng);
  return ch;
}

int cmd_self_check(uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };

  BoundOptions fast{101, 2};
  for (int i = 0; i < 10; ++i) {
    GaussianMacChannel ch = sample_channel(rng);
    BoundReport low = lower_bound(ch, fast);
    BoundReport up = upper_bound(ch, fast);
    check(low.value >= 0.0 && up.value >= 0.0,
          "nonnegative bounds (channel " + std::to_string(i) + ")");
    check(low.value <= up.value + 1e-3,
          "lower <= upper + 1e-3 (channel " + std::to_string(i) + ")");

    GaussianMacChannel scaled = ch;
    const double c = 3.0;
    scaled.h1d *= c;
    scaled.h2d *= c;
    scaled.h1e *= c;
    scaled.h2e *= c;
    scaled.sigma1_sq *= c * c;
    scaled.sigma2_sq *= c * c;
    check(std::abs(lower_bound(scaled, fast).value - low.value) <= 1e-12 &&
              std::abs(upper_bound(scaled, fast).value - up.value) <= 1e-12,
          "SNR invariance (channel " + std::to_string(i) + ")");

    GaussianMacChannel more = ch;
    more.c12 = ch.c12 + 1.0;
    check(lower_bound(more, fast).value >= low.value - 1e-9,
          "lower bound nondecreasing in c12 (channel " + std::to_string(i) + ")");
  }
  std::cout << (failures == 0 ? "self-check passed\n" : "self-check FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy-capacity bounds for the MAC with partially cooperating encoders"};
  app.require_subcommand(0, 1);

  std::string input, output;
  GridFlags gf;
  unsigned long long budget = 0;
  bool svg = false;
  bool self_check = false;
  uint64_t seed = 1;

  app.add_flag("--self-check", self_check, "run invariant suites on sampled channels");
  app.add_option("--seed", seed, "seed for self-check channel sampling");

  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    auto* opt = sub->add_option("--input", input, "JSON config path");
    if (needs_input) opt->required();
    sub->add_option("--output", output, "output path prefix");
    sub->add_option("--grid-steps", gf.grid_steps, "lattice points per dimension");
    sub->add_option("--refine-rounds", gf.refine_rounds, "local refinement rounds");
  };

  auto* sc_bounds = app.add_subcommand("bounds", "Gaussian lower/upper secrecy bounds");
  add_common(sc_bounds);
  auto* sc_sweep = app.add_subcommand("sweep", "Encoder 2 location sweep (CSV)");
  add_common(sc_sweep);
  sc_sweep->add_flag("--svg", svg, "also emit SVG line plots");
  auto* sc_inner = app.add_subcommand("dm-inner", "inner bound point for a distribution");
  add_common(sc_inner);
  auto* sc_outer = app.add_subcommand("dm-outer", "outer bound point for a distribution");
  add_common(sc_outer);
  auto* sc_front = app.add_subcommand("dm-frontier", "lattice rate-equivocation frontier");
  add_common(sc_front);
  sc_front->add_option("--budget", budget, "max lattice evaluations");
  auto* sc_special = app.add_subcommand("special", "no-conference and full-cooperation bounds");
  add_common(sc_special);

  CLI11_PARSE(app, argc, argv);

  try {
    if (self_check) return cmd_self_check(seed);
    if (sc_bounds->parsed()) return cmd_bounds(input, output, gf);
    if (sc_sweep->parsed()) return cmd_sweep(input, output, gf, svg);
    if (sc_inner->parsed()) return cmd_dm_point(input, output, true);
    if (sc_outer->parsed()) return cmd_dm_point(input, output, false);
    if (sc_front->parsed()) return cmd_dm_frontier(input, output, budget);
    if (sc_special->parsed()) return cmd_special(input, output, gf);
    std::cout << app.help();
    return 0;
  } catch (const SchemaError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
