// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "secmac/dm_region.hpp"
#include "secmac/experiments.hpp"
#include "secmac/gaussian_bounds.hpp"
#include "secmac/gaussian_model.hpp"
#include "secmac/numerics.hpp"

using namespace secmac;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, Clock::time_point t0) {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// --- shared random helpers -------------------------------------------------

void random_simplex_row(std::mt19937_64& rng, double* dst, int k) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    dst[i] = u(rng);
    sum += dst[i];
  }
  for (int i = 0; i < k; ++i) dst[i] /= sum;
}

DiscreteMemorylessChannel random_binary_channel(std::mt19937_64& rng) {
  DiscreteMemorylessChannel ch;
  ch.n_x1 = ch.n_x2 = ch.n_y = ch.n_z = 2;
  ch.law.assign(16, 0.0);
  for (int row = 0; row < 4; ++row) random_simplex_row(rng, ch.law.data() + row * 4, 4);
  return ch;
}

NetworkGeometry section_v(double enc2_x) {
  NetworkGeometry g;
  g.pos_enc1 = {0.0, 0.0};
  g.pos_enc2 = {enc2_x, 0.0};
  g.pos_dest = {1.0, 0.0};
  g.pos_eave = {1.5, 0.0};
  g.gamma = 2.0;
  return g;
}

// --- criterion 1: brute-force MI oracle -------------------------------------

double brute_force_cmi(const JointTable& joint, std::vector<int> a, std::vector<int> b,
                       std::vector<int> c) {
  const int nv = static_cast<int>(joint.dims.size());
  auto decode = [&](size_t flat) {
    std::vector<int> idx(nv);
    for (int d = nv - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(flat % joint.dims[d]);
      flat /= joint.dims[d];
    }
    return idx;
  };
  auto key = [&](const std::vector<int>& idx, const std::vector<int>& vars) {
    std::vector<int> k;
    for (int v : vars) k.push_back(idx[v]);
    return k;
  };
  std::vector<int> ac = a, bc = b, abc = a;
  ac.insert(ac.end(), c.begin(), c.end());
  bc.insert(bc.end(), c.begin(), c.end());
  abc.insert(abc.end(), b.begin(), b.end());
  abc.insert(abc.end(), c.begin(), c.end());
  std::map<std::vector<int>, double> p_abc, p_ac, p_bc, p_c;
  for (size_t flat = 0; flat < joint.p.size(); ++flat) {
    double v = joint.p[flat];
    if (v == 0.0) continue;
    auto idx = decode(flat);
    p_abc[key(idx, abc)] += v;
    p_ac[key(idx, ac)] += v;
    p_bc[key(idx, bc)] += v;
    p_c[key(idx, c)] += v;
  }
  double mi = 0.0;
  for (size_t flat = 0; flat < joint.p.size(); ++flat) {
    double v = joint.p[flat];
    if (v <= 0.0) continue;
    auto idx = decode(flat);
    mi += v * std::log2(p_abc[key(idx, abc)] * p_c[key(idx, c)] /
                        (p_ac[key(idx, ac)] * p_bc[key(idx, bc)]));
  }
  return mi;
}

void criterion_1() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> card(2, 4);
  double worst_oracle = 0.0, worst_chain = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    JointTable t({card(rng), card(rng), card(rng)});
    double sum = 0.0;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : t.p) {
      v = u(rng);
      sum += v;
    }
    for (auto& v : t.p) v /= sum;

    const int a[] = {0}, b[] = {1}, c[] = {2}, ab[] = {0, 1};
    worst_oracle = std::max(worst_oracle,
                            std::abs(conditional_mi(t, a, b, c) - brute_force_cmi(t, {0}, {1}, {2})));
    worst_oracle = std::max(worst_oracle,
                            std::abs(conditional_mi(t, a, b) - brute_force_cmi(t, {0}, {1}, {})));
    double chain = conditional_mi(t, ab, c) -
                   (conditional_mi(t, a, c) + conditional_mi(t, b, c, a));
    worst_chain = std::max(worst_chain, std::abs(chain));
  }
  bool ok = worst_oracle <= 1e-12 && worst_chain <= 1e-12;
  report(1, ok,
         "conditional_mi vs brute force, 200 joints (max err " + fmt(worst_oracle) +
             "), chain rule (max err " + fmt(worst_chain) + ")",
         t0);
}

// --- criterion 2: degraded wiretap reproduction ------------------------------

void criterion_2() {
  auto t0 = Clock::now();
  const double oracle = binary_entropy(0.22) - binary_entropy(0.1);  // ~0.29123

  SimplexGrid outer_grid;
  outer_grid.denominator = 32;
  auto wyner = wyner_reduction_check(0.1, 0.15, outer_grid);
  bool outer_ok = std::abs(wyner.computed - oracle) <= 0.02;

  FrontierConfig inner;
  inner.kind = BoundKind::inner;
  inner.cards = {1, 1, 2, 1};
  inner.grid.denominator = 16;
  auto fr = enumerate_frontier(degraded_binary_wiretap(0.1, 0.15), inner);
  double best = 0.0;
  for (const auto& p : fr.pareto) best = std::max(best, p.re);
  bool inner_ok = std::abs(best - oracle) <= 0.03;

  report(2, outer_ok && inner_ok,
         "wiretap reduction: outer " + fmt(wyner.computed) + ", inner " + fmt(best) +
             " vs oracle " + fmt(oracle),
         t0);
}

// --- criterion 3: Gaussian MI oracle -----------------------------------------

double covariance_oracle(const GaussianMacChannel& ch, double psi) {
  auto receiver_rate = [&](double g1, double g2, double sigma_sq) {
    double k11 = ch.p1, k22 = ch.p2, k12 = psi * std::sqrt(ch.p1 * ch.p2);
    double c1 = g1 * k11 + g2 * k12;
    double c2 = g1 * k12 + g2 * k22;
    double var_r = g1 * c1 + g2 * c2 + sigma_sq;
    double det_k = k11 * k22 - k12 * k12;
    double quad = (c1 * (k22 * c1 - k12 * c2) + c2 * (k11 * c2 - k12 * c1)) / det_k;
    return std::log2(var_r / (var_r - quad));
  };
  return receiver_rate(ch.h1d, ch.h2d, ch.sigma1_sq) -
         receiver_rate(ch.h1e, ch.h2e, ch.sigma2_sq);
}

void criterion_3() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> gain(-2.0, 2.0), pos(0.1, 2.0), psi(-0.99, 0.99);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    GaussianMacChannel ch;
    ch.h1d = gain(rng);
    ch.h2d = gain(rng);
    ch.h1e = gain(rng);
    ch.h2e = gain(rng);
    ch.sigma1_sq = pos(rng);
    ch.sigma2_sq = pos(rng);
    ch.p1 = pos(rng);
    ch.p2 = pos(rng);
    double s = psi(rng);
    worst = std::max(worst, std::abs(upper_bound_value(ch, s) - covariance_oracle(ch, s)));
  }
  report(3, worst <= 1e-9,
         "upper_bound_value vs covariance oracle on 100 samples (max err " + fmt(worst) + ")",
         t0);
}

// --- criterion 4: full-cooperation coincidence --------------------------------

void criterion_4() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (double d : {0.25, 0.5, 0.75}) {
    GaussianMacChannel ch = compile_geometry(section_v(d));

    // Independent psi-grid oracle for the sign of the optimal correlation.
    double best = -1e300, best_psi = 0.0;
    for (int k = 0; k <= 20000; ++k) {
      double psi = -1.0 + k * 1e-4;
      double v = upper_bound_value(ch, psi);
      if (v > best) {
        best = v;
        best_psi = psi;
      }
    }

    ch.c12 = kInfiniteC12;
    double low = lower_bound(ch).value;
    double up = upper_bound(ch).value;
    if (best_psi >= 0.0) {
      if (std::abs(low - up) > 1e-3) ok = false;
      detail += "d=" + fmt(d) + " psi*=" + fmt(best_psi) + " gap=" + fmt(up - low) + "; ";
    } else {
      detail += "d=" + fmt(d) + " psi*=" + fmt(best_psi) + " negative, gap " +
                fmt(up - low) + " flagged not asserted; ";
    }
  }
  report(4, ok, "c12=inf coincidence where psi* >= 0: " + detail, t0);
}

// --- criterion 5: no-conference coincidence ------------------------------------

void criterion_5() {
  auto t0 = Clock::now();
  GaussianMacChannel ch = compile_geometry(section_v(0.5));
  auto res = c12_zero_bounds(ch);

  // 2-D power-grid oracle, direct formulas, step 1e-3.
  double oracle_upper = 0.0, oracle_lower = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    double x1 = i * 1e-3 * ch.p1;
    double direct = std::log2(1.0 + ch.h1d * ch.h1d * x1 / ch.sigma1_sq);
    for (int j = 0; j <= 1000; ++j) {
      double x2 = j * 1e-3 * ch.p2;
      double leak =
          std::log2(1.0 + ch.h1e * ch.h1e * x1 / (ch.sigma2_sq + ch.h2e * ch.h2e * x2));
      double v = std::max(0.0, direct - leak);
      oracle_upper = std::max(oracle_upper, v);
      bool feasible = ch.h2d * ch.h2d * x2 / (ch.h1d * ch.h1d * x1 + ch.sigma1_sq) >=
                      ch.h2e * ch.h2e * x2 / ch.sigma2_sq;
      if (feasible) oracle_lower = std::max(oracle_lower, v);
    }
  }

  bool ok = res.coincide && std::abs(res.upper.value - 0.71049) <= 1e-3 &&
            std::abs(res.lower.value - 0.71049) <= 1e-3 &&
            std::abs(res.upper.value - oracle_upper) <= 1e-3 &&
            std::abs(res.lower.value - oracle_lower) <= 1e-3;
  report(5, ok,
         "c12=0 bounds coincide=" + std::string(res.coincide ? "true" : "false") + " value " +
             fmt(res.upper.value) + " vs grid oracle " + fmt(oracle_upper),
         t0);
}

// --- criteria 6 and 7: Section V sweep properties ------------------------------

void criteria_6_and_7() {
  auto t0 = Clock::now();
  SweepConfig cfg;
  cfg.base = section_v(0.0);
  cfg.start = 0.0;
  cfg.stop = 2.0;
  cfg.step = 0.05;
  cfg.c12_list = {0.0, 1.0, 4.0, 6.0};
  auto rows = run_sweep(cfg);

  bool mono = true, order = true, gain = true;
  std::map<double, double> lower_at_0, lower_at_6;
  double prev_d = -1.0, prev_lower = 0.0;
  for (const auto& r : rows) {
    if (r.d == prev_d && r.lower_value < prev_lower - 1e-9) mono = false;
    prev_d = r.d;
    prev_lower = r.lower_value;
    if (r.lower_value > r.upper_value + 1e-3) order = false;
    if (r.c12 == 0.0) lower_at_0[r.d] = r.lower_value;
    if (r.c12 == 6.0) lower_at_6[r.d] = r.lower_value;
  }
  for (const auto& [d, v0] : lower_at_0)
    if (lower_at_6[d] < v0 - 1e-9) gain = false;
  report(6, mono && order && gain,
         "sweep d in [0,2]: lower nondecreasing in c12, lower <= upper + 1e-3, "
         "c12=6 >= c12=0 at every d",
         t0);

  auto t1 = Clock::now();
  bool power_ok = true;
  double worst_conf = 0.0;
  for (const auto& p : power_split_report(rows, 1.0))
    if (p.near_destination) {
      worst_conf = std::max(worst_conf, p.conf_power);
      if (!p.conf_power_below_5pct) power_ok = false;
    }
  report(7, power_ok,
         "conference power < 0.05 P2 for d in (0.9, 1.1), all c12 (max " + fmt(worst_conf) +
             " W)",
         t1);
}

// --- criterion 8: reversed geometry ---------------------------------------------

void criterion_8() {
  auto t0 = Clock::now();
  SweepConfig cfg;
  cfg.base = section_v(0.0);
  cfg.base.pos_dest = {1.5, 0.0};
  cfg.base.pos_eave = {1.0, 0.0};
  cfg.start = 0.0;
  cfg.stop = 2.0;
  cfg.step = 0.05;
  cfg.c12_list = {6.0};
  double best = 0.0;
  for (const auto& r : run_sweep(cfg)) best = std::max(best, r.lower_value);
  report(8, best > 0.01,
         "reversed dest/eave: max lower at c12=6 is " + fmt(best) + " bits", t0);
}

// --- criterion 9: inner within outer ---------------------------------------------

void criterion_9() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  const double tol = 2.0 / 8.0;
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    DiscreteMemorylessChannel ch = random_binary_channel(rng);

    FrontierConfig in;
    in.kind = BoundKind::inner;
    in.cards = {1, 1, 2, 2};
    in.grid.denominator = 8;
    auto inner = enumerate_frontier(ch, in);

    FrontierConfig out;
    out.kind = BoundKind::outer;
    out.cards = {2, 1, 2, 2};
    out.grid.denominator = 8;
    out.identity_inputs = true;
    auto outer = enumerate_frontier(ch, out);

    for (const auto& p : inner.pareto) {
      double slack = 1e300;
      for (const auto& q : outer.pareto)
        slack = std::min(slack, std::max(p.r - q.r, p.re - q.re));
      worst = std::max(worst, slack);
      if (slack > tol) ok = false;
    }
  }
  report(9, ok,
         "inner frontier dominated by outer on 20 random binary channels "
         "(max overshoot " +
             fmt(worst) + ", tol " + fmt(tol) + ")",
         t0);
}

// --- criterion 10: determinism across thread counts -------------------------------

#ifndef SECMAC_CLI_PATH
#error "SECMAC_CLI_PATH must be defined"
#endif

std::string scratch(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/secmac_accept_" + name;
}

bool run_to_file(const std::string& cmd, const std::string& out) {
  int status = std::system((cmd + " > " + out + " 2>&1").c_str());
  return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_10() {
  auto t0 = Clock::now();
  const std::string cli = SECMAC_CLI_PATH;

  std::ofstream(scratch("geom.json")) << R"({
    "kind": "geometry",
    "pos_enc1": [0.0, 0.0], "pos_enc2": [0.5, 0.0],
    "pos_dest": [1.0, 0.0], "pos_eave": [1.5, 0.0],
    "gamma": 2.0, "p1": 1.0, "p2": 1.0,
    "sigma1_sq": 1.0, "sigma2_sq": 1.0, "c12": 4.0,
    "sweep": {"start": 0.0, "stop": 1.0, "step": 0.25},
    "c12_list": [0.0, "inf"]
  })";
  std::ofstream(scratch("dm.json")) << R"({
    "kind": "dm_channel", "n_x1": 2, "n_x2": 1, "n_y": 2, "n_z": 2, "c12": 0.5,
    "law": [0.765, 0.135, 0.015, 0.085, 0.085, 0.015, 0.135, 0.765],
    "bound": "inner", "cards": {"n_u": 1, "n_v": 1, "n_v1": 2, "n_v2": 1},
    "grid_denominator": 8,
    "distribution": {
      "n_u": 1, "n_v": 1, "n_v1": 2, "n_v2": 1,
      "p_u": [1.0], "p_v_given_u": [1.0],
      "p_v1_given_vu": [0.5, 0.5], "p_v2_given_vu": [1.0],
      "p_x1_given_v1": [1.0, 0.0, 0.0, 1.0], "p_x2_given_v2": [1.0]
    }
  })";
  std::ofstream(scratch("dm_outer.json")) << R"({
    "kind": "dm_channel", "n_x1": 2, "n_x2": 1, "n_y": 2, "n_z": 2, "c12": 0.5,
    "law": [0.765, 0.135, 0.015, 0.085, 0.085, 0.015, 0.135, 0.765],
    "bound": "outer", "cards": {"n_u": 1, "n_v1": 2, "n_v2": 1},
    "grid_denominator": 8,
    "distribution": {
      "n_u": 1, "n_v1": 2, "n_v2": 1,
      "p_u": [1.0], "p_v1v2_given_u": [0.5, 0.5],
      "p_x1x2_given_v1v2": [1.0, 0.0, 0.0, 1.0]
    }
  })";

  struct Cmd {
    const char* name;
    std::string args;
  };
  const Cmd cmds[] = {
      {"bounds", " bounds --input " + scratch("geom.json") + " --grid-steps 81"},
      {"sweep", " sweep --input " + scratch("geom.json") + " --grid-steps 81"},
      {"dm-inner", " dm-inner --input " + scratch("dm.json")},
      {"dm-outer", " dm-outer --input " + scratch("dm_outer.json")},
      {"dm-frontier", " dm-frontier --input " + scratch("dm.json")},
      {"special", " special --input " + scratch("geom.json") + " --grid-steps 81"},
  };

  bool ok = true;
  std::string bad;
  for (const auto& c : cmds) {
    std::string ref;
    bool first = true;
    for (const char* threads : {"1", "4"}) {
      for (int rep = 0; rep < 2; ++rep) {
        std::string out = scratch(std::string(c.name) + ".out");
        if (!run_to_file("SECMAC_THREADS=" + std::string(threads) + " " + cli + c.args, out)) {
          ok = false;
          bad += std::string(c.name) + " exited nonzero; ";
          break;
        }
        std::string text = slurp(out);
        if (first) {
          ref = text;
          first = false;
        } else if (text != ref) {
          ok = false;
          bad += std::string(c.name) + " differs (threads " + threads + "); ";
        }
      }
    }
  }
  report(10, ok,
         ok ? "all subcommands byte-identical across repeats and SECMAC_THREADS in {1,4}"
            : bad,
         t0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criteria_6_and_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
