#include "secmac/dm_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "secmac/numerics.hpp"

namespace secmac {

JointTable::JointTable(std::vector<int> d) : dims(std::move(d)) {
  size_t n = 1;
  for (int k : dims) {
    if (k < 1) throw std::invalid_argument("JointTable: cardinalities must be >= 1");
    n *= static_cast<size_t>(k);
  }
  p.assign(n, 0.0);
}

double JointTable::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

JointTable marginal(const JointTable& joint, std::span<const int> vars) {
  const int nv = static_cast<int>(joint.dims.size());
  std::vector<int> out_dims;
  out_dims.reserve(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 0 || vars[i] >= nv)
      throw std::invalid_argument("marginal: variable index out of range");
    if (i > 0 && vars[i] <= vars[i - 1])
      throw std::invalid_argument("marginal: vars must be sorted and distinct");
    out_dims.push_back(joint.dims[vars[i]]);
  }
  JointTable out(out_dims.empty() ? std::vector<int>{1} : out_dims);
  if (vars.empty()) {
    out.p[0] = joint.total();
    return out;
  }

  // Stride of each joint variable in the output index (0 if summed out).
  std::vector<size_t> out_stride(nv, 0);
  size_t s = 1;
  for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
    out_stride[vars[i]] = s;
    s *= static_cast<size_t>(joint.dims[vars[i]]);
  }

  std::vector<int> idx(nv, 0);
  size_t tgt = 0;
  for (size_t flat = 0; flat < joint.p.size(); ++flat) {
    out.p[tgt] += joint.p[flat];
    int d = nv - 1;
    while (d >= 0) {
      if (++idx[d] < joint.dims[d]) {
        tgt += out_stride[d];
        break;
      }
      idx[d] = 0;
      tgt -= out_stride[d] * static_cast<size_t>(joint.dims[d] - 1);
      --d;
    }
  }
  return out;
}

double entropy_bits(const JointTable& t) {
  double h = 0.0;
  for (double v : t.p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double conditional_mi(const JointTable& joint, std::span<const int> a,
                      std::span<const int> b, std::span<const int> c) {
  std::vector<int> av(a.begin(), a.end()), bv(b.begin(), b.end()), cv(c.begin(), c.end());
  std::sort(av.begin(), av.end());
  std::sort(bv.begin(), bv.end());
  std::sort(cv.begin(), cv.end());
  auto overlaps = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> tmp;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(tmp));
    return !tmp.empty();
  };
  if (overlaps(av, bv) || overlaps(av, cv) || overlaps(bv, cv))
    throw std::invalid_argument("conditional_mi: variable sets must be disjoint");

  auto merge = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out;
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
  };
  std::vector<int> ac = merge(av, cv), bc = merge(bv, cv), abc = merge(merge(av, bv), cv);

  // I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C)
  double h_ac = entropy_bits(marginal(joint, ac));
  double h_bc = entropy_bits(marginal(joint, bc));
  double h_abc = entropy_bits(marginal(joint, abc));
  double h_c = cv.empty() ? 0.0 : entropy_bits(marginal(joint, cv));
  double mi = h_ac + h_bc - h_abc - h_c;
  return mi > 0.0 ? mi : 0.0;
}

namespace {

void check_prob_rows(const std::vector<double>& table, int n_rows, int row_len,
                     const char* name) {
  if (static_cast<int>(table.size()) != n_rows * row_len)
    throw std::invalid_argument(std::string(name) + ": table dimension mismatch");
  for (int r = 0; r < n_rows; ++r) {
    double s = 0.0;
    for (int j = 0; j < row_len; ++j) {
      double v = table[static_cast<size_t>(r) * row_len + j];
      if (!(v >= 0.0 && v <= 1.0 + 1e-12))
        throw std::invalid_argument(std::string(name) + ": entry outside [0,1] in row " +
                                    std::to_string(r));
      s += v;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument(std::string(name) + ": row " + std::to_string(r) +
                                  " sums to " + std::to_string(s));
  }
}

}  // namespace

void DiscreteMemorylessChannel::validate() const {
  if (n_x1 < 1 || n_x2 < 1 || n_y < 1 || n_z < 1)
    throw std::invalid_argument("DiscreteMemorylessChannel: alphabet sizes must be >= 1");
  check_prob_rows(law, n_x1 * n_x2, n_y * n_z, "channel law");
}

DiscreteMemorylessChannel degraded_binary_wiretap(double main_crossover,
                                                  double cascade_crossover) {
  const double pm = main_crossover, pc = cascade_crossover;
  if (!(pm >= 0.0 && pm <= 1.0 && pc >= 0.0 && pc <= 1.0))
    throw std::invalid_argument("degraded_binary_wiretap: crossovers must be in [0,1]");
  DiscreteMemorylessChannel ch;
  ch.n_x1 = 2;
  ch.n_x2 = 1;
  ch.n_y = 2;
  ch.n_z = 2;
  ch.law.assign(2 * 1 * 2 * 2, 0.0);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        double py = (y == x1) ? 1.0 - pm : pm;
        double pz = (z == y) ? 1.0 - pc : pc;
        ch.law[(static_cast<size_t>(x1) * 2 + y) * 2 + z] = py * pz;
      }
  return ch;
}

void InnerAuxDistribution::validate(const DiscreteMemorylessChannel& ch) const {
  if (n_u < 1 || n_v < 1 || n_v1 < 1 || n_v2 < 1)
    throw std::invalid_argument("InnerAuxDistribution: cardinalities must be >= 1");
  check_prob_rows(p_u, 1, n_u, "p(u)");
  check_prob_rows(p_v_given_u, n_u, n_v, "p(v|u)");
  check_prob_rows(p_v1_given_vu, n_u * n_v, n_v1, "p(v1|v,u)");
  check_prob_rows(p_v2_given_vu, n_u * n_v, n_v2, "p(v2|v,u)");
  check_prob_rows(p_x1_given_v1, n_v1, ch.n_x1, "p(x1|v1)");
  check_prob_rows(p_x2_given_v2, n_v2, ch.n_x2, "p(x2|v2)");
}

void OuterAuxDistribution::validate(const DiscreteMemorylessChannel& ch) const {
  if (n_u < 1 || n_v1 < 1 || n_v2 < 1)
    throw std::invalid_argument("OuterAuxDistribution: cardinalities must be >= 1");
  check_prob_rows(p_u, 1, n_u, "p(u)");
  check_prob_rows(p_v1v2_given_u, n_u, n_v1 * n_v2, "p(v1,v2|u)");
  check_prob_rows(p_x1x2_given_v1v2, n_v1 * n_v2, ch.n_x1 * ch.n_x2, "p(x1,x2|v1,v2)");
}

JointTable joint_law(const InnerAuxDistribution& d, const DiscreteMemorylessChannel& ch) {
  d.validate(ch);
  ch.validate();
  JointTable out({d.n_u, d.n_v, d.n_v1, d.n_v2, ch.n_x1, ch.n_x2, ch.n_y, ch.n_z});
  size_t flat = 0;
  for (int u = 0; u < d.n_u; ++u)
    for (int v = 0; v < d.n_v; ++v)
      for (int v1 = 0; v1 < d.n_v1; ++v1)
        for (int v2 = 0; v2 < d.n_v2; ++v2) {
          double head = d.p_u[u] * d.p_v_given_u[static_cast<size_t>(u) * d.n_v + v] *
                        d.p_v1_given_vu[(static_cast<size_t>(u) * d.n_v + v) * d.n_v1 + v1] *
                        d.p_v2_given_vu[(static_cast<size_t>(u) * d.n_v + v) * d.n_v2 + v2];
          for (int x1 = 0; x1 < ch.n_x1; ++x1)
            for (int x2 = 0; x2 < ch.n_x2; ++x2) {
              double mid = head * d.p_x1_given_v1[static_cast<size_t>(v1) * ch.n_x1 + x1] *
                           d.p_x2_given_v2[static_cast<size_t>(v2) * ch.n_x2 + x2];
              for (int y = 0; y < ch.n_y; ++y)
                for (int z = 0; z < ch.n_z; ++z) out.p[flat++] = mid * ch.at(x1, x2, y, z);
            }
        }
  return out;
}

JointTable joint_law(const OuterAuxDistribution& d, const DiscreteMemorylessChannel& ch) {
  d.validate(ch);
  ch.validate();
  JointTable out({d.n_u, d.n_v1, d.n_v2, ch.n_x1, ch.n_x2, ch.n_y, ch.n_z});
  size_t flat = 0;
  for (int u = 0; u < d.n_u; ++u)
    for (int v1 = 0; v1 < d.n_v1; ++v1)
      for (int v2 = 0; v2 < d.n_v2; ++v2) {
        double head =
            d.p_u[u] *
            d.p_v1v2_given_u[(static_cast<size_t>(u) * d.n_v1 + v1) * d.n_v2 + v2];
        for (int x1 = 0; x1 < ch.n_x1; ++x1)
          for (int x2 = 0; x2 < ch.n_x2; ++x2) {
            double mid =
                head * d.p_x1x2_given_v1v2[((static_cast<size_t>(v1) * d.n_v2 + v2) *
                                                ch.n_x1 +
                                            x1) *
                                               ch.n_x2 +
                                           x2];
            for (int y = 0; y < ch.n_y; ++y)
              for (int z = 0; z < ch.n_z; ++z) out.p[flat++] = mid * ch.at(x1, x2, y, z);
          }
      }
  return out;
}

RateEquivocationPoint inner_bound_point(const InnerAuxDistribution& dist,
                                        const DiscreteMemorylessChannel& ch, double c12) {
  using namespace inner_var;
  JointTable j = joint_law(dist, ch);
  const int iu[] = {U}, iv1[] = {V1}, iv2[] = {V2}, iy[] = {Y}, iz[] = {Z};
  const int iv1v2[] = {V1, V2}, ivu[] = {U, V}, iv2vu[] = {U, V, V2}, iv1vu[] = {U, V, V1};

  double i_sum_y = conditional_mi(j, iv1v2, iy, iu);
  double r = std::min(i_sum_y, conditional_mi(j, iv1, iy, iv2vu) + c12);
  double bonus = std::min(conditional_mi(j, iv2, iy, ivu),
                          conditional_mi(j, iv2, iz, iv1vu));
  // The noise rate shares the decoder's budget with the message, so it is
  // folded into the conference-limited branch only; the sum-rate branch
  // already accounts for both codewords.
  double re_raw = std::min(i_sum_y, bonus + conditional_mi(j, iv1, iy, iv2vu) + c12) -
                  conditional_mi(j, iv1v2, iz, iu);
  return {r, std::min(r, clamp_plus(re_raw))};
}

RateEquivocationPoint outer_bound_point(const OuterAuxDistribution& dist,
                                        const DiscreteMemorylessChannel& ch, double c12) {
  using namespace outer_var;
  JointTable j = joint_law(dist, ch);
  const int iu[] = {U}, iv1[] = {V1}, iv2[] = {V2}, iy[] = {Y}, iz[] = {Z};
  const int iv1v2[] = {V1, V2}, iv2u[] = {U, V2};

  double r = std::min(conditional_mi(j, iv1v2, iy),
                      conditional_mi(j, iv1, iy, iv2) + c12);
  double leak_u = conditional_mi(j, iv1v2, iz, iu);
  double t1 = conditional_mi(j, iv1v2, iy, iu) - leak_u;
  double t2 = conditional_mi(j, iv1, iy, iv2u) + c12 - leak_u;
  return {r, std::min(r, clamp_plus(std::min(t1, t2)))};
}

// ---------------------------------------------------------------------------
// Lattice enumeration over factorized distributions.

namespace {

void gen_simplex(int k, int denom, int pos, int remaining, std::vector<int>& cur,
                 std::vector<std::vector<double>>& out) {
  if (pos == k - 1) {
    cur[pos] = remaining;
    std::vector<double> row(k);
    for (int i = 0; i < k; ++i) row[i] = static_cast<double>(cur[i]) / denom;
    out.push_back(std::move(row));
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    gen_simplex(k, denom, pos + 1, remaining - v, cur, out);
  }
}

// All probability vectors of length k with entries m/denom, lexicographic.
std::vector<std::vector<double>> simplex_lattice(int k, int denom) {
  std::vector<std::vector<double>> out;
  std::vector<int> cur(k);
  gen_simplex(k, denom, 0, denom, cur, out);
  return out;
}

struct RowSlot {
  double* dst;
  int size;
};

// Enumerates every combination of lattice rows, invoking eval() per combo.
// Throws BudgetExceededError before any evaluation if the combo count is too
// large. Returns the lattice size.
template <typename F>
unsigned long long sweep_rows(const std::vector<RowSlot>& slots, int denom,
                              unsigned long long budget, F&& eval) {
  std::map<int, std::vector<std::vector<double>>> lattices;
  for (const auto& s : slots)
    if (!lattices.count(s.size)) lattices[s.size] = simplex_lattice(s.size, denom);

  unsigned long long total = 1;
  bool saturated = false;
  for (const auto& s : slots) {
    unsigned long long n = lattices[s.size].size();
    if (total > std::numeric_limits<unsigned long long>::max() / n) {
      saturated = true;
      total = std::numeric_limits<unsigned long long>::max();
      break;
    }
    total *= n;
  }
  if (saturated || total > budget) throw BudgetExceededError(total);

  std::vector<size_t> idx(slots.size(), 0);
  for (size_t i = 0; i < slots.size(); ++i) {
    const auto& row = lattices[slots[i].size][0];
    std::copy(row.begin(), row.end(), slots[i].dst);
  }
  for (;;) {
    eval();
    int d = static_cast<int>(slots.size()) - 1;
    while (d >= 0) {
      const auto& lat = lattices[slots[d].size];
      if (++idx[d] < lat.size()) {
        std::copy(lat[idx[d]].begin(), lat[idx[d]].end(), slots[d].dst);
        break;
      }
      idx[d] = 0;
      std::copy(lat[0].begin(), lat[0].end(), slots[d].dst);
      --d;
    }
    if (d < 0) break;
  }
  return total;
}

std::vector<RateEquivocationPoint> pareto_filter(std::vector<RateEquivocationPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.r != b.r) return a.r > b.r;
    return a.re > b.re;
  });
  std::vector<RateEquivocationPoint> keep;
  double best_re = -1.0;
  for (const auto& p : pts) {
    if (p.re > best_re) {
      keep.push_back(p);
      best_re = p.re;
    }
  }
  std::reverse(keep.begin(), keep.end());
  return keep;
}

double cross(const RateEquivocationPoint& o, const RateEquivocationPoint& a,
             const RateEquivocationPoint& b) {
  return (a.r - o.r) * (b.re - o.re) - (a.re - o.re) * (b.r - o.r);
}

// Upper concave envelope over the Pareto points plus the origin.
std::vector<RateEquivocationPoint> upper_envelope(
    const std::vector<RateEquivocationPoint>& pareto) {
  std::vector<RateEquivocationPoint> pts = pareto;
  pts.insert(pts.begin(), {0.0, 0.0});
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.re < b.re;
  });
  std::vector<RateEquivocationPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

// Objective of the zero-conference, no-prefix achievable rate on a
// factorized distribution (n_u = n_v = 1 required).
double wthi_objective(const InnerAuxDistribution& dist,
                      const DiscreteMemorylessChannel& ch) {
  using namespace inner_var;
  JointTable j = joint_law(dist, ch);
  const int iv1[] = {V1}, iv2[] = {V2}, iy[] = {Y}, iz[] = {Z};
  const int iv1v2[] = {V1, V2};
  double a1 = conditional_mi(j, iv1v2, iy) - conditional_mi(j, iv1v2, iz);
  double a2 = conditional_mi(j, iv1, iy, iv2) - conditional_mi(j, iv1, iz);
  return clamp_plus(std::min(a1, a2));
}

}  // namespace

double wthi_lower_bound(const DiscreteMemorylessChannel& ch, const SimplexGrid& search,
                        int n_v1, int n_v2) {
  ch.validate();
  InnerAuxDistribution d;
  d.n_u = 1;
  d.n_v = 1;
  d.n_v1 = n_v1;
  d.n_v2 = n_v2;
  d.p_u = {1.0};
  d.p_v_given_u = {1.0};
  d.p_v1_given_vu.assign(n_v1, 0.0);
  d.p_v2_given_vu.assign(n_v2, 0.0);
  d.p_x1_given_v1.assign(static_cast<size_t>(n_v1) * ch.n_x1, 0.0);
  d.p_x2_given_v2.assign(static_cast<size_t>(n_v2) * ch.n_x2, 0.0);

  std::vector<RowSlot> slots;
  slots.push_back({d.p_v1_given_vu.data(), n_v1});
  slots.push_back({d.p_v2_given_vu.data(), n_v2});
  for (int v1 = 0; v1 < n_v1; ++v1)
    slots.push_back({d.p_x1_given_v1.data() + static_cast<size_t>(v1) * ch.n_x1, ch.n_x1});
  for (int v2 = 0; v2 < n_v2; ++v2)
    slots.push_back({d.p_x2_given_v2.data() + static_cast<size_t>(v2) * ch.n_x2, ch.n_x2});

  double best = 0.0;
  sweep_rows(slots, search.denominator, search.budget,
             [&] { best = std::max(best, wthi_objective(d, ch)); });
  return best;
}

FrontierResult enumerate_frontier(const DiscreteMemorylessChannel& ch,
                                  const FrontierConfig& cfg) {
  ch.validate();
  FrontierResult out;
  std::vector<RateEquivocationPoint> pts;

  if (cfg.kind == BoundKind::inner) {
    InnerAuxDistribution d;
    d.n_u = cfg.cards.n_u;
    d.n_v = cfg.cards.n_v;
    d.n_v1 = cfg.cards.n_v1;
    d.n_v2 = cfg.cards.n_v2;
    d.p_u.assign(d.n_u, 0.0);
    d.p_v_given_u.assign(static_cast<size_t>(d.n_u) * d.n_v, 0.0);
    d.p_v1_given_vu.assign(static_cast<size_t>(d.n_u) * d.n_v * d.n_v1, 0.0);
    d.p_v2_given_vu.assign(static_cast<size_t>(d.n_u) * d.n_v * d.n_v2, 0.0);
    d.p_x1_given_v1.assign(static_cast<size_t>(d.n_v1) * ch.n_x1, 0.0);
    d.p_x2_given_v2.assign(static_cast<size_t>(d.n_v2) * ch.n_x2, 0.0);

    std::vector<RowSlot> slots;
    slots.push_back({d.p_u.data(), d.n_u});
    for (int u = 0; u < d.n_u; ++u)
      slots.push_back({d.p_v_given_u.data() + static_cast<size_t>(u) * d.n_v, d.n_v});
    for (int uv = 0; uv < d.n_u * d.n_v; ++uv) {
      slots.push_back({d.p_v1_given_vu.data() + static_cast<size_t>(uv) * d.n_v1, d.n_v1});
      slots.push_back({d.p_v2_given_vu.data() + static_cast<size_t>(uv) * d.n_v2, d.n_v2});
    }
    if (cfg.identity_inputs) {
      if (d.n_v1 != ch.n_x1 || d.n_v2 != ch.n_x2)
        throw std::invalid_argument(
            "enumerate_frontier: identity inputs need matching cardinalities");
      for (int v1 = 0; v1 < d.n_v1; ++v1)
        d.p_x1_given_v1[static_cast<size_t>(v1) * ch.n_x1 + v1] = 1.0;
      for (int v2 = 0; v2 < d.n_v2; ++v2)
        d.p_x2_given_v2[static_cast<size_t>(v2) * ch.n_x2 + v2] = 1.0;
    } else {
      for (int v1 = 0; v1 < d.n_v1; ++v1)
        slots.push_back(
            {d.p_x1_given_v1.data() + static_cast<size_t>(v1) * ch.n_x1, ch.n_x1});
      for (int v2 = 0; v2 < d.n_v2; ++v2)
        slots.push_back(
            {d.p_x2_given_v2.data() + static_cast<size_t>(v2) * ch.n_x2, ch.n_x2});
    }

    out.lattice_size = sweep_rows(slots, cfg.grid.denominator, cfg.grid.budget,
                                  [&] { pts.push_back(inner_bound_point(d, ch, cfg.c12)); });
  } else {
    OuterAuxDistribution d;
    d.n_u = cfg.cards.n_u;
    d.n_v1 = cfg.cards.n_v1;
    d.n_v2 = cfg.cards.n_v2;
    d.p_u.assign(d.n_u, 0.0);
    d.p_v1v2_given_u.assign(static_cast<size_t>(d.n_u) * d.n_v1 * d.n_v2, 0.0);
    d.p_x1x2_given_v1v2.assign(
        static_cast<size_t>(d.n_v1) * d.n_v2 * ch.n_x1 * ch.n_x2, 0.0);

    std::vector<RowSlot> slots;
    slots.push_back({d.p_u.data(), d.n_u});
    for (int u = 0; u < d.n_u; ++u)
      slots.push_back({d.p_v1v2_given_u.data() + static_cast<size_t>(u) * d.n_v1 * d.n_v2,
                       d.n_v1 * d.n_v2});
    if (cfg.identity_inputs) {
      if (d.n_v1 != ch.n_x1 || d.n_v2 != ch.n_x2)
        throw std::invalid_argument(
            "enumerate_frontier: identity inputs need matching cardinalities");
      for (int v1 = 0; v1 < d.n_v1; ++v1)
        for (int v2 = 0; v2 < d.n_v2; ++v2) {
          size_t row = (static_cast<size_t>(v1) * d.n_v2 + v2) * ch.n_x1 * ch.n_x2;
          d.p_x1x2_given_v1v2[row + static_cast<size_t>(v1) * ch.n_x2 + v2] = 1.0;
        }
    } else {
      for (int vv = 0; vv < d.n_v1 * d.n_v2; ++vv)
        slots.push_back(
            {d.p_x1x2_given_v1v2.data() + static_cast<size_t>(vv) * ch.n_x1 * ch.n_x2,
             ch.n_x1 * ch.n_x2});
    }

    out.lattice_size = sweep_rows(slots, cfg.grid.denominator, cfg.grid.budget,
                                  [&] { pts.push_back(outer_bound_point(d, ch, cfg.c12)); });
  }

  out.pareto = pareto_filter(std::move(pts));
  if (cfg.kind == BoundKind::inner) out.hull = upper_envelope(out.pareto);
  return out;
}

WynerCheckResult wyner_reduction_check(double main_crossover, double cascade_crossover,
                                       const SimplexGrid& search) {
  DiscreteMemorylessChannel ch = degraded_binary_wiretap(main_crossover, cascade_crossover);
  FrontierConfig cfg;
  cfg.kind = BoundKind::outer;
  cfg.c12 = 0.0;
  cfg.cards = {1, 1, 2, 1};
  cfg.grid = search;
  FrontierResult fr = enumerate_frontier(ch, cfg);

  WynerCheckResult res;
  for (const auto& p : fr.pareto) res.computed = std::max(res.computed, p.re);
  double eff = main_crossover * (1.0 - cascade_crossover) +
               (1.0 - main_crossover) * cascade_crossover;
  res.oracle = binary_entropy(eff) - binary_entropy(main_crossover);
  return res;
}

}  // namespace secmac
