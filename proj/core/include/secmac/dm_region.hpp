#ifndef SECMAC_DM_REGION_HPP
#define SECMAC_DM_REGION_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secmac {

/// Dense joint probability table over a tuple of finite-alphabet variables.
/// Flat storage, row-major with the last variable fastest.
struct JointTable {
  std::vector<int> dims;
  std::vector<double> p;

  JointTable() = default;
  explicit JointTable(std::vector<int> d);

  size_t size() const { return p.size(); }
  double total() const;
};

/// Marginal over the (sorted, distinct) variable subset `vars`.
JointTable marginal(const JointTable& joint, std::span<const int> vars);

/// Shannon entropy of a table, bits; 0*log(0) := 0.
double entropy_bits(const JointTable& t);

/// I(A;B|C) in bits from the joint, via entropy combination on marginals.
/// Clamped to 0 from above -1e-12 rounding. Throws on overlapping sets.
double conditional_mi(const JointTable& joint, std::span<const int> a,
                      std::span<const int> b, std::span<const int> c = {});

/// p(y,z|x1,x2) on finite alphabets. law is flat [x1][x2][y][z].
struct DiscreteMemorylessChannel {
  int n_x1 = 1, n_x2 = 1, n_y = 1, n_z = 1;
  std::vector<double> law;

  double at(int x1, int x2, int y, int z) const {
    return law[((static_cast<size_t>(x1) * n_x2 + x2) * n_y + y) * n_z + z];
  }
  void validate() const;  // every row p(.,.|x1,x2) sums to 1 within 1e-12
};

/// Binary wiretap channel: Y = BSC(main) applied to X1, Z = BSC(cascade)
/// applied to Y. X2 is unary (no helper input).
DiscreteMemorylessChannel degraded_binary_wiretap(double main_crossover,
                                                  double cascade_crossover);

/// Factorization p(u) p(v|u) p(v1|v,u) p(v2|v,u) p(x1|v1) p(x2|v2).
struct InnerAuxDistribution {
  int n_u = 1, n_v = 1, n_v1 = 1, n_v2 = 1;
  std::vector<double> p_u;            // [u]
  std::vector<double> p_v_given_u;    // [u][v]
  std::vector<double> p_v1_given_vu;  // [u][v][v1]
  std::vector<double> p_v2_given_vu;  // [u][v][v2]
  std::vector<double> p_x1_given_v1;  // [v1][x1]
  std::vector<double> p_x2_given_v2;  // [v2][x2]

  void validate(const DiscreteMemorylessChannel& ch) const;
};

/// Markov chain U -- (V1,V2) -- (X1,X2); the input table is a full joint.
struct OuterAuxDistribution {
  int n_u = 1, n_v1 = 1, n_v2 = 1;
  std::vector<double> p_u;               // [u]
  std::vector<double> p_v1v2_given_u;    // [u][v1][v2]
  std::vector<double> p_x1x2_given_v1v2; // [v1][v2][x1][x2]

  void validate(const DiscreteMemorylessChannel& ch) const;
};

struct RateEquivocationPoint {
  double r = 0.0;
  double re = 0.0;
};

// Variable indices in the joints built by joint_law.
namespace inner_var {
inline constexpr int U = 0, V = 1, V1 = 2, V2 = 3, X1 = 4, X2 = 5, Y = 6, Z = 7;
}
namespace outer_var {
inline constexpr int U = 0, V1 = 1, V2 = 2, X1 = 3, X2 = 4, Y = 5, Z = 6;
}

JointTable joint_law(const InnerAuxDistribution& dist, const DiscreteMemorylessChannel& ch);
JointTable joint_law(const OuterAuxDistribution& dist, const DiscreteMemorylessChannel& ch);

/// Pareto corner of the achievable rectangle-with-cap for one distribution.
RateEquivocationPoint inner_bound_point(const InnerAuxDistribution& dist,
                                        const DiscreteMemorylessChannel& ch, double c12);

RateEquivocationPoint outer_bound_point(const OuterAuxDistribution& dist,
                                        const DiscreteMemorylessChannel& ch, double c12);

struct BudgetExceededError : std::runtime_error {
  explicit BudgetExceededError(unsigned long long size)
      : std::runtime_error("distribution lattice size " + std::to_string(size) +
                           " exceeds the evaluation budget"),
        lattice_size(size) {}
  unsigned long long lattice_size;
};

/// Simplex lattice search settings: each free probability row is enumerated
/// on the grid with entries k/denominator.
struct SimplexGrid {
  int denominator = 8;
  unsigned long long budget = 50'000'000ULL;
};

struct DmCardinalities {
  int n_u = 1, n_v = 1, n_v1 = 2, n_v2 = 2;
};

/// Zero-conference, no-prefix achievable secrecy rate (max over factorized
/// p(v1)p(v2)p(x1|v1)p(x2|v2) on the lattice); a certified lower bound.
double wthi_lower_bound(const DiscreteMemorylessChannel& ch, const SimplexGrid& search,
                        int n_v1, int n_v2);

enum class BoundKind { inner, outer };

struct FrontierConfig {
  BoundKind kind = BoundKind::inner;
  double c12 = 0.0;
  DmCardinalities cards;
  SimplexGrid grid;
  // Fix the channel-input tables to identity maps instead of sweeping them
  // (requires matching cardinalities: v1 == x1, v2 == x2 for inner;
  //  v1*v2 == x1*x2 for outer).
  bool identity_inputs = false;
};

struct FrontierResult {
  std::vector<RateEquivocationPoint> pareto;  // nondominated, r ascending
  std::vector<RateEquivocationPoint> hull;    // upper concave envelope (inner)
  unsigned long long lattice_size = 0;
};

FrontierResult enumerate_frontier(const DiscreteMemorylessChannel& ch,
                                  const FrontierConfig& cfg);

struct WynerCheckResult {
  double computed = 0.0;  // max re over the outer lattice, X2 unary, c12 = 0
  double oracle = 0.0;    // closed-form degraded-wiretap secrecy capacity
};

WynerCheckResult wyner_reduction_check(double main_crossover, double cascade_crossover,
                                       const SimplexGrid& search);

}  // namespace secmac

#endif
