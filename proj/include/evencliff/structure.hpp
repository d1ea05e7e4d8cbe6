#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "evencliff/clifford.hpp"
#include "evencliff/matrix.hpp"

namespace evencliff {

/// Either a single multiplicity m (r ≢ 0 mod 4) or a pair (m1, m2) (r ≡ 0 mod 4).
class Multiplicities {
 public:
  static Multiplicities single(long m);
  static Multiplicities pair(long m1, long m2);

  bool is_pair() const { return pair_; }
  long m() const;  ///< throws std::logic_error on a pair
  long m1() const { return m1_; }
  long m2() const { return m2_; }
  long total() const { return m1_ + m2_; }

  std::string to_string() const;  ///< "m" or "m1,m2"
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;

 private:
  Multiplicities(bool pair, long m1, long m2) : pair_(pair), m1_(m1), m2_(m2) {}
  bool pair_;
  long m1_;
  long m2_;
};

/// Throws std::invalid_argument unless `mult` fits the rank class of r
/// (single m ≥ 1 for r ≢ 0 mod 4; pair of non-negatives, not both zero, otherwise).
void require_compatible(int r, const Multiplicities& mult);

/// N = d_r · (total multiplicity).
std::size_t ambient_dimension(int r, const Multiplicities& mult);

/// Dimension of the image of spin(r) in so(N): C(r,2), except 3 for r = 4 with
/// one zero multiplicity, where spin(4) = sp(1) ⊕ sp(1) acts through one factor.
std::size_t spin_image_dim(int r, const Multiplicities& mult);

class EvenCliffordStructure {
 public:
  /// Shapes are checked; algebraic identities are left to verify().
  EvenCliffordStructure(int r, Multiplicities mult, std::vector<Matrix> j);

  int rank() const { return r_; }
  const Multiplicities& mult() const { return mult_; }
  std::size_t dim() const { return n_; }
  const std::vector<Matrix>& generators() const { return j_; }
  Matrix generator(int i, int j) const;

  /// Copy with the generator for bivector b replaced.
  EvenCliffordStructure with_generator(Bivector b, Matrix replacement) const;

 private:
  int r_;
  Multiplicities mult_;
  std::size_t n_;
  std::vector<Matrix> j_;
};

/// J_ij = K_ij ⊗ I_m, or blockdiag(K⁺_ij ⊗ I_{m1}, K⁻_ij ⊗ I_{m2}) when r ≡ 0 (mod 4).
EvenCliffordStructure build(int r, const Multiplicities& mult);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs, in order: antisymmetry, square = −I, bracket table against the
/// symbolic Clifford product, and dim span{J_ij} = spin_image_dim.
VerifyReport verify(const EvenCliffordStructure& s);

/// J±_12 = ±(J_14 ± J_23)/2, J±_31 = ±(J_13 ∓ J_24)/2, J±_23 = ±(J_12 ± J_34)/2.
struct QuaternionicSplit {
  std::array<Matrix, 3> plus;   ///< J⁺_12, J⁺_31, J⁺_23
  std::array<Matrix, 3> minus;  ///< J⁻_12, J⁻_31, J⁻_23
  std::array<std::size_t, 2> block_offset;
  std::array<std::size_t, 2> block_size;
  std::size_t plus_support;   ///< block (0 or 1) on which the J⁺ live
  std::size_t minus_support;  ///< block on which the J⁻ live
};

/// Requires r = 4 and both multiplicities positive; throws std::invalid_argument otherwise.
QuaternionicSplit r4_quaternionic_split(const EvenCliffordStructure& s);

}  // namespace evencliff
