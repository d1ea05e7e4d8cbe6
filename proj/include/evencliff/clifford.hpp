#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evencliff/matrix.hpp"

namespace evencliff {

enum class FieldType { Real, Complex, Quaternionic };

std::string to_string(FieldType f);

/// Real dimension of the commutant of an irreducible module of this type.
constexpr int field_dimension(FieldType f) {
  return f == FieldType::Real ? 1 : (f == FieldType::Complex ? 2 : 4);
}

struct IrrepInfo {
  int r;
  std::size_t d;  ///< dimension of an irreducible real Cl⁰_r module
  int v;          ///< number of inequivalent irreducibles (1 or 2)
  FieldType field;
};

/// Throws std::invalid_argument for r < 2.
IrrepInfo irrep_info(int r);

/// Ranks up to this value are constructible by default.
inline constexpr int kDefaultMaxRank = 16;

/// Generator pair (i, j), 1 ≤ i < j ≤ r.
struct Bivector {
  int i;
  int j;
  friend auto operator<=>(const Bivector&, const Bivector&) = default;
};

/// All bivectors of rank r in lexicographic order.
std::vector<Bivector> bivectors(int r);

/// Position of (i, j), i < j, in bivectors(r).
std::size_t bivector_index(int r, Bivector b);

/// ±e_{i1}e_{i2}⋯ with strictly increasing indices; the empty set is the scalar ±1.
struct CliffordMonomial {
  std::vector<int> index_set;
  int sign = 1;
  friend bool operator==(const CliffordMonomial&, const CliffordMonomial&) = default;
};

/// Product under e_j e_k + e_k e_j = −2δ_jk: sort by adjacent transpositions, cancel e_i² = −1.
CliffordMonomial clifford_product(const CliffordMonomial& a, const CliffordMonomial& b, int r);

/// Symbolic bracket of two bivectors, expanded in the bivector basis.
struct BivectorBracket {
  bool zero = true;
  Bivector result{0, 0};
  int coefficient = 0;  ///< ±2 when nonzero
};
BivectorBracket bivector_bracket(Bivector a, Bivector b, int r);

enum class HalfLabel { Plus, Minus };

/**
 * Images K_ij of the bivectors e_ie_j in one irreducible Cl⁰_r module.
 * Every K_ij is an antisymmetric signed permutation with K_ij² = −I.
 */
class GammaSet {
 public:
  GammaSet(int r, std::size_t dim, std::vector<Matrix> generators,
           std::optional<HalfLabel> half = std::nullopt);

  int rank() const { return r_; }
  std::size_t dim() const { return dim_; }
  std::optional<HalfLabel> half() const { return half_; }

  /// Stored generators in bivectors(r) order.
  const std::vector<Matrix>& generators() const { return gens_; }

  /// K_ij for i < j; K_ji = −K_ij; i == j is rejected.
  Matrix generator(int i, int j) const;

 private:
  int r_;
  std::size_t dim_;
  std::vector<Matrix> gens_;
  std::optional<HalfLabel> half_;
};

/// n mutually anticommuting antisymmetric signed-permutation matrices squaring to −I,
/// of the size of an irreducible Cl_n module (n ≥ 1).
std::vector<Matrix> clifford_generators(int n);

/// The irreducible Cl⁰_r module(s): one GammaSet, or {Plus, Minus} when r ≡ 0 (mod 4).
/// Plus is the half on which ω = K_12 K_34 ⋯ K_{r−1,r} acts as +I.
std::vector<GammaSet> build_even_generators(int r, int max_rank = kDefaultMaxRank);

/// ω = K_12 K_34 ⋯ K_{r−1,r} on the module of g (r even).
Matrix volume_element(const GammaSet& g);

/// Dimension of {X ∈ gl(d) : X K_ij = K_ij X for all i < j}.
std::size_t commutant_dimension(const GammaSet& g);

/// Commutant dimension, certified against the field type of irrep_info(r);
/// throws std::logic_error on disagreement.
int schur_check(const GammaSet& g);

/// Dimension of {X : X A_ij = B_ij X for all i < j} (intertwiners from A to B).
std::size_t intertwiner_dimension(const GammaSet& a, const GammaSet& b);

}  // namespace evencliff
