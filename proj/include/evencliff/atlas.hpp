#pragma once

#include <string>
#include <vector>

#include "evencliff/bounds.hpp"
#include "evencliff/structure.hpp"

namespace evencliff {

enum class Family { Flat, Compact, Noncompact, Mixed };

std::string to_string(Family f);

// Closed-form group dimensions.
constexpr Dim dim_so(Dim n) { return choose2(n); }
constexpr Dim dim_su(Dim n) { return n * n - 1; }
constexpr Dim dim_sp(Dim n) { return n * (2 * n + 1); }
constexpr Dim kDimF4 = 52;
constexpr Dim kDimE6 = 78;
constexpr Dim kDimE7 = 133;
constexpr Dim kDimE8 = 248;

struct SymmetricSpaceModel {
  int r = 0;
  std::string name;
  Family family = Family::Flat;
  Multiplicities mult = Multiplicities::single(1);
  Dim dim_M = 0;
  Dim dim_G = 0;
  /// Set on r = 4 products with a flat or trivial factor; those mixes are
  /// admitted by the product rule but not spelled out in the classification.
  bool flagged = false;
  std::string note;
  /// The two factors of an r = 4 product (each an r = 3 model or a point).
  std::vector<SymmetricSpaceModel> factors;
};

/// Flat model first, then the curved models matching (r, mult). Requires r ≥ 3.
std::vector<SymmetricSpaceModel> models_for(int r, const Multiplicities& mult);

struct CrossCheckReport {
  std::string model;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// dim_M = N and dim_G against the bound, plus additivity for r = 4 products.
/// For r = 4 with a zero multiplicity spin(4) acts through one sp(1), so the
/// attainable value is d_max − 3; that correction is applied and noted.
CrossCheckReport cross_check(const SymmetricSpaceModel& m);

/// Every curved family for parameters k in [1, max_k], plus the exceptional rows.
/// r = 4 products use 1 ≤ m1, m2 ≤ max_k.
std::vector<SymmetricSpaceModel> catalog(int max_k = 2);

/// Fixed-width table, one row per model.
std::string format_catalog_table(const std::vector<SymmetricSpaceModel>& models);

}  // namespace evencliff
