#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "evencliff/rational.hpp"
#include "evencliff/structure.hpp"

namespace evencliff {

using Dim = std::int64_t;

/// n(n−1)/2, and 0 for every n ≤ 1 (including negative n).
constexpr Dim choose2(Dim n) { return n <= 1 ? 0 : n * (n - 1) / 2; }

/// Upper bound on dim Aut(M) for a rank-r structure with these multiplicities.
Dim d_max(int r, const Multiplicities& mult);

/// d_max − C(r,2).
Dim gap_threshold(int r, const Multiplicities& mult);

/// Dimension of the centralizer of spin(r) in so(N).
Dim d_C(int r, const Multiplicities& mult);

/// Largest proper maximal subalgebra of the centralizer; nullopt for r ≡ ±2 (mod 8).
std::optional<Dim> d_M(int r, const Multiplicities& mult);

/// The strict lower bound the (smaller) multiplicity must exceed.
Rational constraint_threshold(int r);

/// Whether the multiplicities must be even for the gap statement.
bool requires_even_multiplicity(int r);

/// The multiplicity constraints under which the gap statement applies. The
/// "m1 ≥ m2 > t or m2 ≥ m1 > t" form is evaluated as min(m1, m2) > t.
bool constraints_ok(int r, const Multiplicities& mult);

/// d_C > d_M + C(r,2). Throws std::domain_error when d_M is undefined.
bool gap_inequality_holds(int r, const Multiplicities& mult);

struct BoundsReport {
  int r = 0;
  Multiplicities mult = Multiplicities::single(1);
  Dim n = 0;
  Dim d_max = 0;
  Dim d_C = 0;
  std::optional<Dim> d_M;
  std::string d_M_reason;  ///< set when d_M is undefined
  Dim gap_threshold = 0;
  Rational constraint_threshold;
  bool constraints_ok = false;
  std::optional<bool> gap_inequality_ok;
};

/// Requires r ≥ 3 and compatible multiplicities (std::invalid_argument otherwise).
BoundsReport bounds_report(int r, const Multiplicities& mult);

}  // namespace evencliff
