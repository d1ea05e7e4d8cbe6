#include "evencliff/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace evencliff {

namespace {

void require_bounds_input(int r, const Multiplicities& mult) {
  if (r < 3) throw std::invalid_argument("bounds are defined for rank r >= 3, got " + std::to_string(r));
  require_compatible(r, mult);
}

Dim n_of(int r, const Multiplicities& mult) {
  return static_cast<Dim>(irrep_info(r).d) * static_cast<Dim>(mult.total());
}

}  // namespace

Dim d_C(int r, const Multiplicities& mult) {
  require_bounds_input(r, mult);
  // so(m1)+so(m2), so(m), u(m), sp(m), sp(m1)+sp(m2)
  switch (r % 8) {
    case 0: return choose2(mult.m1()) + choose2(mult.m2());
    case 1: case 7: return choose2(mult.m());
    case 2: case 6: return static_cast<Dim>(mult.m()) * mult.m();
    case 3: case 5: return static_cast<Dim>(mult.m()) * (2 * mult.m() + 1);
    default: return static_cast<Dim>(mult.m1()) * (2 * mult.m1() + 1) + static_cast<Dim>(mult.m2()) * (2 * mult.m2() + 1);
  }
}

Dim d_max(int r, const Multiplicities& mult) {
  require_bounds_input(r, mult);
  const Dim spin = choose2(r);
  const Dim n = n_of(r, mult);
  switch (r % 8) {
    case 0: return choose2(mult.m1()) + choose2(mult.m2()) + spin + n;
    case 1: case 7: return choose2(mult.m()) + spin + n;
    case 2: case 6: return static_cast<Dim>(mult.m()) * mult.m() + spin + n;
    case 3: case 5: return choose2(2 * static_cast<Dim>(mult.m()) + 1) + spin + n;
    default: return choose2(2 * static_cast<Dim>(mult.m1()) + 1) + choose2(2 * static_cast<Dim>(mult.m2()) + 1) + spin + n;
  }
}

Dim gap_threshold(int r, const Multiplicities& mult) { return d_max(r, mult) - choose2(r); }

std::optional<Dim> d_M(int r, const Multiplicities& mult) {
  require_bounds_input(r, mult);
  switch (r % 8) {
    case 0: {
      const Dim m1 = mult.m1(), m2 = mult.m2();
      return std::max(choose2(m1 - 1) + choose2(m2), choose2(m1) + choose2(m2 - 1));
    }
    case 1: case 7: return choose2(mult.m() - 1);
    case 3: case 5: return choose2(2 * mult.m() - 1) + 3;
    case 4: {
      const Dim m1 = mult.m1(), m2 = mult.m2();
      return std::max(choose2(2 * m1 - 1) + 3 + choose2(2 * m2 + 1), choose2(2 * m1 + 1) + choose2(2 * m2 - 1) + 3);
    }
    default: return std::nullopt;  // r ≡ ±2: the u(m) case is not covered
  }
}

Rational constraint_threshold(int r) {
  const Rational c(choose2(r));
  switch (r % 8) {
    case 0: case 1: case 7: return c + 1;
    case 2: case 6: return c / 2 + Rational(1, 2);
    default: return c / 4 + 1;  // r ≡ 3, 4, 5
  }
}

bool requires_even_multiplicity(int r) {
  const int m8 = r % 8;
  return m8 == 0 || m8 == 1 || m8 == 7 || m8 == 2 || m8 == 6;
}

bool constraints_ok(int r, const Multiplicities& mult) {
  require_bounds_input(r, mult);
  const long smallest = mult.is_pair() ? std::min(mult.m1(), mult.m2()) : mult.m();
  if (!(Rational(smallest) > constraint_threshold(r))) return false;
  if (!requires_even_multiplicity(r)) return true;
  if (mult.is_pair()) return mult.m1() % 2 == 0 && mult.m2() % 2 == 0;
  return mult.m() % 2 == 0;
}

bool gap_inequality_holds(int r, const Multiplicities& mult) {
  const auto dm = d_M(r, mult);
  if (!dm) throw std::domain_error("d_M is undefined for rank class r = " + std::to_string(r % 8) + " mod 8");
  return d_C(r, mult) > *dm + choose2(r);
}

BoundsReport bounds_report(int r, const Multiplicities& mult) {
  require_bounds_input(r, mult);
  BoundsReport rep;
  rep.r = r;
  rep.mult = mult;
  rep.n = n_of(r, mult);
  rep.d_max = d_max(r, mult);
  rep.d_C = d_C(r, mult);
  rep.d_M = d_M(r, mult);
  if (!rep.d_M) rep.d_M_reason = "undefined for this rank class (r = " + std::to_string(r % 8) + " mod 8)";
  rep.gap_threshold = gap_threshold(r, mult);
  rep.constraint_threshold = constraint_threshold(r);
  rep.constraints_ok = constraints_ok(r, mult);
  if (rep.d_M) rep.gap_inequality_ok = gap_inequality_holds(r, mult);
  return rep;
}

}  // namespace evencliff
