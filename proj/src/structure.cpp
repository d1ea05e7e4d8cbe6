#include "evencliff/structure.hpp"

#include <stdexcept>

#include "evencliff/linalg.hpp"

namespace evencliff {

Multiplicities Multiplicities::single(long m) { return Multiplicities(false, m, 0); }

Multiplicities Multiplicities::pair(long m1, long m2) { return Multiplicities(true, m1, m2); }

long Multiplicities::m() const {
  if (pair_) throw std::logic_error("Multiplicities::m() on a pair");
  return m1_;
}

std::string Multiplicities::to_string() const {
  return pair_ ? std::to_string(m1_) + "," + std::to_string(m2_) : std::to_string(m1_);
}

void require_compatible(int r, const Multiplicities& mult) {
  if (r < 2) throw std::invalid_argument("rank must be at least 2, got " + std::to_string(r));
  const bool split = r % 4 == 0;
  if (split && !mult.is_pair())
    throw std::invalid_argument("rank " + std::to_string(r) +
                                " is 0 mod 4 (two inequivalent half-spin modules): expected multiplicities m1,m2");
  if (!split && mult.is_pair())
    throw std::invalid_argument("rank " + std::to_string(r) + " is " + std::to_string(r % 4) +
                                " mod 4 (one irreducible module): expected a single multiplicity m");
  if (split) {
    if (mult.m1() < 0 || mult.m2() < 0 || mult.total() == 0)
      throw std::invalid_argument("multiplicities m1,m2 must be non-negative and not both zero");
  } else if (mult.m() < 1) {
    throw std::invalid_argument("multiplicity m must be at least 1");
  }
}

std::size_t ambient_dimension(int r, const Multiplicities& mult) {
  require_compatible(r, mult);
  return irrep_info(r).d * static_cast<std::size_t>(mult.total());
}

std::size_t spin_image_dim(int r, const Multiplicities& mult) {
  require_compatible(r, mult);
  if (r == 4 && (mult.m1() == 0 || mult.m2() == 0)) return 3;
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1) / 2;
}

EvenCliffordStructure::EvenCliffordStructure(int r, Multiplicities mult, std::vector<Matrix> j)
    : r_(r), mult_(mult), n_(ambient_dimension(r, mult)), j_(std::move(j)) {
  if (j_.size() != bivectors(r_).size())
    throw std::invalid_argument("EvenCliffordStructure: expected " + std::to_string(bivectors(r_).size()) +
                                " generators, got " + std::to_string(j_.size()));
  for (const auto& m : j_)
    if (m.rows() != n_ || m.cols() != n_)
      throw std::invalid_argument("EvenCliffordStructure: generator is not " + std::to_string(n_) + "x" +
                                  std::to_string(n_));
}

Matrix EvenCliffordStructure::generator(int i, int j) const {
  if (i == j) throw std::invalid_argument("generator: i == j");
  if (i < j) return j_[bivector_index(r_, {i, j})];
  return -j_[bivector_index(r_, {j, i})];
}

EvenCliffordStructure EvenCliffordStructure::with_generator(Bivector b, Matrix replacement) const {
  std::vector<Matrix> j = j_;
  j[bivector_index(r_, b)] = std::move(replacement);
  return EvenCliffordStructure(r_, mult_, std::move(j));
}

EvenCliffordStructure build(int r, const Multiplicities& mult) {
  require_compatible(r, mult);
  const std::vector<GammaSet> irreps = build_even_generators(r);
  std::vector<Matrix> j;
  if (!mult.is_pair()) {
    const Matrix id = Matrix::identity(static_cast<std::size_t>(mult.m()));
    for (const auto& k : irreps.front().generators()) j.push_back(kron(k, id));
  } else {
    const Matrix id1 = Matrix::identity(static_cast<std::size_t>(mult.m1()));
    const Matrix id2 = Matrix::identity(static_cast<std::size_t>(mult.m2()));
    const auto& plus = irreps.at(0).generators();
    const auto& minus = irreps.at(1).generators();
    for (std::size_t b = 0; b < plus.size(); ++b) j.push_back(block_diag(kron(plus[b], id1), kron(minus[b], id2)));
  }
  return EvenCliffordStructure(r, mult, std::move(j));
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

VerifyReport verify(const EvenCliffordStructure& s) {
  const int r = s.rank();
  const auto bivs = bivectors(r);
  const auto& j = s.generators();
  auto label = [](Bivector b) { return "J_" + std::to_string(b.i) + std::to_string(b.j); };
  VerifyReport report;

  CheckResult antisym{"antisymmetric", true, ""};
  for (std::size_t k = 0; k < j.size(); ++k)
    if (!j[k].is_antisymmetric()) {
      antisym.passed = false;
      antisym.detail += (antisym.detail.empty() ? "" : " ") + label(bivs[k]);
    }
  if (antisym.passed) antisym.detail = std::to_string(j.size()) + " generators";
  report.checks.push_back(antisym);

  CheckResult square{"square_is_minus_identity", true, ""};
  const Matrix minus_id = -Matrix::identity(s.dim());
  for (std::size_t k = 0; k < j.size(); ++k)
    if (!(j[k] * j[k] == minus_id)) {
      square.passed = false;
      square.detail += (square.detail.empty() ? "" : " ") + label(bivs[k]);
    }
  if (square.passed) square.detail = std::to_string(j.size()) + " generators";
  report.checks.push_back(square);

  CheckResult bracket{"bracket_table", true, ""};
  std::size_t failures = 0, pairs = 0;
  for (std::size_t a = 0; a < bivs.size(); ++a)
    for (std::size_t b = a + 1; b < bivs.size(); ++b, ++pairs) {
      const BivectorBracket sym = bivector_bracket(bivs[a], bivs[b], r);
      const Matrix actual = commutator(j[a], j[b]);
      const bool ok = sym.zero ? actual.is_zero()
                               : actual == Rational(sym.coefficient) * j[bivector_index(r, sym.result)];
      if (!ok && failures++ < 4)
        bracket.detail += "[" + label(bivs[a]) + "," + label(bivs[b]) + "] ";
    }
  bracket.passed = failures == 0;
  bracket.detail = bracket.passed ? std::to_string(pairs) + " pairs"
                                  : std::to_string(failures) + " of " + std::to_string(pairs) +
                                        " pairs disagree: " + bracket.detail;
  report.checks.push_back(bracket);

  const std::size_t expected = spin_image_dim(r, s.mult());
  const std::size_t actual = span_dim(j);
  report.checks.push_back({"span_dimension", actual == expected,
                           "dim span = " + std::to_string(actual) + ", expected " + std::to_string(expected)});
  return report;
}

QuaternionicSplit r4_quaternionic_split(const EvenCliffordStructure& s) {
  if (s.rank() != 4) throw std::invalid_argument("r4_quaternionic_split: rank must be 4");
  if (s.mult().m1() == 0 || s.mult().m2() == 0)
    throw std::invalid_argument("r4_quaternionic_split: both multiplicities must be positive");
  const Rational half(1, 2);
  auto J = [&](int i, int j) { return s.generator(i, j); };
  QuaternionicSplit out{
      {half * (J(1, 4) + J(2, 3)), half * (J(1, 3) - J(2, 4)), half * (J(1, 2) + J(3, 4))},
      {-(half * (J(1, 4) - J(2, 3))), -(half * (J(1, 3) + J(2, 4))), -(half * (J(1, 2) - J(3, 4)))},
      {0, 0},
      {0, 0},
      0,
      0};
  const std::size_t d = irrep_info(4).d;
  out.block_size = {d * static_cast<std::size_t>(s.mult().m1()), d * static_cast<std::size_t>(s.mult().m2())};
  out.block_offset = {0, out.block_size[0]};

  auto support = [&](const std::array<Matrix, 3>& triple) {
    std::size_t found = 2;
    for (std::size_t blk = 0; blk < 2; ++blk) {
      bool vanishes = true;
      for (const auto& m : triple) vanishes = vanishes && m.block(out.block_offset[blk], out.block_size[blk]).is_zero();
      if (!vanishes) {
        if (found != 2) throw std::logic_error("r4_quaternionic_split: triple is supported on both blocks");
        found = blk;
      }
    }
    if (found == 2) throw std::logic_error("r4_quaternionic_split: triple vanishes identically");
    return found;
  };
  out.plus_support = support(out.plus);
  out.minus_support = support(out.minus);
  return out;
}

}  // namespace evencliff
