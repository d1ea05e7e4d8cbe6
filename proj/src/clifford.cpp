#include "evencliff/clifford.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string_view>

#include "evencliff/constraint_system.hpp"
#include "evencliff/linalg.hpp"
#include "evencliff/sparse_echelon.hpp"

namespace evencliff {

namespace {

// Maximal sets of anticommuting tensor words over {I, J, P, Q}; a word with an
// odd number of J factors is antisymmetric and squares to −I, and two words
// anticommute iff they differ (with neither factor I) in an odd number of slots.
constexpr std::array<std::string_view, 1> kWords2 = {"J"};
constexpr std::array<std::string_view, 3> kWords4 = {"IJ", "JP", "JQ"};
constexpr std::array<std::string_view, 7> kWords8 = {"IIJ", "IJP", "JIQ", "JPP", "JQP", "PJQ", "QJQ"};
constexpr std::array<std::string_view, 8> kWords16 = {"IIIJ", "IIJP", "IJIQ", "IJPP",
                                                      "IJQP", "IPJQ", "PQJQ", "QQJQ"};

Matrix letter(char c) {
  switch (c) {
    case 'I': return Matrix::from_rows({{1, 0}, {0, 1}}, Storage::Sparse);
    case 'J': return Matrix::from_rows({{0, -1}, {1, 0}}, Storage::Sparse);
    case 'P': return Matrix::from_rows({{1, 0}, {0, -1}}, Storage::Sparse);
    case 'Q': return Matrix::from_rows({{0, 1}, {1, 0}}, Storage::Sparse);
  }
  throw std::logic_error("unknown tensor letter");
}

Matrix word_matrix(std::string_view word) {
  Matrix m = letter(word.front());
  for (char c : word.substr(1)) m = kron(m, letter(c));
  return m;
}

template <std::size_t N>
std::vector<Matrix> from_words(const std::array<std::string_view, N>& words, int count) {
  std::vector<Matrix> out;
  for (int k = 0; k < count; ++k) out.push_back(word_matrix(words[static_cast<std::size_t>(k)]));
  return out;
}

bool is_signed_permutation(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t count = 0;
    bool unit = true;
    m.for_each_in_row(i, [&](std::size_t, const Rational& v) {
      ++count;
      unit = unit && (v == 1 || v == -1);
    });
    if (count != 1 || !unit) return false;
  }
  return true;
}

struct UnitEntry {
  std::size_t col;
  int value;
};

// Rows of a signed-permutation-like matrix as small integers.
std::vector<std::vector<UnitEntry>> unit_rows(const Matrix& m) {
  std::vector<std::vector<UnitEntry>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    m.for_each_in_row(i, [&](std::size_t j, const Rational& v) {
      rows[i].push_back({j, static_cast<int>(v.get_num().get_si())});
    });
  return rows;
}

// dim {X : X·A_k = B_k·X for all k}, X a full d×d matrix.
std::size_t twisted_commutant_dimension(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
                                        std::size_t d) {
  using Term = SparseTerm<Rational>;
  std::vector<std::vector<std::vector<UnitEntry>>> a_cols, b_rows;
  for (const auto& m : a) a_cols.push_back(unit_rows(m.transpose()));
  for (const auto& m : b) b_rows.push_back(unit_rows(m));
  ConstraintSystem<ExactField> system(d * d, 0);
  auto result = system.solve(
      [&](const auto& emit) {
        std::vector<Term> terms;
        for (std::size_t k = 0; k < a.size(); ++k)
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
              terms.clear();
              // (X A)_{rc} = Σ_s X_{rs} A_{sc};  (B X)_{rc} = Σ_s B_{rs} X_{sc}
              for (const auto& e : a_cols[k][c]) terms.push_back({r * d + e.col, Rational(e.value)});
              for (const auto& e : b_rows[k][r]) terms.push_back({e.col * d + c, Rational(-e.value)});
              emit(terms, {});
            }
      },
      false);
  return result.nullity;
}

}  // namespace

std::string to_string(FieldType f) {
  switch (f) {
    case FieldType::Real: return "Real";
    case FieldType::Complex: return "Complex";
    case FieldType::Quaternionic: return "Quaternionic";
  }
  return "?";
}

IrrepInfo irrep_info(int r) {
  if (r < 2) throw std::invalid_argument("irrep_info: rank must be at least 2, got " + std::to_string(r));
  if (r > 62) throw std::invalid_argument("irrep_info: rank " + std::to_string(r) + " too large");
  const int m8 = r % 8;
  int exponent = 0;
  switch (m8) {
    case 1: case 7: exponent = r / 2; break;
    case 2: case 4: case 6: exponent = r / 2; break;
    case 3: case 5: exponent = r / 2 + 1; break;
    case 0: exponent = r / 2 - 1; break;
  }
  FieldType field = FieldType::Real;
  if (m8 == 2 || m8 == 6) field = FieldType::Complex;
  if (m8 == 3 || m8 == 4 || m8 == 5) field = FieldType::Quaternionic;
  return IrrepInfo{r, std::size_t{1} << exponent, r % 4 == 0 ? 2 : 1, field};
}

std::vector<Bivector> bivectors(int r) {
  std::vector<Bivector> out;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) out.push_back({i, j});
  return out;
}

std::size_t bivector_index(int r, Bivector b) {
  if (b.i < 1 || b.i >= b.j || b.j > r) throw std::invalid_argument("bivector_index: need 1 <= i < j <= r");
  const auto i = static_cast<std::size_t>(b.i - 1), j = static_cast<std::size_t>(b.j - 1);
  return antisym_index(static_cast<std::size_t>(r), i, j);
}

CliffordMonomial clifford_product(const CliffordMonomial& a, const CliffordMonomial& b, int r) {
  CliffordMonomial out{a.index_set, a.sign * b.sign};
  for (int x : a.index_set)
    if (x < 1 || x > r) throw std::invalid_argument("clifford_product: index out of range");
  for (int x : b.index_set) {
    if (x < 1 || x > r) throw std::invalid_argument("clifford_product: index out of range");
    // Move e_x leftwards past every larger generator, one transposition each.
    auto& s = out.index_set;
    const auto greater = std::count_if(s.begin(), s.end(), [x](int y) { return y > x; });
    if (greater % 2 != 0) out.sign = -out.sign;
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it != s.end() && *it == x) {
      s.erase(it);
      out.sign = -out.sign;  // e_x e_x = −1
    } else {
      s.insert(it, x);
    }
  }
  return out;
}

BivectorBracket bivector_bracket(Bivector a, Bivector b, int r) {
  const CliffordMonomial ma{{a.i, a.j}, 1}, mb{{b.i, b.j}, 1};
  const CliffordMonomial ab = clifford_product(ma, mb, r);
  const CliffordMonomial ba = clifford_product(mb, ma, r);
  if (ab == ba) return {};
  if (ab.index_set.size() != 2) throw std::logic_error("bivector_bracket: bracket left the bivector span");
  return BivectorBracket{false, Bivector{ab.index_set[0], ab.index_set[1]}, 2 * ab.sign};
}

GammaSet::GammaSet(int r, std::size_t dim, std::vector<Matrix> generators, std::optional<HalfLabel> half)
    : r_(r), dim_(dim), gens_(std::move(generators)), half_(half) {
  if (r_ < 2) throw std::invalid_argument("GammaSet: rank must be at least 2");
  if (gens_.size() != bivectors(r_).size()) throw std::invalid_argument("GammaSet: wrong generator count");
  const Matrix minus_id = -Matrix::identity(dim_);
  for (const auto& k : gens_) {
    if (k.rows() != dim_ || k.cols() != dim_) throw std::invalid_argument("GammaSet: generator of wrong size");
    if (!is_signed_permutation(k)) throw std::invalid_argument("GammaSet: generator is not a signed permutation");
    if (!k.is_antisymmetric()) throw std::invalid_argument("GammaSet: generator is not antisymmetric");
    if (!(k * k == minus_id)) throw std::invalid_argument("GammaSet: generator does not square to -I");
  }
}

Matrix GammaSet::generator(int i, int j) const {
  if (i == j) throw std::invalid_argument("GammaSet::generator: i == j");
  if (i < j) return gens_[bivector_index(r_, {i, j})];
  return -gens_[bivector_index(r_, {j, i})];
}

std::vector<Matrix> clifford_generators(int n) {
  if (n < 1) throw std::invalid_argument("clifford_generators: need n >= 1");
  if (n == 1) return from_words(kWords2, 1);
  if (n <= 3) return from_words(kWords4, n);
  if (n <= 7) return from_words(kWords8, n);
  if (n == 8) return from_words(kWords16, 8);
  // Cl_{n} ≅ Cl_{n−8} ⊗ Cl_8: G_i ⊗ ω_8 and I ⊗ E_j, where ω_8 = E_1⋯E_8 is
  // symmetric, squares to I and anticommutes with every E_j.
  const std::vector<Matrix> inner = clifford_generators(n - 8);
  const std::vector<Matrix> outer = from_words(kWords16, 8);
  Matrix omega = outer[0];
  for (std::size_t j = 1; j < outer.size(); ++j) omega = omega * outer[j];
  std::vector<Matrix> out;
  for (const auto& g : inner) out.push_back(kron(g, omega));
  const Matrix id = Matrix::identity(inner.front().rows());
  for (const auto& e : outer) out.push_back(kron(id, e));
  return out;
}

namespace {

// K_ij from r−1 anticommuting complex structures via f_i ↦ e_i e_r:
// K_ir = G_i and K_ij = G_i G_j for i < j < r.
std::vector<Matrix> bivector_images(const std::vector<Matrix>& g, int r) {
  std::vector<Matrix> out;
  for (const auto& [i, j] : bivectors(r)) {
    const auto& gi = g[static_cast<std::size_t>(i - 1)];
    out.push_back(j == r ? gi : gi * g[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

Matrix volume_of(const std::vector<Matrix>& k, int r) {
  Matrix omega = k[bivector_index(r, {1, 2})];
  for (int i = 3; i < r; i += 2) omega = omega * k[bivector_index(r, {i, i + 1})];
  return omega;
}

// Restriction of each K to the image of the projector (I + sign·ω)/2.
std::vector<Matrix> restrict_to_half(const std::vector<Matrix>& k, const Matrix& omega, int sign,
                                     std::size_t half_dim) {
  const std::size_t full = omega.rows();
  const Matrix projector = Rational(1, 2) * (Matrix::identity(full) + Rational(sign) * omega);
  const Matrix columns = projector.transpose();
  // First independent columns in index order.
  SparseEchelon<ExactField> ech(full);
  std::vector<Triplet> basis_t;
  std::size_t chosen = 0;
  for (std::size_t c = 0; c < full && chosen < half_dim; ++c) {
    std::vector<SparseTerm<Rational>> col;
    columns.for_each_in_row(c, [&](std::size_t j, const Rational& v) { col.push_back({j, v}); });
    if (!ech.add_row(col)) continue;
    for (const auto& t : col) basis_t.push_back({t.col, chosen, t.value});
    ++chosen;
  }
  if (chosen != half_dim) throw std::logic_error("half-spin projector has unexpected rank");
  const Matrix basis = Matrix::from_triplets(full, half_dim, std::move(basis_t));
  const Matrix basis_t_mat = basis.transpose();
  const Matrix gram = basis_t_mat * basis;
  const Matrix left_inverse = inverse(gram) * basis_t_mat;
  std::vector<Matrix> out;
  for (const auto& m : k) {
    Matrix restricted = left_inverse * m * basis;
    if (!(m * basis == basis * restricted)) throw std::logic_error("half-spin subspace is not invariant");
    out.push_back(std::move(restricted));
  }
  return out;
}

}  // namespace

std::vector<GammaSet> build_even_generators(int r, int max_rank) {
  if (r < 2 || r > max_rank)
    throw std::invalid_argument("build_even_generators: rank " + std::to_string(r) + " outside [2, " +
                                std::to_string(max_rank) + "]");
  const IrrepInfo info = irrep_info(r);
  const std::vector<Matrix> g = clifford_generators(r - 1);
  if (g.front().rows() != info.d) throw std::logic_error("Clifford generators have unexpected size");
  if (r % 4 != 0) return {GammaSet(r, info.d, bivector_images(g, r))};

  // Both irreducible Cl_{r−1} modules side by side, G_i ⊕ (−G_i), then split by ω.
  std::vector<Matrix> doubled;
  for (const auto& gi : g) doubled.push_back(block_diag(gi, -gi));
  const std::vector<Matrix> k = bivector_images(doubled, r);
  const Matrix omega = volume_of(k, r);
  return {GammaSet(r, info.d, restrict_to_half(k, omega, +1, info.d), HalfLabel::Plus),
          GammaSet(r, info.d, restrict_to_half(k, omega, -1, info.d), HalfLabel::Minus)};
}

Matrix volume_element(const GammaSet& g) {
  if (g.rank() % 2 != 0) throw std::invalid_argument("volume_element: rank must be even");
  return volume_of(g.generators(), g.rank());
}

std::size_t commutant_dimension(const GammaSet& g) {
  return twisted_commutant_dimension(g.generators(), g.generators(), g.dim());
}

int schur_check(const GammaSet& g) {
  const std::size_t dim = commutant_dimension(g);
  const int expected = field_dimension(irrep_info(g.rank()).field);
  if (dim != static_cast<std::size_t>(expected))
    throw std::logic_error("schur_check: commutant of rank " + std::to_string(g.rank()) + " has dimension " +
                           std::to_string(dim) + ", expected " + std::to_string(expected));
  return expected;
}

std::size_t intertwiner_dimension(const GammaSet& a, const GammaSet& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim())
    throw std::invalid_argument("intertwiner_dimension: modules of different shape");
  return twisted_commutant_dimension(a.generators(), b.generators(), a.dim());
}

}  // namespace evencliff
