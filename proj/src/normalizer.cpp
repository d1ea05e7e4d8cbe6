#include "evencliff/normalizer.hpp"

#include <map>
#include <optional>
#include <string>

#include "evencliff/bounds.hpp"
#include "evencliff/constraint_system.hpp"

namespace evencliff {

namespace {

// Rows and columns of one generator as plain lists, so the hot loop never
// materializes Entry vectors.
struct SparseGen {
  std::vector<std::vector<Entry>> rows;
  std::vector<std::vector<Entry>> cols;
};

SparseGen split(const Matrix& m) {
  SparseGen g{std::vector<std::vector<Entry>>(m.rows()), std::vector<std::vector<Entry>>(m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    m.for_each_in_row(i, [&](std::size_t j, const Rational& v) {
      g.rows[i].push_back({j, v});
      g.cols[j].push_back({i, v});
    });
  return g;
}

// Greedy maximal independent subset, in index order.
std::vector<std::size_t> independent_subset(const std::vector<Matrix>& mats, std::size_t n) {
  SparseEchelon<ExactField> ech(n * n);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    std::vector<SparseTerm<Rational>> row;
    for (const auto& t : mats[k].triplets()) row.push_back({t.row * n + t.col, t.value});
    if (ech.add_row(std::move(row))) keep.push_back(k);
  }
  return keep;
}

std::string canonical_key(const std::vector<Triplet>& t) {
  std::string key;
  for (const auto& e : t) key += std::to_string(e.row) + ":" + std::to_string(e.col) + "=" + to_string(e.value) + ";";
  return key;
}

/**
 * Everything the equation generator needs, built once in exact arithmetic.
 *
 * Normalizer rows are [X, J_b] − Σ_g J_g (G⁻¹ w^b)_g = 0 where
 * w^b_d = ⟨J_d, [X, J_b]⟩ = ⟨X, F_bd⟩ with F_bd = J_d J_bᵀ − J_bᵀ J_d.
 * The distinct F (up to scale) become auxiliary unknowns y_t, pinned by the
 * rows y_t − ⟨X, B_t⟩ = 0.
 */
struct Problem {
  std::size_t n = 0;
  std::vector<SparseGen> gens;
  bool all_antisymmetric = true;
  bool normalizer = false;
  std::vector<Matrix> aux_mats;  // B_t
  // proj[b][(i,j)] = list of (t, c) with aux coefficient −c on row (b, i, j)
  std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>>> proj;
};

Problem make_problem(const EvenCliffordStructure& s, bool normalizer) {
  Problem p;
  p.n = s.dim();
  p.normalizer = normalizer;
  const auto& j = s.generators();
  for (const auto& m : j) {
    p.gens.push_back(split(m));
    p.all_antisymmetric = p.all_antisymmetric && m.is_antisymmetric();
  }
  if (!normalizer) return p;

  const std::vector<std::size_t> sub = independent_subset(j, p.n);
  const std::size_t k = sub.size();
  std::vector<Triplet> gram;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Rational g = trace_inner(j[sub[a]], j[sub[b]]);
      if (g != 0) gram.push_back({a, b, g});
    }
  const Matrix g_inv = inverse(Matrix::from_triplets(k, k, std::move(gram)));

  // lambda[b][d] = (t, scale) with F_bd = scale · B_t
  std::map<std::string, std::size_t> seen;
  std::vector<std::vector<std::optional<std::pair<std::size_t, Rational>>>> lambda(
      j.size(), std::vector<std::optional<std::pair<std::size_t, Rational>>>(k));
  for (std::size_t b = 0; b < j.size(); ++b) {
    const Matrix jt = j[b].transpose();
    for (std::size_t d = 0; d < k; ++d) {
      const Matrix f = j[sub[d]] * jt - jt * j[sub[d]];
      std::vector<Triplet> trip = f.triplets();
      if (trip.empty()) continue;
      const Rational lead = trip.front().value;
      for (auto& e : trip) e.value /= lead;
      const std::string key = canonical_key(trip);
      auto [it, fresh] = seen.emplace(key, p.aux_mats.size());
      if (fresh) p.aux_mats.push_back(Matrix::from_triplets(p.n, p.n, std::move(trip)));
      lambda[b][d] = std::make_pair(it->second, lead);
    }
  }

  // Position (i, j) → generators of the subset with a nonzero there.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>> at;
  for (std::size_t a = 0; a < k; ++a)
    for (const auto& e : j[sub[a]].triplets()) at[{e.row, e.col}].push_back({a, e.value});

  p.proj.resize(j.size());
  for (std::size_t b = 0; b < j.size(); ++b) {
    // m[a] = Σ_d Ginv[a][d] λ_bd, as a sparse vector over t
    std::vector<std::map<std::size_t, Rational>> m(k);
    for (std::size_t a = 0; a < k; ++a)
      g_inv.for_each_in_row(a, [&](std::size_t d, const Rational& gv) {
        if (lambda[b][d]) m[a][lambda[b][d]->first] += gv * lambda[b][d]->second;
      });
    for (const auto& [pos, list] : at) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [a, jv] : list)
        for (const auto& [t, mv] : m[a]) acc[t] += jv * mv;
      std::vector<std::pair<std::size_t, Rational>> row;
      for (auto& [t, c] : acc)
        if (c != 0) row.push_back({t, c});
      if (!row.empty()) p.proj[b][pos.first * p.n + pos.second] = std::move(row);
    }
  }
  return p;
}

template <class Field>
typename Field::Value convert(const Rational& v) {
  if constexpr (std::is_same_v<Field, ExactField>) {
    return v;
  } else {
    return v.get_d();
  }
}

template <class Field>
typename ConstraintSystem<Field>::Result run(const Problem& p, Field field, bool want_basis) {
  using Value = typename Field::Value;
  using Term = SparseTerm<Value>;
  const std::size_t n = p.n;
  const std::size_t aux = p.aux_mats.size();
  ConstraintSystem<Field> sys(antisym_dim(n), aux, field);

  auto generate = [&](const typename ConstraintSystem<Field>::Emit& emit) {
    std::vector<Term> prim, ax;
    // x_ab with the sign of X_ab
    auto push_x = [&](std::size_t a, std::size_t b, const Rational& c) {
      if (a == b) return;
      if (a < b)
        prim.push_back({antisym_index(n, a, b), convert<Field>(c)});
      else
        prim.push_back({antisym_index(n, b, a), convert<Field>(-c)});
    };
    for (std::size_t b = 0; b < p.gens.size(); ++b) {
      const SparseGen& g = p.gens[b];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = p.all_antisymmetric ? i + 1 : 0; jj < n; ++jj) {
          prim.clear();
          ax.clear();
          // [X, J]_ij = Σ_k X_ik J_kj − Σ_k J_ik X_kj
          for (const auto& e : g.cols[jj]) push_x(i, e.col, e.value);
          for (const auto& e : g.rows[i]) push_x(e.col, jj, -e.value);
          if (p.normalizer) {
            auto it = p.proj[b].find(i * n + jj);
            if (it != p.proj[b].end())
              for (const auto& [t, c] : it->second) ax.push_back({t, convert<Field>(-c)});
          }
          if (prim.empty() && ax.empty()) continue;
          emit(prim, ax);
        }
    }
    // y_t − ⟨X, B_t⟩ = 0
    for (std::size_t t = 0; t < aux; ++t) {
      prim.clear();
      ax.assign(1, Term{t, Value(1)});
      for (const auto& e : p.aux_mats[t].triplets()) push_x(e.row, e.col, -e.value);
      emit(prim, ax);
    }
  };
  return sys.solve(generate, want_basis);
}

SubalgebraBasis exact_basis(const EvenCliffordStructure& s, bool normalizer) {
  const Problem p = make_problem(s, normalizer);
  auto res = run(p, ExactField{}, true);
  const std::size_t dim = antisym_dim(p.n);
  std::vector<Matrix> out;
  for (const auto& v : res.basis)
    out.push_back(antisym_from_coords(p.n, std::span<const Rational>(v.data(), dim)));
  return SubalgebraBasis(p.n, std::move(out));
}

DimensionResult dimension(const EvenCliffordStructure& s, bool normalizer, const SolveOptions& opts) {
  const Problem p = make_problem(s, normalizer);
  if (opts.mode == SolveMode::Exact) return {run(p, ExactField{}, false).nullity, false};
  return {run(p, FloatField{opts.tolerance}, false).nullity, true};
}

Matrix conditions(const EvenCliffordStructure& s, bool normalizer) {
  const std::size_t n = s.dim();
  const auto& j = s.generators();
  const std::vector<Matrix> basis = antisym_basis(n);
  std::vector<Matrix> span_set;
  if (normalizer)
    for (std::size_t k : independent_subset(j, n)) span_set.push_back(j[k]);
  std::vector<Triplet> t;
  for (std::size_t b = 0; b < j.size(); ++b)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Matrix y = commutator(basis[c], j[b]);
      if (normalizer) y = project_off_span(y, span_set);
      for (const auto& e : y.triplets()) t.push_back({b * n * n + e.row * n + e.col, c, e.value});
    }
  return Matrix::from_triplets(j.size() * n * n, basis.size(), std::move(t));
}

}  // namespace

SubalgebraBasis centralizer_basis(const EvenCliffordStructure& s) { return exact_basis(s, false); }
SubalgebraBasis normalizer_basis(const EvenCliffordStructure& s) { return exact_basis(s, true); }

DimensionResult centralizer_dimension(const EvenCliffordStructure& s, const SolveOptions& opts) {
  return dimension(s, false, opts);
}

DimensionResult normalizer_dimension(const EvenCliffordStructure& s, const SolveOptions& opts) {
  return dimension(s, true, opts);
}

ExpectedDims expected_dims(int r, const Multiplicities& mult) {
  require_compatible(r, mult);
  auto c = [](long m) { return static_cast<std::size_t>(m); };
  std::size_t cent = 0;
  switch (r % 8) {
    case 0: cent = c(choose2(mult.m1()) + choose2(mult.m2())); break;
    case 1: case 7: cent = c(choose2(mult.m())); break;
    case 2: case 6: cent = c(mult.m() * mult.m()); break;
    case 3: case 5: cent = c(mult.m() * (2 * mult.m() + 1)); break;
    default: cent = c(mult.m1() * (2 * mult.m1() + 1) + mult.m2() * (2 * mult.m2() + 1)); break;
  }
  return {cent, cent + spin_image_dim(r, mult)};
}

std::size_t isotropy_dim(int r, const Multiplicities& mult) {
  if (r < 3) throw std::invalid_argument("isotropy_dim requires r >= 3, got " + std::to_string(r));
  return expected_dims(r, mult).centralizer + static_cast<std::size_t>(choose2(r));
}

Matrix centralizer_conditions(const EvenCliffordStructure& s) { return conditions(s, false); }
Matrix normalizer_conditions(const EvenCliffordStructure& s) { return conditions(s, true); }

}  // namespace evencliff
