#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "evencliff/sparse_echelon.hpp"

namespace evencliff {

/**
 * Homogeneous linear system over "primary" unknowns x_0..x_{n-1} and a small
 * block of "auxiliary" unknowns y_0..y_{k-1}.
 *
 * Commutator conditions against signed-permutation matrices touch at most two
 * primary unknowns per equation. Those equations are absorbed by a union-find
 * over the primary unknowns whose nodes carry affine potentials
 *
 *     x_p = mult_p · x_root(p) + offset_p · y,
 *
 * so each merge costs O(k) instead of a sparse row reduction. Everything the
 * union-find cannot absorb (cycles, single-term equations, long equations) is
 * re-expressed over (roots, y) and handed to a SparseEchelon on that much
 * smaller column set.
 *
 * The equation generator is invoked twice: once to build the components, once
 * to collect residual rows against the final roots. Equations that were used as
 * merges re-express to the zero row and drop out.
 */
template <class Field>
class ConstraintSystem {
 public:
  using Value = typename Field::Value;
  using Term = SparseTerm<Value>;
  using Emit = std::function<void(std::span<const Term> primary, std::span<const Term> aux)>;
  using Generator = std::function<void(const Emit&)>;
  static constexpr bool kExact = std::is_same_v<Field, ExactField>;

  struct Result {
    std::size_t nullity = 0;
    /// Dense solution vectors of length primary + aux (empty unless requested).
    std::vector<std::vector<Value>> basis;
  };

  ConstraintSystem(std::size_t primary, std::size_t aux, Field field = {})
      : n_(primary), k_(aux), field_(field), parent_(primary), mult_(primary, Value(1)),
        offset_(primary * aux, Value(0)), size_(primary, 1) {
    for (std::size_t p = 0; p < n_; ++p) parent_[p] = p;
  }

  Result solve(const Generator& generate, bool want_basis) {
    std::vector<Term> merged;
    generate([&](std::span<const Term> primary, std::span<const Term> aux) {
      merge_terms(primary, merged);
      if (merged.size() == 2) absorb(merged[0], merged[1], aux);
    });

    for (std::size_t p = 0; p < n_; ++p) find(p);
    std::vector<std::size_t> root_col(n_, kNone);
    std::size_t roots = 0;
    for (std::size_t p = 0; p < n_; ++p)
      if (parent_[p] == p) root_col[p] = roots++;

    const std::size_t cols = roots + k_;
    SparseEchelon<Field> echelon(cols, field_);
    std::vector<Value> dense_aux(k_);
    std::vector<Term> row;
    generate([&](std::span<const Term> primary, std::span<const Term> aux) {
      merge_terms(primary, merged);
      row.clear();
      std::fill(dense_aux.begin(), dense_aux.end(), Value(0));
      for (const auto& t : aux) dense_aux[t.col] += t.value;
      for (const auto& t : merged) {
        const std::size_t r = find(t.col);
        row.push_back({root_col[r], t.value * mult_[t.col]});
        if (k_ > 0) {
          const Value* off = &offset_[t.col * k_];
          for (std::size_t a = 0; a < k_; ++a)
            if (!is_zero(off[a])) dense_aux[a] += t.value * off[a];
        }
      }
      for (std::size_t a = 0; a < k_; ++a)
        if (!is_zero(dense_aux[a])) row.push_back({roots + a, dense_aux[a]});
      if (!row_is_zero(row)) echelon.add_row(row);
    });

    Result result;
    result.nullity = cols - echelon.rank();
    if (!want_basis) return result;
    for (auto& z : echelon.nullspace()) {
      std::vector<Value> v(n_ + k_, Value(0));
      for (std::size_t a = 0; a < k_; ++a) v[n_ + a] = z[roots + a];
      for (std::size_t p = 0; p < n_; ++p) {
        const std::size_t r = parent_[p];
        Value x = mult_[p] * z[root_col[r]];
        for (std::size_t a = 0; a < k_; ++a) x += offset_[p * k_ + a] * z[roots + a];
        v[p] = x;
      }
      result.basis.push_back(std::move(v));
    }
    return result;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool is_zero(const Value& v) const {
    if constexpr (kExact) {
      return v == 0;
    } else {
      return std::abs(v) <= field_.tolerance;
    }
  }

  bool row_is_zero(std::vector<Term>& row) const {
    // Duplicate root columns are possible when two terms share a component.
    std::sort(row.begin(), row.end(), [](const Term& a, const Term& b) { return a.col < b.col; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (w > 0 && row[w - 1].col == row[i].col)
        row[w - 1].value += row[i].value;
      else
        row[w++] = row[i];
    }
    row.resize(w);
    std::erase_if(row, [&](const Term& t) { return is_zero(t.value); });
    return row.empty();
  }

  void merge_terms(std::span<const Term> in, std::vector<Term>& out) const {
    out.assign(in.begin(), in.end());
    row_is_zero(out);
  }

  // Path compression; afterwards parent_[p] is the root and the potential of p
  // is expressed directly against it.
  std::size_t find(std::size_t p) {
    std::size_t root = p;
    while (parent_[root] != root) root = parent_[root];
    path_.clear();
    for (std::size_t q = p; parent_[q] != q; q = parent_[q]) path_.push_back(q);
    // Walk from the node nearest the root downwards.
    for (std::size_t i = path_.size(); i-- > 0;) {
      const std::size_t q = path_[i];
      const std::size_t up = parent_[q];
      if (up == root) continue;
      // x_q = m_q x_up + o_q y,  x_up = m_up x_root + o_up y
      const Value m_up = mult_[up];
      for (std::size_t a = 0; a < k_; ++a) offset_[q * k_ + a] += mult_[q] * offset_[up * k_ + a];
      mult_[q] *= m_up;
      parent_[q] = root;
    }
    return root;
  }

  void absorb(const Term& tp, const Term& tq, std::span<const Term> aux) {
    std::size_t p = tp.col, q = tq.col;
    Value a = tp.value, b = tq.value;
    const std::size_t rp = find(p), rq = find(q);
    if (rp == rq) return;
    // a(m_p R_p + o_p y) + b(m_q R_q + o_q y) + c y = 0; attach the smaller root.
    std::size_t child = rp, target = rq;
    if (size_[rp] > size_[rq]) {
      std::swap(child, target);
      std::swap(p, q);
      std::swap(a, b);
    }
    const Value lead = a * mult_[p];
    mult_[child] = -(b * mult_[q]) / lead;
    if (k_ > 0) {
      std::vector<Value> c(k_, Value(0));
      for (const auto& t : aux) c[t.col] += t.value;
      for (std::size_t i = 0; i < k_; ++i) {
        Value s = a * offset_[p * k_ + i] + b * offset_[q * k_ + i] + c[i];
        offset_[child * k_ + i] = -s / lead;
      }
    }
    parent_[child] = target;
    size_[target] += size_[child];
  }

  std::size_t n_;
  std::size_t k_;
  Field field_;
  std::vector<std::size_t> parent_;
  std::vector<Value> mult_;
  std::vector<Value> offset_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> path_;
};

}  // namespace evencliff
