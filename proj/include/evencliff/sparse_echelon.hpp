#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "evencliff/rational.hpp"

namespace evencliff {

/// Exact arithmetic: rows are kept as primitive integer vectors (fraction-free).
struct ExactField {
  using Value = Rational;
  using Scalar = Integer;
};

/// 64-bit floating point with an absolute threshold on normalized rows.
struct FloatField {
  using Value = double;
  using Scalar = double;
  double tolerance = 1e-9;
};

template <class Value>
struct SparseTerm {
  std::size_t col;
  Value value;
};

/**
 * Incremental sparse row-echelon form.
 *
 * Rows are fed one at a time and reduced against the stored pivot rows; a row
 * that survives becomes the pivot of its leading column. In exact mode a
 * reduction step is the fraction-free combination `a·row − b·pivot` followed by
 * division by the row content, so no denominators ever appear until the
 * nullspace is extracted.
 */
template <class Field>
class SparseEchelon {
 public:
  using Value = typename Field::Value;
  using Scalar = typename Field::Scalar;
  using Row = std::vector<SparseTerm<Scalar>>;
  static constexpr bool kExact = std::is_same_v<Field, ExactField>;

  explicit SparseEchelon(std::size_t cols, Field field = {})
      : cols_(cols), field_(field), pivots_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

  /// Terms may be unsorted and contain repeated columns. Returns true iff the rank grew.
  bool add_row(std::vector<SparseTerm<Value>> terms) {
    Row row = normalize_input(std::move(terms));
    while (!row.empty()) {
      const Row& pivot = pivots_[row.front().col];
      if (pivot.empty()) {
        const std::size_t lead = row.front().col;
        pivots_[lead] = std::move(row);
        ++rank_;
        return true;
      }
      row = eliminate(row, pivot);
    }
    return false;
  }

  /// Basis of the right nullspace as dense vectors of length cols().
  std::vector<std::vector<Value>> nullspace() const {
    // Reduced rows indexed by pivot column, processed from the right so that
    // every back-substitution target is already fully reduced.
    std::vector<std::vector<SparseTerm<Value>>> reduced(cols_);
    std::vector<char> is_pivot(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) is_pivot[c] = !pivots_[c].empty();
    std::vector<Value> acc(cols_);
    std::vector<char> used(cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t c = cols_; c-- > 0;) {
      if (!is_pivot[c]) continue;
      touched.clear();
      const Value lead = to_value(pivots_[c].front().value);
      for (const auto& t : pivots_[c]) {
        acc[t.col] = to_value(t.value) / lead;
        used[t.col] = 1;
        touched.push_back(t.col);
      }
      for (std::size_t k = 1; k < touched.size(); ++k) {
        const std::size_t col = touched[k];
        if (!is_pivot[col] || is_zero(acc[col])) continue;
        const Value f = acc[col];
        for (const auto& t : reduced[col]) {
          if (!used[t.col]) {
            used[t.col] = 1;
            acc[t.col] = Value(0);
            touched.push_back(t.col);
          }
          acc[t.col] -= f * t.value;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t col : touched) {
        used[col] = 0;
        if (!is_zero(acc[col]) && (col == c || !is_pivot[col])) reduced[c].push_back({col, acc[col]});
      }
    }
    std::vector<std::vector<Value>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Value> v(cols_, Value(0));
      v[f] = Value(1);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) continue;
        for (const auto& t : reduced[c])
          if (t.col == f) v[c] = -t.value;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  bool is_zero(const Value& v) const {
    if constexpr (kExact) {
      return v == 0;
    } else {
      return std::abs(v) <= field_.tolerance;
    }
  }

  static Value to_value(const Scalar& s) {
    if constexpr (kExact) {
      return Rational(s);
    } else {
      return s;
    }
  }

  Row normalize_input(std::vector<SparseTerm<Value>> terms) const {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    std::vector<SparseTerm<Value>> merged;
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().col == t.col)
        merged.back().value += t.value;
      else
        merged.push_back(std::move(t));
    }
    Row row;
    if constexpr (kExact) {
      Integer lcm = 1;
      for (const auto& t : merged)
        if (t.value != 0) lcm = ::lcm(lcm, Integer(t.value.get_den()));
      for (const auto& t : merged)
        if (t.value != 0) row.push_back({t.col, Integer(t.value * lcm)});
      make_primitive(row);
    } else {
      double scale = 0.0;
      for (const auto& t : merged) scale = std::max(scale, std::abs(t.value));
      if (scale == 0.0) return row;
      for (const auto& t : merged)
        if (std::abs(t.value / scale) > field_.tolerance) row.push_back({t.col, t.value / scale});
    }
    return row;
  }

  static void make_primitive(Row& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& t : row) {
      g = gcd(g, Integer(t.value));
      if (g == 1) break;
    }
    if (row.front().value < 0) g = -g;
    if (g != 1)
      for (auto& t : row) t.value /= g;
  }

  Row eliminate(const Row& row, const Row& pivot) const {
    Row out;
    out.reserve(row.size() + pivot.size());
    Scalar a, b;  // out = a·row − b·pivot
    if constexpr (kExact) {
      Integer g = gcd(pivot.front().value, row.front().value);
      a = pivot.front().value / g;
      b = row.front().value / g;
    } else {
      a = 1.0;
      b = row.front().value / pivot.front().value;
    }
    std::size_t i = 1, j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
        out.push_back({row[i].col, a * row[i].value});
        ++i;
      } else if (i == row.size() || pivot[j].col < row[i].col) {
        out.push_back({pivot[j].col, -(b * pivot[j].value)});
        ++j;
      } else {
        Scalar v = a * row[i].value - b * pivot[j].value;
        out.push_back({row[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    if constexpr (kExact) {
      std::erase_if(out, [](const auto& t) { return t.value == 0; });
      make_primitive(out);
    } else {
      double scale = 0.0;
      for (const auto& t : out) scale = std::max(scale, std::abs(t.value));
      std::erase_if(out, [&](const auto& t) { return std::abs(t.value) <= field_.tolerance; });
      if (!out.empty() && scale > 1.0)
        for (auto& t : out) t.value /= scale;
    }
    return out;
  }

  std::size_t cols_;
  Field field_;
  std::vector<Row> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace evencliff
