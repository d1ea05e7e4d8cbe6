#pragma once

#include <cstddef>

#include "evencliff/linalg.hpp"
#include "evencliff/structure.hpp"

namespace evencliff {

struct DimensionResult {
  std::size_t dim = 0;
  bool numerical = false;  ///< true when computed in floating point
};

/// {X ∈ so(N) : [X, J_ij] = 0 for all i < j}, exact.
SubalgebraBasis centralizer_basis(const EvenCliffordStructure& s);

/// {X ∈ so(N) : [X, J_ij] ∈ span{J_kl} for all i < j}, exact.
SubalgebraBasis normalizer_basis(const EvenCliffordStructure& s);

DimensionResult centralizer_dimension(const EvenCliffordStructure& s, const SolveOptions& opts = {});
DimensionResult normalizer_dimension(const EvenCliffordStructure& s, const SolveOptions& opts = {});

struct ExpectedDims {
  std::size_t centralizer = 0;
  std::size_t normalizer = 0;
};

/// Closed-form dimensions. The normalizer adds dim span{J_ij}, which is C(r,2)
/// except for r = 4 with a zero multiplicity (see spin_image_dim).
ExpectedDims expected_dims(int r, const Multiplicities& mult);

/// Centralizer dimension + C(r,2). Requires r ≥ 3.
std::size_t isotropy_dim(int r, const Multiplicities& mult);

/// Stacked linear conditions over antisym_basis coordinates, one block of
/// C(N,2) rows per bivector. Dense reference route, meant for small N.
Matrix centralizer_conditions(const EvenCliffordStructure& s);
Matrix normalizer_conditions(const EvenCliffordStructure& s);

}  // namespace evencliff
