#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace fuzzy {

using ComplexMatrix = Eigen::MatrixXcd;

struct FuzzySphereParams;

/// The three su(2) generators of the spin-n/2 irreducible representation,
/// in the basis where J3 = diag(n/2, n/2 - 1, ..., -n/2).
struct Su2Generators {
  ComplexMatrix j1;
  ComplexMatrix j2;
  ComplexMatrix j3;
};

Su2Generators su2_generators(int n);

/// Fuzzy-sphere coordinates x_i = (2 r / sqrt(N (N + 2))) J_i acting on the
/// (N+1)-dimensional representation space.
struct CoordinateMatrices {
  int n = 0;
  double radius = 1.0;
  std::array<ComplexMatrix, 3> x;

  /// 2 r / sqrt(N (N + 2)): the structure constant of [x_i, x_j].
  double scale() const;
};

CoordinateMatrices fuzzy_coordinates(const FuzzySphereParams& params);

/// max over (i, j) of || [x_i, x_j] - i scale eps_ijk x_k ||_max
double commutator_residual(const CoordinateMatrices& coords);

/// || x_i x_i - r^2 I ||_max
double casimir_residual(const CoordinateMatrices& coords);

/// max over i of || x_i - x_i^dagger ||_max
double hermiticity_residual(const CoordinateMatrices& coords);

/// Largest absolute entry.
double max_entry_norm(const ComplexMatrix& m);

}  // namespace fuzzy
