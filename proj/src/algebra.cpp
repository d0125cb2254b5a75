#include "fuzzy_spectral/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzy_spectral/spectrum.hpp"

namespace fuzzy {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace

double max_entry_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Su2Generators su2_generators(int n) {
  if (n < 1) throw std::invalid_argument("su2_generators: n must be >= 1");

  const int dim = n + 1;
  const double spin = 0.5 * n;
  const double casimir = spin * (spin + 1.0);

  // Basis index k carries magnetic number m = spin - k.
  ComplexMatrix raise = ComplexMatrix::Zero(dim, dim);
  Su2Generators gens;
  gens.j3 = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = spin - k;
    gens.j3(k, k) = m;
    if (k > 0) {
      // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>
      raise(k - 1, k) = std::sqrt(casimir - m * (m + 1.0));
    }
  }
  const ComplexMatrix lower = raise.adjoint();
  gens.j1 = 0.5 * (raise + lower);
  gens.j2 = (raise - lower) / (2.0 * kI);
  return gens;
}

double CoordinateMatrices::scale() const {
  const double nn = static_cast<double>(n);
  return 2.0 * radius / std::sqrt(nn * (nn + 2.0));
}

CoordinateMatrices fuzzy_coordinates(const FuzzySphereParams& params) {
  params.validate();
  auto gens = su2_generators(params.n);
  CoordinateMatrices coords;
  coords.n = params.n;
  coords.radius = params.radius;
  const double s = coords.scale();
  coords.x = {s * gens.j1, s * gens.j2, s * gens.j3};
  return coords;
}

double commutator_residual(const CoordinateMatrices& coords) {
  const double s = coords.scale();
  const auto& x = coords.x;
  // (i, j, k) cyclic; the anticyclic relations are the negatives of these and
  // [x_i, x_i] = 0 trivially, so the maximum is attained here.
  constexpr int cyclic[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  double worst = 0.0;
  for (const auto& c : cyclic) {
    const ComplexMatrix r = commutator(x[c[0]], x[c[1]]) - (kI * s) * x[c[2]];
    worst = std::max(worst, max_entry_norm(r));
  }
  return worst;
}

double casimir_residual(const CoordinateMatrices& coords) {
  const auto& x = coords.x;
  const auto dim = x[0].rows();
  const ComplexMatrix sum = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return max_entry_norm(sum - (coords.radius * coords.radius) * ComplexMatrix::Identity(dim, dim));
}

double hermiticity_residual(const CoordinateMatrices& coords) {
  double worst = 0.0;
  for (const auto& xi : coords.x) worst = std::max(worst, max_entry_norm(xi - xi.adjoint()));
  return worst;
}

}  // namespace fuzzy
