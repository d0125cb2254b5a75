#include "fuzzy_spectral/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "fuzzy_spectral/heat_kernel.hpp"
#include "fuzzy_spectral/kernels.hpp"

namespace fuzzy {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("energy scale Lambda must be a positive finite number");
}

double diffusion_time(double lambda) { return 1.0 / (lambda * lambda); }

kernels::HeatMoments moments(const DiracSpectrum& spectrum, double t) {
  return kernels::heat_moments(kernels::active(), spectrum.packed_eigenvalues_desc(),
                               spectrum.packed_weights_desc(), t);
}

double area_from_trace(double trace, double lambda) {
  return 2.0 * std::numbers::pi * (trace + 1.0 / 3.0) / (lambda * lambda);
}

double dimension_from_moments(const DiracSpectrum& spectrum, double t,
                              const kernels::HeatMoments& m) {
  const double x_min = spectrum.min_positive_eigenvalue_sq();
  if (x_min == 0.0) return 0.0;
  // Everything underflowed: the ratio is dominated by the lowest mode.
  if (m.trace == 0.0) return 2.0 * t * x_min;
  return 2.0 * t * m.weighted / m.trace;
}

CurvePoint evaluate_point(const DiracSpectrum& spectrum, double lambda) {
  CurvePoint p;
  p.lambda = lambda;
  p.t = diffusion_time(lambda);
  const auto m = moments(spectrum, p.t);
  p.trace = m.trace;
  p.area = area_from_trace(p.trace, lambda);
  p.dimension = dimension_from_moments(spectrum, p.t, m);
  return p;
}

}  // namespace

EnergyGrid::EnergyGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("energy grid is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    check_lambda(values_[i]);
    if (i > 0 && !(values_[i] > values_[i - 1]))
      throw std::invalid_argument("energy grid must be strictly increasing");
  }
}

EnergyGrid EnergyGrid::logarithmic(double min, double max, std::size_t count) {
  check_lambda(min);
  check_lambda(max);
  if (!(min < max)) throw std::invalid_argument("energy grid needs min < max");
  if (count < 2) throw std::invalid_argument("energy grid needs at least 2 points");
  const double log_min = std::log(min);
  const double step = (std::log(max) - log_min) / static_cast<double>(count - 1);
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = std::exp(log_min + step * static_cast<double>(i));
  values.front() = min;
  values.back() = max;
  return EnergyGrid(std::move(values));
}

EnergyGrid EnergyGrid::linear(double min, double max, std::size_t count) {
  check_lambda(min);
  check_lambda(max);
  if (!(min < max)) throw std::invalid_argument("energy grid needs min < max");
  if (count < 2) throw std::invalid_argument("energy grid needs at least 2 points");
  const double step = (max - min) / static_cast<double>(count - 1);
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = min + step * static_cast<double>(i);
  values.back() = max;
  return EnergyGrid(std::move(values));
}

std::string_view to_string(Observable which) {
  return which == Observable::area ? "area" : "dimension";
}

Observable parse_observable(std::string_view name) {
  if (name == "area") return Observable::area;
  if (name == "dimension") return Observable::dimension;
  throw std::invalid_argument("unknown observable '" + std::string(name) + "' (area|dimension)");
}

double area(const DiracSpectrum& spectrum, double lambda) {
  check_lambda(lambda);
  return area_from_trace(heat_trace(spectrum, diffusion_time(lambda)), lambda);
}

double spectral_dimension(const DiracSpectrum& spectrum, double lambda) {
  check_lambda(lambda);
  if (spectrum.empty()) throw std::invalid_argument("spectral_dimension of an empty spectrum");
  const double t = diffusion_time(lambda);
  return dimension_from_moments(spectrum, t, moments(spectrum, t));
}

double spectral_dimension_fd(const DiracSpectrum& spectrum, double lambda, double rel_step) {
  check_lambda(lambda);
  if (!(rel_step > 0.0) || !(rel_step < 0.1))
    throw std::invalid_argument("rel_step must lie in (0, 0.1)");
  const double lo = lambda * (1.0 - rel_step);
  const double hi = lambda * (1.0 + rel_step);
  if (!(lo > 0.0)) throw std::invalid_argument("finite-difference step reaches Lambda <= 0");
  const double ln_p_hi = std::log(heat_trace(spectrum, diffusion_time(hi)));
  const double ln_p_lo = std::log(heat_trace(spectrum, diffusion_time(lo)));
  return (ln_p_hi - ln_p_lo) / (std::log1p(rel_step) - std::log1p(-rel_step));
}

double evaluate(const DiracSpectrum& spectrum, Observable which, double lambda) {
  return which == Observable::area ? area(spectrum, lambda) : spectral_dimension(spectrum, lambda);
}

GeometryCurve sweep(const DiracSpectrum& spectrum, const EnergyGrid& grid, unsigned threads) {
  GeometryCurve curve;
  curve.label = spectrum.label();
  const auto& lambdas = grid.values();
  curve.points.resize(lambdas.size());

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lambdas.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      curve.points[i] = evaluate_point(spectrum, lambdas[i]);
    return curve;
  }

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < lambdas.size(); i += workers)
        curve.points[i] = evaluate_point(spectrum, lambdas[i]);
    });
  }
  pool.clear();
  return curve;
}

PeakResult find_peak(const DiracSpectrum& spectrum, Observable which, double lo, double hi) {
  check_lambda(lo);
  check_lambda(hi);
  if (!(lo < hi)) throw std::invalid_argument("peak bracket needs lo < hi");

  const auto grid = EnergyGrid::logarithmic(lo, hi, kPeakScanPoints);
  const auto& scan = grid.values();
  std::size_t best = 0;
  double best_value = evaluate(spectrum, which, scan[0]);
  for (std::size_t i = 1; i < scan.size(); ++i) {
    const double v = evaluate(spectrum, which, scan[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best == 0 || best + 1 == scan.size()) {
    throw PeakAtBoundaryError(std::string(to_string(which)) + " maximum over [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) +
                                  "] lies on the bracket boundary at Lambda=" +
                                  std::to_string(scan[best]) + "; choose a different bracket",
                              scan[best]);
  }

  const double bracket_lo = scan[best - 1];
  const double bracket_hi = scan[best + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = bracket_lo;
  double b = bracket_hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = evaluate(spectrum, which, c);
  double fd = evaluate(spectrum, which, d);
  while (b - a > kPeakRelTolerance * 0.5 * (a + b)) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = evaluate(spectrum, which, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = evaluate(spectrum, which, d);
    }
  }
  PeakResult result;
  result.lambda_star = 0.5 * (a + b);
  result.value = evaluate(spectrum, which, result.lambda_star);
  result.bracket_lo = bracket_lo;
  result.bracket_hi = bracket_hi;
  return result;
}

}  // namespace fuzzy
