#pragma once

// Reference evaluations for the tests. Deliberately naive: long double,
// straight loops, the eigenvalue formula in its textbook form, no sorting,
// no compensation and no dependence on the library's kernels.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

struct Line {
  long double eigenvalue_sq;
  long double degeneracy;
};

// (j + 1/2)^2 (1 + (1 - (j + 1/2)^2) / (N (N + 2))) with j = l - 1/2.
inline long double fuzzy_eigenvalue_sq(int n, int l) {
  const long double j = l - 0.5L;
  const long double a = (j + 0.5L) * (j + 0.5L);
  return a * (1.0L + (1.0L - a) / (static_cast<long double>(n) * (n + 2)));
}

inline std::vector<Line> fuzzy_lines(int n, bool zero_modes = false, long double radius = 1.0L) {
  std::vector<Line> lines;
  for (int l = 1; l <= (zero_modes ? n + 1 : n); ++l)
    lines.push_back({fuzzy_eigenvalue_sq(n, l) / (radius * radius), 4.0L * l});
  return lines;
}

inline std::vector<Line> standard_lines(int n_max) {
  std::vector<Line> lines;
  for (int n = 1; n <= n_max; ++n) lines.push_back({static_cast<long double>(n) * n, 4.0L * n});
  return lines;
}

inline long double trace(const std::vector<Line>& lines, long double t) {
  long double sum = 0.0L;
  for (const auto& line : lines) sum += line.degeneracy * std::exp(-line.eigenvalue_sq * t);
  return sum;
}

inline long double trace_derivative(const std::vector<Line>& lines, long double t) {
  long double sum = 0.0L;
  for (const auto& line : lines)
    sum -= line.degeneracy * line.eigenvalue_sq * std::exp(-line.eigenvalue_sq * t);
  return sum;
}

inline long double area(const std::vector<Line>& lines, long double lambda) {
  const long double t = 1.0L / (lambda * lambda);
  return 2.0L * 3.141592653589793238462643383279502884L * (trace(lines, t) + 1.0L / 3.0L) * t;
}

inline long double dimension(const std::vector<Line>& lines, long double lambda) {
  const long double t = 1.0L / (lambda * lambda);
  return -2.0L * t * trace_derivative(lines, t) / trace(lines, t);
}

// Brute-force argmax over a log grid, then over a second log grid spanning
// the neighbouring cells of the first argmax.
template <typename F>
std::pair<double, double> grid_argmax(F&& f, double lo, double hi, int points = 10000) {
  auto scan = [&](double a, double b, int& index) {
    double best_x = a;
    double best_v = -INFINITY;
    const double step = std::log(b / a) / (points - 1);
    for (int i = 0; i < points; ++i) {
      const double x = a * std::exp(step * i);
      const double v = f(x);
      if (v > best_v) {
        best_v = v;
        best_x = x;
        index = i;
      }
    }
    return std::pair{best_x, best_v};
  };
  int index = 0;
  const auto coarse = scan(lo, hi, index);
  const double step = std::log(hi / lo) / (points - 1);
  const double a = std::max(lo, coarse.first * std::exp(-step));
  const double b = std::min(hi, coarse.first * std::exp(step));
  return scan(a, b, index);
}

}  // namespace oracle
