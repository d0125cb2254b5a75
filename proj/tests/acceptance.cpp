// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzy_spectral/algebra.hpp"
#include "fuzzy_spectral/app.hpp"
#include "fuzzy_spectral/heat_kernel.hpp"
#include "fuzzy_spectral/kernels.hpp"
#include "fuzzy_spectral/observables.hpp"
#include "fuzzy_spectral/spectrum.hpp"
#include "oracle.hpp"

using namespace fuzzy;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

std::vector<double> log_points(double lo, double hi, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(lo * std::pow(hi / lo, i / (count - 1.0)));
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome algebra_exactness() {
  Outcome o;
  for (int n = 1; n <= 50; ++n) {
    const auto c = fuzzy_coordinates({n, 1.0});
    const double comm = commutator_residual(c);
    const double cas = casimir_residual(c);
    o.require(comm <= 1e-10, "N=" + std::to_string(n) + " commutator residual " + num(comm));
    o.require(cas <= 1e-10, "N=" + std::to_string(n) + " Casimir residual " + num(cas));
  }
  return o;
}

Outcome zero_mode_theorem() {
  Outcome o;
  for (int n = 1; n <= 100; ++n) {
    const auto s = fuzzy_dirac_spectrum({n, 1.0, true});
    const double zero = s.lines().front().eigenvalue_sq;
    o.require(s.lines().front().l == n + 1, "N=" + std::to_string(n) + " lowest line is not l=N+1");
    o.require(std::abs(zero) <= 1e-12, "N=" + std::to_string(n) + " zero mode " + num(zero));
  }
  return o;
}

Outcome spectral_ceiling_and_shape() {
  Outcome o;
  for (int n = 2; n <= 200; ++n) {
    const std::string tag = "N=" + std::to_string(n);
    std::vector<double> raw;
    for (int l = 1; l <= n + 1; ++l) raw.push_back(fuzzy_eigenvalue_sq(n, l));
    std::size_t peak = 0;
    for (std::size_t i = 1; i < raw.size(); ++i)
      if (raw[i] > raw[peak]) peak = i;
    o.require(peak > 0 && peak + 1 < raw.size(), tag + " maximum not interior");
    for (std::size_t i = 1; i < raw.size(); ++i) {
      if (i <= peak)
        o.require(raw[i] >= raw[i - 1], tag + " not rising before the peak");
      else
        o.require(raw[i] <= raw[i - 1], tag + " not falling after the peak");
    }
    // Brute-force oracle: textbook formula over every l.
    long double brute = 0.0L;
    for (int l = 1; l <= n + 1; ++l) brute = std::max(brute, oracle::fuzzy_eigenvalue_sq(n, l));
    const double ceiling = fuzzy_eigenvalue_ceiling(n);
    o.require(static_cast<double>(brute) <= ceiling * (1 + 1e-15), tag + " oracle max above ceiling");
    o.require(max_eigenvalue_sq(fuzzy_dirac_spectrum({n})) <= ceiling * (1 + 1e-15),
              tag + " spectrum max above ceiling");
    o.require(std::abs(max_eigenvalue_sq(fuzzy_dirac_spectrum({n})) - static_cast<double>(brute)) <=
                  1e-13 * static_cast<double>(brute),
              tag + " spectrum max differs from oracle");
  }
  return o;
}

Outcome standard_sphere_recovery() {
  Outcome o;
  const auto s = standard_dirac_spectrum(40);
  const double four_pi = 4.0 * std::numbers::pi;
  for (double lambda : log_points(2.0, 5.0, 50)) {
    const double ratio = area(s, lambda) / four_pi;
    const double d = spectral_dimension(s, lambda);
    o.require(ratio >= 0.995 && ratio <= 1.005, "A/4pi=" + num(ratio) + " at Lambda=" + num(lambda));
    o.require(d >= 1.95 && d <= 2.10, "D_s=" + num(d) + " at Lambda=" + num(lambda));
  }
  const double a3 = area(s, 3.0);
  const double oracle_a3 = static_cast<double>(oracle::area(oracle::standard_lines(40), 3.0L));
  o.require(std::abs(a3 - 12.5635) / 12.5635 <= 1e-3, "A(3)=" + num(a3));
  o.require(std::abs(a3 - oracle_a3) / oracle_a3 <= 1e-3, "A(3) vs oracle " + num(oracle_a3));
  return o;
}

Outcome fuzzy_high_energy_decay() {
  Outcome o;
  for (int n : {2, 8, 32}) {
    const auto s = fuzzy_dirac_spectrum({n});
    const double a = area(s, 100.0);
    const double d = spectral_dimension(s, 100.0);
    const double a_cap = 2.0 * std::numbers::pi * (2.0 * n * (n + 1) + 1.0 / 3.0) / 1e4 + 1e-12;
    const double d_cap = 2.0 * max_eigenvalue_sq(s) / 1e4 + 1e-12;
    o.require(a <= a_cap, "N=" + std::to_string(n) + " A(100)=" + num(a));
    o.require(d <= d_cap, "N=" + std::to_string(n) + " D_s(100)=" + num(d));
    // Both continue towards zero.
    o.require(area(s, 1e3) < a && spectral_dimension(s, 1e3) < d, "no further decay past 100");
  }
  return o;
}

struct PeakCase {
  int n;
  double lo;
  double hi;
};

Outcome peak_ordering(Observable which, const std::vector<PeakCase>& cases, bool increasing) {
  Outcome o;
  double previous = increasing ? -INFINITY : INFINITY;
  for (const auto& c : cases) {
    const std::string tag = "N=" + std::to_string(c.n);
    const auto s = fuzzy_dirac_spectrum({c.n});
    const auto peak = find_peak(s, which, c.lo, c.hi);
    const auto lines = oracle::fuzzy_lines(c.n);
    const auto [arg, best] = oracle::grid_argmax(
        [&](double l) {
          return static_cast<double>(which == Observable::area ? oracle::area(lines, l)
                                                               : oracle::dimension(lines, l));
        },
        c.lo, c.hi);
    o.require(std::abs(peak.lambda_star - arg) / arg <= 1e-4,
              tag + " lambda*=" + num(peak.lambda_star) + " oracle " + num(arg));
    o.require(std::abs(peak.value - best) <= 1e-10 * std::abs(best), tag + " peak value vs oracle");
    if (increasing)
      o.require(peak.value > previous, tag + " peak " + num(peak.value) + " not above previous");
    else
      o.require(peak.value < previous, tag + " peak " + num(peak.value) + " not below previous");
    if (which == Observable::dimension) o.require(peak.value > 2.0, tag + " dimension peak <= 2");
    previous = peak.value;
  }
  return o;
}

Outcome derivative_cross_check() {
  Outcome o;
  for (int n : {2, 8, 32}) {
    const auto s = fuzzy_dirac_spectrum({n});
    for (double lambda : log_points(0.3, 30.0, 200)) {
      const double diff = std::abs(spectral_dimension(s, lambda) - spectral_dimension_fd(s, lambda, 1e-4));
      o.require(diff <= 1e-5, "N=" + std::to_string(n) + " Lambda=" + num(lambda) + " diff " + num(diff));
    }
  }
  return o;
}

Outcome spot_values() {
  Outcome o;
  const auto s = fuzzy_dirac_spectrum({2});
  const double p = heat_trace(s, 1.0);
  const double a = area(s, 1.0);
  const double d = spectral_dimension(s, 1.0);
  o.require(std::abs(p - 2.128198) <= 1e-6, "P=" + num(p));
  const double oracle_a = static_cast<double>(oracle::area(oracle::fuzzy_lines(2), 1.0L));
  o.require(std::abs(a - 15.4665) <= 1e-4,
            "A=" + num(a) + " vs stated 15.4665 (|diff| " + num(std::abs(a - 15.4665)) +
                "); direct long-double oracle gives " + num(oracle_a) +
                " and 2pi(2.128198+1/3)=" + num(2.0 * std::numbers::pi * (2.128198 + 1.0 / 3.0)));
  o.require(std::abs(d - 2.9257) <= 1e-4, "D_s=" + num(d));
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto root = std::filesystem::temp_directory_path() / "fuzzy_spectral_acceptance";
  std::filesystem::remove_all(root);
  std::vector<std::vector<std::string>> runs;
  for (unsigned threads : {1u, 1u, 2u, 4u, 8u}) {
    app::RunConfig config;
    config.command = app::Command::figures;
    config.n_list = {2, 4, 8, 16, 32};
    config.threads = threads;
    config.output_path = root / ("run" + std::to_string(runs.size()));
    std::vector<std::string> contents;
    for (const auto& path : app::run_figures(config))
      if (path.extension() == ".csv") contents.push_back(slurp(path));
    runs.push_back(std::move(contents));
  }
  for (std::size_t r = 1; r < runs.size(); ++r)
    o.require(runs[r] == runs[0], "run " + std::to_string(r) + " differs from run 0");
  o.require(runs[0].size() == 6, "expected 6 curve files");
  std::filesystem::remove_all(root);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional argument: kernel name (scalar, avx2, auto).
  if (argc > 1) kernels::set_active(kernels::parse_kind(argv[1]));
  std::cout << "kernel: " << kernels::to_string(kernels::active()) << '\n';
  const std::vector<Criterion> criteria = {
      {1, "algebra exactness, N=1..50", 5.0, algebra_exactness},
      {2, "zero-mode theorem, N=1..100", 1.0, zero_mode_theorem},
      {3, "spectral ceiling and single peak, N=2..200", 1.0, spectral_ceiling_and_shape},
      {4, "standard-sphere recovery, n_max=40", 1.0, standard_sphere_recovery},
      {5, "fuzzy high-energy decay", 1.0, fuzzy_high_energy_decay},
      {6, "area peaks increase with N", 5.0,
       [] {
         return peak_ordering(Observable::area,
                              {{2, 0.6, 1000.0}, {4, 0.6, 1000.0}, {8, 0.6, 1000.0}, {16, 0.6, 1000.0}},
                              true);
       }},
      {7, "dimension peaks decrease towards 2", 5.0,
       [] {
         return peak_ordering(Observable::dimension,
                              {{4, 1.05, 100.0}, {8, 1.5, 200.0}, {16, 2.0, 400.0}, {32, 3.0, 800.0}},
                              false);
       }},
      {8, "analytic vs finite-difference D_s", 1.0, derivative_cross_check},
      {9, "spot values at N=2, Lambda=1", 1.0, spot_values},
      {10, "figures determinism across thread counts", 5.0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.require(false, "runtime " + num(seconds) + " s over budget " + num(c.budget_seconds) + " s");
    }
    std::printf("[%s] %2d. %-45s (%.3f s)%s%s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.name, seconds,
                outcome.passed ? "" : "  ", outcome.detail.c_str());
    if (!outcome.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
