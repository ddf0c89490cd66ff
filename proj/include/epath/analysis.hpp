#pragma once

// Cross-checks and parameter studies built on the solver: the
// Hellmann-Feynman derivative through left/right Ritz vectors, an isospectral
// reformulation of the Hermitian model, and deformation scans that line the
// numerical levels up against the series estimates.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "epath/matrix_builder.hpp"
#include "epath/model.hpp"
#include "epath/perturbation.hpp"
#include "epath/solver.hpp"

namespace epath {

struct BiorthogonalityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dE/dxi of one level from the stationarity of the Ritz value: with right
// vector y and left vector z of the reduced matrix, dE/dxi = z^t C' y / z^t y.
inline double hft_derivative(ModelKind model, const SymmetryClass& c, double xi, long size,
                             long level) {
  if (level < 0 || level >= size) throw std::invalid_argument("level index out of range");
  const ReducedEigenPairs<double> pairs = solve_pairs<double>(model, c, xi, size);
  const Matrix<double> cprime =
      reduced_matrix<double>(model, c, xi, size, solve_rule(size), true);
  const Vector<double> y = pairs.right.col(level);
  const Vector<double> z = pairs.left.col(level);
  const double zy = z.dot(y);
  if (std::abs(zy) < 1e-10)
    throw BiorthogonalityFailure("left and right Ritz vectors are numerically orthogonal");
  return z.dot(cprime * y) / zy;
}

// The non-Hermitian model is isomorphic to a self-adjoint operator, so its
// spectrum is also that of the manifestly symmetric pencil on the
// curve-length weight: stiffness int v_i' v_j' / sqrt(g) against mass
// int v_i v_j sqrt(g), assembled on the same harmonic span per class.  The
// merged positive levels of both formulations must coincide.
struct IsospectralReport {
  double xi;
  long size;
  std::vector<double> direct;       // plain-product path, ascending positives
  std::vector<double> transformed;  // weighted symmetric pencil, ascending positives
  double max_gap;                   // worst |direct - transformed| / transformed
};

inline IsospectralReport isospectral_check(double xi, long size, long count) {
  if (count < 1 || count > 4 * size - 1)
    throw std::invalid_argument("level count must lie in [1, 4 size - 1]");
  require_valid_xi(xi);

  const QuadratureRule rule = solve_rule(size);
  const int m = rule.node_count;
  const double step = 2.0 * pi_value<double>() / m;

  std::vector<double> mass_w(m), stiff_w(m);
  for (int j = 0; j < m; ++j) {
    const double root = std::sqrt(metric(step * j, xi));
    mass_w[j] = root * step;
    stiff_w[j] = step / root;
  }

  std::vector<double> direct, transformed;
  for (const SymmetryClass& c : all_classes) {
    const Spectrum<double> plain =
        solve<double>(ModelKind::PathNonHermitian, c, xi, size);
    direct.insert(direct.end(), plain.eigenvalues.begin(), plain.eigenvalues.end());

    const bool sine = c.reflection_parity < 0;
    Matrix<double> stiffness(size, size), mass(size, size);
    for (long i = 0; i < size; ++i) {
      const double ni = static_cast<double>(class_fourier_index(c, i));
      for (long k = i; k < size; ++k) {
        const double nk = static_cast<double>(class_fourier_index(c, k));
        double a = 0.0, b = 0.0;
        for (int j = 0; j < m; ++j) {
          const double phi = step * j;
          const double vi = sine ? std::sin(ni * phi) : std::cos(ni * phi);
          const double vk = sine ? std::sin(nk * phi) : std::cos(nk * phi);
          const double dvi = sine ? ni * std::cos(ni * phi) : -ni * std::sin(ni * phi);
          const double dvk = sine ? nk * std::cos(nk * phi) : -nk * std::sin(nk * phi);
          a += dvi * dvk * stiff_w[j];
          b += vi * vk * mass_w[j];
        }
        stiffness(i, k) = stiffness(k, i) = a;
        mass(i, k) = mass(k, i) = b;
      }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<double>> es(stiffness, mass);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("generalized eigensolver failed on the weighted forms");
    for (long k = 0; k < size; ++k) transformed.push_back(es.eigenvalues()(k));
  }

  // The flat level sits at zero in both lists; the comparison covers the
  // positive part of the spectrum.
  const auto positives = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(v.begin(), std::find_if(v.begin(), v.end(), [](double e) { return e > 1e-6; }));
  };
  positives(direct);
  positives(transformed);
  if (static_cast<long>(direct.size()) < count ||
      static_cast<long>(transformed.size()) < count)
    throw std::runtime_error("fewer positive levels than requested");

  IsospectralReport report{xi, size, {}, {}, 0.0};
  for (long k = 0; k < count; ++k) {
    const double d = direct[static_cast<std::size_t>(k)];
    const double t = transformed[static_cast<std::size_t>(k)];
    report.direct.push_back(d);
    report.transformed.push_back(t);
    report.max_gap = std::max(report.max_gap, std::abs(d - t) / t);
  }
  return report;
}

struct ScanGrid {
  double xi_min;
  double xi_max;
  long steps;  // steps = 1 evaluates xi_min only
};

struct ScanRow {
  double xi;
  long level_index;  // position in the merged spectrum
  SymmetryClass symmetry;
  long unperturbed_index;
  double energy;
  double pt_first_order;
  double pt_improved;
  std::optional<double> pt_series4;  // order-4 series, Hermitian model n in {1, 2}
};

// Energies along a deformation grid next to the closed-form estimates; the
// exact order-4 series rides along where it is tabulated.
inline std::vector<ScanRow> scan(ModelKind model, const ScanGrid& grid, long size,
                                 long level_count) {
  if (grid.steps < 1) throw std::invalid_argument("grid needs at least one step");
  if (level_count < 1 || level_count > 4 * size)
    throw std::invalid_argument("level count must lie in [1, 4 size]");
  require_valid_xi(grid.xi_min);
  require_valid_xi(grid.xi_max);

  std::map<std::pair<int, long>, RationalSeries> series;
  if (model == ModelKind::PathHermitian) {
    for (long n : {1L, 2L}) {
      const auto [ca, cb] = classes_sharing(n);
      for (const SymmetryClass& c : {ca, cb})
        series.emplace(std::pair{class_rank(c), n}, eigenvalue_series(model, c, n, 4));
    }
  }

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(grid.steps * level_count));
  for (long i = 0; i < grid.steps; ++i) {
    const double xi = grid.steps == 1
                          ? grid.xi_min
                          : grid.xi_min + (grid.xi_max - grid.xi_min) *
                                              static_cast<double>(i) /
                                              static_cast<double>(grid.steps - 1);
    const std::vector<MergedLevel> merged = merged_spectrum(model, xi, size, level_count);
    for (long k = 0; k < level_count; ++k) {
      const MergedLevel& lvl = merged[static_cast<std::size_t>(k)];
      ScanRow row{xi,
                  k,
                  lvl.symmetry,
                  lvl.unperturbed_index,
                  lvl.energy,
                  first_order_energy(lvl.unperturbed_index, xi),
                  improved_energy(lvl.unperturbed_index, xi),
                  std::nullopt};
      const auto it = series.find({class_rank(lvl.symmetry), lvl.unperturbed_index});
      if (it != series.end())
        row.pt_series4 = rational_cast<double>(evaluate_series(it->second, Rational(xi)));
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace epath
