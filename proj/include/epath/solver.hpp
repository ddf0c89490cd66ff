#pragma once

// Generalized eigensolver for the Rayleigh-Ritz systems.  A RitzSystem is
// solved through its harmonic-basis congruence: with S = T^t D T the pencil
// (H, S) and the reduced pencil (Hhat, D) share their spectrum, and the
// reduction C = D^{-1/2} Hhat D^{-1/2} keeps the conditioning of the constant
// diagonal D instead of the 4^-N collapse of the monomial overlap.  The
// Hermitian model takes the symmetric QR path, the non-Hermitian one a real
// Schur decomposition whose eigenvalues must come out real to tolerance.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "epath/matrix_builder.hpp"
#include "epath/model.hpp"
#include "epath/quadrature.hpp"

namespace epath {

struct CholeskyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RealityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Imaginary parts of non-Hermitian Ritz values must stay below this.
template <class Real>
Real imag_tolerance(const Real& real_part) {
  using std::abs;
  const Real m = abs(real_part);
  return Real(1e-8) * (m > Real(1) ? m : Real(1));
}

// Two adjacent merged levels closer than this count as a degenerate pair.
inline double pairing_tolerance(double energy) {
  return 1e-8 * std::max(1.0, std::abs(energy));
}

// Solve rule: twice the assembly floor, so the aliasing error sits well below
// the eigenvalue tolerances for every tabulated deformation.
inline QuadratureRule solve_rule(long size) {
  return QuadratureRule(2 * auto_rule(static_cast<int>(size)).node_count);
}

// C = D^{-1/2} Hhat D^{-1/2} (or the same contraction of the xi derivative).
template <class Real = double>
Matrix<Real> reduced_matrix(ModelKind model, const SymmetryClass& c, const Real& xi,
                            long size, const QuadratureRule& rule,
                            bool xi_derivative = false) {
  const Matrix<Real> h = trig_hamiltonian<Real>(model, c, xi, size, rule, xi_derivative);
  const Vector<Real> d = trig_gram_diagonal<Real>(c, size);
  using std::sqrt;
  Vector<Real> root(size);
  for (long i = 0; i < size; ++i) {
    if (!(d(i) > Real(0)))
      throw CholeskyFailure("gram diagonal lost positivity in the reduction");
    root(i) = sqrt(d(i));
  }
  Matrix<Real> cmat(size, size);
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j) cmat(i, j) = h(i, j) / (root(i) * root(j));
  return cmat;
}

template <class Real = double>
struct Spectrum {
  ModelKind model;
  SymmetryClass symmetry;
  Real xi;
  long size;
  std::vector<Real> eigenvalues;     // ascending by real part
  std::vector<Real> imag_residuals;  // |Im W| per eigenvalue, zero on the symmetric path
  double condition_estimate;         // 1-norm condition of the monomial overlap
};

namespace detail {

template <class Real>
std::vector<long> ascending_order(const std::vector<Real>& v) {
  std::vector<long> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0L);
  std::sort(idx.begin(), idx.end(), [&](long a, long b) {
    return v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)];
  });
  return idx;
}

}  // namespace detail

template <class Real = double>
Spectrum<Real> solve(ModelKind model, const SymmetryClass& c, const Real& xi, long size,
                     long count = -1) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  if (count < 0) count = size;
  if (count > size) throw std::invalid_argument("cannot request more levels than basis members");
  require_valid_xi(xi);

  const Matrix<Real> cmat = reduced_matrix<Real>(model, c, xi, size, solve_rule(size));
  std::vector<Real> values(static_cast<std::size_t>(size));
  std::vector<Real> residuals(static_cast<std::size_t>(size), Real(0));

  if (model == ModelKind::PathHermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix<Real>> es(cmat);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("symmetric eigensolver failed to converge");
    for (long i = 0; i < size; ++i) values[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  } else {
    Eigen::EigenSolver<Matrix<Real>> es(cmat);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("real Schur eigensolver failed to converge");
    using std::abs;
    for (long i = 0; i < size; ++i) {
      const auto w = es.eigenvalues()(i);
      const Real im = abs(w.imag());
      if (im > imag_tolerance(w.real()))
        throw RealityViolation("non-real Ritz value in class " +
                               std::string(class_token(c)));
      values[static_cast<std::size_t>(i)] = w.real();
      residuals[static_cast<std::size_t>(i)] = im;
    }
    const std::vector<long> order = detail::ascending_order(values);
    std::vector<Real> sv(values.size()), sr(values.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      sv[k] = values[static_cast<std::size_t>(order[k])];
      sr[k] = residuals[static_cast<std::size_t>(order[k])];
    }
    values = std::move(sv);
    residuals = std::move(sr);
  }

  values.resize(static_cast<std::size_t>(count));
  residuals.resize(static_cast<std::size_t>(count));
  return Spectrum<Real>{model, c, xi, size, std::move(values), std::move(residuals),
                        overlap_condition(c, size)};
}

template <class Real = double>
Spectrum<Real> solve(const RitzSystem<Real>& system, long count = -1) {
  return solve<Real>(system.model, system.symmetry, system.xi, system.size, count);
}

// Right and left eigenvectors of the reduced matrix, matched by eigenvalue
// proximity; on the symmetric path the two sets coincide.
template <class Real = double>
struct ReducedEigenPairs {
  std::vector<Real> values;  // ascending
  Matrix<Real> right;        // column k belongs to values[k]
  Matrix<Real> left;
  Vector<Real> gram_sqrt;
};

template <class Real = double>
ReducedEigenPairs<Real> solve_pairs(ModelKind model, const SymmetryClass& c, const Real& xi,
                                    long size) {
  if (size < 1) throw std::invalid_argument("basis size must be positive");
  require_valid_xi(xi);
  const Matrix<Real> cmat = reduced_matrix<Real>(model, c, xi, size, solve_rule(size));
  const Vector<Real> d = trig_gram_diagonal<Real>(c, size);
  using std::sqrt;
  Vector<Real> root(size);
  for (long i = 0; i < size; ++i) root(i) = sqrt(d(i));

  ReducedEigenPairs<Real> out;
  out.gram_sqrt = std::move(root);

  if (model == ModelKind::PathHermitian) {
    Eigen::SelfAdjointEigenSolver<Matrix<Real>> es(cmat);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("symmetric eigensolver failed to converge");
    out.values.resize(static_cast<std::size_t>(size));
    for (long i = 0; i < size; ++i) out.values[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    out.right = es.eigenvectors();
    out.left = out.right;
    return out;
  }

  Eigen::EigenSolver<Matrix<Real>> right_es(cmat);
  Eigen::EigenSolver<Matrix<Real>> left_es(cmat.transpose().eval());
  if (right_es.info() != Eigen::Success || left_es.info() != Eigen::Success)
    throw std::runtime_error("real Schur eigensolver failed to converge");

  using std::abs;
  std::vector<Real> raw(static_cast<std::size_t>(size));
  for (long i = 0; i < size; ++i) {
    const auto w = right_es.eigenvalues()(i);
    if (abs(w.imag()) > imag_tolerance(w.real()))
      throw RealityViolation("non-real Ritz value in class " + std::string(class_token(c)));
    raw[static_cast<std::size_t>(i)] = w.real();
  }
  const std::vector<long> order = detail::ascending_order(raw);

  out.values.resize(static_cast<std::size_t>(size));
  out.right.resize(size, size);
  out.left.resize(size, size);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (long k = 0; k < size; ++k) {
    const long src = order[static_cast<std::size_t>(k)];
    const Real w = raw[static_cast<std::size_t>(src)];
    out.values[static_cast<std::size_t>(k)] = w;
    for (long r = 0; r < size; ++r) out.right(r, k) = right_es.eigenvectors()(r, src).real();

    long best = -1;
    Real best_gap(0);
    for (long j = 0; j < size; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const Real gap = abs(left_es.eigenvalues()(j).real() - w);
      if (best < 0 || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    const Real m = abs(w) > Real(1) ? abs(w) : Real(1);
    if (best < 0 || best_gap > Real(1e-9) * m)
      throw PairingFailure("left and right Ritz values failed to match");
    used[static_cast<std::size_t>(best)] = true;
    for (long r = 0; r < size; ++r) out.left(r, k) = left_es.eigenvectors()(r, best).real();
  }
  return out;
}

template <class Real = double>
struct ConvergenceTable {
  ModelKind model;
  SymmetryClass symmetry;
  Real xi;
  std::vector<long> sizes;
  long level_count;
  std::vector<std::vector<Real>> energies;  // energies[row][level]
};

template <class Real = double>
ConvergenceTable<Real> convergence_scan(ModelKind model, const SymmetryClass& c, const Real& xi,
                                        long size_begin, long size_end, long level_count) {
  if (level_count < 1) throw std::invalid_argument("level count must be positive");
  if (size_begin < level_count)
    throw std::invalid_argument("smallest basis must hold the requested levels");
  if (size_end < size_begin) throw std::invalid_argument("empty basis size range");
  ConvergenceTable<Real> table{model, c, xi, {}, level_count, {}};
  for (long n = size_begin; n <= size_end; ++n) {
    const Spectrum<Real> sp = solve<Real>(model, c, xi, n, level_count);
    table.sizes.push_back(n);
    table.energies.push_back(sp.eigenvalues);
  }
  return table;
}

struct MergedLevel {
  double energy;
  SymmetryClass symmetry;
  long unperturbed_index;  // harmonic index n of the xi = 0 limit
  long index_in_class;
  bool paired_with_previous;
};

// All four class spectra merged into one ascending list; exact ties fall back
// to the class order (+,+) < (+,-) < (-,+) < (-,-).
inline std::vector<MergedLevel> merged_spectrum(ModelKind model, double xi, long size,
                                                long count = -1) {
  std::vector<MergedLevel> all;
  all.reserve(static_cast<std::size_t>(4 * size));
  for (const SymmetryClass& c : all_classes) {
    const Spectrum<double> sp = solve<double>(model, c, xi, size);
    for (long k = 0; k < size; ++k)
      all.push_back({sp.eigenvalues[static_cast<std::size_t>(k)], c,
                     class_fourier_index(c, k), k, false});
  }
  std::sort(all.begin(), all.end(), [](const MergedLevel& a, const MergedLevel& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (class_rank(a.symmetry) != class_rank(b.symmetry))
      return class_rank(a.symmetry) < class_rank(b.symmetry);
    return a.index_in_class < b.index_in_class;
  });
  // Near-degenerate runs are reordered by class rank so the output stays
  // deterministic when independent solves land a pair in either order.
  for (std::size_t lo = 0; lo < all.size();) {
    std::size_t hi = lo + 1;
    while (hi < all.size() && std::abs(all[hi].energy - all[hi - 1].energy) <=
                                  pairing_tolerance(all[hi].energy))
      ++hi;
    std::sort(all.begin() + static_cast<long>(lo), all.begin() + static_cast<long>(hi),
              [](const MergedLevel& a, const MergedLevel& b) {
                if (class_rank(a.symmetry) != class_rank(b.symmetry))
                  return class_rank(a.symmetry) < class_rank(b.symmetry);
                return a.index_in_class < b.index_in_class;
              });
    lo = hi;
  }
  if (count < 0) count = static_cast<long>(all.size());
  if (count > static_cast<long>(all.size()))
    throw std::invalid_argument("cannot request more merged levels than computed");
  all.resize(static_cast<std::size_t>(count));
  for (std::size_t i = 1; i < all.size(); ++i)
    all[i].paired_with_previous =
        std::abs(all[i].energy - all[i - 1].energy) <= pairing_tolerance(all[i].energy);
  return all;
}

struct ConjectureReport {
  double xi;
  long size;
  double ground_scale;            // E_1, the lowest level of the (+,-) block
  std::vector<long> levels;       // n = 1 .. count
  std::vector<double> deviation;  // worst relative gap to n^2 E_1 over both classes
  double max_deviation;
};

// Tests the scaling law E_n = n^2 E_1 of the non-Hermitian model on both
// classes holding each level.
inline ConjectureReport conjecture_check(double xi, long size, long count) {
  if (count < 1) throw std::invalid_argument("level count must be positive");
  if (size < count + 2) throw std::invalid_argument("basis too small for the requested levels");
  Spectrum<double> block[4];
  for (const SymmetryClass& c : all_classes)
    block[class_rank(c)] = solve<double>(ModelKind::PathNonHermitian, c, xi, size);
  const double e1 = block[class_rank(class_pm)].eigenvalues.front();

  ConjectureReport report{xi, size, e1, {}, {}, 0.0};
  for (long n = 1; n <= count; ++n) {
    const double target = static_cast<double>(n * n) * e1;
    const auto [ca, cb] = classes_sharing(n);
    double worst = 0.0;
    for (const SymmetryClass& c : {ca, cb}) {
      const double e =
          block[class_rank(c)].eigenvalues[static_cast<std::size_t>(class_level_slot(c, n))];
      worst = std::max(worst, std::abs(e - target) / e);
    }
    report.levels.push_back(n);
    report.deviation.push_back(worst);
    report.max_deviation = std::max(report.max_deviation, worst);
  }
  return report;
}

}  // namespace epath
