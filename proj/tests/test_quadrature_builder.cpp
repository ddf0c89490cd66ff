#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <epath/matrix_builder.hpp>
#include <epath/quadrature.hpp>
#include <epath/rational.hpp>
#include <epath/trigpoly.hpp>

using namespace epath;

namespace {

Rational binomial(long n, long k) {
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return Rational(num) / Rational(den);
}

// int cos^{2m} dphi / pi = 2 C(2m, m) / 4^m.
Rational cos_power_mean(long m) {
  Rational r = 2 * binomial(2 * m, m);
  for (long i = 0; i < m; ++i) r /= 4;
  return r;
}

}  // namespace

TEST_CASE("quadrature rule validation and the resolution floor") {
  REQUIRE_THROWS_AS(QuadratureRule(15), std::invalid_argument);
  REQUIRE_THROWS_AS(QuadratureRule(14), std::invalid_argument);
  REQUIRE_NOTHROW(QuadratureRule(16));
  REQUIRE(auto_rule(1).node_count == 64);
  REQUIRE(auto_rule(4).node_count == 64);
  REQUIRE(auto_rule(12).node_count == 128);
  REQUIRE_THROWS_AS(auto_rule(0), std::invalid_argument);
}

TEST_CASE("periodic rule integrates trigonometric polynomials exactly") {
  const double pi = pi_value<double>();
  const QuadratureRule rule(16);
  const double a =
      integrate<double>(rule, [](double phi) { return std::cos(3 * phi) * std::cos(3 * phi); });
  REQUIRE(a == Catch::Approx(pi).epsilon(1e-14));
  const double b = integrate<double>(rule, [](double phi) { return std::sin(2 * phi); });
  REQUIRE(b == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("metric integrals match their closed forms") {
  const double pi = pi_value<double>();
  for (const double xi : {-0.5, 1.0, 2.0}) {
    const double root = std::sqrt(1.0 + xi);
    REQUIRE(trig_rational_integral(0, 1, xi) == Catch::Approx(2 * pi / root).epsilon(1e-12));
    REQUIRE(trig_rational_integral(2, 1, xi) ==
            Catch::Approx(2 * pi / xi * (1.0 - 1.0 / root)).epsilon(1e-12));
    REQUIRE(trig_rational_integral(0, 2, xi) ==
            Catch::Approx(pi * (2.0 + xi) / (root * root * root)).epsilon(1e-12));
    REQUIRE(trig_rational_integral(2, 2, xi) ==
            Catch::Approx(pi / (root * root * root)).epsilon(1e-12));
  }
  REQUIRE_THROWS_AS(trig_rational_integral(3, 1, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(trig_rational_integral(0, 3, 1.0), std::invalid_argument);
}

TEST_CASE("adaptive integral reports non-convergence near the metric boundary") {
  REQUIRE_THROWS_AS(trig_rational_integral(0, 2, -1.0 + 1e-9), NonConvergence);
}

TEST_CASE("exact overlaps agree with the double-factorial means") {
  for (long i = 0; i <= 5; ++i) {
    for (long j = 0; j <= 5; ++j) {
      REQUIRE(overlap_over_pi(class_pp, i, j) == cos_power_mean(i + j));
      REQUIRE(overlap_over_pi(class_pm, i, j) == cos_power_mean(i + j + 1));
      REQUIRE(overlap_over_pi(class_mm, i, j) ==
              cos_power_mean(i + j) - cos_power_mean(i + j + 1));
      REQUIRE(overlap_over_pi(class_mp, i, j) ==
              cos_power_mean(i + j + 1) - cos_power_mean(i + j + 2));
    }
  }
  REQUIRE(overlap_element<double>(class_pp, 0, 0) == Catch::Approx(2 * pi_value<double>()));
}

TEST_CASE("monomial matrix elements at xi = 0 reduce to exact curvature terms") {
  const QuadratureRule rule = auto_rule(6);
  for (const SymmetryClass& c : all_classes) {
    for (long i = 0; i <= 4; ++i) {
      for (long j = 0; j <= 4; ++j) {
        const TrigPoly ui = TrigPoly::basis_member(c, i);
        const TrigPoly minus_ujpp =
            TrigPoly::basis_member(c, j).derivative().derivative().scaled(Rational(-1));
        const double expected =
            rational_cast<double>(ui.inner_over_pi(minus_ujpp)) * pi_value<double>();
        for (const ModelKind model :
             {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
          const double got = hamiltonian_element<double>(model, c, 0.0, i, j, rule);
          REQUIRE(got == Catch::Approx(expected).margin(1e-11));
        }
      }
    }
  }
}

TEST_CASE("monomial assembly is stable under node doubling") {
  const long n = 6;
  const QuadratureRule rule = auto_rule(n);
  const QuadratureRule fine(2 * rule.node_count);
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        const double a = hamiltonian_element<double>(model, class_pm, 1.0, i, j, rule);
        const double b = hamiltonian_element<double>(model, class_pm, 1.0, i, j, fine);
        REQUIRE(a == Catch::Approx(b).margin(1e-10 * std::max(1.0, std::abs(b))));
      }
  }
}

TEST_CASE("assembled systems carry the contracted invariants") {
  const long n = 6;
  const auto sys = build_system<double>(ModelKind::PathHermitian, class_mm, 1.0, n);

  SECTION("overlap is symmetric positive definite") {
    Eigen::LLT<Matrix<double>> llt(sys.s_matrix);
    REQUIRE(llt.info() == Eigen::Success);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) REQUIRE(sys.s_matrix(i, j) == sys.s_matrix(j, i));
  }

  SECTION("overlap ignores the deformation") {
    const auto other = build_system<double>(ModelKind::PathHermitian, class_mm, 0.25, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) REQUIRE(sys.s_matrix(i, j) == other.s_matrix(i, j));
  }

  SECTION("the Hermitian model assembles symmetrically") {
    double scale = 0.0;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) scale = std::max(scale, std::abs(sys.h_matrix(i, j)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        REQUIRE(std::abs(sys.h_matrix(i, j) - sys.h_matrix(j, i)) <= 1e-12 * scale);
  }

  SECTION("matrix entries match the element functions") {
    REQUIRE(sys.h_matrix(2, 3) ==
            hamiltonian_element<double>(ModelKind::PathHermitian, class_mm, 1.0, 2, 3,
                                        sys.rule));
    REQUIRE(sys.s_matrix(1, 4) == overlap_element<double>(class_mm, 1, 4));
  }
}

TEST_CASE("undeformed pencil returns the squared harmonic indices") {
  const long n = 6;
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    for (const SymmetryClass& c : all_classes) {
      const auto sys = build_system<double>(model, c, 0.0, n);
      Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<double>> es(sys.h_matrix, sys.s_matrix);
      REQUIRE(es.info() == Eigen::Success);
      for (long k = 0; k < n; ++k) {
        const double expected = static_cast<double>(class_fourier_index(c, k)) *
                                static_cast<double>(class_fourier_index(c, k));
        REQUIRE(es.eigenvalues()(k) == Catch::Approx(expected).margin(1e-10 * (1 + expected)));
      }
    }
  }
}

TEST_CASE("harmonic assembly is diagonal at xi = 0 and stable under doubling") {
  const long n = 8;
  const QuadratureRule rule = auto_rule(n);
  for (const SymmetryClass& c : all_classes) {
    const Matrix<double> h =
        trig_hamiltonian<double>(ModelKind::PathHermitian, c, 0.0, n, rule);
    const Vector<double> d = trig_gram_diagonal<double>(c, n);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        const double ni = static_cast<double>(class_fourier_index(c, i));
        const double expected = i == j ? ni * ni * d(i) : 0.0;
        REQUIRE(h(i, j) == Catch::Approx(expected).margin(1e-10));
      }
    }
  }

  const QuadratureRule fine(2 * rule.node_count);
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    const Matrix<double> a = trig_hamiltonian<double>(model, class_pm, 1.0, n, rule);
    const Matrix<double> b = trig_hamiltonian<double>(model, class_pm, 1.0, n, fine);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        REQUIRE(a(i, j) == Catch::Approx(b(i, j)).margin(1e-10 * std::max(1.0, std::abs(b(i, j)))));
  }
}

TEST_CASE("gram diagonal doubles only the constant member") {
  const Vector<double> pp = trig_gram_diagonal<double>(class_pp, 3);
  const double pi = pi_value<double>();
  REQUIRE(pp(0) == Catch::Approx(2 * pi));
  REQUIRE(pp(1) == Catch::Approx(pi));
  REQUIRE(pp(2) == Catch::Approx(pi));
  const Vector<double> mm = trig_gram_diagonal<double>(class_mm, 2);
  REQUIRE(mm(0) == Catch::Approx(pi));
  REQUIRE(mm(1) == Catch::Approx(pi));
}

TEST_CASE("the two bases are congruent representations of the same span") {
  const long n = 6;
  const QuadratureRule rule = auto_rule(n);
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    for (const SymmetryClass& c : all_classes) {
      const auto sys = build_system<double>(model, c, 1.0, n, rule);
      const Matrix<double> hhat = trig_hamiltonian<double>(model, c, 1.0, n, rule);
      const RationalMatrix t = change_of_basis(c, n);
      Matrix<double> td(n, n);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) td(i, j) = rational_cast<double>(t[i][j]);
      const Matrix<double> back = td.transpose() * hhat * td;
      double scale = 0.0;
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) scale = std::max(scale, std::abs(back(i, j)));
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          REQUIRE(std::abs(sys.h_matrix(i, j) - back(i, j)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("exact factorization of the monomial overlap") {
  const long n = 8;
  for (const SymmetryClass& c : all_classes) {
    const RationalMatrix t = change_of_basis(c, n);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        Rational acc(0);
        for (long r = 0; r < n; ++r) {
          const Rational w(class_fourier_index(c, r) == 0 ? 2 : 1);
          acc += t[r][i] * w * t[r][j];
        }
        REQUIRE(acc == overlap_over_pi(c, i, j));
      }
    }
  }
}

TEST_CASE("exact triangular inverse of the change of basis") {
  const long n = 8;
  for (const SymmetryClass& c : all_classes) {
    const RationalMatrix t = change_of_basis(c, n);
    const RationalMatrix inv = change_of_basis_inverse(c, n);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        Rational acc(0);
        for (long r = 0; r < n; ++r) acc += t[i][r] * inv[r][j];
        REQUIRE(acc == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("monomial overlap conditioning collapses with the basis size") {
  REQUIRE(overlap_condition(class_pp, 1) == Catch::Approx(1.0));
  double previous = 0.0;
  for (long n = 2; n <= 14; n += 2) {
    const double cond = overlap_condition(class_pm, n);
    REQUIRE(cond > previous);
    previous = cond;
  }
  REQUIRE(overlap_condition(class_pm, 14) > 1e12);
  REQUIRE(overlap_condition(class_pm, 14) / overlap_condition(class_pm, 6) > 1e6);
}
