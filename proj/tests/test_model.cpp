#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <epath/model.hpp>

using namespace epath;

TEST_CASE("deformation parameter is guarded at -1") {
  REQUIRE_THROWS_AS(require_valid_xi(-1.0), std::domain_error);
  REQUIRE_THROWS_AS(require_valid_xi(-1.5), std::domain_error);
  REQUIRE_THROWS_AS(metric(0.3, -1.0), std::domain_error);
  REQUIRE_NOTHROW(require_valid_xi(-0.999999));
  REQUIRE_NOTHROW(require_valid_xi(0.0));
  REQUIRE_THROWS_AS(Deformation(-2.0), std::domain_error);
  REQUIRE(Deformation(0.5).xi == 0.5);
}

TEST_CASE("metric and its angular derivative") {
  REQUIRE(metric(0.0, 1.0) == 2.0);
  REQUIRE(metric(std::acos(-1.0) / 2.0, 1.0) == Catch::Approx(1.0));
  REQUIRE(metric(0.0, -0.5) == 0.5);

  const double xi = 0.7;
  for (const double phi : {0.1, 0.9, 2.3, 4.0}) {
    const double h = 1e-6;
    const double fd = (metric(phi + h, xi) - metric(phi - h, xi)) / (2.0 * h);
    REQUIRE(metric_derivative(phi, xi) == Catch::Approx(fd).margin(1e-8));
  }
}

TEST_CASE("operator coefficients and their xi derivatives") {
  const double xi = 0.8, phi = 1.1;
  const auto one = coefficient_functions(ModelKind::PathNonHermitian, xi);
  const auto two = coefficient_functions(ModelKind::PathHermitian, xi);

  const double g = metric(phi, xi);
  const double gp = metric_derivative(phi, xi);
  REQUIRE(one.c2(phi) == Catch::Approx(1.0 / g));
  REQUIRE(two.c2(phi) == Catch::Approx(1.0 / g));
  REQUIRE(one.c1(phi) == Catch::Approx(-gp / (2.0 * g * g)));
  REQUIRE(two.c1(phi) == Catch::Approx(-gp / (g * g)));
  // The drift difference between the models is -g'/(2 g^2).
  REQUIRE(two.c1(phi) - one.c1(phi) == Catch::Approx(-gp / (2.0 * g * g)));

  const double h = 1e-6;
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    const auto lo = coefficient_functions(model, xi - h);
    const auto hi = coefficient_functions(model, xi + h);
    const auto mid = coefficient_functions(model, xi);
    REQUIRE(mid.c2_xi(phi) == Catch::Approx((hi.c2(phi) - lo.c2(phi)) / (2 * h)).margin(1e-8));
    REQUIRE(mid.c1_xi(phi) == Catch::Approx((hi.c1(phi) - lo.c1(phi)) / (2 * h)).margin(1e-8));
  }
}

TEST_CASE("class tokens, ranks, and point-group labels") {
  REQUIRE(class_rank(class_pp) == 0);
  REQUIRE(class_rank(class_pm) == 1);
  REQUIRE(class_rank(class_mp) == 2);
  REQUIRE(class_rank(class_mm) == 3);
  for (const SymmetryClass& c : all_classes) {
    REQUIRE(class_from_token(class_token(c)) == c);
  }
  REQUIRE_THROWS_AS(class_from_token("xx"), std::invalid_argument);

  REQUIRE(std::string(group_labels(class_pp).d2) == "A");
  REQUIRE(std::string(group_labels(class_pp).c2v) == "A1");
  REQUIRE(std::string(group_labels(class_pm).d2) == "B2");
  REQUIRE(std::string(group_labels(class_pm).c2v) == "B1");
  REQUIRE(std::string(group_labels(class_mp).d2) == "B1");
  REQUIRE(std::string(group_labels(class_mp).c2v) == "A2");
  REQUIRE(std::string(group_labels(class_mm).d2) == "B3");
  REQUIRE(std::string(group_labels(class_mm).c2v) == "B2");
  REQUIRE(std::string(class_signs(class_mp)) == "(-,+)");
}

TEST_CASE("basis shapes per class") {
  REQUIRE(basis_shape(class_pp, 2).cos_power == 4);
  REQUIRE_FALSE(basis_shape(class_pp, 2).sin_factor);
  REQUIRE(basis_shape(class_pm, 1).cos_power == 3);
  REQUIRE_FALSE(basis_shape(class_pm, 1).sin_factor);
  REQUIRE(basis_shape(class_mp, 0).cos_power == 1);
  REQUIRE(basis_shape(class_mp, 0).sin_factor);
  REQUIRE(basis_shape(class_mm, 0).cos_power == 0);
  REQUIRE(basis_shape(class_mm, 0).sin_factor);
  REQUIRE_THROWS_AS(basis_shape(class_pp, -1), std::invalid_argument);
}

TEST_CASE("basis functions match finite differences") {
  for (const SymmetryClass& c : all_classes) {
    for (long k = 0; k <= 3; ++k) {
      const auto u = basis_function<double>(c, k);
      for (const double phi : {0.2, 1.0, 2.7, 5.5}) {
        const double h = 1e-5;
        const double d1 = (u.value(phi + h) - u.value(phi - h)) / (2 * h);
        const double d2 = (u.value(phi + h) - 2 * u.value(phi) + u.value(phi - h)) / (h * h);
        REQUIRE(u.derivative(phi) == Catch::Approx(d1).margin(1e-7));
        REQUIRE(u.second_derivative(phi) == Catch::Approx(d2).margin(1e-4));
      }
    }
  }
}

TEST_CASE("basis functions carry the class parities") {
  const double phi = 0.83;
  const double pi = std::acos(-1.0);
  for (const SymmetryClass& c : all_classes) {
    const auto u = basis_function<double>(c, 2);
    REQUIRE(u.value(-phi) ==
            Catch::Approx(static_cast<double>(c.reflection_parity) * u.value(phi)));
    REQUIRE(u.value(phi + pi) ==
            Catch::Approx(static_cast<double>(c.translation_parity) * u.value(phi)));
  }
}

TEST_CASE("harmonic indices, level membership, and slots") {
  REQUIRE(unperturbed_levels(class_pp, 3) == std::vector<long>{0, 2, 4});
  REQUIRE(unperturbed_levels(class_pm, 3) == std::vector<long>{1, 3, 5});
  REQUIRE(unperturbed_levels(class_mp, 3) == std::vector<long>{2, 4, 6});
  REQUIRE(unperturbed_levels(class_mm, 3) == std::vector<long>{1, 3, 5});

  REQUIRE(class_contains_level(class_pp, 0));
  REQUIRE_FALSE(class_contains_level(class_mp, 0));
  REQUIRE_FALSE(class_contains_level(class_pp, 3));
  REQUIRE_FALSE(class_contains_level(class_mm, -1));

  for (const SymmetryClass& c : all_classes)
    for (long k = 0; k <= 8; ++k)
      REQUIRE(class_level_slot(c, class_fourier_index(c, k)) == k);
  REQUIRE_THROWS_AS(class_level_slot(class_mp, 1), std::invalid_argument);

  REQUIRE(classes_sharing(3) == std::pair{class_pm, class_mm});
  REQUIRE(classes_sharing(4) == std::pair{class_pp, class_mp});
  REQUIRE(classes_sharing(0).first == class_pp);
  REQUIRE(classes_sharing(0).second == class_pp);
}

TEST_CASE("physical ellipse reduces to xi and an energy scale") {
  const PhysicalEllipse circle{1e-9, 1e-9, 9.1093837015e-31};
  REQUIRE(nondimensionalize(circle).xi == Catch::Approx(0.0).margin(1e-15));

  const PhysicalEllipse ring{1e-9, 2e-9, 9.1093837015e-31};
  const Nondimensional reduced = nondimensionalize(ring);
  REQUIRE(reduced.xi == Catch::Approx(3.0));
  const double hbar = 1.054571817e-34;
  REQUIRE(reduced.energy_scale ==
          Catch::Approx(hbar * hbar / (2.0 * ring.mass * ring.a * ring.a)));
}
