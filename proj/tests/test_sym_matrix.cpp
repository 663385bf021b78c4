#include <doctest.h>

#include "loewner/sym_matrix.hpp"
#include "test_helpers.hpp"

using namespace loewner;

TEST_CASE("construction symmetrizes and records the residual") {
  const SymMatrix m(2, {1.0, 2.0 + 1e-14, 2.0, 3.0});
  CHECK(m(0, 1) == m(1, 0));
  CHECK(m.asym_residual() == doctest::Approx(1e-14).epsilon(0.1));
}

TEST_CASE("construction rejects truly asymmetric input") {
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 5.0, 3.0}), Error);
  try {
    SymMatrix(2, {1.0, 2.0, 5.0, 3.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
}

TEST_CASE("construction rejects non-finite entries") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(SymMatrix(2, {1.0, inf, inf, 3.0}), Error);
  CHECK_THROWS_AS(SymMatrix(2, {1.0, 0.0, 0.0, std::nan("")}), Error);
}

TEST_CASE("dimension mismatch is reported") {
  const SymMatrix a = SymMatrix::identity(2);
  const SymMatrix b = SymMatrix::identity(3);
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("value arithmetic") {
  const SymMatrix a = SymMatrix::from_rows({{3, 1}, {1, 5}});
  const SymMatrix b = SymMatrix::from_rows({{10, -1}, {-1, 9}});
  CHECK(test::approx_entries(a + b, {{13, 0}, {0, 14}}, 0.0));
  CHECK(test::approx_entries(b - a, {{7, -2}, {-2, 4}}, 0.0));
  CHECK(test::approx_entries(2.0 * a, {{6, 2}, {2, 10}}, 0.0));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(9.0 + 1 + 1 + 25)));
}

TEST_CASE("quadratic form") {
  const SymMatrix a = SymMatrix::diagonal({1.0, 3.0});
  const double inv_s2 = 1.0 / std::sqrt(2.0);
  CHECK(quadratic_form(a, {inv_s2, inv_s2}) == doctest::Approx(2.0));
}
