#include <doctest.h>

#include <cmath>

#include "loewner/calculus.hpp"
#include "loewner/explorer.hpp"
#include "test_helpers.hpp"

using namespace loewner;

TEST_CASE("apply_function on diagonal matrices is entrywise") {
  const SymMatrix a = SymMatrix::diagonal({4.0, 9.0});
  const SymMatrix root = apply_function(ScalarFunction::power(0.5), a);
  CHECK(test::approx_entries(root, {{2, 0}, {0, 3}}, 1e-14));
}

TEST_CASE("square of the involution is the identity") {
  const SymMatrix swap = SymMatrix::from_rows({{0, 1}, {1, 0}});
  const SymMatrix sq = apply_function(ScalarFunction::power(2.0), swap);
  CHECK(test::max_entry_diff(sq, SymMatrix::identity(2)) <= 1e-14);
}

TEST_CASE("t^-2 of [[3,1],[1,5]] matches the cofactor-derived inverse square") {
  // A^2 = [[10,8],[8,26]], det = 196; (A^2)^-1 = (1/196)[[26,-8],[-8,10]].
  const SymMatrix a = SymMatrix::from_rows({{3, 1}, {1, 5}});
  const SymMatrix got = apply_function(ScalarFunction::power(-2.0), a);
  CHECK(test::approx_entries(got, {{26.0 / 196, -8.0 / 196}, {-8.0 / 196, 10.0 / 196}}, 1e-12));
}

TEST_CASE("domain violations surface") {
  const SymMatrix singular = SymMatrix::from_rows({{1, 1}, {1, 1}}); // eigenvalue 0
  CHECK_THROWS_AS(apply_function(ScalarFunction::power(-1.0), singular), Error);
  CHECK_THROWS_AS(matrix_power(singular, -2.0), Error);
  CHECK_THROWS_AS(matrix_power(SymMatrix::diagonal({-1.0, 2.0}), 3.0), Error);
}

TEST_CASE("matrix_power integer paths are exact") {
  const SymMatrix a = SymMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK(same_entries(matrix_power(a, 3.0), SymMatrix::from_rows({{4, 4}, {4, 4}})));
  const SymMatrix b = SymMatrix::from_rows({{3, 1}, {1, 1}});
  CHECK(same_entries(matrix_power(b, 3.0), SymMatrix::from_rows({{34, 14}, {14, 6}})));
  CHECK(same_entries(matrix_power(b, 1.0), b));
  CHECK(same_entries(matrix_power(b, 0.0), SymMatrix::identity(2)));
}

TEST_CASE("matrix_power squares agree with direct multiplication on random PSD") {
  for (int rep = 0; rep < 25; ++rep) {
    GeneratorSpec spec;
    spec.dim = 5;
    spec.spectrum_interval = Interval(0.5, 4.0);
    spec.seed = 100 + static_cast<uint64_t>(rep);
    const SymMatrix a = random_symmetric_with_spectrum(spec)[0];
    const SymMatrix via_power = matrix_power(a, 2.0);
    const SymMatrix direct = sym_product(a, a);
    CHECK(test::max_entry_diff(via_power, direct) <= 1e-10 * direct.frobenius_norm());
  }
}

TEST_CASE("calculus composition: (t^(1/2) o t^2) on a positive matrix") {
  GeneratorSpec spec;
  spec.dim = 4;
  spec.spectrum_interval = Interval(0.5, 3.0);
  spec.seed = 11;
  const SymMatrix a = random_symmetric_with_spectrum(spec)[0];
  const SymMatrix roundtrip =
      apply_function(ScalarFunction::power(0.5), apply_function(ScalarFunction::power(2.0), a));
  CHECK(test::max_entry_diff(roundtrip, a) <= 1e-8 * std::max(1.0, a.frobenius_norm()));

  const SymMatrix log_exp =
      apply_function(ScalarFunction::log(), apply_function(ScalarFunction::exp(), a));
  CHECK(test::max_entry_diff(log_exp, a) <= 1e-8 * std::max(1.0, a.frobenius_norm()));
}

TEST_CASE("f(A) commutes with A") {
  GeneratorSpec spec;
  spec.dim = 6;
  spec.spectrum_interval = Interval(1.0, 5.0);
  spec.seed = 3;
  const SymMatrix a = random_symmetric_with_spectrum(spec)[0];
  const SymMatrix fa = apply_function(ScalarFunction::log(), a);
  const std::vector<double> left = matmul(6, fa.data(), a.data());
  const std::vector<double> right = matmul(6, a.data(), fa.data());
  double worst = 0.0;
  for (size_t i = 0; i < left.size(); ++i)
    worst = std::max(worst, std::fabs(left[i] - right[i]));
  CHECK(worst <= 1e-9 * a.frobenius_norm() * fa.frobenius_norm());
}

TEST_CASE("loewner_compare classifications") {
  const SymMatrix eye = SymMatrix::identity(2);

  SUBCASE("scalar shift is GreaterOrEqual with unit margin") {
    const LoewnerVerdict v = loewner_compare(2.0 * eye, eye);
    CHECK(v.relation == Relation::GreaterOrEqual);
    CHECK(v.min_eig_of_difference == doctest::Approx(1.0));
  }
  SUBCASE("identical operands are Equal") {
    const SymMatrix a = SymMatrix::from_rows({{3, 1}, {1, 5}});
    CHECK(loewner_compare(a, a).relation == Relation::Equal);
  }
  SUBCASE("example 2.8 difference is incomparable with the closed-form extremes") {
    const SymMatrix d = SymMatrix::from_rows({{12, 2}, {2, 0}});
    const LoewnerVerdict v = loewner_compare(d, SymMatrix::zero(2));
    CHECK(v.relation == Relation::Incomparable);
    CHECK(v.min_eig_of_difference == doctest::Approx(6.0 - std::sqrt(40.0)).epsilon(1e-12));
    CHECK(v.max_eig_of_difference == doctest::Approx(6.0 + std::sqrt(40.0)).epsilon(1e-12));
  }
  SUBCASE("order sanity: A vs A - cI") {
    const SymMatrix a = SymMatrix::from_rows({{3, 1}, {1, 5}});
    for (double c : {0.5, 2.0}) {
      const LoewnerVerdict v = loewner_compare(a, a - c * SymMatrix::identity(2));
      CHECK(v.relation == Relation::GreaterOrEqual);
      CHECK(v.min_eig_of_difference == doctest::Approx(c));
    }
  }
  SUBCASE("tolerance scales with the difference norm") {
    const LoewnerVerdict v = loewner_compare(eye, eye, 1e-6);
    CHECK(v.tolerance_used == doctest::Approx(1e-6));
  }
}
