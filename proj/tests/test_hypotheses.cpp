#include <doctest.h>

#include <cmath>

#include "loewner/hypotheses.hpp"
#include "loewner/rng.hpp"

using namespace loewner;

TEST_CASE("operator_bounds equals the spectral interval") {
  const Interval iv = operator_bounds(SymMatrix::from_rows({{3, 1}, {1, 5}}));
  CHECK(iv.lo == doctest::Approx(4.0 - std::sqrt(2.0)).epsilon(1e-12));
  CHECK(iv.hi == doctest::Approx(4.0 + std::sqrt(2.0)).epsilon(1e-12));

  const Interval cc = operator_bounds(3.5 * SymMatrix::identity(3));
  CHECK(cc.lo == doctest::Approx(3.5));
  CHECK(cc.hi == doctest::Approx(3.5));

  const Interval ivb = operator_bounds(SymMatrix::from_rows({{10, -1}, {-1, 9}}));
  CHECK(ivb.lo == doctest::Approx(9.5 - std::sqrt(1.25)).epsilon(1e-12));
  CHECK(ivb.hi == doctest::Approx(9.5 + std::sqrt(1.25)).epsilon(1e-12));
}

TEST_CASE("thm1 condition on the worked example intervals") {
  const Interval nN(2.585786, 5.414214);
  const Interval mM(8.381966, 10.618034);
  const HypothesisReport rep = thm1_condition(nN, mM, 0.5);
  CHECK(rep.holds);
  // J = [5.483876, 8.016124]; gaps 0.069662 and 0.365842
  CHECK(rep.sub_margins[0].second == doctest::Approx(0.069662).epsilon(1e-4));
  CHECK(rep.sub_margins[1].second == doctest::Approx(0.365842).epsilon(1e-4));
  CHECK(rep.margin == doctest::Approx(0.069662).epsilon(1e-4));
}

TEST_CASE("thm1 condition fails on the counterexample spectra") {
  const Interval nN(0.0, 2.0);
  const Interval mM(2.0 - std::sqrt(2.0), 2.0 + std::sqrt(2.0));
  const HypothesisReport rep = thm1_condition(nN, mM, 0.5);
  CHECK_FALSE(rep.holds);
  CHECK(rep.margin < 0.0);
}

TEST_CASE("thm1 condition degenerate points hold") {
  const HypothesisReport rep = thm1_condition(Interval(1, 1), Interval(3, 3), 0.5);
  CHECK(rep.holds);
}

TEST_CASE("thm1 condition weight range and swap symmetry") {
  CHECK_THROWS_AS(thm1_condition(Interval(1, 2), Interval(3, 4), 0.0), Error);
  CHECK_THROWS_AS(thm1_condition(Interval(1, 2), Interval(3, 4), 1.0), Error);

  SplitMix64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const double a = rng.log_uniform(1e-2, 1e2), b = rng.log_uniform(1e-2, 1e2);
    const double c = rng.log_uniform(1e-2, 1e2), d = rng.log_uniform(1e-2, 1e2);
    const Interval nN(std::min(a, b), std::max(a, b));
    const Interval mM(std::min(c, d), std::max(c, d));
    const double v = rng.uniform(0.01, 0.99);
    const HypothesisReport fwd = thm1_condition(nN, mM, v);
    const HypothesisReport rev = thm1_condition(mM, nN, 1.0 - v);
    CHECK(fwd.holds == rev.holds);
    CHECK(fwd.margin == doctest::Approx(rev.margin).epsilon(1e-12));

    // J stays inside the convex hull of the endpoints.
    const Interval j = fwd.intervals[0].second;
    CHECK(j.lo >= std::min(nN.lo, mM.lo) - 1e-12);
    CHECK(j.hi <= std::max(nN.hi, mM.hi) + 1e-12);
  }
}

TEST_CASE("thm2 condition worked examples") {
  CHECK_FALSE(thm2_condition(Interval(1, 2), Interval(5, 6), 2.0).holds);  // [c,d]=[8,11]
  CHECK_FALSE(thm2_condition(Interval(4, 6), Interval(1, 9), 2.0).holds);  // [c,d]=[-4,14]
  // degenerate nN = [2,2], mM = [1,3], v = 2: d = 2 + 2(3-2) = 4 >= 3 forces overlap
  CHECK_FALSE(thm2_condition(Interval(2, 2), Interval(1, 3), 2.0).holds);
  CHECK_THROWS_AS(thm2_condition(Interval(1, 2), Interval(5, 6), 0.5), Error);
}

TEST_CASE("hh condition: degenerate spectra hold on every sampled v") {
  const HypothesisReport rep = hh_condition(Interval(1, 1), Interval(3, 3), 99);
  CHECK(rep.holds);
  CHECK(rep.sub_margins[0].second == doctest::Approx(1.0));
}

TEST_CASE("hh condition: example 2.7 intervals hold only on an interior window") {
  const Interval nN(2.585786, 5.414214);
  const Interval mM(8.381966, 10.618034);
  const HypothesisReport rep = hh_condition(nN, mM, 99);
  CHECK_FALSE(rep.holds); // small v violates
  bool found_window = false;
  for (const auto& [name, iv] : rep.intervals)
    if (name == "v_window_holds") {
      found_window = true;
      CHECK(iv.lo > 0.01);
      CHECK(iv.hi < 0.99);
    }
  CHECK(found_window);
}

TEST_CASE("hh condition: nondegenerate moderate intervals fail for small grids too") {
  const Interval nN(2.585786, 5.414214);
  const Interval mM(8.381966, 10.618034);
  for (int grid : {2, 5, 10, 99})
    CHECK_FALSE(hh_condition(nN, mM, grid).holds);
}

TEST_CASE("hh all-v satisfiability is exactly the degenerate case") {
  CHECK(hh_condition_all_v_satisfiable(Interval(1, 1), Interval(3, 3)));
  CHECK_FALSE(hh_condition_all_v_satisfiable(Interval(1, 1.1), Interval(3, 3)));
  CHECK_FALSE(hh_condition_all_v_satisfiable(Interval(1, 1), Interval(3, 3.1)));
  CHECK_FALSE(hh_condition_all_v_satisfiable(Interval(2, 2), Interval(2, 2)));
}

TEST_CASE("sandwich condition") {
  CHECK(sandwich_condition(2.0, Interval(1.0, 1.5), 3.0).holds);    // 2<=2, 3<=3
  CHECK_FALSE(sandwich_condition(1.0, Interval(1.0, 2.0), 3.0).holds); // 2N=4 > 3
  CHECK_FALSE(sandwich_condition(0.0, Interval(1.0, 1.5), 3.0).holds); // m must be > 0
  CHECK(sandwich_condition(0.0, Interval(1.0, 1.5), 3.0).margin < 0.0);
}

TEST_CASE("ell sandwich condition") {
  // ell = 2 reduces to the sandwich
  const HypothesisReport two = ell_sandwich_condition(2.0, Interval(1.0, 1.5), 3.0, 2);
  const HypothesisReport sw = sandwich_condition(2.0, Interval(1.0, 1.5), 3.0);
  CHECK(two.holds == sw.holds);
  CHECK(two.margin == doctest::Approx(sw.margin));

  CHECK(ell_sandwich_condition(1.0, Interval(1.0, 2.0), 6.0, 3).holds);
  CHECK_FALSE(ell_sandwich_condition(5.0, Interval(1.0, 2.0), 6.0, 3).holds); // m > ell*n = 3
}

TEST_CASE("hypothesis reports keep holds consistent with the margin sign") {
  SplitMix64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const double a = rng.log_uniform(1e-2, 1e2), b = rng.log_uniform(1e-2, 1e2);
    const double c = rng.log_uniform(1e-2, 1e2), d = rng.log_uniform(1e-2, 1e2);
    const Interval nN(std::min(a, b), std::max(a, b));
    const Interval mM(std::min(c, d), std::max(c, d));
    const HypothesisReport r1 = thm1_condition(nN, mM, rng.uniform(0.01, 0.99));
    CHECK(r1.holds == (r1.margin >= 0.0));
    const HypothesisReport r2 = thm2_condition(nN, mM, rng.uniform(1.0, 5.0));
    CHECK(r2.holds == (r2.margin >= 0.0));
    const HypothesisReport r3 = sandwich_condition(c, nN, d);
    CHECK(r3.holds == (r3.margin >= 0.0));
  }
}
