// The OpenMP kernels must reproduce the serial reference paths bit for bit:
// trial slots are indexed, min/max reductions are exact, and quadrature
// panels are summed in a fixed order.

#include <doctest.h>

#include "loewner/constants.hpp"
#include "loewner/explorer.hpp"
#include "loewner/json_io.hpp"

using namespace loewner;

TEST_CASE("hunt results agree bit for bit across execution policies") {
  GeneratorSpec spec;
  spec.dim = 4;
  spec.spectrum_interval = Interval(0.5, 3.0);
  spec.seed = 31337;
  spec.count = 400;

  for (const char* checker : {"power", "thm1", "decreasing_chain"}) {
    const ScalarFunction f =
        std::string(checker) == "decreasing_chain" ? ScalarFunction::power(-1.0)
                                                   : ScalarFunction::power(3.0);
    const bool conforming = std::string(checker) == "thm1";
    const HuntResult serial = hunt_violations(checker, f, spec, conforming, 0.5, Exec::Serial);
    const HuntResult parallel = hunt_violations(checker, f, spec, conforming, 0.5, Exec::Parallel);
    INFO(checker);
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
  }
}

TEST_CASE("probe counts agree across execution policies") {
  for (const char* condition : {"thm1", "thm2", "hh", "sandwich"}) {
    const HuntResult serial = probe_hypothesis_satisfiability(condition, 50000, 5, Exec::Serial);
    const HuntResult parallel =
        probe_hypothesis_satisfiability(condition, 50000, 5, Exec::Parallel);
    INFO(condition);
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
  }
}

TEST_CASE("ratio constants agree across execution policies") {
  for (const ScalarFunction& f :
       {ScalarFunction::power(2.0), ScalarFunction::power(-1.0), ScalarFunction::power(0.5)}) {
    const RatioConstant ks = big_K(0.7, 3.3, f, Exec::Serial);
    const RatioConstant kp = big_K(0.7, 3.3, f, Exec::Parallel);
    CHECK(ks.value == kp.value);
    CHECK(ks.argmax_or_argmin == kp.argmax_or_argmin);

    const double os = dense_grid_extremum(0.7, 3.3, f, 1 << 17, true, Exec::Serial);
    const double op = dense_grid_extremum(0.7, 3.3, f, 1 << 17, true, Exec::Parallel);
    CHECK(os == op);
  }
}

TEST_CASE("quadrature agrees across execution policies") {
  GeneratorSpec spec;
  spec.dim = 5;
  spec.spectrum_interval = Interval(1.0, 4.0);
  spec.seed = 77;
  spec.count = 2;
  const auto mats = random_symmetric_with_spectrum(spec);
  const QuadratureResult serial =
      hh_integral_mean_detail(ScalarFunction::power(2.0), mats[0], mats[1], 16, 8, Exec::Serial);
  const QuadratureResult parallel =
      hh_integral_mean_detail(ScalarFunction::power(2.0), mats[0], mats[1], 16, 8, Exec::Parallel);
  CHECK(same_entries(serial.value, parallel.value));
  CHECK(serial.refinement_delta == parallel.refinement_delta);
}
