#include <doctest.h>

#include "opensets/adversary.hpp"
#include "support.hpp"

using namespace opensets;

namespace {

// Independent check of an hbc witness: x is outside every piece (1/(n+2), 1), n <= k.
bool hbc_witness_holds(const RefutationWitness& w) {
  if (!(Rational(0) < w.point && w.point < Rational(1, static_cast<long>(w.k) + 2))) return false;
  for (std::size_t n = 0; n <= w.k; ++n) {
    if (RatInterval::open(Rational(1, static_cast<long>(n) + 2), 1).contains(w.point)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("adversary oracle examples") {
  AdversaryFull adv;
  const OpenR2 y = adv.oracle();
  CHECK(y(CauchyReal::constant(Rational(1, 2)), 4) == Rational(1, 8));
  CHECK(y(CauchyReal::constant(Rational(1, 2)), 9) == Rational(1, 8));
  CHECK(y(CauchyReal::constant(Rational(1, 3)), 4) == Rational(1, 16));
  CHECK(adv.log().size() == 2);
  // a real within the snapshot tolerance of 1/2 reuses index 0
  const CauchyReal near_half = CauchyReal::from_oracle([](unsigned n) { return Rational(1, 2) + Rational::pow2(-static_cast<long>(n) - 30); });
  CHECK(y(near_half, 4) == Rational(1, 8));
  CHECK(adv.log().size() == 2);
  REQUIRE(adv.assigned_balls().size() == 2);
  CHECK(adv.assigned_balls()[0] == RatInterval::open(Rational(3, 8), Rational(5, 8)));
}

TEST_CASE("adversary oracle keeps the radius promise and the measure ceiling") {
  std::mt19937 rng(61);
  AdversaryFull adv;
  const OpenR2 y = adv.oracle();
  for (int i = 0; i < 3000; ++i) {
    const Rational q = testsupport::grid_rational(rng, 997, 0, 997);
    const Rational v = y(CauchyReal::constant(q), 3);
    CHECK(v > Rational(0));
    CHECK(FinOpen::full().contains_interval(RatInterval::open(q - v, q + v)));
  }
  CHECK(measure(adv.assigned_balls()) <= Rational(1, 2));
  const FinOpen probed = r2_probe_r4(adv.oracle(), 2000);
  CHECK(measure(probed.pieces()) <= Rational(1, 2));
}

TEST_CASE("ProbeLog indexes in arrival order") {
  ProbeLog log;
  CHECK(log.index_of(CauchyReal::constant(Rational(1, 3))) == 0u);
  CHECK(log.index_of(CauchyReal::constant(Rational(2, 3))) == 1u);
  CHECK(log.index_of(CauchyReal::constant(Rational(1, 3))) == 0u);
  CHECK(log.find(Rational(2, 3)) == 1u);
  CHECK_FALSE(log.find(Rational(1, 2)).has_value());
  CHECK(log.points() == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
}

TEST_CASE("adversary_hbc") {
  const auto naive = adversary_hbc(naive_grid_hbc());
  REQUIRE(naive.refuted());
  CHECK(naive.replay_faithful);
  CHECK(naive.witness->verified);
  CHECK(hbc_witness_holds(*naive.witness));
  CHECK(naive.first_answer == naive.second_answer);
  // not on the probe grid
  CHECK((naive.witness->point * Rational(1024)).denominator() != 1);

  const auto big = adversary_hbc(constant_hbc(1000000));
  REQUIRE(big.refuted());
  CHECK(big.witness->point == Rational(1, 1000003));
  CHECK(hbc_witness_holds(*big.witness));

  const auto refusing = adversary_hbc(refusing_hbc());
  CHECK_FALSE(refusing.refuted());
}

TEST_CASE("adversary_r2_cover") {
  const auto naive = adversary_r2_cover(naive_grid_r2());
  REQUIRE(naive.refuted());
  CHECK(naive.replay_faithful);
  CHECK(naive.witness->verified);
  CHECK(naive.witness->k <= *naive.first_answer + 1);

  const auto pipeline = adversary_r2_cover(psi_pipeline_r2(100000));
  CHECK(pipeline.first_answer == 0u);
  CHECK_FALSE(pipeline.refuted());

  CHECK_FALSE(adversary_r2_cover(refusing_r2()).refuted());
}
