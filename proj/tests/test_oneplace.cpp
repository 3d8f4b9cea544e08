#include "doctest.h"

#include "fp2tree/oneplace.hpp"

using namespace fp2tree;

namespace {
  Field const Q = Field::rationals();

  OnePlaceInstance inverse_instance(long k) {
    return OnePlaceInstance(RingSpec(RingSpec::Kind::poly_inv_over_k),
                            Place::zero(Q), RationalFunction::t_power(Q, -k));
  }
}  // namespace

TEST_CASE("OnePlaceInstance validation") {
  auto const inst = OnePlaceInstance::polynomials();
  CHECK(inst.witness_valuation() == -1);
  CHECK(inst.place().is_infinity());
  CHECK_THROWS_AS(OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                                   Place::infinity(Q), RationalFunction(Q, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OnePlaceInstance(RingSpec(RingSpec::Kind::laurent_over_k),
                                   Place::infinity(Q),
                                   RationalFunction::t_power(Q, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                                   Place::infinity(Q),
                                   RationalFunction::t_power(Q, -1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(OnePlaceInstance(RingSpec(RingSpec::Kind::poly_inv_over_k),
                                   Place::infinity(Q),
                                   RationalFunction::t_power(Q, -1)),
                  std::invalid_argument);
  CHECK_NOTHROW(inverse_instance(1));
}

TEST_CASE("exit points for f = t") {
  auto const inst = OnePlaceInstance::polynomials();
  long       prev = 0;
  for (long n = 1; n <= 6; ++n) {
    long const r = exit_point(n, inst);
    CHECK(r == n);
    CHECK(r > prev);
    prev = r;
    CHECK(overlap_holds(n, inst));
    // u_n fixes exactly the part of the ray from x(n) on.
    auto const u = inst.unipotent(n);
    for (long s = 0; s <= n + 2; ++s) {
      CHECK(fixes(u, apartment_vertex(inst.place(), s)) == (s >= n));
    }
  }
  auto const fit = fit_exit_points(inst);
  CHECK(fit.exact);
  CHECK(fit.slope == 1);
  CHECK(fit.intercept == 0);
  CHECK_THROWS_AS(exit_point(0, inst), std::invalid_argument);
}

TEST_CASE("exit point slope is -v_p(f)") {
  for (auto const& inst :
       {OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_z),
                         Place::infinity(Q), RationalFunction::t_power(Q, 2)),
        OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                         Place::infinity(Q), RationalFunction(Polynomial(Q, {1, 1, 1}))),
        inverse_instance(1), inverse_instance(3)}) {
    auto const fit = fit_exit_points(inst);
    CHECK(fit.exact);
    CHECK(fit.slope == -inst.witness_valuation());
    for (long n = 1; n <= 5; ++n) {
      CHECK(overlap_holds(n, inst));
      CHECK(exit_point(n + 1, inst) > exit_point(n, inst));
    }
  }
}

TEST_CASE("diagonal translates") {
  auto const inst = OnePlaceInstance::polynomials();
  auto const d2   = translation_record(2, inst);
  CHECK(d2.level == 4);
  CHECK(d2.expected == 4);
  CHECK(act(inst.translation(2), apartment_vertex(inst.place(), 0))
        == apartment_vertex(inst.place(), 4));
  for (long n = 1; n <= 4; ++n) {
    auto const r = translation_record(n, inverse_instance(2));
    CHECK(r.level == r.expected);
    CHECK(r.level == 4 * n);
  }
}

TEST_CASE("one-place certificate") {
  auto const inst = OnePlaceInstance::polynomials();
  for (long L = 0; L >= -10; --L) {
    auto const c = oneplace_certificate(L, inst);
    CHECK(c.threshold == 1 - L);
    CHECK(c.threshold == escape_certificate(L).threshold);
    CHECK(c.chains.size() == 2);
    auto const r = replay_oneplace(c, inst);
    CHECK(r.ok());
  }
  // Slope 3: the first m with L + 3m >= 1.
  auto const c = oneplace_certificate(-4, inverse_instance(3));
  CHECK(c.threshold == 2);
  CHECK(replay_oneplace(c, inverse_instance(3)).ok());
  auto bad = c;
  bad.threshold = 3;
  CHECK_FALSE(replay_oneplace(bad, inverse_instance(3)).ok());
  CHECK_FALSE(replay_oneplace(oneplace_certificate(-4, inst),
                              inverse_instance(3)).ok());
  CHECK(c.to_text().find("v_0(f) = -3") != std::string::npos);
}

TEST_CASE("constancy of everywhere-integral elements") {
  CHECK(constancy_check(OnePlaceInstance::polynomials()) > 100);
  CHECK(constancy_check(inverse_instance(1)) > 100);
  CHECK(constancy_check(OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                                         Place::infinity(Field::prime(5)),
                                         RationalFunction::t_power(Field::prime(5), 1)))
        > 100);
}

TEST_CASE("disconnection_probe") {
  auto const inst = OnePlaceInstance::polynomials();
  auto const rep  = disconnection_probe(0, inst, 4);
  REQUIRE(rep.records.size() == 4);
  CHECK(rep.orbit_size > 1);
  for (auto const& rec : rep.records) {
    CHECK(rec.r_n == rec.n);
    // The ray is a fundamental domain: x(r) with r > 0 is not in the orbit.
    CHECK_FALSE(rec.in_orbit_sample);
    CHECK(rec.overlap);
  }
  CHECK(rep.translations[1].level == 4);
  auto const j = rep.to_json(inst);
  CHECK(j["records"][0]["certificate_ref"] == rep.certificate_ref);
  CHECK(j["certificate"]["threshold"] == 4);
  CHECK(j.dump() == disconnection_probe(0, inst, 4).to_json(inst).dump());
  // Every vertex is within distance r of the orbit of x(0) once r >= n.
  auto const wide = disconnection_probe(6, inst, 4);
  for (auto const& rec : wide.records) {
    CHECK(rec.in_orbit_sample);
  }
}

TEST_CASE("neighborhood_connected") {
  auto const x0 = apartment_vertex(Place::infinity(Q), 0);
  CHECK(neighborhood_connected({}, x0) == 0);
  CHECK(neighborhood_connected({matrices::unipotent(Q, 1)}, x0) == 2);
  CHECK(neighborhood_connected({matrices::translation(Q)}, x0) == 2);
  auto const gens = oneplace_generators(OnePlaceInstance::polynomials());
  long       prev = 0;
  for (std::size_t k = 0; k <= gens.size(); ++k) {
    std::vector<Matrix2> const sub(gens.begin(), gens.begin() + static_cast<long>(k));
    long const                 r = neighborhood_connected(sub, x0);
    CHECK(r >= prev);
    prev = r;
  }
  CHECK(neighborhood_connected({matrices::unipotent(Q, 3)}, x0) == 6);
}
