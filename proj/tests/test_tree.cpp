#include "doctest.h"

#include "fp2tree/random.hpp"
#include "fp2tree/ring_spec.hpp"
#include "fp2tree/tree.hpp"

using namespace fp2tree;

namespace {
  Field const Q    = Field::rationals();
  Place const RHO  = Place::infinity(Q);
  Place const ZETA = Place::zero(Q);

  RationalFunction t_pow(long k) {
    return RationalFunction::t_power(Q, k);
  }
  RationalFunction one() {
    return RationalFunction::one(Q);
  }
  RationalFunction zero() {
    return RationalFunction::zero(Q);
  }

  // Path length through the meet vertex, computed from the coordinates only.
  long meet_distance(TreeVertex const& v, TreeVertex const& w) {
    long const m = meet_level(v, w);
    return (v.level() - m) + (w.level() - m);
  }

  bool entries_in(Matrix2 const& g, RingSpec const& spec) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!in_ring(g.entry(i), spec)) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("canonical_vertex examples") {
  auto const base = canonical_vertex(Matrix2::identity(Q), ZETA);
  CHECK(base.level() == 0);
  CHECK(base.coord().empty());
  auto const v = canonical_vertex(Matrix2::diagonal(t_pow(1), one()), ZETA);
  CHECK(v.level() == 1);
  CHECK(v.coord().empty());
  auto const w = canonical_vertex(matrices::unipotent(Q, 1), RHO);
  CHECK(w.level() == 0);
  REQUIRE(w.coord().terms().size() == 1);
  CHECK(w.coord().terms()[0].exponent == -1);
  CHECK(w.coord().terms()[0].coefficient.is_one());
  CHECK(distance(w, apartment_vertex(RHO, 0)) == 2);
  CHECK_FALSE(fixes(matrices::unipotent(Q, 1), apartment_vertex(RHO, 0)));
  CHECK_THROWS_AS(canonical_vertex(Matrix2(one(), one(), one(), one()), RHO),
                  std::domain_error);
}

TEST_CASE("canonical_vertex is idempotent on canonical shapes") {
  Sampler sampler(Q, 21);
  for (int i = 0; i < 200; ++i) {
    auto const& p = i % 2 == 0 ? RHO : ZETA;
    auto const  v = sampler.vertex(p, 4);
    CHECK(canonical_vertex(v.representative(), p) == v);
  }
}

TEST_CASE("canonical form is invariant under GL2(O) and scalars") {
  Sampler sampler(Q, 22);
  for (int i = 0; i < 300; ++i) {
    auto const& p      = i % 2 == 0 ? RHO : ZETA;
    auto const  m      = sampler.invertible_matrix(2);
    auto const  k      = sampler.integral_matrix(p);
    auto const  lambda = sampler.nonzero_rational_function(2);
    CHECK(canonical_vertex(m * k, p) == canonical_vertex(m, p));
    CHECK(canonical_vertex(m.scaled(lambda), p) == canonical_vertex(m, p));
  }
}

TEST_CASE("act examples") {
  Sampler sampler(Q, 23);
  auto const v = sampler.vertex(ZETA);
  CHECK(act(Matrix2::identity(Q), v) == v);
  auto const moved
      = act(Matrix2::diagonal(t_pow(1), one()), apartment_vertex(ZETA, 0));
  CHECK(moved.level() == 1);
  CHECK(moved.coord().empty());
  CHECK(act(matrices::unipotent(Q, 1), apartment_vertex(RHO, 0))
        == canonical_vertex(matrices::unipotent(Q, 1), RHO));
  CHECK_THROWS_AS(act(Matrix2(zero(), zero(), zero(), one()), v),
                  std::domain_error);
}

TEST_CASE("action laws and isometry on random triples") {
  Sampler sampler(Q, 24);
  for (int i = 0; i < 500; ++i) {
    auto const& p = i % 2 == 0 ? RHO : ZETA;
    auto const  g = sampler.invertible_matrix(2);
    auto const  h = sampler.invertible_matrix(2);
    auto const  v = sampler.vertex(p, 3);
    auto const  w = sampler.vertex(p, 3);
    CHECK(act(g * h, v) == act(g, act(h, v)));
    CHECK(act(g.inverse(), act(g, v)) == v);
    CHECK(distance(act(g, v), act(g, w)) == distance(v, w));
  }
}

TEST_CASE("distance examples") {
  for (auto const& p : {RHO, ZETA}) {
    auto const x0 = apartment_vertex(p, 0);
    CHECK(distance(x0, x0) == 0);
    CHECK(distance(x0, apartment_vertex(p, 3)) == 3);
    CHECK(distance(apartment_vertex(p, -2), apartment_vertex(p, 5)) == 7);
  }
  auto const base = apartment_vertex(RHO, 0);
  CHECK(distance(base, act(matrices::unipotent(Q, 1), base)) == 2);
  CHECK_THROWS_AS(distance(apartment_vertex(RHO, 0), apartment_vertex(ZETA, 0)),
                  std::invalid_argument);
}

TEST_CASE("geodesic examples") {
  auto const a = TreeVertex(1, TruncatedSeries(ZETA, {}, 1));
  CHECK(geodesic(a, a) == std::vector<TreeVertex>{a});
  auto const b = TreeVertex(
      1, TruncatedSeries(ZETA, {SeriesTerm{0, Polynomial(Q, {1})}}, 1));
  auto const path = geodesic(a, b);
  REQUIRE(path.size() == 3);
  CHECK(path[0] == a);
  CHECK(path[1] == apartment_vertex(ZETA, 0));
  CHECK(path[2] == b);
  CHECK_THROWS_AS(geodesic(a, apartment_vertex(RHO, 0)), std::invalid_argument);
}

TEST_CASE("determinant distance agrees with geodesic length") {
  Sampler sampler(Q, 25);
  for (int i = 0; i < 500; ++i) {
    auto const& p    = i % 2 == 0 ? RHO : ZETA;
    auto const  v    = sampler.vertex(p, 4);
    auto const  w    = sampler.vertex(p, 4);
    auto const  path = geodesic(v, w);
    long const  d    = distance(v, w);
    CHECK(d == meet_distance(v, w));
    REQUIRE(static_cast<long>(path.size()) == d + 1);
    CHECK(path.front() == v);
    CHECK(path.back() == w);
    for (std::size_t j = 1; j < path.size(); ++j) {
      CHECK(distance(path[j - 1], path[j]) == 1);
    }
  }
}

TEST_CASE("fixes examples") {
  auto const u1 = matrices::unipotent(Q, 1);
  CHECK(fixes(u1, apartment_vertex(RHO, 1)));
  CHECK_FALSE(fixes(u1, apartment_vertex(RHO, 0)));
  Sampler sampler(Q, 26);
  for (int i = 0; i < 100; ++i) {
    auto const& p = i % 2 == 0 ? RHO : ZETA;
    CHECK(fixes(Matrix2::identity(Q), sampler.vertex(p)));
    CHECK(fixes(sampler.integral_matrix(p), apartment_vertex(p, 0)));
  }
  CHECK_THROWS_AS(fixes(Matrix2(one(), one(), one(), one()),
                        apartment_vertex(RHO, 0)),
                  std::domain_error);
}

TEST_CASE("fixes agrees with act") {
  Sampler sampler(Q, 27);
  for (int i = 0; i < 300; ++i) {
    auto const& p = i % 2 == 0 ? RHO : ZETA;
    auto const  v = sampler.vertex(p, 3);
    auto const  g = i % 3 == 0 ? sampler.invertible_matrix(1)
                               : sampler.laurent_sl2_element(3);
    CHECK(fixes(g, v) == (act(g, v) == v));
  }
}

TEST_CASE("apartment_vertex examples and conventions") {
  for (auto const& p : {RHO, ZETA}) {
    auto const x0 = apartment_vertex(p, 0);
    CHECK(x0.level() == 0);
    CHECK(x0.coord().empty());
    for (long r = -5; r <= 5; ++r) {
      CHECK(apartment_vertex(p, r).apartment_coordinate() == r);
      CHECK(distance(apartment_vertex(p, r), x0) == std::abs(r));
    }
  }
  auto const z1 = apartment_vertex(ZETA, 1);
  CHECK(z1 == canonical_vertex(Matrix2::diagonal(t_pow(-1), one()), ZETA));
  CHECK(z1.level() == -1);
  auto const d = matrices::translation(Q);
  for (long m = -3; m <= 3; ++m) {
    for (long r = -4; r <= 4; ++r) {
      CHECK(act(d.pow(m), apartment_vertex(RHO, r))
            == apartment_vertex(RHO, r + 2 * m));
      CHECK(act(d.pow(m), apartment_vertex(ZETA, r))
            == apartment_vertex(ZETA, r - 2 * m));
    }
  }
}

TEST_CASE("upper triangular matrices fix the end r -> +infinity") {
  Sampler sampler(Q, 28);
  for (int i = 0; i < 100; ++i) {
    auto const& p = i % 2 == 0 ? RHO : ZETA;
    Matrix2 const g(sampler.nonzero_rational_function(2),
                    sampler.rational_function(2),
                    zero(),
                    sampler.nonzero_rational_function(2));
    // Expected shift from the diagonal alone.
    long const c = valuation(p, g.d()).value() - valuation(p, g.a()).value();
    for (long r = 30; r < 35; ++r) {
      CHECK(act(g, apartment_vertex(p, r)) == apartment_vertex(p, r + c));
    }
  }
}

TEST_CASE("fixed set of u_n on the apartment") {
  for (long n = -3; n <= 3; ++n) {
    auto const u = matrices::unipotent(Q, n);
    for (long r = -8; r <= 8; ++r) {
      // u_n conjugated by diag(pi^-r, 1) has corner t^n pi^r.
      bool const rho_fixed  = r >= n;
      bool const zeta_fixed = r >= -n;
      auto const xr         = apartment_vertex(RHO, r);
      auto const xz         = apartment_vertex(ZETA, r);
      CHECK(fixes(u, xr) == rho_fixed);
      CHECK(fixes(u, xz) == zeta_fixed);
      if (!rho_fixed) {
        CHECK_FALSE(act(u, xr).coord().empty());
      }
      if (!zeta_fixed) {
        CHECK_FALSE(act(u, xz).coord().empty());
      }
    }
  }
}

TEST_CASE("reduce_to_ray examples") {
  for (auto const& p : {RHO, ZETA}) {
    for (long r = 0; r <= 6; ++r) {
      auto const red = reduce_to_ray(apartment_vertex(p, r));
      CHECK(red.r == r);
      CHECK(act(red.g, apartment_vertex(p, r)) == apartment_vertex(p, r));
    }
  }
  auto const red = reduce_to_ray(canonical_vertex(matrices::unipotent(Q, 1), RHO));
  CHECK(red.r == 0);
  CHECK(red.g == Matrix2::upper_unipotent(-t_pow(1)));
  CHECK_THROWS_AS(reduce_to_ray(apartment_vertex(
                      Place::at(Polynomial(Q, {1, 0, 1})), 0)),
                  std::invalid_argument);
}

TEST_CASE("reduce_to_ray round trip after scrambling") {
  Sampler sampler(Q, 29);
  RingSpec const poly_t(RingSpec::Kind::poly_over_k);
  RingSpec const poly_inv(RingSpec::Kind::poly_inv_over_k);
  for (int i = 0; i < 200; ++i) {
    auto const& p     = i % 2 == 0 ? RHO : ZETA;
    auto const& ring  = p.is_infinity() ? poly_t : poly_inv;
    long const  r     = sampler.integer(0, 6);
    auto const  h     = sampler.ray_group_element(p, 4);
    auto const  v     = act(h, apartment_vertex(p, r));
    auto const  red   = reduce_to_ray(v);
    CHECK(red.r == r);
    CHECK(act(red.g, v) == apartment_vertex(p, r));
    CHECK(red.g.det().is_one());
    CHECK(entries_in(red.g, ring));
  }
}

TEST_CASE("reduce_to_ray on arbitrary vertices") {
  Sampler sampler(Q, 30);
  for (int i = 0; i < 200; ++i) {
    auto const& p   = i % 2 == 0 ? RHO : ZETA;
    auto const  v   = sampler.vertex(p, 5);
    auto const  red = reduce_to_ray(v);
    CHECK(red.r >= 0);
    CHECK(act(red.g, v) == apartment_vertex(p, red.r));
  }
}

TEST_CASE("tree operations over F_p") {
  Field const f5 = Field::prime(5);
  Sampler     sampler(f5, 31);
  Place const rho = Place::infinity(f5);
  for (int i = 0; i < 100; ++i) {
    auto const v = sampler.vertex(rho, 3);
    auto const w = sampler.vertex(rho, 3);
    auto const g = sampler.invertible_matrix(1);
    CHECK(distance(v, w) == meet_distance(v, w));
    CHECK(distance(act(g, v), act(g, w)) == distance(v, w));
    auto const red = reduce_to_ray(v);
    CHECK(act(red.g, v) == apartment_vertex(rho, red.r));
  }
}
