#include <map>

#include "doctest.h"

#include "fp2tree/random.hpp"
#include "fp2tree/ring_spec.hpp"
#include "fp2tree/valuation.hpp"

using namespace fp2tree;

namespace {
  Field const Q = Field::rationals();

  RationalFunction t_pow(long k) {
    return RationalFunction::t_power(Q, k);
  }
  RationalFunction cst(long c) {
    return RationalFunction(Q, c);
  }
  Polynomial poly(std::initializer_list<long> c) {
    return Polynomial(Q, c);
  }

  // Power series of p/q at t = 0 (q(0) != 0) by the convolution recurrence
  // q_0 s_k = p_k - sum_{j>=1} q_j s_{k-j}; first n coefficients.
  std::vector<Rational> power_series_oracle(std::vector<Rational> const& p,
                                            std::vector<Rational> const& q,
                                            std::size_t                  n) {
    std::vector<Rational> s(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = k < p.size() ? p[k] : Rational(0);
      for (std::size_t j = 1; j <= k && j < q.size(); ++j) {
        acc -= q[j] * s[k - j];
      }
      s[k] = acc / q[0];
    }
    return s;
  }

  std::vector<Rational> coeffs_of(Polynomial const& p) {
    std::vector<Rational> out;
    for (auto const& c : p.coefficients()) {
      out.push_back(c.value());
    }
    return out;
  }

  // Expansion oracle at any degree one place through substitution: returns
  // exponent -> coefficient for every exponent < order.
  std::map<long, Rational> expansion_oracle(RationalFunction const& f,
                                            bool at_infinity,
                                            long order) {
    std::map<long, Rational> out;
    if (f.is_zero()) {
      return out;
    }
    auto p = coeffs_of(f.numerator());
    auto q = coeffs_of(f.denominator());
    long shift;
    if (at_infinity) {
      // f(1/u) = u^(deg q - deg p) * rev(p)(u) / rev(q)(u)
      shift = static_cast<long>(q.size()) - static_cast<long>(p.size());
      std::reverse(p.begin(), p.end());
      std::reverse(q.begin(), q.end());
    } else {
      // Strip powers of t.
      long lp = 0, lq = 0;
      while (p[lp] == 0) {
        ++lp;
      }
      while (q[lq] == 0) {
        ++lq;
      }
      p.erase(p.begin(), p.begin() + lp);
      q.erase(q.begin(), q.begin() + lq);
      shift = lp - lq;
    }
    if (order <= shift) {
      return out;
    }
    auto s = power_series_oracle(p, q, static_cast<std::size_t>(order - shift));
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != 0) {
        out.emplace(shift + static_cast<long>(k), s[k]);
      }
    }
    return out;
  }

  std::map<long, Rational> as_map(TruncatedSeries const& s) {
    std::map<long, Rational> out;
    for (auto const& term : s.terms()) {
      out.emplace(term.exponent, term.coefficient.coefficient(0).value());
    }
    return out;
  }
}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
  Scalar const half(Q, Rational(1, 2));
  CHECK((half + half).is_one());
  CHECK(Scalar::parse(Q, "-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(Q, "x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), std::domain_error);

  Field const f7 = Field::prime(7);
  Scalar const three(f7, 3L);
  CHECK((three * three.inverse()).is_one());
  CHECK(Scalar(f7, -1L).value() == 6);
  CHECK(Scalar(f7, Rational(1, 2)).value() == 4);
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(three + Scalar(Q, 1L), std::invalid_argument);
}

TEST_CASE("polynomial division, gcd and root test") {
  auto const a     = poly({-1, 0, 1});  // t^2 - 1
  auto const b     = poly({1, 1});      // t + 1
  auto [quo, rem]  = divmod(a, b);
  CHECK(quo == poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(a, poly({2, 2})) == b);
  auto const eg = extended_gcd(poly({1, 0, 1}), poly({0, 1}));
  CHECK(eg.g.is_one());
  CHECK(eg.s * poly({1, 0, 1}) + eg.u * poly({0, 1}) == eg.g);
  CHECK(multiplicity(poly({0, 0, 3, 1}), Polynomial::t(Q)) == 2);
  CHECK(multiplicity(poly({1, 2, 1}), b) == 2);
  CHECK(has_root(poly({-1, 0, 4})));  // 4t^2 - 1
  CHECK_FALSE(has_root(poly({-2, 0, 1})));
  CHECK_THROWS_AS(divmod(a, Polynomial(Q)), std::domain_error);
}

TEST_CASE("rational functions are reduced with monic denominator") {
  RationalFunction const f(poly({-2, 0, 2}), poly({2, 2}));  // 2(t^2-1)/2(t+1)
  CHECK(f == RationalFunction(poly({-1, 1})));
  RationalFunction const g(poly({3}), poly({4, 2}));
  CHECK(g.denominator().is_monic());
  CHECK(g.numerator() == Polynomial::constant(Scalar(Q, Rational(3, 2))));
  CHECK(RationalFunction::zero(Q).denominator().is_one());
  CHECK((t_pow(3) * t_pow(-5)) == t_pow(-2));
  CHECK(t_pow(-2).is_laurent());
  auto lt = (t_pow(-1) + cst(2) + t_pow(3)).laurent_terms();
  REQUIRE(lt);
  CHECK(lt->size() == 3);
  CHECK(lt->at(-1).is_one());
  CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial(Q)),
                  std::domain_error);
}

TEST_CASE("valuation examples") {
  auto const rho  = Place::infinity(Q);
  auto const zeta = Place::zero(Q);
  // (t^3 + 1)/t at infinity: deg q - deg p = 1 - 3.
  RationalFunction const f(poly({1, 0, 0, 1}), poly({0, 1}));
  CHECK(valuation(rho, f) == Valuation(-2));
  CHECK(valuation(zeta, RationalFunction::zero(Q)).is_infinite());
  CHECK(valuation(zeta, RationalFunction::zero(Q)) > Valuation(1000000));
  // t^2 (3 + t) / (1 + t)
  RationalFunction const g(poly({0, 0, 3, 1}), poly({1, 1}));
  CHECK(valuation(zeta, g) == Valuation(2));
  CHECK(valuation(rho, t_pow(1)) == Valuation(-1));
  CHECK(valuation(zeta, t_pow(1)) == Valuation(1));
  CHECK_THROWS_AS(valuation(zeta, RationalFunction::zero(Q)).value(),
                  std::domain_error);
}

TEST_CASE("places check irreducibility up to degree three") {
  CHECK_NOTHROW(Place::at(poly({1, 0, 1})));
  CHECK_THROWS_AS(Place::at(poly({-1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Place::at(poly({2, 2})), std::invalid_argument);  // monic
  CHECK_THROWS_AS(Place::at(poly({1, 0, 0, 0, 1})), std::invalid_argument);
  auto const p = Place::at(poly({1, 0, 0, 0, 1}), true);
  CHECK(p.irreducibility_asserted());
  // x^2 + 1 is reducible over F_5 (2^2 = -1).
  Field const f5 = Field::prime(5);
  CHECK_THROWS_AS(Place::at(Polynomial(f5, {1, 0, 1})), std::invalid_argument);
  CHECK_NOTHROW(Place::at(Polynomial(f5, {2, 0, 1})));
}

TEST_CASE("expand examples") {
  auto const rho  = Place::infinity(Q);
  auto const zeta = Place::zero(Q);
  // 1/(1 - t) at t = 0 to order 3.
  auto const s1 = expand(RationalFunction(poly({1}), poly({1, -1})), zeta, 3);
  CHECK(s1.order() == 3);
  CHECK(as_map(s1) == std::map<long, Rational>{{0, 1}, {1, 1}, {2, 1}});
  // t at infinity: (1/t)^-1.
  auto const s2 = expand(t_pow(1), rho, 0);
  CHECK(as_map(s2) == std::map<long, Rational>{{-1, 1}});
  // 1/(t - 2) at t = 0 to order 2; frozen from the series oracle.
  RationalFunction const h(poly({1}), poly({-2, 1}));
  auto const oracle = expansion_oracle(h, false, 2);
  CHECK(oracle
        == std::map<long, Rational>{{0, Rational(-1, 2)},
                                    {1, Rational(-1, 4)}});
  CHECK(as_map(expand(h, zeta, 2)) == oracle);
  CHECK(expand(RationalFunction::zero(Q), zeta, 5).empty());
}

TEST_CASE("expand agrees with the substitution oracle") {
  Sampler sampler(Q, 11);
  auto const rho  = Place::infinity(Q);
  auto const zeta = Place::zero(Q);
  for (int i = 0; i < 200; ++i) {
    auto const f     = sampler.rational_function(3);
    long const order = sampler.integer(-5, 6);
    CHECK(as_map(expand(f, zeta, order)) == expansion_oracle(f, false, order));
    CHECK(as_map(expand(f, rho, order)) == expansion_oracle(f, true, order));
  }
}

TEST_CASE("expansion at a degree two place") {
  auto const p = Place::at(poly({1, 0, 1}));  // t^2 + 1
  // t / (t^2 + 1) = t * pi^-1
  RationalFunction const f(poly({0, 1}), poly({1, 0, 1}));
  auto const             s = expand(f, p, 3);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].exponent == -1);
  CHECK(s.terms()[0].coefficient == poly({0, 1}));
  Sampler sampler(Q, 5);
  for (int i = 0; i < 50; ++i) {
    auto const g = sampler.rational_function(4);
    for (long n : {-2L, 0L, 3L}) {
      CHECK(valuation(p, g - expand(g, p, n).value()) >= Valuation(n));
    }
  }
}

TEST_CASE("in_ring examples") {
  RingSpec const lz(RingSpec::Kind::laurent_over_z);
  CHECK(in_ring(t_pow(1) + t_pow(-1), lz));
  CHECK_FALSE(in_ring(RationalFunction(poly({1}), poly({1, -1})), lz));
  CHECK_FALSE(in_ring(RationalFunction::constant(Scalar(Q, Rational(1, 2))),
                      lz));
  // (t^2 + 1)/t has valuation -1 at infinity.
  RationalFunction const f(poly({1, 0, 1}), poly({0, 1}));
  CHECK_FALSE(in_ring(f, RingSpec::valuation_ring(Place::infinity(Q))));
  CHECK(in_ring(f.inverse(), RingSpec::valuation_ring(Place::infinity(Q))));
  CHECK(in_ring(t_pow(-3) + cst(2), RingSpec(RingSpec::Kind::poly_inv_over_k)));
  CHECK_FALSE(in_ring(t_pow(1), RingSpec(RingSpec::Kind::poly_inv_over_k)));
  CHECK(in_ring(t_pow(2), RingSpec(RingSpec::Kind::poly_over_z)));
  CHECK_FALSE(in_ring(t_pow(-2), RingSpec(RingSpec::Kind::poly_over_k)));
  CHECK(in_ring(t_pow(-2), RingSpec(RingSpec::Kind::laurent_over_k)));
}

TEST_CASE("polynomial_part examples") {
  auto const zeta = Place::zero(Q);
  auto const rho  = Place::infinity(Q);
  // (t^3 + 1)/t = t^2 + 1/t at t = 0 keeps 1/t.
  CHECK(polynomial_part(RationalFunction(poly({1, 0, 0, 1}), poly({0, 1})),
                        zeta)
        == t_pow(-1));
  // t^2 + 3 + 1/t at infinity keeps the strictly negative exponents only.
  CHECK(polynomial_part(t_pow(2) + cst(3) + t_pow(-1), rho) == t_pow(2));
  CHECK(polynomial_part(cst(5), rho).is_zero());
  CHECK(polynomial_part(cst(5), zeta).is_zero());
  Sampler sampler(Q, 3);
  for (int i = 0; i < 100; ++i) {
    auto const f = sampler.rational_function(3);
    for (auto const& p : {zeta, rho}) {
      CHECK(valuation(p, f - polynomial_part(f, p)) >= Valuation(0));
    }
  }
}

TEST_CASE("valuations are ultrametric on random pairs") {
  Sampler sampler(Q, 1);
  std::vector<Place> places{Place::infinity(Q),
                            Place::zero(Q),
                            Place::at(poly({-1, 1})),
                            Place::at(poly({1, 0, 1}))};
  for (int i = 0; i < 1000; ++i) {
    auto const  f  = sampler.rational_function(3);
    auto const  g  = sampler.rational_function(3);
    auto const& p  = places[static_cast<std::size_t>(i) % places.size()];
    auto const  vf = valuation(p, f);
    auto const  vg = valuation(p, g);
    CHECK(valuation(p, f * g) == vf + vg);
    auto const vs = valuation(p, f + g);
    CHECK(vs >= std::min(vf, vg));
    if (vf != vg) {
      CHECK(vs == std::min(vf, vg));
    }
  }
}

TEST_CASE("expand round trip") {
  Sampler sampler(Q, 2);
  for (int i = 0; i < 300; ++i) {
    auto const f = sampler.rational_function(3);
    long const n = sampler.integer(-5, 10);
    for (auto const& p : {Place::infinity(Q), Place::zero(Q)}) {
      auto const s = expand(f, p, n);
      CHECK(valuation(p, f - s.value()) >= Valuation(n));
      if (!s.empty()) {
        CHECK(Valuation(s.terms().front().exponent) == valuation(p, f));
      }
    }
  }
}

TEST_CASE("reduced form equality agrees with cross multiplication") {
  Sampler sampler(Q, 4);
  for (int i = 0; i < 300; ++i) {
    auto const f = sampler.rational_function(2);
    // A second representation of the same or a nearby value.
    auto const k = sampler.polynomial(2);
    if (k.is_zero()) {
      continue;
    }
    RationalFunction const g
        = sampler.coin() ? RationalFunction(f.numerator() * k,
                                            f.denominator() * k)
                         : sampler.rational_function(2);
    bool const cross = f.numerator() * g.denominator()
                       == g.numerator() * f.denominator();
    CHECK((f == g) == cross);
  }
}

TEST_CASE("degree formula: valuations over all places sum to zero") {
  Sampler sampler(Q, 9);
  for (int i = 0; i < 100; ++i) {
    // c * prod (t - a_i)^e_i with distinct roots a_i.
    std::map<long, long> exps;
    for (int j = 0; j < 4; ++j) {
      long const e = sampler.integer(-3, 3);
      if (e != 0) {
        exps[sampler.integer(-4, 4)] += e;
      }
    }
    RationalFunction f = RationalFunction::constant(sampler.nonzero_scalar());
    for (auto const& [a, e] : exps) {
      f *= RationalFunction(poly({-a, 1})).pow(e);
    }
    long total = valuation(Place::infinity(Q), f).value();
    for (auto const& [a, e] : exps) {
      auto const p = Place::at(poly({-a, 1}));
      total += static_cast<long>(p.residue_degree())
               * valuation(p, f).value();
    }
    CHECK(total == 0);
  }
}

TEST_CASE("arithmetic over F_p") {
  Field const f3 = Field::prime(3);
  Sampler     sampler(f3, 8);
  auto const  zeta = Place::zero(f3);
  for (int i = 0; i < 100; ++i) {
    auto const f = sampler.rational_function(3);
    long const n = sampler.integer(-3, 6);
    CHECK(valuation(zeta, f - expand(f, zeta, n).value()) >= Valuation(n));
  }
  // 1/(1 - t) over F_3 is still 1 + t + t^2 + ...
  RationalFunction const g(Polynomial(f3, {1}), Polynomial(f3, {1, -1}));
  CHECK(expand(g, zeta, 4).terms().size() == 4);
  CHECK(in_ring(RationalFunction(Polynomial(f3, {2, 1})),
                RingSpec(RingSpec::Kind::poly_over_z)));
}
