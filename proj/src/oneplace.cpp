#include "fp2tree/oneplace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fp2tree {

  OnePlaceInstance::OnePlaceInstance(RingSpec         ring,
                                     Place            place,
                                     RationalFunction witness)
      : _ring(std::move(ring)),
        _place(std::move(place)),
        _witness(std::move(witness)),
        _nu(0) {
    using K        = RingSpec::Kind;
    bool const ok  = ((_ring.kind() == K::poly_over_k
                       || _ring.kind() == K::poly_over_z)
                      && _place.is_infinity())
                     || (_ring.kind() == K::poly_inv_over_k
                         && _place == Place::zero(_place.field()));
    if (!ok) {
      throw std::invalid_argument(_ring.name()
                                  + " is not the one-place ring of "
                                  + _place.name());
    }
    if (!in_ring(_witness, _ring)) {
      throw std::invalid_argument("witness is not in " + _ring.name());
    }
    Valuation const v = valuation(_place, _witness);
    if (v.is_infinite() || v.value() >= 0) {
      throw std::invalid_argument("witness needs negative valuation");
    }
    _nu = v.value();
  }

  OnePlaceInstance OnePlaceInstance::polynomials(Field f) {
    return OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                            Place::infinity(f), RationalFunction::t_power(f, 1));
  }

  Matrix2 OnePlaceInstance::unipotent(long n) const {
    return Matrix2::upper_unipotent(_witness.pow(n));
  }

  Matrix2 OnePlaceInstance::translation(long n) const {
    return Matrix2::diagonal(_witness.pow(n), _witness.pow(-n));
  }

  Json OnePlaceInstance::to_json() const {
    return Json{{"ring", _ring.name()},
                {"place", fp2tree::to_json(_place)},
                {"witness", fp2tree::to_json(_witness)},
                {"witness_valuation", _nu}};
  }

  namespace {
    void require_positive(long n) {
      if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
      }
    }
  }  // namespace

  long exit_point(long n, OnePlaceInstance const& inst) {
    require_positive(n);
    auto const x0   = apartment_vertex(inst.place(), 0);
    auto const path = geodesic(x0, act(inst.unipotent(n), x0));
    long       r    = 0;
    for (auto const& v : path) {
      if (auto c = v.apartment_coordinate()) {
        r = std::max(r, *c);
      }
    }
    return r;
  }

  bool overlap_holds(long n, OnePlaceInstance const& inst) {
    long const    r  = exit_point(n, inst);
    auto const    xr = apartment_vertex(inst.place(), r);
    auto const    path = geodesic(apartment_vertex(inst.place(), 0), xr);
    Matrix2 const u    = inst.unipotent(n);
    std::set<TreeVertex> const mine(path.begin(), path.end());
    std::set<TreeVertex>       meet;
    for (auto const& v : path) {
      auto const w = act(u, v);
      if (mine.contains(w)) {
        meet.insert(w);
      }
    }
    return meet == std::set<TreeVertex>{xr};
  }

  ExitFit fit_exit_points(OnePlaceInstance const& inst, long lo, long hi) {
    if (lo < 1 || hi <= lo) {
      throw std::invalid_argument("fit needs 1 <= lo < hi");
    }
    std::vector<std::pair<Rational, Rational>> pts;
    Rational                                    sx = 0, sy = 0;
    for (long n = lo; n <= hi; ++n) {
      Rational const x = n, y = exit_point(n, inst);
      pts.emplace_back(x, y);
      sx += x;
      sy += y;
    }
    Rational const count = static_cast<long>(pts.size());
    Rational const mx = sx / count, my = sy / count;
    Rational       sxy = 0, sxx = 0;
    for (auto const& [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    ExitFit fit{sxy / sxx, 0, true};
    fit.intercept = my - fit.slope * mx;
    for (auto const& [x, y] : pts) {
      fit.exact = fit.exact && fit.slope * x + fit.intercept == y;
    }
    return fit;
  }

  TranslationRecord translation_record(long n, OnePlaceInstance const& inst) {
    auto const v = act(inst.translation(n), apartment_vertex(inst.place(), 0));
    auto const c = v.apartment_coordinate();
    if (!c) {
      throw std::logic_error("diagonal translate left the apartment");
    }
    return {n, *c, -2 * n * inst.witness_valuation()};
  }

  Certificate oneplace_certificate(long bound, OnePlaceInstance const& inst) {
    if (bound > 0) {
      throw std::invalid_argument("bound must be <= 0");
    }
    Certificate c{bound, 0, {}, {}};
    for (Entry e : {Entry::a, Entry::c}) {
      c.chains.push_back(
          make_chain(e, inst.place(), 1, inst.witness(), "f", bound));
    }
    c.threshold         = c.chains.front().steps.back().value;
    std::string const m = std::to_string(c.threshold);
    std::string const p = inst.place().is_infinity() ? "inf" : "0";
    c.conclusion        = {
        "x in " + inst.ring().name() + " has v_q(x) >= 0 at every place q != "
            + p,
        "v_" + p + "(x) >= 0 as well makes x a constant function",
        "m >= " + m + " => v_" + p + "(a), v_" + p
            + "(c) >= 1 => a, c are constants of positive valuation => a = c = 0",
        "a = c = 0 => det M = 0, so M is not in SL_2",
        "m = " + std::to_string(c.threshold - 1)
            + ": the identity meets every bound, so m* = " + m + " is sharp",
    };
    return c;
  }

  std::size_t constancy_check(OnePlaceInstance const& inst,
                              std::uint64_t           seed,
                              int                     samples) {
    Field const        f = inst.field();
    Sampler            sampler(f, seed);
    std::vector<Place> others;
    for (auto const& pi : {Polynomial(f, {-1, 1}), Polynomial(f, {1, 1}),
                           Polynomial(f, {-2, 1}), Polynomial(f, {0, 1})}) {
      Place q = Place::at(pi);
      if (q != inst.place()) {
        others.push_back(q);
      }
    }
    if (!inst.place().is_infinity()) {
      others.push_back(Place::infinity(f));
    }
    std::size_t checked = 0;
    for (int i = 0; i < samples; ++i) {
      long const       deg = sampler.integer(0, 5);
      RationalFunction x   = inst.place().is_infinity()
                                 ? RationalFunction(sampler.polynomial(deg))
                                 : sampler.laurent(-deg, 0);
      if (x.is_zero() || !in_ring(x, inst.ring())) {
        continue;
      }
      ++checked;
      for (auto const& q : others) {
        if (valuation(q, x) < Valuation(0)) {
          throw std::logic_error("ring element with a pole off the place");
        }
      }
      long const v = valuation(inst.place(), x).value();
      if (v > 0 || (v == 0 && !x.is_constant())) {
        throw std::logic_error("nonconstant element with v_p >= 0: "
                               + x.to_string());
      }
    }
    return checked;
  }

  ReplayReport replay_oneplace(Certificate const&      c,
                               OnePlaceInstance const& inst,
                               std::uint64_t           seed,
                               int                     samples) {
    ReplayReport r;
    auto check = [&r](bool ok, std::string const& what) {
      ++r.checks;
      if (!ok) {
        r.failures.push_back(what);
      }
    };
    long const slope = -inst.witness_valuation();
    check(c.bound <= 0, "bound is <= 0");
    check(c.threshold == (1 - c.bound + slope - 1) / slope,
          "threshold is the first m with L + m*slope >= 1");
    check(c.chains.size() == 2, "two chains");
    Sampler sampler(inst.field(), seed);
    for (auto const& ch : c.chains) {
      check(ch.place == inst.place() && ch.unit == inst.witness()
                && ch.exponent_sign == 1,
            "chain uses the place and witness");
      replay_chain(ch, c.bound, c.threshold, sampler, samples, r);
    }
    try {
      check(constancy_check(inst, seed, samples) > 0,
            "constancy sampled some ring element");
    } catch (std::logic_error const& e) {
      check(false, e.what());
    }
    auto meets = [&](long m) {
      Matrix2 const g = inst.translation(m);
      for (std::size_t i = 0; i < 4; ++i) {
        if (valuation(inst.place(), g.entry(i)) < Valuation(c.bound)) {
          return false;
        }
      }
      return true;
    };
    check(meets(c.threshold - 1), "identity meets the bound at m* - 1");
    check(!meets(c.threshold), "identity fails the bound at m*");
    return r;
  }

  std::vector<Matrix2> oneplace_generators(OnePlaceInstance const& inst) {
    auto const one = RationalFunction::one(inst.field());
    return {Matrix2::upper_unipotent(one), Matrix2::lower_unipotent(one),
            Matrix2::upper_unipotent(inst.witness()),
            Matrix2::lower_unipotent(inst.witness())};
  }

  Json DisconnectionReport::to_json(OnePlaceInstance const& inst) const {
    Json recs = Json::array();
    for (auto const& r : records) {
      recs.push_back(Json{{"n", r.n},
                          {"r_n", r.r_n},
                          {"in_orbit_sample", r.in_orbit_sample},
                          {"overlap", r.overlap},
                          {"certificate_ref", certificate_ref}});
    }
    Json trans = Json::array();
    for (auto const& t : translations) {
      trans.push_back(
          Json{{"n", t.n}, {"level", t.level}, {"expected", t.expected}});
    }
    return Json{{"instance", inst.to_json()},
                {"radius", radius},
                {"orbit_size", orbit_size},
                {"records", recs},
                {"translations", trans},
                {"certificate_ref", certificate_ref},
                {"certificate", certificate.to_json()}};
  }

  DisconnectionReport disconnection_probe(long                    radius,
                                          OnePlaceInstance const& inst,
                                          long                    n_max,
                                          ProbeOptions const&     options) {
    auto const gens = options.generators.empty() ? oneplace_generators(inst)
                                                 : options.generators;
    auto const ball
        = word_ball(gens, options.ball_length, {}, inst.field(), inst.ring());
    auto const                 x0 = apartment_vertex(inst.place(), 0);
    std::set<TreeVertex>       orbit;
    for (auto const& g : ball) {
      orbit.insert(act(g, x0));
    }
    DisconnectionReport rep{radius,
                            orbit.size(),
                            {},
                            {},
                            oneplace_certificate(options.bound, inst),
                            "oneplace_certificate(L="
                                + std::to_string(options.bound) + ")"};
    for (long n = 1; n <= n_max; ++n) {
      long const r  = exit_point(n, inst);
      auto const xr = apartment_vertex(inst.place(), r);
      bool const near = std::any_of(orbit.begin(), orbit.end(), [&](auto const& v) {
        return distance(v, xr) <= radius;
      });
      rep.records.push_back({n, r, near, overlap_holds(n, inst)});
      rep.translations.push_back(translation_record(n, inst));
    }
    return rep;
  }

  long neighborhood_connected(std::vector<Matrix2> const& generators,
                              TreeVertex const&           basepoint) {
    long r = 0;
    for (auto const& g : generators) {
      r = std::max(r, distance(act(g, basepoint), basepoint));
    }
    return r;
  }

}  // namespace fp2tree
