#include "fp2tree/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fp2tree/escape.hpp"
#include "fp2tree/homology.hpp"
#include "fp2tree/oneplace.hpp"
#include "fp2tree/random.hpp"
#include "fp2tree/stabilizer.hpp"

namespace fp2tree {

  void Report::add(std::string name, bool passed, std::string detail) {
    _checks.push_back({std::move(name), passed, std::move(detail)});
  }

  void Report::merge(Report const& other, std::string const& prefix) {
    for (auto const& c : other._checks) {
      _checks.push_back({prefix + "." + c.name, c.passed, c.detail});
    }
  }

  bool Report::passed() const {
    return std::all_of(_checks.begin(), _checks.end(),
                       [](auto const& c) { return c.passed; });
  }

  std::vector<Check> Report::sorted() const {
    auto out = _checks;
    std::stable_sort(out.begin(), out.end(),
                     [](auto const& x, auto const& y) { return x.name < y.name; });
    return out;
  }

  std::optional<Check> Report::first_failure() const {
    for (auto const& c : sorted()) {
      if (!c.passed) {
        return c;
      }
    }
    return std::nullopt;
  }

  Json Report::to_json() const {
    Json checks = Json::array();
    for (auto const& c : sorted()) {
      checks.push_back(
          Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return Json{{"schema", 1},
                {"suite", _suite},
                {"passed", passed()},
                {"checks", checks},
                {"data", _data}};
  }

  std::string Report::to_text() const {
    std::ostringstream os;
    for (auto const& c : sorted()) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) {
        os << ": " << c.detail;
      }
      os << "\n";
    }
    return os.str();
  }

  namespace {
    // Counts cases of one check and keeps the first failure.
    class Tally {
     public:
      void expect(bool ok, std::function<std::string()> const& what) {
        ++_count;
        if (!ok && !_failure) {
          _failure = what();
        }
      }
      void commit(Report& r, std::string name) const {
        r.add(std::move(name), !_failure,
              _failure ? *_failure : std::to_string(_count) + " cases");
      }

     private:
      std::size_t                _count = 0;
      std::optional<std::string> _failure;
    };

    std::string label(Place const& p) {
      return p.is_infinity() ? "inf" : "zero";
    }
  }  // namespace

  Report tree_suite(TreeSuiteConfig const& cfg) {
    Report      r("tree");
    Field const f = cfg.field;
    Sampler     s(f, cfg.seed);
    r.data()    = Json{{"field", f.p},
                       {"seed", cfg.seed},
                       {"samples", cfg.samples},
                       {"flip_orientation", cfg.flip_orientation}};

    Tally ultra, product;
    for (Place const& p : {Place::infinity(f), Place::zero(f)}) {
      for (int i = 0; i < cfg.samples; ++i) {
        auto const x = s.rational_function(3), y = s.rational_function(3);
        ultra.expect(valuation(p, x + y) >= std::min(valuation(p, x), valuation(p, y)),
                     [&] { return "v(x+y) < min at x = " + x.to_string(); });
        if (!x.is_zero() && !y.is_zero()) {
          product.expect(valuation(p, x * y).value()
                             == valuation(p, x).value() + valuation(p, y).value(),
                         [&] { return "v(xy) != v(x)+v(y) at x = " + x.to_string(); });
        }
      }
    }
    ultra.commit(r, "algebra.ultrametric");
    product.commit(r, "algebra.product_rule");

    for (Place const& p : {Place::infinity(f), Place::zero(f)}) {
      std::string const pre = "tree." + label(p) + ".";
      Tally idem, inv, law, iso, dist;
      for (int i = 0; i < cfg.samples; ++i) {
        auto const v = s.vertex(p, 4);
        auto const w = s.vertex(p, 4);
        idem.expect(canonical_vertex(v.representative(), p) == v,
                    [&] { return v.to_string(); });

        auto const m      = s.invertible_matrix(2);
        auto const k      = s.integral_matrix(p);
        auto const lambda = s.nonzero_rational_function(2);
        inv.expect(canonical_vertex(m * k, p) == canonical_vertex(m, p)
                       && canonical_vertex(m.scaled(lambda), p)
                              == canonical_vertex(m, p),
                   [&] { return m.to_string(); });

        auto const g = s.invertible_matrix(2);
        auto const h = s.invertible_matrix(2);
        law.expect(act(g * h, v) == act(g, act(h, v))
                       && act(g.inverse(), act(g, v)) == v,
                   [&] { return g.to_string() + " " + h.to_string(); });
        iso.expect(distance(act(g, v), act(g, w)) == distance(v, w),
                   [&] { return g.to_string(); });

        long const d    = distance(v, w);
        auto const path = geodesic(v, w);
        long const meet = meet_level(v, w);
        bool       ok   = static_cast<long>(path.size()) == d + 1
                  && path.front() == v && path.back() == w
                  && (v.level() - meet) + (w.level() - meet) == d;
        for (std::size_t j = 1; ok && j < path.size(); ++j) {
          ok = distance(path[j - 1], path[j]) == 1;
        }
        dist.expect(ok, [&] { return v.to_string() + " " + w.to_string(); });
      }
      idem.commit(r, pre + "canonical_idempotent");
      inv.commit(r, pre + "canonical_invariance");
      law.commit(r, pre + "action_law");
      iso.commit(r, pre + "isometry");
      dist.commit(r, pre + "distance_vs_geodesic");
    }

    // u_n fixes x_inf(r) iff r >= n and x_0(r) iff r >= -n.
    Tally fixed;
    auto  apt = [&](Place const& p, long rr) {
      return apartment_vertex(p, cfg.flip_orientation ? -rr : rr);
    };
    for (long n = -3; n <= 3; ++n) {
      auto const u = matrices::unipotent(f, n);
      for (long rr = -8; rr <= 8; ++rr) {
        fixed.expect(fixes(u, apt(Place::infinity(f), rr)) == (rr >= n)
                         && fixes(u, apt(Place::zero(f), rr)) == (rr >= -n),
                     [&] {
                       return "n = " + std::to_string(n)
                              + ", r = " + std::to_string(rr);
                     });
      }
    }
    fixed.commit(r, "tree.unipotent_fixed_set");
    return r;
  }

  Report loop_suite(long n, int enlargements) {
    if (n < 1) {
      throw std::invalid_argument("n must be >= 1");
    }
    Report     r("loop");
    auto const gamma = build_loop(n);
    auto const z     = gamma.chain();
    auto const cone  = build_cone(n);
    r.add("loop.closed", gamma.is_closed() && boundary(z).empty());
    r.add("loop.length", gamma.length() == static_cast<std::size_t>(16 * n),
          std::to_string(gamma.length()) + " edges");
    r.add("cone.boundary_is_loop", boundary(cone.chain) == z);
    r.add("cone.fills_loop", cycle_class_is_trivial(cone.complex, z));

    auto const fill = unique_filling(cone.complex, z);
    r.add("filling.unique_is_cone",
          fill.status == Filling::Status::unique && fill.chain == cone.chain);
    bool apex_in = false;
    for (auto const& [cell, k] : fill.chain) {
      auto const vs = cell.vertices();
      apex_in = apex_in || std::find(vs.begin(), vs.end(), cone.apex) != vs.end();
    }
    r.add("filling.apex_in_support", apex_in);

    auto const d = matrices::translation(Field::rationals());
    SubComplex current = remove_open_star(cone.complex, cone.apex);
    Json       sizes   = Json::array();
    for (int k = 0; k <= enlargements; ++k) {
      std::string const pre = k == 0 ? std::string("punctured")
                                     : "enlargement_" + std::to_string(k);
      if (k > 0) {
        auto next = translate_union(current, {d, d.inverse()});
        r.add(pre + ".strict", next.size() > current.size(),
              std::to_string(next.size()) + " cells");
        current = std::move(next);
      }
      sizes.push_back(current.size());
      r.add(pre + ".apex_absent", !current.contains(Cell(cone.apex)));
      r.add(pre + ".nontrivial", !cycle_class_is_trivial(current, z));
    }
    r.data() = Json{{"n", n},
                    {"loop_edges", gamma.length()},
                    {"cone_squares", cone.complex.size(2)},
                    {"apex", cone.apex.to_string()},
                    {"complex_sizes", sizes}};
    return r;
  }

  Report escape_suite(EscapeSuiteConfig const& cfg) {
    Report r("escape");
    auto   bounds = cfg.bounds;
    if (bounds.empty()) {
      for (long L = 0; L >= -10; --L) {
        bounds.push_back(L);
      }
    }
    for (long L : bounds) {
      std::string const pre = "certificate.L" + std::to_string(L);
      auto const        c   = escape_certificate(L);
      r.add(pre + ".threshold", c.threshold == 1 - L,
            "m* = " + std::to_string(c.threshold));
      auto const rep = replay(c, cfg.seed);
      r.add(pre + ".replay", rep.ok(),
            rep.ok() ? std::to_string(rep.checks) + " steps checked"
                     : rep.failures.front());
    }

    auto const     ball = word_ball(default_generators(), cfg.ball_length);
    RingSpec const lz(RingSpec::Kind::laurent_over_z);
    Tally          member;
    for (auto const& g : ball) {
      bool ok = g.det().is_one();
      for (std::size_t i = 0; ok && i < 4; ++i) {
        ok = in_ring(g.entry(i), lz);
      }
      member.expect(ok, [&] { return g.to_string(); });
    }
    member.commit(r, "ball.in_sl2_laurent_z");

    for (auto const& p : escape_probe(ball, bounds)) {
      std::string const pre = "probe.L" + std::to_string(p.bound);
      r.add(pre + ".no_counterexample", p.counterexamples.empty(),
            p.counterexamples.empty()
                ? std::to_string(p.tested) + " (g, m) pairs"
                : "m = " + std::to_string(p.counterexamples.front().first)
                      + ", g = " + p.counterexamples.front().second.to_string());
      r.add(pre + ".sharp", p.below_threshold_hits > 0,
            std::to_string(p.below_threshold_hits) + " hits at m* - 1");
    }

    std::vector<Matrix2> const id{Matrix2::identity(Field::rationals())};
    Json dists  = Json::array();
    bool linear = true, increasing = true;
    long prev   = -1;
    for (long m = 1; m <= 4; ++m) {
      linear          = linear && min_orbit_distance(m, id) == 4 * m;
      long const dist = min_orbit_distance(m, ball);
      increasing      = increasing && dist > prev;
      prev            = dist;
      dists.push_back(dist);
    }
    r.add("orbit_distance.identity_is_4m", linear);
    r.add("orbit_distance.strictly_increasing", increasing, dists.dump());
    r.data() = Json{{"ball_length", cfg.ball_length},
                    {"ball_size", ball.size()},
                    {"bounds", bounds},
                    {"min_orbit_distance", dists}};
    return r;
  }

  Report stabilizer_suite(std::uint64_t seed, int samples) {
    Report         r("stabilizer");
    Field const    Q = Field::rationals();
    Sampler        s(Q, seed);
    RingSpec const lz(RingSpec::Kind::laurent_over_z);
    RingSpec const lk(RingSpec::Kind::laurent_over_k);

    Tally agree;
    int   members = 0;
    for (int i = 0; i < samples; ++i) {
      long const n = s.integer(0, 3);
      auto const h = s.laurent_sl2_element(2);
      auto const a = standard_vertex(n);
      auto const v = i % 4 == 0 ? a : pair_act(h, a);
      Matrix2    g = s.laurent_sl2_element(2);
      if (i % 2 == 0) {
        Matrix2 const k = i % 4 == 0 ? Matrix2::identity(Q) : h;
        g = k * s.standard_stabilizer_element(n) * k.inverse();
      }
      auto const& spec  = i % 3 == 0 ? lk : lz;
      bool const  fixed = is_in_stabilizer(g, v, spec);
      members += fixed;
      agree.expect(stabilizer_constraints(v).satisfied_by(g, spec) == fixed,
                   [&] { return g.to_string() + " at " + v.to_string(); });
    }
    agree.commit(r, "membership.constraints_vs_fixes");
    r.add("membership.sample_has_members", members >= samples / 4,
          std::to_string(members) + " members");

    auto in_sl2z = [](Matrix2 const& g) {
      for (std::size_t i = 0; i < 4; ++i) {
        auto const& x = g.entry(i);
        if (!x.is_zero()
            && (!x.is_constant() || !x.numerator().coefficient(0).is_integral())) {
          return false;
        }
      }
      return g.det().is_one();
    };
    Tally      sl2z;
    auto const a0 = standard_vertex(0);
    for (int i = 0; i < samples; ++i) {
      Matrix2 g;
      switch (i % 4) {
        case 0:
          g = s.sl2z_element();
          break;
        case 1:
          g = s.laurent_sl2_element(3);
          break;
        case 2:
          g = Matrix2(RationalFunction::constant(Scalar(Q, Rational(1, 2))),
                      RationalFunction(Q, s.integer(-2, 2)),
                      RationalFunction::zero(Q), RationalFunction(Q, 2));
          break;
        default:
          g = s.sl2z_element() * matrices::unipotent(Q, s.integer(-1, 1));
          break;
      }
      bool const expected = in_sl2z(g);
      sl2z.expect(is_in_stabilizer(g, a0, lz) == expected
                      && stabilizer_constraints(a0).satisfied_by(g, lz) == expected,
                  [&] { return g.to_string(); });
    }
    sl2z.commit(r, "a0.equals_sl2z");

    using K = CoefficientSpace::Kind;
    Tally dims;
    for (long n = 0; n <= 6; ++n) {
      CoefficientSpace const v(K::V, n), vbar(K::Vbar, n), w(K::W, n);
      bool ok = v.dimension() == static_cast<std::size_t>(n + 1)
                && vbar.dimension() == (n == 0 ? 1u : 0u)
                && w.dimension() == static_cast<std::size_t>(2 * n + 1);
      for (auto const* sp : {&v, &vbar, &w}) {
        for (auto const& b : sp->basis()) {
          ok = ok && sp->contains(b);
        }
        ok = ok && sp->basis().size() == sp->dimension();
      }
      dims.expect(ok, [&] { return "n = " + std::to_string(n); });
    }
    dims.commit(r, "spaces.dimensions");

    Tally trip;
    for (int i = 0; i < samples / 2; ++i) {
      long const n   = s.integer(0, 4);
      auto const v   = pair_act(s.laurent_sl2_element(4), standard_vertex(n));
      auto const red = reduce_pair_to_standard(v);
      trip.expect(red.n == n && pair_act(red.g, standard_vertex(red.n)) == v,
                  [&] { return v.to_string(); });
    }
    trip.commit(r, "reduce_pair.round_trip");
    return r;
  }

  Report oneplace_suite(long n_max) {
    Report     r("oneplace");
    auto const inst = OnePlaceInstance::polynomials();
    Tally      exits, overlap;
    Json       rs = Json::array();
    for (long n = 1; n <= n_max; ++n) {
      long const rn = exit_point(n, inst);
      rs.push_back(rn);
      exits.expect(rn == n, [&] {
        return "r_" + std::to_string(n) + " = " + std::to_string(rn);
      });
      overlap.expect(overlap_holds(n, inst),
                     [&] { return "n = " + std::to_string(n); });
    }
    exits.commit(r, "exit_points.r_n_equals_n");
    overlap.commit(r, "exit_points.overlap");
    auto const fit = fit_exit_points(inst);
    r.add("exit_points.fit", fit.exact && fit.slope == 1 && fit.intercept == 0,
          "slope " + fit.slope.get_str() + ", intercept "
              + fit.intercept.get_str());
    auto const d2 = translation_record(2, inst);
    r.add("translation.d2_moves_base_by_4", d2.level == 4 && d2.expected == 4,
          "level " + std::to_string(d2.level));

    Tally certs;
    for (long L = 0; L >= -10; --L) {
      auto const c   = oneplace_certificate(L, inst);
      auto const rep = replay_oneplace(c, inst);
      certs.expect(c.threshold == 1 - L && rep.ok(), [&] {
        return "L = " + std::to_string(L)
               + (rep.ok() ? std::string() : ": " + rep.failures.front());
      });
    }
    certs.commit(r, "certificate.replay");

    auto const probe = disconnection_probe(0, inst, n_max);
    bool       none  = std::none_of(probe.records.begin(), probe.records.end(),
                                    [](auto const& rec) { return rec.in_orbit_sample; });
    r.add("probe.exit_points_outside_orbit", none,
          std::to_string(probe.orbit_size) + " orbit vertices");
    r.data() = Json{{"r_n", rs}, {"probe", probe.to_json(inst)}};
    return r;
  }

  namespace {
    Integer bareiss_det(SparseIntMatrix const& m) {
      std::size_t const                 n = m.rows();
      std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
      for (auto const& [i, j, v] : m.entries()) {
        a[i][j] = v;
      }
      Integer prev = 1;
      int     sign = 1;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
          std::size_t p = k + 1;
          while (p < n && a[p][k] == 0) {
            ++p;
          }
          if (p == n) {
            return 0;
          }
          std::swap(a[k], a[p]);
          sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
          for (std::size_t j = k + 1; j < n; ++j) {
            a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
          }
        }
        prev = a[k][k];
      }
      return n == 0 ? Integer(1) : sign * a[n - 1][n - 1];
    }
  }  // namespace

  Report homology_suite(std::uint64_t seed, int samples) {
    Report  r("homology");
    Sampler s(Field::rationals(), seed);
    Tally   identity, unimodular, chain;
    for (int trial = 0; trial < samples; ++trial) {
      auto const      rows = static_cast<std::size_t>(s.integer(1, 8));
      auto const      cols = static_cast<std::size_t>(s.integer(1, 8));
      SparseIntMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (s.integer(0, 2) == 0) {
            a.set(i, j, s.integer(-9, 9));
          }
        }
      }
      auto const snf = smith_normal_form(a);
      bool       diag = true;
      for (auto const& [i, j, v] : snf.D.entries()) {
        diag = diag && i == j;
      }
      identity.expect(snf.U * a * snf.V == snf.D && diag,
                      [&] { return a.to_triplets(); });
      unimodular.expect(abs(bareiss_det(snf.U)) == 1
                            && abs(bareiss_det(snf.V)) == 1,
                        [&] { return a.to_triplets(); });
      bool ok = snf.D.nonzeros() == snf.rank();
      for (std::size_t i = 0; i < snf.rank(); ++i) {
        ok = ok && snf.invariants[i] > 0 && snf.D.get(i, i) == snf.invariants[i];
        if (i + 1 < snf.rank()) {
          ok = ok && mpz_divisible_p(snf.invariants[i + 1].get_mpz_t(),
                                     snf.invariants[i].get_mpz_t());
        }
      }
      chain.expect(ok, [&] { return a.to_triplets(); });
    }
    identity.commit(r, "snf.reconstruction");
    unimodular.commit(r, "snf.unimodular");
    chain.commit(r, "snf.divisibility");

    std::vector<std::pair<std::string, SubComplex>> complexes;
    auto const d = matrices::translation(Field::rationals());
    for (long n = 1; n <= 3; ++n) {
      auto const        cone = build_cone(n);
      std::string const tag  = std::to_string(n);
      auto const        punctured = remove_open_star(cone.complex, cone.apex);
      complexes.emplace_back("cone" + tag, cone.complex);
      complexes.emplace_back("punctured" + tag, punctured);
      complexes.emplace_back("loop" + tag, closure(build_loop(n).edges()));
      complexes.emplace_back("segment" + tag, closure(build_segment(n).edges()));
      if (n <= 2) {
        complexes.emplace_back("enlarged" + tag,
                               translate_union(punctured, {d, d.inverse()}));
      }
    }
    Tally euler, dd, kernel, b2;
    Json  betti = Json::object();
    for (auto const& [name, sc] : complexes) {
      try {
        auto const h    = homology_ranks(sc);
        auto const data = boundary_matrices(sc);
        long const cells = static_cast<long>(sc.size(0))
                           - static_cast<long>(sc.size(1))
                           + static_cast<long>(sc.size(2));
        long const ranks = static_cast<long>(h.b0) - static_cast<long>(h.b1)
                           + static_cast<long>(h.b2);
        euler.expect(cells == ranks, [&] { return name; });
        dd.expect((data.d1 * data.d2).is_zero(), [&] { return name; });
        kernel.expect(smith_normal_form(data.d2, false).rank() == sc.size(2),
                      [&] { return name; });
        b2.expect(true, [] { return std::string(); });
        betti[name] = Json{h.b0, h.b1, h.b2};
      } catch (std::logic_error const& e) {
        b2.expect(false, [&] { return name + ": " + e.what(); });
      }
    }
    euler.commit(r, "complexes.euler_characteristic");
    dd.commit(r, "complexes.d1_d2_zero");
    kernel.commit(r, "complexes.d2_injective");
    b2.commit(r, "complexes.b2_zero");
    r.data() = Json{{"betti", betti}};
    return r;
  }

}  // namespace fp2tree
