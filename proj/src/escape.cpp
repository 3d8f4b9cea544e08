#include "fp2tree/escape.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "fp2tree/random.hpp"

namespace fp2tree {

  namespace {
    char const* kind_name(TraceStep::Kind k) {
      switch (k) {
        case TraceStep::Kind::hypothesis:
          return "hypothesis";
        case TraceStep::Kind::product_rule:
          return "product_rule";
        case TraceStep::Kind::unit_valuation:
          return "unit_valuation";
        case TraceStep::Kind::shift:
          return "shift";
        case TraceStep::Kind::threshold:
          return "threshold";
      }
      return "";
    }

    std::string place_label(Place const& p) {
      return p.is_infinity() ? "inf" : "0";
    }

    std::string signed_term(long c, std::string const& var) {
      if (c == 0) {
        return "";
      }
      std::string out = c > 0 ? " + " : " - ";
      long const  a   = c > 0 ? c : -c;
      if (a != 1) {
        out += std::to_string(a) + "*";
      }
      return out + var;
    }

    std::size_t entry_index(Entry e) {
      return static_cast<std::size_t>(e);
    }

    // Smallest m >= 0 with bound + slope * m >= 1.
    long first_exit(long bound, long slope) {
      return (1 - bound + slope - 1) / slope;
    }
  }  // namespace

  InequalityChain make_chain(Entry                   e,
                             Place const&            place,
                             int                     exponent_sign,
                             RationalFunction const& unit,
                             std::string const&      unit_label,
                             long                    bound) {
    Valuation const nu = valuation(place, unit);
    long const      slope = -exponent_sign * (nu.is_infinite() ? 0 : nu.value());
    if (slope <= 0) {
      throw std::invalid_argument("unit does not push the entry bound up");
    }
    std::string const v = "v_" + place_label(place);
    std::string const x(1, entry_name(e));
    std::string const power
        = unit_label + (exponent_sign > 0 ? "^m" : "^-m");
    InequalityChain chain{e, place, exponent_sign, unit, unit_label, {}};
    auto push = [&](TraceStep::Kind k, long value, std::string text) {
      chain.steps.push_back({k, value, std::move(text)});
    };
    push(TraceStep::Kind::hypothesis, bound,
         v + "(" + x + "*" + power + ") >= " + std::to_string(bound));
    push(TraceStep::Kind::product_rule, exponent_sign,
         v + "(" + x + "*" + power + ") = " + v + "(" + x + ")"
             + signed_term(exponent_sign, "m*" + v + "(" + unit_label + ")"));
    push(TraceStep::Kind::unit_valuation, nu.value(),
         v + "(" + unit_label + ") = " + std::to_string(nu.value()));
    push(TraceStep::Kind::shift, slope,
         v + "(" + x + ") >= " + std::to_string(bound)
             + signed_term(slope, "m"));
    long const m = first_exit(bound, slope);
    push(TraceStep::Kind::threshold, m,
         "m >= " + std::to_string(m) + " => " + v + "(" + x + ") >= 1");
    return chain;
  }

  Certificate escape_certificate(long bound, Field f) {
    if (bound > 0) {
      throw std::invalid_argument("escape bound must be <= 0");
    }
    long const  m = 1 - bound;
    Certificate c{bound, m, {}, {}};
    for (Entry e : {Entry::a, Entry::c}) {
      for (Place const& p : {Place::infinity(f), Place::zero(f)}) {
        c.chains.push_back(make_chain(e, p, p.is_infinity() ? 1 : -1,
                                      RationalFunction::t_power(f, 1), "t",
                                      bound));
      }
    }
    std::string const ms = std::to_string(m);
    c.conclusion = {
        "a nonzero Laurent polynomial x satisfies v_inf(x) + v_0(x) <= 0",
        "m >= " + ms + " => v_inf(a), v_0(a) >= 1 => a = 0",
        "m >= " + ms + " => v_inf(c), v_0(c) >= 1 => c = 0",
        "a = c = 0 => det M = ad - bc = 0, so M is not in SL_2",
        "m = " + std::to_string(m - 1)
            + ": the identity meets every bound, so m* = " + ms
            + " is sharp",
    };
    return c;
  }

  std::string Certificate::to_text() const {
    std::ostringstream os;
    os << "escape certificate: L = " << bound << ", m* = " << threshold
       << "\n";
    std::size_t n = 0;
    for (auto const& ch : chains) {
      os << "entry " << entry_name(ch.entry) << " at "
         << place_label(ch.place) << ":\n";
      for (auto const& s : ch.steps) {
        os << "  " << ++n << ". " << s.text << "  [" << kind_name(s.kind)
           << "]\n";
      }
    }
    os << "conclusion:\n";
    for (auto const& line : conclusion) {
      os << "  " << ++n << ". " << line << "\n";
    }
    return os.str();
  }

  Json Certificate::to_json() const {
    Json chains_json = Json::array();
    for (auto const& ch : chains) {
      Json steps = Json::array();
      for (auto const& s : ch.steps) {
        steps.push_back(
            Json{{"kind", kind_name(s.kind)}, {"value", s.value}, {"text", s.text}});
      }
      chains_json.push_back(Json{{"entry", std::string(1, entry_name(ch.entry))},
                                 {"place", place_label(ch.place)},
                                 {"exponent_sign", ch.exponent_sign},
                                 {"steps", steps}});
    }
    return Json{{"bound", bound},
                {"threshold", threshold},
                {"chains", chains_json},
                {"conclusion", conclusion}};
  }

  bool within_bound(Matrix2 const& g, long m, long bound) {
    Field const   f     = g.field();
    Matrix2 const up    = g * matrices::translation(f).pow(m);
    Matrix2 const down  = g * matrices::translation(f).pow(-m);
    Place const   rho   = Place::infinity(f);
    Place const   zeta  = Place::zero(f);
    Valuation const low(bound);
    for (std::size_t i = 0; i < 4; ++i) {
      if (valuation(rho, up.entry(i)) < low
          || valuation(zeta, down.entry(i)) < low) {
        return false;
      }
    }
    return true;
  }

  void replay_chain(InequalityChain const& ch,
                    long                   bound,
                    long                   threshold,
                    Sampler&               sampler,
                    int                    samples,
                    ReplayReport&          r) {
    auto check = [&r](bool ok, std::string const& what) {
      ++r.checks;
      if (!ok) {
        r.failures.push_back(what);
      }
    };
    std::string const tag
        = std::string(1, entry_name(ch.entry)) + " at " + place_label(ch.place);
    check(ch.entry == Entry::a || ch.entry == Entry::c,
          tag + ": entry is in the first column");
    int const s = ch.exponent_sign;
    check(s == 1 || s == -1, tag + ": exponent sign is +-1");
    if (ch.steps.size() != 5) {
      check(false, tag + ": five steps");
      return;
    }
    using K        = TraceStep::Kind;
    auto const& st = ch.steps;
    check(st[0].kind == K::hypothesis && st[0].value == bound,
          tag + ": hypothesis uses L");
    check(st[1].kind == K::product_rule && st[1].value == s,
          tag + ": product rule exponent");
    Valuation const nu = valuation(ch.place, ch.unit);
    check(st[2].kind == K::unit_valuation && !nu.is_infinite()
              && Valuation(st[2].value) == nu,
          tag + ": unit valuation matches the valuation code");
    if (nu.is_infinite()) {
      return;
    }
    long const slope = -s * nu.value();
    check(st[3].kind == K::shift && st[3].value == slope && slope > 0,
          tag + ": shifted bound");
    if (slope <= 0) {
      return;
    }
    check(st[4].kind == K::threshold && st[4].value == threshold
              && first_exit(bound, slope) == threshold,
          tag + ": threshold");
    check(bound + slope * (threshold - 1) < 1, tag + ": threshold is minimal");

    // The matrix identity (M D^k)_x = x u^k and the product rule on random
    // Laurent samples.
    Matrix2 const D = Matrix2::diagonal(ch.unit, ch.unit.inverse());
    for (int i = 0; i < samples; ++i) {
      long const    m = sampler.integer(0, threshold + 2);
      long const    k = s * m;
      Matrix2 const M(sampler.laurent(-4, 4), sampler.laurent(-4, 4),
                      sampler.laurent(-4, 4), sampler.laurent(-4, 4));
      auto const& x = M.entry(entry_index(ch.entry));
      auto const  y = (M * D.pow(k)).entry(entry_index(ch.entry));
      check(y == x * ch.unit.pow(k), tag + ": entry of M D^k is x u^k");
      Valuation const vx = valuation(ch.place, x);
      Valuation const vy = valuation(ch.place, y);
      if (x.is_zero()) {
        check(vy.is_infinite(), tag + ": zero entry");
        continue;
      }
      check(vy.value() == vx.value() + k * nu.value(),
            tag + ": product rule on a sample");
      if (vy >= Valuation(bound)) {
        check(vx.value() >= bound + slope * m,
              tag + ": hypothesis implies the shifted bound");
      }
    }
  }

  ReplayReport replay(Certificate const& c, std::uint64_t seed, int samples) {
    ReplayReport r;
    auto check = [&r](bool ok, std::string const& what) {
      ++r.checks;
      if (!ok) {
        r.failures.push_back(what);
      }
    };
    check(c.bound <= 0, "bound is <= 0");
    check(c.threshold == 1 - c.bound, "threshold equals 1 - L");
    check(c.chains.size() == 4, "four chains");
    if (c.chains.empty()) {
      return r;
    }
    Field const f = c.chains.front().place.field();
    Sampler     sampler(f, seed);
    auto const  t = RationalFunction::t_power(f, 1);

    bool seen[2][2] = {{false, false}, {false, false}};
    for (auto const& ch : c.chains) {
      std::string const tag = std::string(1, entry_name(ch.entry)) + " at "
                              + place_label(ch.place);
      if (ch.entry == Entry::a || ch.entry == Entry::c) {
        seen[ch.entry == Entry::c][ch.place.is_infinity()] = true;
      }
      // M d^m is bounded at infinity, M d^-m at zero.
      check(ch.unit == t, tag + ": unit is t");
      check(ch.exponent_sign == (ch.place.is_infinity() ? 1 : -1),
            tag + ": d^m at infinity, d^-m at zero");
      replay_chain(ch, c.bound, c.threshold, sampler, samples, r);
    }
    check(seen[0][0] && seen[0][1] && seen[1][0] && seen[1][1],
          "chains cover a and c at both places");

    Place const rho  = Place::infinity(f);
    Place const zeta = Place::zero(f);
    for (int i = 0; i < samples; ++i) {
      auto const x = sampler.laurent(-6, 6);
      if (x.is_zero()) {
        continue;
      }
      check(valuation(rho, x).value() + valuation(zeta, x).value() <= 0,
            "v_inf(x) + v_0(x) <= 0 for nonzero Laurent x");
      auto const    d = sampler.laurent(-3, 3);
      Matrix2 const M(RationalFunction::zero(f), x,
                      RationalFunction::zero(f), d);
      check(M.det().is_zero(), "a = c = 0 forces det = 0");
    }
    Matrix2 const id = Matrix2::identity(f);
    check(within_bound(id, c.threshold - 1, c.bound),
          "identity meets the bound at m* - 1");
    check(!within_bound(id, c.threshold, c.bound),
          "identity fails the bound at m*");
    return r;
  }

  std::vector<Matrix2> default_generators(Field f) {
    return {matrices::unipotent(f, 1), matrices::lower(f, 1),
            matrices::translation(f)};
  }

  std::vector<Matrix2> word_ball(std::vector<Matrix2> const& generators,
                                 std::size_t                 length,
                                 WordBallLimits              limits,
                                 Field                       f,
                                 RingSpec const&             ring) {
    if (length > limits.max_length) {
      throw std::length_error("word length exceeds the configured cap");
    }
    std::vector<Matrix2>       gens;
    std::unordered_set<Matrix2> gen_set;
    for (auto const& g : generators) {
      bool in_group = g.det().is_one();
      for (std::size_t i = 0; in_group && i < 4; ++i) {
        in_group = in_ring(g.entry(i), ring);
      }
      if (!in_group) {
        throw std::invalid_argument("generator not in SL_2(" + ring.name()
                                    + ")");
      }
      for (auto const& h : {g, g.inverse()}) {
        if (gen_set.insert(h).second) {
          gens.push_back(h);
        }
      }
    }
    std::vector<Matrix2>        ball{Matrix2::identity(f)};
    std::unordered_set<Matrix2> seen(ball.begin(), ball.end());
    std::size_t                 begin = 0;
    for (std::size_t level = 0; level < length; ++level) {
      std::size_t const end = ball.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& g : gens) {
          Matrix2 p = ball[i] * g;
          if (seen.insert(p).second) {
            ball.push_back(std::move(p));
            if (ball.size() > limits.max_size) {
              throw std::length_error("word ball exceeds the size cap");
            }
          }
        }
      }
      begin = end;
    }
    return ball;
  }

  ProductVertex escape_point(long m, Field f) {
    auto const d = matrices::translation(f);
    return {act(d.pow(m), apartment_vertex(Place::infinity(f), 0)),
            act(d.pow(-m), apartment_vertex(Place::zero(f), 0))};
  }

  namespace {
    // Distance from x(0) to g x(r) at place p: the elementary divisor gap
    // of M = g diag(pi^-r, 1) is v(det M) - 2 min v(M_ij).
    long distance_from_base(Valuation const (&v)[4], long r, long det_val) {
      long low    = 0;
      bool any    = false;
      for (std::size_t i = 0; i < 4; ++i) {
        if (v[i].is_infinite()) {
          continue;
        }
        long const e = v[i].value() - (i % 2 == 0 ? r : 0);
        low          = any ? std::min(low, e) : e;
        any          = true;
      }
      return det_val - r - 2 * low;
    }
  }  // namespace

  long min_orbit_distance(long m, std::vector<Matrix2> const& ball) {
    if (ball.empty()) {
      throw std::invalid_argument("empty ball");
    }
    Field const f = ball.front().field();
    // The escape point is (x_inf(2m), x_0(2m)).
    auto const p = *grid_coordinates(escape_point(m, f));
    long       best = -1;
    for (auto const& g : ball) {
      auto const v   = entry_valuations(g);
      auto const det = g.det();
      long const d
          = distance_from_base(v.rho, p.first,
                               valuation(Place::infinity(f), det).value())
            + distance_from_base(v.zeta, p.second,
                                 valuation(Place::zero(f), det).value());
      if (best < 0 || d < best) {
        best = d;
      }
    }
    return best;
  }

  EntryValuations entry_valuations(Matrix2 const& g) {
    Place const     rho  = Place::infinity(g.field());
    Place const     zeta = Place::zero(g.field());
    EntryValuations v;
    for (std::size_t i = 0; i < 4; ++i) {
      v.rho[i]  = valuation(rho, g.entry(i));
      v.zeta[i] = valuation(zeta, g.entry(i));
    }
    return v;
  }

  bool within_bound(EntryValuations const& v, long m, long bound) {
    for (std::size_t i = 0; i < 4; ++i) {
      // Column 0 is multiplied by t^k, column 1 by t^-k.
      long const sign = i % 2 == 0 ? 1 : -1;
      if (!v.rho[i].is_infinite() && v.rho[i].value() - sign * m < bound) {
        return false;
      }
      if (!v.zeta[i].is_infinite() && v.zeta[i].value() - sign * m < bound) {
        return false;
      }
    }
    return true;
  }

  std::vector<ProbeResult> escape_probe(std::vector<Matrix2> const& ball,
                                        std::vector<long> const&    bounds,
                                        long                        extra) {
    std::vector<ProbeResult> out;
    for (long b : bounds) {
      out.push_back(ProbeResult{b, 1 - b, 0, {}, 0, 0});
    }
    auto confirm = [](ProbeResult& r, Matrix2 const& g, long m, bool fast) {
      ++r.direct_checks;
      if (within_bound(g, m, r.bound) != fast) {
        throw std::logic_error("valuation shortcut disagrees with products");
      }
    };
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto const& g = ball[i];
      auto const  v = entry_valuations(g);
      for (auto& r : out) {
        for (long m = r.threshold; m <= r.threshold + extra; ++m) {
          ++r.tested;
          bool const hit = within_bound(v, m, r.bound);
          if (hit || (i % 64 == 0 && m == r.threshold)) {
            confirm(r, g, m, hit);
          }
          if (hit) {
            r.counterexamples.emplace_back(m, g);
          }
        }
        bool const below = within_bound(v, r.threshold - 1, r.bound);
        if (below) {
          confirm(r, g, r.threshold - 1, below);
          ++r.below_threshold_hits;
        }
      }
    }
    return out;
  }

}  // namespace fp2tree
