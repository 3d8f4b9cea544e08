// The escape argument: the points (d^m x_inf(0), d^-m x_0(0)) leave every
// bounded region of X modulo SL_2(Z[t,1/t]).
//
// Boundedness at level L would give, for each m, some M in SL_2(Z[t,1/t])
// with every entry of M d^m of v_inf >= L and every entry of M d^-m of
// v_0 >= L.  The certificate records the valuation chains for the entries
// a and c that rule this out from m* = 1 - L on.

#ifndef FP2TREE_ESCAPE_HPP_
#define FP2TREE_ESCAPE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "io.hpp"
#include "random.hpp"
#include "stabilizer.hpp"

namespace fp2tree {

  struct TraceStep {
    enum class Kind {
      hypothesis,      // v(x t^(s m)) >= L
      product_rule,    // v(x t^(s m)) = v(x) + s m v(t)
      unit_valuation,  // v(t) = value
      shift,           // v(x) >= L + m
      threshold        // m >= m*  =>  v(x) >= 1
    };
    Kind        kind;
    long        value;
    std::string text;
  };

  // One entry at one place.  With D = diag(u, 1/u) for the unit u, the
  // bounded matrix is M D^(s m), s = exponent_sign.  The escape chains use
  // u = t with s = +1 at infinity and s = -1 at zero.
  struct InequalityChain {
    Entry                  entry;
    Place                  place;
    int                    exponent_sign;
    RationalFunction       unit;
    std::string            unit_label;
    std::vector<TraceStep> steps;
  };

  // The five steps for entry e at place, ending in the first m with
  // v(x) >= 1.
  InequalityChain make_chain(Entry                   e,
                             Place const&            place,
                             int                     exponent_sign,
                             RationalFunction const& unit,
                             std::string const&      unit_label,
                             long                    bound);

  struct Certificate {
    long                         bound;
    long                         threshold;
    std::vector<InequalityChain> chains;
    std::vector<std::string>     conclusion;

    // Numbered proof trace.
    std::string to_text() const;
    Json        to_json() const;
  };

  // Requires L <= 0 (std::invalid_argument otherwise).
  Certificate escape_certificate(long bound, Field f = Field::rationals());

  struct ReplayReport {
    std::size_t              checks = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Re-derives every step with the valuation code: unit valuations,
  // the product rule on random Laurent samples, the shifted bounds, the
  // threshold and its sharpness, and the final determinant contradiction.
  ReplayReport replay(Certificate const& c,
                      std::uint64_t      seed    = 0x5eed,
                      int                samples = 40);

  // Step checks for one chain, appended to report.
  void replay_chain(InequalityChain const& chain,
                    long                   bound,
                    long                   threshold,
                    Sampler&               sampler,
                    int                    samples,
                    ReplayReport&          report);

  // Every entry of g d^m has v_inf >= L and every entry of g d^-m has
  // v_0 >= L.  Computes both products.
  bool within_bound(Matrix2 const& g, long m, long bound);

  // Valuations of the entries of g at infinity and at zero.
  struct EntryValuations {
    Valuation rho[4];
    Valuation zeta[4];
  };

  EntryValuations entry_valuations(Matrix2 const& g);

  // within_bound from precomputed valuations: right multiplication by
  // d^k scales the first column by t^k and the second by t^-k.
  bool within_bound(EntryValuations const& v, long m, long bound);

  struct WordBallLimits {
    std::size_t max_length = 8;
    std::size_t max_size   = 100000;
  };

  // u_1, l_1, d.
  std::vector<Matrix2> default_generators(Field f = Field::rationals());

  // All products of at most length generators or their inverses, each
  // matrix once, in breadth-first order starting with the identity.
  // Generators must lie in SL_2(ring) (std::invalid_argument);
  // exceeding a limit throws std::length_error.
  std::vector<Matrix2> word_ball(std::vector<Matrix2> const& generators,
                                 std::size_t                 length,
                                 WordBallLimits              limits = {},
                                 Field f = Field::rationals(),
                                 RingSpec const& ring
                                 = RingSpec(RingSpec::Kind::laurent_over_z));

  // The point (d^m x_inf(0), d^-m x_0(0)), which is grid (2m, 2m).
  ProductVertex escape_point(long m, Field f = Field::rationals());

  // min over g in ball of the summed tree distances from
  // pair_act(g, escape_point(m)) to the base pair.
  long min_orbit_distance(long m, std::vector<Matrix2> const& ball);

  struct ProbeResult {
    long        bound;
    long        threshold;
    std::size_t tested = 0;
    // (m, g) with m >= m* and within_bound(g, m, L).
    std::vector<std::pair<long, Matrix2>> counterexamples;
    // Elements meeting the bound at m* - 1.
    std::size_t below_threshold_hits = 0;
    // Decisions repeated with explicit products.
    std::size_t direct_checks = 0;
  };

  // Tests within_bound for m in [m*, m* + extra] on every ball element,
  // one result per bound.  Entry valuations are computed once per element;
  // every hit and every 64th element are re-decided with explicit
  // products, and a disagreement throws std::logic_error.
  std::vector<ProbeResult> escape_probe(std::vector<Matrix2> const& ball,
                                        std::vector<long> const&    bounds,
                                        long                        extra = 2);

}  // namespace fp2tree

#endif  // FP2TREE_ESCAPE_HPP_
