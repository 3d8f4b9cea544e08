// One-place rings inside k(t): k[t] or Z[t] (poles only at infinity) and
// k[1/t] (poles only at zero).  SL_2 of such a ring acting on the tree at
// its place has orbits whose metric neighbourhoods stay disconnected,
// which rules out finite generation.

#ifndef FP2TREE_ONEPLACE_HPP_
#define FP2TREE_ONEPLACE_HPP_

#include <optional>
#include <vector>

#include "escape.hpp"

namespace fp2tree {

  class OnePlaceInstance {
   public:
    // ring must be poly_over_k or poly_over_z with the place at infinity,
    // or poly_inv_over_k with the place t = 0; witness must lie in ring and
    // have negative valuation at place.  std::invalid_argument otherwise.
    OnePlaceInstance(RingSpec ring, Place place, RationalFunction witness);

    // Q[t] at infinity with f = t.
    static OnePlaceInstance polynomials(Field f = Field::rationals());

    RingSpec const& ring() const noexcept {
      return _ring;
    }
    Place const& place() const noexcept {
      return _place;
    }
    RationalFunction const& witness() const noexcept {
      return _witness;
    }
    // v_p(f) < 0.
    long witness_valuation() const noexcept {
      return _nu;
    }
    Field field() const noexcept {
      return _place.field();
    }

    // [[1, f^n], [0, 1]]
    Matrix2 unipotent(long n) const;
    // diag(f^n, f^-n)
    Matrix2 translation(long n) const;

    Json to_json() const;

   private:
    RingSpec         _ring;
    Place            _place;
    RationalFunction _witness;
    long             _nu;
  };

  // Largest r with x(r) on the geodesic from x(0) to unipotent(n) x(0).
  // n >= 1 (std::invalid_argument otherwise).
  long exit_point(long n, OnePlaceInstance const& inst);

  // [x(0), x(r_n)] meets its image under unipotent(n) only in x(r_n).
  bool overlap_holds(long n, OnePlaceInstance const& inst);

  struct ExitFit {
    Rational slope;
    Rational intercept;
    // Every point lies on the line.
    bool exact;
  };

  // Least squares line through (n, r_n), n in [lo, hi], hi > lo >= 1.
  ExitFit fit_exit_points(OnePlaceInstance const& inst, long lo = 2,
                          long hi = 6);

  // Level of translation(n) x(0), and its predicted value -2 n v_p(f).
  struct TranslationRecord {
    long n;
    long level;
    long expected;
  };
  TranslationRecord translation_record(long n, OnePlaceInstance const& inst);

  // The escape chains for a and c with the single place p and unit f:
  // bounds v_p >= L on M diag(f^m, f^-m) force v_p(a), v_p(c) >= 1, and an
  // element of the ring with v_p >= 1 is a constant of positive valuation,
  // hence zero.
  Certificate oneplace_certificate(long bound, OnePlaceInstance const& inst);

  // Chain replay plus the constancy argument on sampled ring elements and
  // sharpness of the threshold at the identity.
  ReplayReport replay_oneplace(Certificate const&      c,
                               OnePlaceInstance const& inst,
                               std::uint64_t           seed    = 0x5eed,
                               int                     samples = 40);

  // Every sampled nonzero ring element has v_p <= 0, with equality only for
  // constants.  Returns the number of samples checked; throws
  // std::logic_error on a counterexample.
  std::size_t constancy_check(OnePlaceInstance const& inst,
                              std::uint64_t           seed    = 0x5eed,
                              int                     samples = 200);

  // Elementary generators: [[1,1],[0,1]], [[1,0],[1,1]], and the same with
  // f in place of 1.
  std::vector<Matrix2> oneplace_generators(OnePlaceInstance const& inst);

  struct ProbeOptions {
    std::vector<Matrix2> generators;  // empty: oneplace_generators
    std::size_t          ball_length = 4;
    long                 bound       = -3;
  };

  struct DisconnectionRecord {
    long n;
    long r_n;
    bool in_orbit_sample;
    bool overlap;
  };

  struct DisconnectionReport {
    long                             radius;
    std::size_t                      orbit_size;
    std::vector<DisconnectionRecord> records;
    std::vector<TranslationRecord>   translations;
    Certificate                      certificate;
    std::string                      certificate_ref;

    Json to_json(OnePlaceInstance const& inst) const;
  };

  // For n = 1..n_max: whether x(r_n) lies within radius of the orbit of
  // x(0) under the word ball of the generators.
  DisconnectionReport disconnection_probe(long                    radius,
                                          OnePlaceInstance const& inst,
                                          long                    n_max,
                                          ProbeOptions const&     options = {});

  // Smallest R with distance(g v, v) <= R for every generator g.
  long neighborhood_connected(std::vector<Matrix2> const& generators,
                              TreeVertex const&           basepoint);

}  // namespace fp2tree

#endif  // FP2TREE_ONEPLACE_HPP_
