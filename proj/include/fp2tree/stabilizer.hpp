// Vertex stabilizers in the product X = T_inf x T_0.
//
// The standard vertex A_n = (x_inf(n), x_0(0)) has stabilizer in SL_2(K)
//   v_inf(a), v_inf(d) >= 0,  v_inf(b) >= -n,  v_inf(c) >= n,
//   v_0(a), v_0(b), v_0(c), v_0(d) >= 0.
// Every other vertex is g A_n, and its stabilizer is the conjugate.

#ifndef FP2TREE_STABILIZER_HPP_
#define FP2TREE_STABILIZER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "io.hpp"
#include "ring_spec.hpp"

namespace fp2tree {

  enum class Entry { a, b, c, d };

  char entry_name(Entry e) noexcept;

  struct ValuationConstraint {
    Entry entry;
    Place place;
    long  lower;
  };

  class ConstraintSet {
   public:
    ConstraintSet(std::vector<ValuationConstraint> constraints,
                  std::optional<Matrix2>           conjugator = std::nullopt);

    std::vector<ValuationConstraint> const& constraints() const noexcept {
      return _constraints;
    }
    std::optional<Matrix2> const& conjugator() const noexcept {
      return _conjugator;
    }

    // det g == 1, entries of g in the ring, and the valuation bounds on
    // T^-1 g T (on g itself without a conjugator).
    bool satisfied_by(Matrix2 const& g, RingSpec const& spec) const;

    // One inequality per line, e.g. "v_inf(b) >= -2".
    std::string to_string() const;
    Json        to_json() const;

   private:
    std::vector<ValuationConstraint> _constraints;
    std::optional<Matrix2>           _conjugator;
    std::optional<Matrix2>           _conjugator_inverse;
  };

  class CoefficientSpace {
   public:
    enum class Kind { V, Vbar, W };

    // V_n: polynomials of degree <= n.  Vbar_n: k for n == 0, {0} for n > 0.
    // W_R: span of t^-R, ..., t^R.
    CoefficientSpace(Kind k, long n, Field f = Field::rationals());

    Kind kind() const noexcept {
      return _kind;
    }
    long index() const noexcept {
      return _n;
    }
    std::size_t                   dimension() const noexcept;
    std::vector<RationalFunction> basis() const;
    bool                          contains(RationalFunction const& f) const;
    std::string                   name() const;

   private:
    Kind  _kind;
    long  _n;
    Field _field;
  };

  ProductVertex standard_vertex(long n, Field f = Field::rationals());

  // The coefficient space an entry of Stab(A_n) over Laurent rings ranges
  // over: a, d in V_0, b in V_n, c in Vbar_n.
  CoefficientSpace entry_space(Entry e, long n, Field f = Field::rationals());

  struct PairReduction {
    Matrix2 g;
    long    n;
  };

  // g in GL_2(K) and n >= 0 with pair_act(g, standard_vertex(n)) == v.
  PairReduction reduce_pair_to_standard(ProductVertex const& v);

  // The explicit bounds for standard vertices, the conjugated standard
  // bounds otherwise.
  ConstraintSet stabilizer_constraints(ProductVertex const& v);

  // fixes() on both coordinates plus ring membership.  Throws
  // std::invalid_argument unless det g == 1.
  bool is_in_stabilizer(Matrix2 const&       g,
                        ProductVertex const& v,
                        RingSpec const&      spec);

  // Smallest R from the valuation bounds such that g h g^-1 has entries in
  // W_R for every h in Stab(A_n) with Laurent entries.  g must have Laurent
  // entries and a monomial determinant (std::invalid_argument otherwise).
  long bounding_range(Matrix2 const& g, long n);

}  // namespace fp2tree

#endif  // FP2TREE_STABILIZER_HPP_
