// Places of k(t), discrete valuations, and truncated local expansions.

#ifndef FP2TREE_VALUATION_HPP_
#define FP2TREE_VALUATION_HPP_

#include <compare>
#include <string>
#include <vector>

#include "rational_function.hpp"

namespace fp2tree {

  // A place of P^1 over k: the point at infinity (uniformizer 1/t) or the
  // zero set of a monic irreducible polynomial pi.
  class Place {
   public:
    enum class Kind { at_infinity, at_irreducible };

    Place() : Place(infinity(Field::rationals())) {}

    static Place infinity(Field f);
    // The place t = 0.
    static Place zero(Field f);
    // Irreducibility of pi is checked when deg pi <= 3; higher degree
    // places must be asserted irreducible by the caller.
    static Place at(Polynomial const& pi, bool assert_irreducible = false);

    Kind kind() const noexcept {
      return _kind;
    }
    bool is_infinity() const noexcept {
      return _kind == Kind::at_infinity;
    }
    Field field() const noexcept {
      return _pi.field();
    }
    // Monic irreducible polynomial; t for the place at infinity is not
    // meaningful and returns the zero polynomial.
    Polynomial const& prime() const noexcept {
      return _pi;
    }
    bool irreducibility_asserted() const noexcept {
      return _asserted;
    }
    // Degree of the residue field over k.
    std::size_t residue_degree() const noexcept {
      return is_infinity() ? 1 : static_cast<std::size_t>(_pi.degree());
    }
    RationalFunction uniformizer() const;
    // uniformizer()^k, k any integer.
    RationalFunction uniformizer_power(long k) const;

    std::string name() const;

    friend bool operator==(Place const&, Place const&) = default;
    friend std::strong_ordering operator<=>(Place const& x,
                                            Place const& y);

   private:
    Place(Kind k, Polynomial pi, bool asserted)
        : _kind(k), _pi(std::move(pi)), _asserted(asserted) {}

    Kind       _kind;
    Polynomial _pi;
    bool       _asserted = false;
  };

  // Z u {+infinity}; infinity is a distinguished state, not a sentinel.
  class Valuation {
   public:
    constexpr Valuation() = default;
    constexpr Valuation(long v) : _value(v), _infinite(false) {}  // NOLINT

    static constexpr Valuation infinity() {
      Valuation v;
      v._infinite = true;
      return v;
    }

    constexpr bool is_infinite() const noexcept {
      return _infinite;
    }
    // Throws std::domain_error when infinite.
    long value() const;

    friend constexpr bool operator==(Valuation const&,
                                     Valuation const&) = default;
    friend constexpr std::strong_ordering operator<=>(Valuation const& x,
                                                      Valuation const& y) {
      if (x._infinite || y._infinite) {
        return x._infinite <=> y._infinite;
      }
      return x._value <=> y._value;
    }
    friend constexpr Valuation operator+(Valuation x, Valuation y) {
      if (x._infinite || y._infinite) {
        return infinity();
      }
      return Valuation(x._value + y._value);
    }

    std::string to_string() const;

   private:
    long _value    = 0;
    bool _infinite = true;
  };

  Valuation valuation(Place const& place, RationalFunction const& f);

  // One term c * pi^e of a local expansion.  c is a residue representative:
  // a polynomial of degree < residue_degree (a constant at degree one
  // places).
  struct SeriesTerm {
    long       exponent;
    Polynomial coefficient;

    friend bool operator==(SeriesTerm const&, SeriesTerm const&) = default;
    friend std::strong_ordering operator<=>(SeriesTerm const&,
                                            SeriesTerm const&) = default;
  };

  // sum_{e < order} c_e pi^e, exponents strictly increasing, no zero
  // coefficients.
  class TruncatedSeries {
   public:
    TruncatedSeries() = default;
    TruncatedSeries(Place place, std::vector<SeriesTerm> terms, long order);

    Place const& place() const noexcept {
      return _place;
    }
    std::vector<SeriesTerm> const& terms() const noexcept {
      return _terms;
    }
    long order() const noexcept {
      return _order;
    }
    bool empty() const noexcept {
      return _terms.empty();
    }

    RationalFunction value() const;
    // Drops every term with exponent >= new_order; new_order <= order().
    TruncatedSeries truncated(long new_order) const;

    friend bool operator==(TruncatedSeries const&,
                           TruncatedSeries const&) = default;

    std::string to_string() const;

   private:
    Place                   _place;
    std::vector<SeriesTerm> _terms;
    long                    _order = 0;
  };

  // Expansion of f at place with every term of exponent < order; the
  // remainder f - value() has valuation >= order.
  TruncatedSeries expand(RationalFunction const& f,
                         Place const&            place,
                         long                    order);

  // Residue class of a unit of the valuation ring.
  Polynomial residue(Place const& place, RationalFunction const& unit);

  // Principal part at place: the terms of negative exponent.  Constants
  // and every f with valuation >= 0 give 0.
  RationalFunction polynomial_part(RationalFunction const& f,
                                   Place const&            place);

}  // namespace fp2tree

#endif  // FP2TREE_VALUATION_HPP_
