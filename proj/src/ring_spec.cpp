#include "fp2tree/ring_spec.hpp"

#include <algorithm>
#include <stdexcept>

namespace fp2tree {

  RingSpec::RingSpec(Kind k) : _kind(k) {
    if (k == Kind::valuation_ring) {
      throw std::invalid_argument(
          "valuation ring spec needs a place; use RingSpec::valuation_ring");
    }
  }

  RingSpec RingSpec::valuation_ring(Place p) {
    RingSpec r;
    r._kind  = Kind::valuation_ring;
    r._place = std::move(p);
    return r;
  }

  Place const& RingSpec::place() const {
    if (!_place) {
      throw std::logic_error("ring spec has no place");
    }
    return *_place;
  }

  std::string RingSpec::name() const {
    switch (_kind) {
      case Kind::laurent_over_z:
        return "Z[t,1/t]";
      case Kind::poly_over_z:
        return "Z[t]";
      case Kind::laurent_over_k:
        return "k[t,1/t]";
      case Kind::poly_over_k:
        return "k[t]";
      case Kind::poly_inv_over_k:
        return "k[1/t]";
      case Kind::valuation_ring:
        return "O_" + _place->name();
    }
    return "?";
  }

  namespace {
    bool integral_coefficients(Polynomial const& p) {
      return std::all_of(p.coefficients().begin(),
                         p.coefficients().end(),
                         [](Scalar const& c) { return c.is_integral(); });
    }
  }  // namespace

  bool in_ring(RationalFunction const& f, RingSpec const& spec) {
    using Kind = RingSpec::Kind;
    switch (spec.kind()) {
      case Kind::poly_over_k:
        return f.is_polynomial();
      case Kind::poly_over_z:
        return f.is_polynomial() && integral_coefficients(f.numerator());
      case Kind::laurent_over_k:
        return f.is_laurent();
      case Kind::laurent_over_z:
        // The denominator is monic t^k, so the Laurent coefficients are
        // exactly the numerator coefficients.
        return f.is_laurent() && integral_coefficients(f.numerator());
      case Kind::poly_inv_over_k:
        return f.is_laurent()
               && f.numerator().degree() <= f.denominator().degree();
      case Kind::valuation_ring:
        return valuation(spec.place(), f) >= Valuation(0);
    }
    return false;
  }

}  // namespace fp2tree
