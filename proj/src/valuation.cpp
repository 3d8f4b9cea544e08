#include "fp2tree/valuation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  Place Place::infinity(Field f) {
    return Place(Kind::at_infinity, Polynomial(f), false);
  }

  Place Place::zero(Field f) {
    return Place(Kind::at_irreducible, Polynomial::t(f), false);
  }

  Place Place::at(Polynomial const& pi, bool assert_irreducible) {
    if (pi.degree() < 1) {
      throw std::invalid_argument("place polynomial must be nonconstant");
    }
    if (!pi.is_monic()) {
      throw std::invalid_argument("place polynomial must be monic");
    }
    if (pi.degree() <= 3) {
      // A polynomial of degree 2 or 3 is irreducible iff it has no root.
      if (pi.degree() > 1 && has_root(pi)) {
        throw std::invalid_argument("place polynomial " + pi.to_string()
                                    + " is reducible");
      }
      return Place(Kind::at_irreducible, pi, false);
    }
    if (!assert_irreducible) {
      throw std::invalid_argument(
          "irreducibility of degree > 3 place polynomials must be asserted");
    }
    return Place(Kind::at_irreducible, pi, true);
  }

  RationalFunction Place::uniformizer() const {
    return uniformizer_power(1);
  }

  RationalFunction Place::uniformizer_power(long k) const {
    if (is_infinity()) {
      return RationalFunction::t_power(field(), -k);
    }
    RationalFunction const pi(_pi);
    return pi.pow(k);
  }

  std::string Place::name() const {
    if (is_infinity()) {
      return "inf";
    }
    return "(" + _pi.to_string() + ")";
  }

  std::strong_ordering operator<=>(Place const& x, Place const& y) {
    if (auto c = x._kind <=> y._kind; c != 0) {
      return c;
    }
    return x._pi <=> y._pi;
  }

  long Valuation::value() const {
    if (_infinite) {
      throw std::domain_error("valuation of zero is infinite");
    }
    return _value;
  }

  std::string Valuation::to_string() const {
    return _infinite ? "inf" : std::to_string(_value);
  }

  Valuation valuation(Place const& place, RationalFunction const& f) {
    check_same_field(place.field(), f.field());
    if (f.is_zero()) {
      return Valuation::infinity();
    }
    if (place.is_infinity()) {
      return Valuation(f.denominator().degree() - f.numerator().degree());
    }
    auto const& pi = place.prime();
    return Valuation(static_cast<long>(multiplicity(f.numerator(), pi))
                     - static_cast<long>(multiplicity(f.denominator(), pi)));
  }

  Polynomial residue(Place const& place, RationalFunction const& unit) {
    if (valuation(place, unit) != Valuation(0)) {
      throw std::domain_error("residue of a non-unit");
    }
    if (place.is_infinity()) {
      return Polynomial::constant(unit.numerator().leading()
                                  / unit.denominator().leading());
    }
    auto const& pi  = place.prime();
    Polynomial  num = divmod(unit.numerator(), pi).second;
    Polynomial  den = divmod(unit.denominator(), pi).second;
    auto const  eg  = extended_gcd(den, pi);
    // eg.g == 1 since den is prime to pi.
    return divmod(num * eg.s, pi).second;
  }

  TruncatedSeries::TruncatedSeries(Place                   place,
                                   std::vector<SeriesTerm> terms,
                                   long                    order)
      : _place(std::move(place)), _terms(std::move(terms)), _order(order) {
    for (std::size_t i = 0; i < _terms.size(); ++i) {
      auto const& term = _terms[i];
      if (term.exponent >= _order) {
        throw std::invalid_argument("series term beyond truncation order");
      }
      if (i > 0 && _terms[i - 1].exponent >= term.exponent) {
        throw std::invalid_argument("series exponents must increase");
      }
      if (term.coefficient.is_zero()) {
        throw std::invalid_argument("series term with zero coefficient");
      }
      if (term.coefficient.degree()
          >= static_cast<long>(_place.residue_degree())) {
        throw std::invalid_argument("series coefficient is not reduced");
      }
    }
  }

  RationalFunction TruncatedSeries::value() const {
    Field const f = _place.field();
    if (_terms.empty()) {
      return RationalFunction::zero(f);
    }
    if (_place.is_infinity() || _place.prime() == Polynomial::t(f)) {
      // Powers of t: assemble as a Laurent polynomial directly.
      std::map<long, Scalar> lt;
      long const             sign = _place.is_infinity() ? -1 : 1;
      for (auto const& term : _terms) {
        lt.emplace(sign * term.exponent, term.coefficient.coefficient(0));
      }
      return RationalFunction::laurent(f, lt);
    }
    RationalFunction acc = RationalFunction::zero(f);
    for (auto const& term : _terms) {
      acc += RationalFunction(term.coefficient)
             * _place.uniformizer_power(term.exponent);
    }
    return acc;
  }

  TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    if (new_order > _order) {
      throw std::invalid_argument("cannot extend a truncated series");
    }
    std::vector<SeriesTerm> kept;
    for (auto const& term : _terms) {
      if (term.exponent < new_order) {
        kept.push_back(term);
      }
    }
    return TruncatedSeries(_place, std::move(kept), new_order);
  }

  std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool               first = true;
    for (auto const& term : _terms) {
      os << (first ? "" : " + ") << "(" << term.coefficient.to_string()
         << ")*pi^" << term.exponent;
      first = false;
    }
    if (first) {
      os << "0";
    }
    os << " + O(pi^" << _order << ")";
    return os.str();
  }

  namespace {
    // Coefficients of p(u + a).
    std::vector<Scalar> taylor_shift(Polynomial const& p, Scalar const& a) {
      Polynomial       acc(p.field());
      Polynomial const lin(p.field(), {a, Scalar::one(p.field())});
      auto const&      c = p.coefficients();
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * lin + Polynomial::constant(*it);
      }
      return acc.coefficients();
    }

    // Degree one places: power series division in the local parameter.
    TruncatedSeries expand_linear(RationalFunction const& f,
                                  Place const&            place,
                                  long                    order) {
      Field const         fld = place.field();
      std::vector<Scalar> p, q;
      long                shift = 0;
      if (place.is_infinity()) {
        // f(1/u) = u^(deg q - deg p) rev(p)(u) / rev(q)(u)
        shift = f.denominator().degree() - f.numerator().degree();
        p = f.numerator().coefficients();
        q = f.denominator().coefficients();
        std::reverse(p.begin(), p.end());
        std::reverse(q.begin(), q.end());
      } else {
        Scalar const a = -place.prime().coefficient(0);
        p              = taylor_shift(f.numerator(), a);
        q              = taylor_shift(f.denominator(), a);
      }
      auto strip = [](std::vector<Scalar>& v) {
        auto it = std::find_if(
            v.begin(), v.end(), [](Scalar const& x) { return !x.is_zero(); });
        long const n = it - v.begin();
        v.erase(v.begin(), it);
        return n;
      };
      shift += strip(p) - strip(q);
      std::vector<SeriesTerm> terms;
      if (order > shift) {
        std::size_t const   n = static_cast<std::size_t>(order - shift);
        std::vector<Scalar> s(n, Scalar::zero(fld));
        Scalar const        inv = q[0].inverse();
        for (std::size_t k = 0; k < n; ++k) {
          Scalar acc = k < p.size() ? p[k] : Scalar::zero(fld);
          for (std::size_t j = 1; j <= k && j < q.size(); ++j) {
            acc -= q[j] * s[k - j];
          }
          s[k] = acc * inv;
          if (!s[k].is_zero()) {
            terms.push_back({shift + static_cast<long>(k),
                             Polynomial::constant(s[k])});
          }
        }
      }
      return TruncatedSeries(place, std::move(terms), order);
    }
  }  // namespace

  TruncatedSeries expand(RationalFunction const& f,
                         Place const&            place,
                         long                    order) {
    check_same_field(place.field(), f.field());
    if (place.residue_degree() == 1 && !f.is_zero()) {
      return expand_linear(f, place, order);
    }
    std::vector<SeriesTerm> terms;
    RationalFunction        rest = f;
    while (!rest.is_zero()) {
      long const v = valuation(place, rest).value();
      if (v >= order) {
        break;
      }
      Polynomial const c
          = residue(place, rest * place.uniformizer_power(-v));
      terms.push_back({v, c});
      rest -= RationalFunction(c) * place.uniformizer_power(v);
    }
    return TruncatedSeries(place, std::move(terms), order);
  }

  RationalFunction polynomial_part(RationalFunction const& f,
                                   Place const&            place) {
    return expand(f, place, 0).value();
  }

}  // namespace fp2tree
