#include "fp2tree/rational_function.hpp"

#include <stdexcept>

namespace fp2tree {

  RationalFunction::RationalFunction(Field f)
      : _num(f), _den(Polynomial::constant(Scalar::one(f))) {}

  RationalFunction::RationalFunction(Polynomial const& p)
      : _num(p), _den(Polynomial::constant(Scalar::one(p.field()))) {}

  RationalFunction::RationalFunction(Field f, long c)
      : RationalFunction(Polynomial::constant(Scalar(f, c))) {}

  RationalFunction::RationalFunction(Polynomial num, Polynomial den)
      : _num(std::move(num)), _den(std::move(den)) {
    check_same_field(_num.field(), _den.field());
    if (_den.is_zero()) {
      throw std::domain_error("rational function with zero denominator");
    }
    normalize();
  }

  void RationalFunction::normalize() {
    Field const f = _num.field();
    if (_num.is_zero()) {
      _den = Polynomial::constant(Scalar::one(f));
      return;
    }
    if (!_den.is_constant()) {
      Polynomial g = gcd(_num, _den);
      if (!g.is_one()) {
        _num = divmod(_num, g).first;
        _den = divmod(_den, g).first;
      }
    }
    if (!_den.is_monic()) {
      Scalar const inv = _den.leading().inverse();
      _num             = inv * _num;
      _den             = inv * _den;
    }
  }

  RationalFunction RationalFunction::t_power(Field f, long k) {
    auto const one = Scalar::one(f);
    if (k >= 0) {
      return RationalFunction(
          Polynomial::monomial(one, static_cast<std::size_t>(k)));
    }
    return RationalFunction(Polynomial::constant(one),
                            Polynomial::monomial(one,
                                                 static_cast<std::size_t>(-k)),
                            NoNormalize{});
  }

  RationalFunction RationalFunction::laurent(
      Field                         f,
      std::map<long, Scalar> const& terms) {
    if (terms.empty()) {
      return zero(f);
    }
    long const          low   = std::min(terms.begin()->first, 0L);
    long const          high  = terms.rbegin()->first;
    std::vector<Scalar> coeffs(static_cast<std::size_t>(high - low + 1),
                               Scalar::zero(f));
    for (auto const& [e, c] : terms) {
      coeffs[static_cast<std::size_t>(e - low)] = c;
    }
    return RationalFunction(
        Polynomial(f, std::move(coeffs)),
        Polynomial::monomial(Scalar::one(f), static_cast<std::size_t>(-low)));
  }

  std::optional<std::map<long, Scalar>> RationalFunction::laurent_terms()
      const {
    if (!is_laurent()) {
      return std::nullopt;
    }
    long const             shift = _den.degree();
    std::map<long, Scalar> out;
    auto const&            c = _num.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) {
        out.emplace(static_cast<long>(i) - shift, c[i]);
      }
    }
    return out;
  }

  RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-_num, _den, NoNormalize{});
  }

  RationalFunction RationalFunction::inverse() const {
    if (is_zero()) {
      throw std::domain_error("inverse of zero rational function");
    }
    // Already coprime; only the leading coefficient needs fixing.
    Scalar const inv = _num.leading().inverse();
    return RationalFunction(inv * _den, inv * _num, NoNormalize{});
  }

  RationalFunction RationalFunction::pow(long k) const {
    if (k < 0) {
      return inverse().pow(-k);
    }
    RationalFunction result = one(field());
    RationalFunction base   = *this;
    while (k > 0) {
      if (k & 1) {
        result *= base;
      }
      k >>= 1;
      if (k > 0) {
        base *= base;
      }
    }
    return result;
  }

  RationalFunction operator+(RationalFunction const& x,
                             RationalFunction const& y) {
    if (x.is_zero()) {
      return y;
    }
    if (y.is_zero()) {
      return x;
    }
    if (x._den == y._den) {
      return RationalFunction(x._num + y._num, x._den);
    }
    return RationalFunction(x._num * y._den + y._num * x._den,
                            x._den * y._den);
  }

  RationalFunction operator-(RationalFunction const& x,
                             RationalFunction const& y) {
    return x + (-y);
  }

  RationalFunction operator*(RationalFunction const& x,
                             RationalFunction const& y) {
    if (x.is_zero() || y.is_zero()) {
      return RationalFunction(x.field());
    }
    if (x._den.is_one() && y._den.is_one()) {
      return RationalFunction(x._num * y._num, x._den, RationalFunction::NoNormalize{});
    }
    // Cross cancellation: the product of the reduced pieces is reduced.
    Polynomial const g1 = gcd(x._num, y._den);
    Polynomial const g2 = gcd(y._num, x._den);
    auto quo = [](Polynomial const& a, Polynomial const& g) {
      return g.is_one() ? a : divmod(a, g).first;
    };
    Polynomial const num = quo(x._num, g1) * quo(y._num, g2);
    Polynomial const den = quo(x._den, g2) * quo(y._den, g1);
    Scalar const inv = den.leading().inverse();
    return RationalFunction(inv * num, inv * den, RationalFunction::NoNormalize{});
  }

  RationalFunction operator/(RationalFunction const& x,
                             RationalFunction const& y) {
    return x * y.inverse();
  }

  std::strong_ordering operator<=>(RationalFunction const& x,
                                   RationalFunction const& y) {
    if (auto c = x._num <=> y._num; c != 0) {
      return c;
    }
    return x._den <=> y._den;
  }

  std::string RationalFunction::to_string() const {
    if (_den.is_one()) {
      return _num.to_string();
    }
    return "(" + _num.to_string() + ")/(" + _den.to_string() + ")";
  }

  std::size_t RationalFunction::hash() const noexcept {
    return _num.hash() * 31 + _den.hash();
  }

}  // namespace fp2tree
