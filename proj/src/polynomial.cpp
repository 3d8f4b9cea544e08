#include "fp2tree/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs)
      : _field(f), _coeffs(std::move(coeffs)) {
    for (auto const& c : _coeffs) {
      check_same_field(f, c.field());
    }
    trim();
  }

  Polynomial::Polynomial(Field f, std::initializer_list<long> coeffs)
      : _field(f) {
    _coeffs.reserve(coeffs.size());
    for (long c : coeffs) {
      _coeffs.emplace_back(f, c);
    }
    trim();
  }

  Polynomial Polynomial::constant(Scalar const& c) {
    return Polynomial(c.field(), std::vector<Scalar>{c});
  }

  Polynomial Polynomial::monomial(Scalar const& c, std::size_t exponent) {
    std::vector<Scalar> v(exponent + 1, Scalar::zero(c.field()));
    v[exponent] = c;
    return Polynomial(c.field(), std::move(v));
  }

  void Polynomial::trim() {
    while (!_coeffs.empty() && _coeffs.back().is_zero()) {
      _coeffs.pop_back();
    }
  }

  bool Polynomial::is_monomial() const noexcept {
    return !_coeffs.empty() && low_degree() + 1 == _coeffs.size();
  }

  std::size_t Polynomial::low_degree() const noexcept {
    std::size_t i = 0;
    while (i < _coeffs.size() && _coeffs[i].is_zero()) {
      ++i;
    }
    return i == _coeffs.size() ? 0 : i;
  }

  Scalar Polynomial::coefficient(std::size_t i) const {
    return i < _coeffs.size() ? _coeffs[i] : Scalar::zero(_field);
  }

  Scalar const& Polynomial::leading() const {
    if (_coeffs.empty()) {
      throw std::domain_error("leading coefficient of zero polynomial");
    }
    return _coeffs.back();
  }

  Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) {
      return *this;
    }
    return leading().inverse() * *this;
  }

  Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r._coeffs) {
      c = -c;
    }
    return r;
  }

  Scalar Polynomial::evaluate(Scalar const& x) const {
    Scalar acc = Scalar::zero(_field);
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial operator+(Polynomial const& x, Polynomial const& y) {
    check_same_field(x._field, y._field);
    auto const&         big   = x._coeffs.size() >= y._coeffs.size() ? x : y;
    auto const&         small = x._coeffs.size() >= y._coeffs.size() ? y : x;
    std::vector<Scalar> r     = big._coeffs;
    for (std::size_t i = 0; i < small._coeffs.size(); ++i) {
      r[i] += small._coeffs[i];
    }
    return Polynomial(x._field, std::move(r));
  }

  Polynomial operator-(Polynomial const& x, Polynomial const& y) {
    return x + (-y);
  }

  Polynomial operator*(Polynomial const& x, Polynomial const& y) {
    check_same_field(x._field, y._field);
    if (x.is_zero() || y.is_zero()) {
      return Polynomial(x._field);
    }
    std::vector<Scalar> r(x._coeffs.size() + y._coeffs.size() - 1,
                          Scalar::zero(x._field));
    for (std::size_t i = 0; i < x._coeffs.size(); ++i) {
      if (x._coeffs[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < y._coeffs.size(); ++j) {
        r[i + j] += x._coeffs[i] * y._coeffs[j];
      }
    }
    return Polynomial(x._field, std::move(r));
  }

  Polynomial operator*(Scalar const& c, Polynomial const& y) {
    check_same_field(c.field(), y._field);
    if (c.is_zero()) {
      return Polynomial(y._field);
    }
    Polynomial r(y);
    for (auto& a : r._coeffs) {
      a *= c;
    }
    return r;
  }

  Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) {
      return *this;
    }
    std::vector<Scalar> r(k, Scalar::zero(_field));
    r.insert(r.end(), _coeffs.begin(), _coeffs.end());
    return Polynomial(_field, std::move(r));
  }

  std::strong_ordering operator<=>(Polynomial const& x, Polynomial const& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) {
      return c;
    }
    for (std::size_t i = x._coeffs.size(); i-- > 0;) {
      if (auto c = x._coeffs[i] <=> y._coeffs[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string Polynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t i = _coeffs.size(); i-- > 0;) {
      auto const& c = _coeffs[i];
      if (c.is_zero()) {
        continue;
      }
      std::string s = c.to_string();
      if (!first) {
        if (s[0] == '-') {
          os << " - ";
          s.erase(0, 1);
        } else {
          os << " + ";
        }
      }
      first = false;
      if (i == 0) {
        os << s;
        continue;
      }
      if (s == "-1") {
        os << "-";
      } else if (s != "1") {
        os << s << "*";
      }
      os << "t";
      if (i > 1) {
        os << "^" << i;
      }
    }
    return os.str();
  }

  std::size_t Polynomial::hash() const noexcept {
    std::size_t h = _coeffs.size();
    for (auto const& c : _coeffs) {
      h = h * 1000003ULL ^ c.hash();
    }
    return h;
  }

  std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                           Polynomial const& b) {
    check_same_field(a.field(), b.field());
    if (b.is_zero()) {
      throw std::domain_error("polynomial division by zero");
    }
    Field const f = a.field();
    if (a.degree() < b.degree()) {
      return {Polynomial(f), a};
    }
    std::vector<Scalar>       rem = a.coefficients();
    auto const&               bc  = b.coefficients();
    Scalar const              inv = b.leading().inverse();
    std::size_t const         db  = bc.size() - 1;
    std::vector<Scalar>       quo(rem.size() - db, Scalar::zero(f));
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i].is_zero()) {
        continue;
      }
      Scalar const q = rem[i] * inv;
      quo[i - db]    = q;
      for (std::size_t j = 0; j <= db; ++j) {
        rem[i - db + j] -= q * bc[j];
      }
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
  }

  Polynomial gcd(Polynomial const& a, Polynomial const& b) {
    Field const f = a.field();
    // gcd with c*t^k is t^min(k, low degree).
    for (auto const* m : {&a, &b}) {
      auto const* other = m == &a ? &b : &a;
      if (m->is_monomial() && !other->is_zero()) {
        std::size_t const k
            = std::min<std::size_t>(m->degree(), other->low_degree());
        return Polynomial::monomial(Scalar::one(f), k);
      }
    }
    // Monic remainders keep the coefficients over Q small.
    Polynomial x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
      Polynomial r = divmod(x, y).second.monic();
      x            = std::move(y);
      y            = std::move(r);
    }
    return x;
  }

  ExtendedGcd extended_gcd(Polynomial const& a, Polynomial const& b) {
    Field const f = a.field();
    Polynomial  r0 = a, r1 = b;
    Polynomial  s0 = Polynomial::constant(Scalar::one(f)), s1(f);
    Polynomial  u0(f), u1 = Polynomial::constant(Scalar::one(f));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0          = std::exchange(r1, r);
      s0          = std::exchange(s1, s0 - q * s1);
      u0          = std::exchange(u1, u0 - q * u1);
    }
    if (r0.is_zero()) {
      return {r0, s0, u0};
    }
    Scalar const inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * u0};
  }

  std::size_t multiplicity(Polynomial const& a, Polynomial const& pi) {
    if (a.is_zero()) {
      throw std::domain_error("multiplicity in the zero polynomial");
    }
    if (pi.degree() < 1) {
      throw std::domain_error("multiplicity of a constant");
    }
    // t is by far the most common prime here.
    if (pi.degree() == 1 && pi.coefficient(0).is_zero()) {
      return a.low_degree();
    }
    std::size_t m = 0;
    Polynomial  x = a;
    for (;;) {
      auto [q, r] = divmod(x, pi);
      if (!r.is_zero()) {
        return m;
      }
      x = std::move(q);
      ++m;
    }
  }

  namespace {
    std::vector<Integer> positive_divisors(Integer n) {
      n = abs(n);
      std::vector<Integer> out;
      for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
          out.push_back(d);
          if (d * d != n) {
            out.push_back(n / d);
          }
        }
      }
      return out;
    }
  }  // namespace

  bool has_root(Polynomial const& f) {
    if (f.degree() < 1) {
      return false;
    }
    Field const fld = f.field();
    if (!fld.is_rationals()) {
      for (std::uint32_t x = 0; x < fld.p; ++x) {
        if (f.evaluate(Scalar(fld, static_cast<long>(x))).is_zero()) {
          return true;
        }
      }
      return false;
    }
    if (f.coefficient(0).is_zero()) {
      return true;
    }
    // Scale to integer coefficients.
    Integer lcm_den = 1;
    for (auto const& c : f.coefficients()) {
      mpz_lcm(lcm_den.get_mpz_t(),
              lcm_den.get_mpz_t(),
              c.value().get_den_mpz_t());
    }
    Integer const a0 = Rational(f.coefficient(0).value() * lcm_den).get_num();
    Integer const an = Rational(f.leading().value() * lcm_den).get_num();
    for (auto const& p : positive_divisors(a0)) {
      for (auto const& q : positive_divisors(an)) {
        for (int sign : {1, -1}) {
          Scalar const x(fld, Rational(sign * p, q));
          if (f.evaluate(x).is_zero()) {
            return true;
          }
        }
      }
    }
    return false;
  }

}  // namespace fp2tree
