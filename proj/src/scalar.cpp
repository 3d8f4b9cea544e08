#include "fp2tree/scalar.hpp"

#include <stdexcept>

namespace fp2tree {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("field characteristic " + std::to_string(p)
                                  + " is not prime");
    }
    return Field{p};
  }

  std::string Field::name() const {
    return p == 0 ? "Q" : "F" + std::to_string(p);
  }

  void check_same_field(Field a, Field b) {
    if (a != b) {
      throw std::invalid_argument("field mismatch: " + a.name() + " vs "
                                  + b.name());
    }
  }

  Scalar::Scalar(Field f, Rational const& v) : _field(f), _value(v) {
    _value.canonicalize();
    if (f.p != 0) {
      Integer const p(static_cast<unsigned long>(f.p));
      Integer       num = _value.get_num() % p;
      Integer       den = _value.get_den() % p;
      if (den == 0) {
        throw std::domain_error("denominator vanishes in " + f.name());
      }
      Integer inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      num = (num * inv) % p;
      if (num < 0) {
        num += p;
      }
      _value = Rational(num);
    }
  }

  Scalar Scalar::operator-() const {
    return Scalar(_field, -_value);
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw std::domain_error("inverse of zero scalar");
    }
    return Scalar(_field, Rational(1) / _value);
  }

  Scalar operator+(Scalar const& x, Scalar const& y) {
    check_same_field(x._field, y._field);
    return Scalar(x._field, x._value + y._value);
  }

  Scalar operator-(Scalar const& x, Scalar const& y) {
    check_same_field(x._field, y._field);
    return Scalar(x._field, x._value - y._value);
  }

  Scalar operator*(Scalar const& x, Scalar const& y) {
    check_same_field(x._field, y._field);
    return Scalar(x._field, x._value * y._value);
  }

  Scalar operator/(Scalar const& x, Scalar const& y) {
    check_same_field(x._field, y._field);
    if (y.is_zero()) {
      throw std::domain_error("division by zero scalar");
    }
    return Scalar(x._field, x._value / y._value);
  }

  std::string Scalar::to_string() const {
    return _value.get_str();
  }

  Scalar Scalar::parse(Field f, std::string const& text) {
    Rational v;
    if (text.empty() || v.set_str(text, 10) != 0) {
      throw std::invalid_argument("malformed scalar \"" + text + "\"");
    }
    if (v.get_den() == 0) {
      throw std::invalid_argument("zero denominator in \"" + text + "\"");
    }
    return Scalar(f, v);
  }

  std::size_t Scalar::hash() const noexcept {
    std::size_t h = mpz_get_ui(_value.get_num_mpz_t());
    h ^= static_cast<std::size_t>(sgn(_value)) + 0x9e3779b97f4a7c15ULL
         + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(_value.get_den_mpz_t()) * 0xff51afd7ed558ccdULL;
    return h;
  }

}  // namespace fp2tree
