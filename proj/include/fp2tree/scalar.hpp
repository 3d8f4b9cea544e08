// Exact coefficient field elements: Q or a prime field F_p.

#ifndef FP2TREE_SCALAR_HPP_
#define FP2TREE_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace fp2tree {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  // The coefficient field k.  p == 0 means Q, otherwise F_p.
  struct Field {
    std::uint32_t p = 0;

    static Field rationals() noexcept {
      return Field{0};
    }
    // Throws std::invalid_argument unless p is prime.
    static Field prime(std::uint32_t p);

    bool is_rationals() const noexcept {
      return p == 0;
    }
    std::string name() const;

    friend bool operator==(Field, Field) = default;
  };

  bool is_prime(std::uint64_t n) noexcept;

  // An element of a Field.  Rationals are kept reduced with positive
  // denominator (mpq canonical form); F_p values live in [0, p).
  class Scalar {
   public:
    Scalar() = default;
    Scalar(Field f, Rational const& v);
    Scalar(Field f, long v) : Scalar(f, Rational(v)) {}

    static Scalar zero(Field f) {
      return Scalar(f, 0L);
    }
    static Scalar one(Field f) {
      return Scalar(f, 1L);
    }

    Field field() const noexcept {
      return _field;
    }
    Rational const& value() const noexcept {
      return _value;
    }
    bool is_zero() const noexcept {
      return sgn(_value) == 0;
    }
    bool is_one() const noexcept {
      return _value == 1;
    }
    // True when the element lies in the prime subring (Z or F_p).
    bool is_integral() const noexcept {
      return _value.get_den() == 1;
    }

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    friend Scalar operator+(Scalar const& x, Scalar const& y);
    friend Scalar operator-(Scalar const& x, Scalar const& y);
    friend Scalar operator*(Scalar const& x, Scalar const& y);
    friend Scalar operator/(Scalar const& x, Scalar const& y);

    Scalar& operator+=(Scalar const& y) {
      return *this = *this + y;
    }
    Scalar& operator-=(Scalar const& y) {
      return *this = *this - y;
    }
    Scalar& operator*=(Scalar const& y) {
      return *this = *this * y;
    }

    friend bool operator==(Scalar const& x, Scalar const& y) {
      return x._field == y._field && x._value == y._value;
    }
    friend std::strong_ordering operator<=>(Scalar const& x,
                                            Scalar const& y) {
      int c = cmp(x._value, y._value);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater
                            : std::strong_ordering::equal);
    }

    // "p/q" (or "p" for integers).
    std::string to_string() const;
    static Scalar parse(Field f, std::string const& text);

    std::size_t hash() const noexcept;

   private:
    Field    _field;
    Rational _value;
  };

  void check_same_field(Field a, Field b);

}  // namespace fp2tree

#endif  // FP2TREE_SCALAR_HPP_
