// Elements of k(t), kept in lowest terms with monic denominator.

#ifndef FP2TREE_RATIONAL_FUNCTION_HPP_
#define FP2TREE_RATIONAL_FUNCTION_HPP_

#include <map>
#include <optional>
#include <string>

#include "polynomial.hpp"

namespace fp2tree {

  class RationalFunction {
   public:
    RationalFunction() : RationalFunction(Field::rationals()) {}
    explicit RationalFunction(Field f);
    RationalFunction(Polynomial const& p);  // NOLINT(runtime/explicit)
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(Field f, long c);

    static RationalFunction constant(Scalar const& c) {
      return RationalFunction(Polynomial::constant(c));
    }
    static RationalFunction zero(Field f) {
      return RationalFunction(f);
    }
    static RationalFunction one(Field f) {
      return RationalFunction(f, 1L);
    }
    // t^k for any integer k.
    static RationalFunction t_power(Field f, long k);
    // Sum of c_j t^j over a finite support.
    static RationalFunction laurent(Field                        f,
                                    std::map<long, Scalar> const& terms);

    Field field() const noexcept {
      return _num.field();
    }
    Polynomial const& numerator() const noexcept {
      return _num;
    }
    Polynomial const& denominator() const noexcept {
      return _den;
    }

    bool is_zero() const noexcept {
      return _num.is_zero();
    }
    bool is_one() const noexcept {
      return _num.is_one() && _den.is_one();
    }
    bool is_constant() const noexcept {
      return _num.is_constant() && _den.is_one();
    }
    bool is_polynomial() const noexcept {
      return _den.is_one();
    }
    // Denominator is a power of t.
    bool is_laurent() const noexcept {
      return _den.is_monomial();
    }
    // Exponent -> coefficient map; nullopt unless is_laurent().
    std::optional<std::map<long, Scalar>> laurent_terms() const;

    RationalFunction operator-() const;
    RationalFunction inverse() const;  // throws std::domain_error on zero
    RationalFunction pow(long k) const;

    friend RationalFunction operator+(RationalFunction const& x,
                                      RationalFunction const& y);
    friend RationalFunction operator-(RationalFunction const& x,
                                      RationalFunction const& y);
    friend RationalFunction operator*(RationalFunction const& x,
                                      RationalFunction const& y);
    friend RationalFunction operator/(RationalFunction const& x,
                                      RationalFunction const& y);

    RationalFunction& operator+=(RationalFunction const& y) {
      return *this = *this + y;
    }
    RationalFunction& operator-=(RationalFunction const& y) {
      return *this = *this - y;
    }
    RationalFunction& operator*=(RationalFunction const& y) {
      return *this = *this * y;
    }

    friend bool operator==(RationalFunction const&,
                           RationalFunction const&) = default;
    friend std::strong_ordering operator<=>(RationalFunction const& x,
                                            RationalFunction const& y);

    std::string to_string() const;
    std::size_t hash() const noexcept;

   private:
    struct NoNormalize {};
    RationalFunction(Polynomial num, Polynomial den, NoNormalize)
        : _num(std::move(num)), _den(std::move(den)) {}
    void normalize();

    Polynomial _num;
    Polynomial _den;
  };

}  // namespace fp2tree

#endif  // FP2TREE_RATIONAL_FUNCTION_HPP_
