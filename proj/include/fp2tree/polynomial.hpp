// Dense univariate polynomials in t over a Field.

#ifndef FP2TREE_POLYNOMIAL_HPP_
#define FP2TREE_POLYNOMIAL_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace fp2tree {

  class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(Field f) : _field(f) {}
    // Coefficient i multiplies t^i; trailing zeros are dropped.
    Polynomial(Field f, std::vector<Scalar> coeffs);
    Polynomial(Field f, std::initializer_list<long> coeffs);

    static Polynomial constant(Scalar const& c);
    static Polynomial monomial(Scalar const& c, std::size_t exponent);
    static Polynomial t(Field f) {
      return monomial(Scalar::one(f), 1);
    }

    Field field() const noexcept {
      return _field;
    }
    // -1 for the zero polynomial.
    long degree() const noexcept {
      return static_cast<long>(_coeffs.size()) - 1;
    }
    bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    bool is_one() const noexcept {
      return _coeffs.size() == 1 && _coeffs[0].is_one();
    }
    bool is_constant() const noexcept {
      return _coeffs.size() <= 1;
    }
    bool is_monic() const noexcept {
      return !_coeffs.empty() && _coeffs.back().is_one();
    }
    // c * t^k with c != 0.
    bool is_monomial() const noexcept;
    // Multiplicity of t as a factor (0 for the zero polynomial).
    std::size_t low_degree() const noexcept;

    std::vector<Scalar> const& coefficients() const noexcept {
      return _coeffs;
    }
    Scalar coefficient(std::size_t i) const;
    Scalar const& leading() const;

    Polynomial monic() const;
    Polynomial operator-() const;
    Scalar     evaluate(Scalar const& x) const;

    friend Polynomial operator+(Polynomial const& x, Polynomial const& y);
    friend Polynomial operator-(Polynomial const& x, Polynomial const& y);
    friend Polynomial operator*(Polynomial const& x, Polynomial const& y);
    friend Polynomial operator*(Scalar const& c, Polynomial const& y);

    // Shift by t^k, k >= 0.
    Polynomial shifted(std::size_t k) const;

    friend bool operator==(Polynomial const&, Polynomial const&) = default;
    // Degree first, then coefficients from the top; a total order.
    friend std::strong_ordering operator<=>(Polynomial const& x,
                                            Polynomial const& y);

    std::string to_string() const;
    std::size_t hash() const noexcept;

   private:
    void trim();

    Field               _field;
    std::vector<Scalar> _coeffs;
  };

  // Euclidean division; throws std::domain_error when b == 0.
  std::pair<Polynomial, Polynomial> divmod(Polynomial const& a,
                                           Polynomial const& b);

  // Monic gcd (zero when both inputs are zero).
  Polynomial gcd(Polynomial const& a, Polynomial const& b);

  struct ExtendedGcd {
    Polynomial g, s, u;  // s*a + u*b == g, g monic
  };
  ExtendedGcd extended_gcd(Polynomial const& a, Polynomial const& b);

  // Largest m with pi^m | a; a must be nonzero and deg pi >= 1.
  std::size_t multiplicity(Polynomial const& a, Polynomial const& pi);

  // Whether f has a root in the field.  For Q this uses the rational root
  // test on the integer-scaled polynomial.
  bool has_root(Polynomial const& f);

}  // namespace fp2tree

#endif  // FP2TREE_POLYNOMIAL_HPP_
