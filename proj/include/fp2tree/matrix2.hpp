// 2x2 matrices over k(t).

#ifndef FP2TREE_MATRIX2_HPP_
#define FP2TREE_MATRIX2_HPP_

#include <functional>
#include <string>

#include "rational_function.hpp"

namespace fp2tree {

  class Matrix2 {
   public:
    Matrix2() : Matrix2(identity(Field::rationals())) {}
    Matrix2(RationalFunction a,
            RationalFunction b,
            RationalFunction c,
            RationalFunction d);

    static Matrix2 identity(Field f);
    static Matrix2 diagonal(RationalFunction x, RationalFunction y);
    // [[1, x], [0, 1]]
    static Matrix2 upper_unipotent(RationalFunction x);
    // [[1, 0], [x, 1]]
    static Matrix2 lower_unipotent(RationalFunction x);
    // [[0, -1], [1, 0]]
    static Matrix2 inversion(Field f);

    RationalFunction const& a() const noexcept {
      return _a;
    }
    RationalFunction const& b() const noexcept {
      return _b;
    }
    RationalFunction const& c() const noexcept {
      return _c;
    }
    RationalFunction const& d() const noexcept {
      return _d;
    }
    // Entries in the order a, b, c, d.
    RationalFunction const& entry(std::size_t i) const;
    Field field() const noexcept {
      return _a.field();
    }

    RationalFunction det() const;
    bool             is_singular() const {
      return det().is_zero();
    }
    bool is_upper_triangular() const noexcept {
      return _c.is_zero();
    }
    // Throws std::domain_error when singular.
    Matrix2 inverse() const;
    Matrix2 pow(long k) const;
    Matrix2 scaled(RationalFunction const& s) const;

    friend Matrix2 operator*(Matrix2 const& x, Matrix2 const& y);

    friend bool operator==(Matrix2 const&, Matrix2 const&) = default;
    friend std::strong_ordering operator<=>(Matrix2 const&,
                                            Matrix2 const&) = default;

    std::string to_string() const;
    std::size_t hash() const noexcept;

   private:
    RationalFunction _a, _b, _c, _d;
  };

  // Throws std::domain_error if g is singular.
  void require_invertible(Matrix2 const& g);

  // The matrices used throughout.
  namespace matrices {
    // u_n = [[1, t^n], [0, 1]], n any integer.
    Matrix2 unipotent(Field f, long n);
    // l_n = [[1, 0], [t^n, 1]]
    Matrix2 lower(Field f, long n);
    // diag(t, 1/t)
    Matrix2 translation(Field f);
  }  // namespace matrices

}  // namespace fp2tree

template <>
struct std::hash<fp2tree::Matrix2> {
  std::size_t operator()(fp2tree::Matrix2 const& m) const noexcept {
    return m.hash();
  }
};

#endif  // FP2TREE_MATRIX2_HPP_
