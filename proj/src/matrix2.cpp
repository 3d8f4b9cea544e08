#include "fp2tree/matrix2.hpp"

#include <stdexcept>

namespace fp2tree {

  Matrix2::Matrix2(RationalFunction a,
                   RationalFunction b,
                   RationalFunction c,
                   RationalFunction d)
      : _a(std::move(a)), _b(std::move(b)), _c(std::move(c)), _d(std::move(d)) {
    check_same_field(_a.field(), _b.field());
    check_same_field(_a.field(), _c.field());
    check_same_field(_a.field(), _d.field());
  }

  Matrix2 Matrix2::identity(Field f) {
    return diagonal(RationalFunction::one(f), RationalFunction::one(f));
  }

  Matrix2 Matrix2::diagonal(RationalFunction x, RationalFunction y) {
    Field const f = x.field();
    return Matrix2(std::move(x),
                   RationalFunction::zero(f),
                   RationalFunction::zero(f),
                   std::move(y));
  }

  Matrix2 Matrix2::upper_unipotent(RationalFunction x) {
    Field const f = x.field();
    return Matrix2(RationalFunction::one(f),
                   std::move(x),
                   RationalFunction::zero(f),
                   RationalFunction::one(f));
  }

  Matrix2 Matrix2::lower_unipotent(RationalFunction x) {
    Field const f = x.field();
    return Matrix2(RationalFunction::one(f),
                   RationalFunction::zero(f),
                   std::move(x),
                   RationalFunction::one(f));
  }

  Matrix2 Matrix2::inversion(Field f) {
    return Matrix2(RationalFunction::zero(f),
                   RationalFunction(f, -1L),
                   RationalFunction::one(f),
                   RationalFunction::zero(f));
  }

  RationalFunction const& Matrix2::entry(std::size_t i) const {
    switch (i) {
      case 0:
        return _a;
      case 1:
        return _b;
      case 2:
        return _c;
      case 3:
        return _d;
      default:
        throw std::out_of_range("matrix entry index");
    }
  }

  RationalFunction Matrix2::det() const {
    return _a * _d - _b * _c;
  }

  Matrix2 Matrix2::inverse() const {
    RationalFunction const det_inv = det().inverse();
    return Matrix2(_d * det_inv, -_b * det_inv, -_c * det_inv, _a * det_inv);
  }

  Matrix2 Matrix2::pow(long k) const {
    if (k < 0) {
      return inverse().pow(-k);
    }
    Matrix2 result = identity(field());
    Matrix2 base   = *this;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  Matrix2 Matrix2::scaled(RationalFunction const& s) const {
    return Matrix2(_a * s, _b * s, _c * s, _d * s);
  }

  Matrix2 operator*(Matrix2 const& x, Matrix2 const& y) {
    return Matrix2(x._a * y._a + x._b * y._c,
                   x._a * y._b + x._b * y._d,
                   x._c * y._a + x._d * y._c,
                   x._c * y._b + x._d * y._d);
  }

  std::string Matrix2::to_string() const {
    return "[[" + _a.to_string() + ", " + _b.to_string() + "], ["
           + _c.to_string() + ", " + _d.to_string() + "]]";
  }

  std::size_t Matrix2::hash() const noexcept {
    std::size_t h = _a.hash();
    h             = h * 0x100000001b3ULL ^ _b.hash();
    h             = h * 0x100000001b3ULL ^ _c.hash();
    h             = h * 0x100000001b3ULL ^ _d.hash();
    return h;
  }

  void require_invertible(Matrix2 const& g) {
    if (g.is_singular()) {
      throw std::domain_error("singular matrix " + g.to_string());
    }
  }

  namespace matrices {
    Matrix2 unipotent(Field f, long n) {
      return Matrix2::upper_unipotent(RationalFunction::t_power(f, n));
    }

    Matrix2 lower(Field f, long n) {
      return Matrix2::lower_unipotent(RationalFunction::t_power(f, n));
    }

    Matrix2 translation(Field f) {
      return Matrix2::diagonal(RationalFunction::t_power(f, 1),
                               RationalFunction::t_power(f, -1));
    }
  }  // namespace matrices

}  // namespace fp2tree
