#include "fp2tree/random.hpp"

namespace fp2tree {

  long Sampler::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(_rng);
  }

  bool Sampler::coin() {
    return integer(0, 1) == 1;
  }

  Scalar Sampler::scalar(long bound) {
    if (!_field.is_rationals()) {
      return Scalar(_field, integer(0, static_cast<long>(_field.p) - 1));
    }
    // Mostly integers, occasionally a proper fraction.
    long const num = integer(-bound, bound);
    long const den = integer(0, 3) == 0 ? integer(1, 3) : 1;
    return Scalar(_field, Rational(num, den));
  }

  Scalar Sampler::nonzero_scalar(long bound) {
    for (;;) {
      Scalar s = scalar(bound);
      if (!s.is_zero()) {
        return s;
      }
    }
  }

  Polynomial Sampler::polynomial(long max_degree, long bound) {
    long const          deg = integer(0, max_degree);
    std::vector<Scalar> c;
    for (long i = 0; i <= deg; ++i) {
      c.push_back(scalar(bound));
    }
    return Polynomial(_field, std::move(c));
  }

  RationalFunction Sampler::rational_function(long max_degree) {
    Polynomial den(_field);
    while (den.is_zero()) {
      den = polynomial(max_degree);
    }
    // Factors of t show up in the denominator often enough to matter.
    if (integer(0, 2) == 0) {
      den = den.shifted(static_cast<std::size_t>(integer(1, 2)));
    }
    return RationalFunction(polynomial(max_degree), den);
  }

  RationalFunction Sampler::nonzero_rational_function(long max_degree) {
    for (;;) {
      RationalFunction f = rational_function(max_degree);
      if (!f.is_zero()) {
        return f;
      }
    }
  }

  RationalFunction Sampler::laurent(long lo, long hi, long bound) {
    std::map<long, Scalar> terms;
    for (long e = lo; e <= hi; ++e) {
      if (coin()) {
        terms.emplace(e, scalar(bound));
      }
    }
    std::erase_if(terms, [](auto const& kv) { return kv.second.is_zero(); });
    return RationalFunction::laurent(_field, terms);
  }

  namespace {
    RationalFunction scaled_to_valuation(RationalFunction const& f,
                                         Place const&            p,
                                         long                    target) {
      long const v = valuation(p, f).value();
      return f * p.uniformizer_power(target - v);
    }
  }  // namespace

  TreeVertex Sampler::vertex(Place const& place, long max_level) {
    long const       level = integer(-max_level, max_level);
    long const       width = integer(0, 4);
    RationalFunction x     = RationalFunction::zero(_field);
    for (long e = level - width; e < level; ++e) {
      x += RationalFunction::constant(scalar(3)) * place.uniformizer_power(e);
    }
    Matrix2 m(place.uniformizer_power(level),
              x,
              RationalFunction::zero(_field),
              RationalFunction::one(_field));
    if (coin()) {
      m = m * integral_matrix(place);
    }
    return canonical_vertex(m, place);
  }

  Matrix2 Sampler::integral_matrix(Place const& place) {
    Matrix2 g = Matrix2::identity(_field);
    for (int step = 0; step < 3; ++step) {
      switch (integer(0, 3)) {
        case 0:
          g = g
              * Matrix2::diagonal(
                  scaled_to_valuation(nonzero_rational_function(2), place, 0),
                  scaled_to_valuation(nonzero_rational_function(2), place, 0));
          break;
        case 1:
          g = g
              * Matrix2::upper_unipotent(scaled_to_valuation(
                  nonzero_rational_function(2), place, integer(0, 2)));
          break;
        case 2:
          g = g
              * Matrix2::lower_unipotent(scaled_to_valuation(
                  nonzero_rational_function(2), place, integer(0, 2)));
          break;
        default:
          g = g
              * Matrix2(RationalFunction::zero(_field),
                        RationalFunction::one(_field),
                        RationalFunction::one(_field),
                        RationalFunction::zero(_field));
          break;
      }
    }
    return g;
  }

  Matrix2 Sampler::invertible_matrix(long max_degree) {
    for (;;) {
      Matrix2 m(rational_function(max_degree),
                rational_function(max_degree),
                rational_function(max_degree),
                rational_function(max_degree));
      if (!m.is_singular()) {
        return m;
      }
    }
  }

  Matrix2 Sampler::ray_group_element(Place const& place, int length) {
    Matrix2 g = Matrix2::identity(_field);
    for (int i = 0; i < length; ++i) {
      // A polynomial in 1/pi of degree <= 2.
      RationalFunction p = RationalFunction::zero(_field);
      for (long e = -2; e <= 0; ++e) {
        p += RationalFunction::constant(scalar(3)) * place.uniformizer_power(e);
      }
      switch (integer(0, 2)) {
        case 0:
          g = g * Matrix2::upper_unipotent(p);
          break;
        case 1:
          g = g * Matrix2::lower_unipotent(p);
          break;
        default:
          g = g * Matrix2::inversion(_field);
          break;
      }
    }
    return g;
  }

  Matrix2 Sampler::laurent_sl2_element(int length) {
    Matrix2 g = Matrix2::identity(_field);
    for (int i = 0; i < length; ++i) {
      long const n = integer(-2, 2);
      switch (integer(0, 2)) {
        case 0:
          g = g * matrices::unipotent(_field, n).pow(integer(-2, 2));
          break;
        case 1:
          g = g * matrices::lower(_field, n).pow(integer(-2, 2));
          break;
        default:
          g = g * matrices::translation(_field).pow(coin() ? 1 : -1);
          break;
      }
    }
    return g;
  }

  Matrix2 Sampler::sl2z_element(int length) {
    Matrix2 g = Matrix2::identity(_field);
    for (int i = 0; i < length; ++i) {
      RationalFunction const k(_field, integer(-3, 3));
      g = g
          * (coin() ? Matrix2::upper_unipotent(k)
                    : Matrix2::lower_unipotent(k));
    }
    return g;
  }

  Matrix2 Sampler::standard_stabilizer_element(long n) {
    Matrix2 g = n == 0 ? sl2z_element() : Matrix2::identity(_field);
    for (int i = 0; i < 3; ++i) {
      std::map<long, Scalar> b;
      for (long e = 0; e <= n; ++e) {
        Scalar c(_field, integer(-3, 3));
        if (!c.is_zero()) {
          b.emplace(e, c);
        }
      }
      g = g * Matrix2::upper_unipotent(RationalFunction::laurent(_field, b));
      if (coin()) {
        g = g.scaled(RationalFunction(_field, -1));
      }
    }
    return g;
  }

}  // namespace fp2tree
