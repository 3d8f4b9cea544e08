// Seeded samplers for property checks.

#ifndef FP2TREE_RANDOM_HPP_
#define FP2TREE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "tree.hpp"

namespace fp2tree {

  class Sampler {
   public:
    explicit Sampler(Field f, std::uint64_t seed = 0x5eed)
        : _field(f), _rng(seed) {}

    Field field() const noexcept {
      return _field;
    }
    std::mt19937_64& engine() noexcept {
      return _rng;
    }

    long   integer(long lo, long hi);
    bool   coin();
    Scalar scalar(long bound = 5);
    Scalar nonzero_scalar(long bound = 5);
    // Small integer coefficients, degree in [0, max_degree].
    Polynomial       polynomial(long max_degree, long bound = 5);
    RationalFunction rational_function(long max_degree = 3);
    RationalFunction nonzero_rational_function(long max_degree = 3);
    // Support inside [lo, hi].
    RationalFunction laurent(long lo, long hi, long bound = 5);

    // A vertex at place: act(h, x(r)) for a random upper triangular h.
    TreeVertex vertex(Place const& place, long max_level = 4);

    // Random element of GL_2(O_place): products of unit diagonals,
    // O-unipotents and the coordinate swap.
    Matrix2 integral_matrix(Place const& place);
    // Random element of GL_2(k(t)) with small entries.
    Matrix2 invertible_matrix(long max_degree = 2);
    // Word of elementary matrices over k[1/pi] (the group acting on the
    // ray at a degree one place).
    Matrix2 ray_group_element(Place const& place, int length = 3);
    // Word over u_{+-n}, l_{+-n}, d^{+-1} with |n| <= 2, in SL_2(Z[t,1/t]).
    Matrix2 laurent_sl2_element(int length = 4);
    // Word of integer elementary matrices: an element of SL_2(Z).
    Matrix2 sl2z_element(int length = 3);
    // Element of Stab(A_n) with Laurent entries: products of [[1, b], [0, 1]]
    // with b in V_n and -1, times an SL_2(Z) word when n == 0.
    Matrix2 standard_stabilizer_element(long n);

   private:
    Field           _field;
    std::mt19937_64 _rng;
  };

}  // namespace fp2tree

#endif  // FP2TREE_RANDOM_HPP_
