// The Bruhat-Tits tree of SL_2(k(t)) at a place.
//
// A vertex is the homothety class of the lattice spanned by the columns of
// [[pi^level, x], [0, 1]], where x is a truncated expansion with exponents
// < level.  Every class has exactly one such representative, so TreeVertex
// equality is structural.  The tree is never stored: vertices are values,
// and adjacency is distance 1.
//
// Apartment convention: x(r) is the class of diag(pi^(-r), 1), i.e. level
// -r with empty coordinate.  Upper triangular matrices fix the end
// r -> +infinity (level -> -infinity) and diag(t, 1/t) moves x_inf(r) to
// x_inf(r + 2) and x_0(r) to x_0(r - 2).

#ifndef FP2TREE_TREE_HPP_
#define FP2TREE_TREE_HPP_

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "matrix2.hpp"
#include "valuation.hpp"

namespace fp2tree {

  class TreeVertex {
   public:
    TreeVertex() = default;
    // coord.order() must equal level and coord.place() must be place.
    TreeVertex(long level, TruncatedSeries coord);

    Place const& place() const noexcept {
      return _coord.place();
    }
    long level() const noexcept {
      return _level;
    }
    TruncatedSeries const& coord() const noexcept {
      return _coord;
    }

    // Column representative [[pi^level, x], [0, 1]].
    Matrix2 representative() const;

    // r with *this == apartment_vertex(place, r), if any.
    std::optional<long> apartment_coordinate() const;

    // The unique neighbour one level down.
    TreeVertex parent() const;

    friend bool operator==(TreeVertex const&, TreeVertex const&) = default;
    // Place, level, then coordinate terms: the canonical total order.
    friend std::strong_ordering operator<=>(TreeVertex const& x,
                                            TreeVertex const& y);

    std::string to_string() const;

   private:
    long            _level = 0;
    TruncatedSeries _coord;
  };

  // Canonical vertex of the lattice class M * O^2.  Pivot: the bottom row
  // entry of lowest valuation, ties to the first column.
  TreeVertex canonical_vertex(Matrix2 const& m, Place const& place);

  TreeVertex act(Matrix2 const& g, TreeVertex const& v);

  // Elementary divisor gap of A^-1 B.
  long distance(TreeVertex const& v, TreeVertex const& w);

  // Unique path from v to w, both endpoints included.
  std::vector<TreeVertex> geodesic(TreeVertex const& v, TreeVertex const& w);

  // Level at which the paths from v and w towards the common end meet.
  long meet_level(TreeVertex const& v, TreeVertex const& w);

  // Whether g fixes v, i.e. A^-1 g A in K^* GL_2(O).
  bool fixes(Matrix2 const& g, TreeVertex const& v);

  TreeVertex apartment_vertex(Place const& place, long r);

  struct RayReduction {
    Matrix2 g;
    long    r;
  };

  // Finds g in SL_2(k[1/pi]) (k[t] at infinity, k[1/t] at t = 0) and
  // r >= 0 with act(g, v) == apartment_vertex(place, r).  Degree one
  // places only.
  //
  // Each round subtracts the part of the coordinate with exponent <= 0
  // (an upper unipotent over k[1/pi]) and then inverts with [[0,-1],[1,0]];
  // the inversion maps level d with leading coordinate exponent e in
  // [1, d) to level d - 2e, so the level falls by at least two per round
  // and the descent stops once the level is <= 0.
  RayReduction reduce_to_ray(TreeVertex const& v);

}  // namespace fp2tree

#endif  // FP2TREE_TREE_HPP_
