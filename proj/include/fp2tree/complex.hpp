// Finite pieces of X = T_inf x T_0 with its square cell structure.
//
// Cells are products of tree cells (a vertex, or an edge stored as lo < hi
// in the TreeVertex order).  An edge is oriented lo -> hi, a square
// carries the product orientation, and
//   d(a x b) = (da) x b + (-1)^dim(a) a x (db).
// Group elements can reverse stored edges, so the action on cells is
// signed.  The grid vertex (r, s) is (x_inf(r), x_0(s)).

#ifndef FP2TREE_COMPLEX_HPP_
#define FP2TREE_COMPLEX_HPP_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tree.hpp"

namespace fp2tree {

  class TreeCell {
   public:
    static TreeCell vertex(TreeVertex v);
    // Throws std::invalid_argument unless distance(v, w) == 1.
    static TreeCell edge(TreeVertex const& v, TreeVertex const& w);

    std::size_t dim() const noexcept {
      return _hi ? 1 : 0;
    }
    TreeVertex const& lo() const noexcept {
      return _lo;
    }
    // Only for edges.
    TreeVertex const& hi() const;

    friend bool operator==(TreeCell const&, TreeCell const&) = default;
    friend std::strong_ordering operator<=>(TreeCell const& x,
                                            TreeCell const& y);

   private:
    TreeVertex                _lo;
    std::optional<TreeVertex> _hi;
  };

  struct ProductVertex {
    TreeVertex rho;
    TreeVertex zeta;

    friend bool operator==(ProductVertex const&,
                           ProductVertex const&) = default;
    friend std::strong_ordering operator<=>(ProductVertex const& x,
                                            ProductVertex const& y);
    std::string to_string() const;
  };

  using GridPoint = std::pair<long, long>;

  ProductVertex grid_vertex(Field f, long r, long s);
  // (r, s) if both coordinates lie on the standard apartments.
  std::optional<GridPoint> grid_coordinates(ProductVertex const& v);

  class Cell {
   public:
    Cell() = default;
    Cell(TreeCell rho, TreeCell zeta);
    explicit Cell(ProductVertex const& v);

    TreeCell const& rho() const noexcept {
      return _rho;
    }
    TreeCell const& zeta() const noexcept {
      return _zeta;
    }
    std::size_t dim() const noexcept {
      return _rho.dim() + _zeta.dim();
    }
    // Corner vertices, sorted.
    std::vector<ProductVertex> vertices() const;
    // Signed codimension one faces.
    std::vector<std::pair<Cell, int>> boundary() const;

    friend bool operator==(Cell const&, Cell const&) = default;
    friend std::strong_ordering operator<=>(Cell const& x, Cell const& y);

    std::string to_string() const;

   private:
    TreeCell _rho;
    TreeCell _zeta;
  };

  // Integer chains; zero coefficients are never stored.
  using Chain = std::map<Cell, long>;

  void  add_to(Chain& c, Cell const& cell, long coefficient);
  Chain operator+(Chain const& x, Chain const& y);
  Chain operator-(Chain const& x, Chain const& y);
  Chain operator*(long k, Chain const& x);
  Chain boundary(Chain const& c);

  ProductVertex pair_act(Matrix2 const& g, ProductVertex const& v);
  // Image cell with the orientation sign of g on it.
  std::pair<Cell, int> pair_act_signed(Matrix2 const& g, Cell const& c);
  Cell                 pair_act(Matrix2 const& g, Cell const& c);
  Chain                pair_act(Matrix2 const& g, Chain const& c);

  // A path of product vertices, consecutive ones adjacent in X.
  class EdgePath {
   public:
    EdgePath() = default;
    // Throws std::invalid_argument on a non-adjacent consecutive pair.
    explicit EdgePath(std::vector<ProductVertex> vertices);

    std::vector<ProductVertex> const& vertices() const noexcept {
      return _vertices;
    }
    std::size_t length() const noexcept {
      return _vertices.empty() ? 0 : _vertices.size() - 1;
    }
    bool is_closed() const noexcept {
      return !_vertices.empty() && _vertices.front() == _vertices.back();
    }
    ProductVertex const& front() const;
    ProductVertex const& back() const;

    // Each edge with sign +1 when traversed lo -> hi.
    std::vector<std::pair<Cell, int>> edges() const;
    Chain                             chain() const;
    EdgePath                          reversed() const;
    // Concatenation; other must start where this path ends.
    EdgePath then(EdgePath const& other) const;

    friend bool operator==(EdgePath const&, EdgePath const&) = default;

   private:
    std::vector<ProductVertex> _vertices;
  };

  EdgePath pair_act(Matrix2 const& g, EdgePath const& p);

  // Grid path alternating a rho step and a zeta step, rho first.  Throws
  // std::invalid_argument unless |r - r'| == |s - s'|.
  EdgePath staircase_path(Field f, GridPoint from, GridPoint to);

  class SubComplex {
   public:
    SubComplex() = default;

    // Adds the cell and all its faces.
    void insert(Cell const& c);
    bool contains(Cell const& c) const;

    std::set<Cell> const& cells(std::size_t dim) const;
    std::size_t           size(std::size_t dim) const {
      return cells(dim).size();
    }
    std::size_t size() const noexcept {
      return _cells[0].size() + _cells[1].size() + _cells[2].size();
    }
    // Validator: every face of every stored cell is stored.
    bool is_face_closed() const;

    friend bool operator==(SubComplex const&, SubComplex const&) = default;

   private:
    std::array<std::set<Cell>, 3> _cells;
  };

  template <typename Cells>
  SubComplex closure(Cells const& cells) {
    SubComplex s;
    for (auto const& c : cells) {
      if constexpr (requires { c.first; }) {
        s.insert(c.first);
      } else {
        s.insert(c);
      }
    }
    return s;
  }

  SubComplex remove_open_star(SubComplex const& s, ProductVertex const& v);
  SubComplex translate_union(SubComplex const&           s,
                             std::vector<Matrix2> const& gs);

  // Fixed-point searches on the grid window |r|, |s| <= n + 2.
  // P_n: the antidiagonal point (a, -a) fixed by u_n.
  GridPoint segment_start(Field f, long n);
  // Q_n: the antidiagonal point fixed by u_{-n}.
  GridPoint segment_end(Field f, long n);
  // The grid point fixed by u_n and u_{-n} closest to the antidiagonal.
  GridPoint cone_apex(Field f, long n);

  // sigma_n: staircase from P_n to Q_n.
  EdgePath build_segment(long n, Field f = Field::rationals());
  // gamma_n = sigma - u_{-n} sigma + u_n u_{-n} sigma - u_n sigma.
  EdgePath build_loop(long n, Field f = Field::rationals());

  struct Cone {
    // Staircase triangle with right angle at the apex.
    Chain         triangle;
    // Delta - u_{-n} Delta + u_n u_{-n} Delta - u_n Delta; boundary gamma_n.
    Chain         chain;
    SubComplex    complex;
    ProductVertex apex;
  };

  Cone build_cone(long n, Field f = Field::rationals());

}  // namespace fp2tree

#endif  // FP2TREE_COMPLEX_HPP_
