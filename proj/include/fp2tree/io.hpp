// JSON and DOT serialization.  Output is canonical: equal values give
// identical bytes.
//
//   Scalar            "p/q"
//   Polynomial        [[exponent, "p/q"], ...] ascending, nonzero only
//   RationalFunction  {"num": Polynomial, "den": Polynomial}
//   Place             {"field": p, "pi": Polynomial | null}  (null at infinity)
//   TreeVertex        {"place": Place, "level": d, "coord": [[exp, c], ...]}
//                     c is "p/q" at degree one places, a Polynomial otherwise
//   ProductVertex     {"rho": TreeVertex, "zeta": TreeVertex}
//   SubComplex        {"vertices": [...], "edges": [[i, j], ...],
//                      "squares": [[i, j, k, l], ...]}  (vertex indices)

#ifndef FP2TREE_IO_HPP_
#define FP2TREE_IO_HPP_

#include <string>

#include "json.hpp"

#include "complex.hpp"

namespace fp2tree {

  using Json = nlohmann::ordered_json;

  Json   to_json(Scalar const& x);
  Scalar scalar_from_json(Field f, Json const& j);

  Json       to_json(Polynomial const& p);
  Polynomial polynomial_from_json(Field f, Json const& j);

  Json             to_json(RationalFunction const& f);
  RationalFunction rational_function_from_json(Field f, Json const& j);

  Json  to_json(Place const& p);
  Place place_from_json(Json const& j);

  Json       to_json(TreeVertex const& v);
  TreeVertex tree_vertex_from_json(Json const& j);

  Json          to_json(ProductVertex const& v);
  ProductVertex product_vertex_from_json(Json const& j);

  Json to_json(Matrix2 const& m);

  Json to_json(SubComplex const& s);
  // Cells of a chain with coefficients, edges/squares as vertex lists.
  Json to_json(Chain const& c);
  Json to_json(EdgePath const& p);

  // Vertex label: "(r,s)" on the grid, a stable hash otherwise.
  std::string dot_label(ProductVertex const& v);
  // 1-skeleton as an undirected graph.
  std::string to_dot(SubComplex const& s, std::string const& name = "X");

}  // namespace fp2tree

#endif  // FP2TREE_IO_HPP_
