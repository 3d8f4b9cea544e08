#include "fp2tree/io.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  Json to_json(Scalar const& x) {
    return x.to_string();
  }

  Scalar scalar_from_json(Field f, Json const& j) {
    if (!j.is_string()) {
      throw std::invalid_argument("scalar must be a string, got " + j.dump());
    }
    return Scalar::parse(f, j.get<std::string>());
  }

  Json to_json(Polynomial const& p) {
    Json        out = Json::array();
    auto const& c   = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) {
        out.push_back(Json::array({i, to_json(c[i])}));
      }
    }
    return out;
  }

  Polynomial polynomial_from_json(Field f, Json const& j) {
    Polynomial out(f);
    for (auto const& term : j) {
      long const e = term.at(0).get<long>();
      if (e < 0) {
        throw std::invalid_argument("negative polynomial exponent");
      }
      out = out
            + Polynomial::monomial(scalar_from_json(f, term.at(1)),
                                   static_cast<std::size_t>(e));
    }
    return out;
  }

  Json to_json(RationalFunction const& f) {
    return Json{{"num", to_json(f.numerator())},
                {"den", to_json(f.denominator())}};
  }

  RationalFunction rational_function_from_json(Field f, Json const& j) {
    return RationalFunction(polynomial_from_json(f, j.at("num")),
                            polynomial_from_json(f, j.at("den")));
  }

  Json to_json(Place const& p) {
    Json out{{"field", p.field().p}};
    out["pi"] = p.is_infinity() ? Json(nullptr) : to_json(p.prime());
    if (p.irreducibility_asserted()) {
      out["asserted"] = true;
    }
    return out;
  }

  Place place_from_json(Json const& j) {
    auto const  p = j.at("field").get<std::uint32_t>();
    Field const f = p == 0 ? Field::rationals() : Field::prime(p);
    if (j.at("pi").is_null()) {
      return Place::infinity(f);
    }
    return Place::at(polynomial_from_json(f, j.at("pi")),
                     j.value("asserted", false));
  }

  Json to_json(TreeVertex const& v) {
    bool const linear = v.place().residue_degree() == 1;
    Json       coord  = Json::array();
    for (auto const& term : v.coord().terms()) {
      coord.push_back(Json::array(
          {term.exponent,
           linear ? to_json(term.coefficient.coefficient(0))
                  : to_json(term.coefficient)}));
    }
    return Json{
        {"place", to_json(v.place())}, {"level", v.level()}, {"coord", coord}};
  }

  TreeVertex tree_vertex_from_json(Json const& j) {
    Place const             place = place_from_json(j.at("place"));
    Field const             f     = place.field();
    long const              level = j.at("level").get<long>();
    std::vector<SeriesTerm> terms;
    for (auto const& term : j.at("coord")) {
      auto const& c = term.at(1);
      terms.push_back({term.at(0).get<long>(),
                       c.is_string()
                           ? Polynomial::constant(scalar_from_json(f, c))
                           : polynomial_from_json(f, c)});
    }
    return TreeVertex(level, TruncatedSeries(place, std::move(terms), level));
  }

  Json to_json(ProductVertex const& v) {
    return Json{{"rho", to_json(v.rho)}, {"zeta", to_json(v.zeta)}};
  }

  ProductVertex product_vertex_from_json(Json const& j) {
    return {tree_vertex_from_json(j.at("rho")),
            tree_vertex_from_json(j.at("zeta"))};
  }

  Json to_json(Matrix2 const& m) {
    return Json::array({Json::array({to_json(m.a()), to_json(m.b())}),
                        Json::array({to_json(m.c()), to_json(m.d())})});
  }

  namespace {
    Json cell_vertices(Cell const& c) {
      Json out = Json::array();
      for (auto const& v : c.vertices()) {
        out.push_back(to_json(v));
      }
      return out;
    }
  }  // namespace

  Json to_json(SubComplex const& s) {
    std::map<ProductVertex, std::size_t> index;
    Json                                 vertices = Json::array();
    for (auto const& c : s.cells(0)) {
      auto const v = c.vertices().front();
      index.emplace(v, index.size());
      vertices.push_back(to_json(v));
    }
    auto indices = [&](Cell const& c) {
      Json out = Json::array();
      for (auto const& v : c.vertices()) {
        out.push_back(index.at(v));
      }
      return out;
    };
    Json edges = Json::array(), squares = Json::array();
    for (auto const& c : s.cells(1)) {
      edges.push_back(indices(c));
    }
    for (auto const& c : s.cells(2)) {
      squares.push_back(indices(c));
    }
    return Json{{"vertices", vertices}, {"edges", edges}, {"squares", squares}};
  }

  Json to_json(Chain const& c) {
    Json out = Json::array();
    for (auto const& [cell, k] : c) {
      out.push_back(Json{{"dim", cell.dim()},
                         {"coefficient", k},
                         {"vertices", cell_vertices(cell)}});
    }
    return out;
  }

  Json to_json(EdgePath const& p) {
    Json vs = Json::array();
    for (auto const& v : p.vertices()) {
      vs.push_back(to_json(v));
    }
    return Json{{"length", p.length()}, {"vertices", vs}};
  }

  std::string dot_label(ProductVertex const& v) {
    if (auto g = grid_coordinates(v)) {
      return "(" + std::to_string(g->first) + "," + std::to_string(g->second)
             + ")";
    }
    // FNV-1a over the canonical JSON.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_json(v).dump()) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "#%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  std::string to_dot(SubComplex const& s, std::string const& name) {
    std::map<ProductVertex, std::size_t> index;
    std::ostringstream                   os;
    os << "graph \"" << name << "\" {\n";
    for (auto const& c : s.cells(0)) {
      auto const v = c.vertices().front();
      os << "  v" << index.size() << " [label=\"" << dot_label(v) << "\"];\n";
      index.emplace(v, index.size());
    }
    for (auto const& c : s.cells(1)) {
      auto const vs = c.vertices();
      os << "  v" << index.at(vs[0]) << " -- v" << index.at(vs[1]) << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace fp2tree
