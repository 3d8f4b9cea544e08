#include "fp2tree/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  TreeCell TreeCell::vertex(TreeVertex v) {
    TreeCell c;
    c._lo = std::move(v);
    return c;
  }

  TreeCell TreeCell::edge(TreeVertex const& v, TreeVertex const& w) {
    if (distance(v, w) != 1) {
      throw std::invalid_argument("not a tree edge: " + v.to_string() + " "
                                  + w.to_string());
    }
    TreeCell c;
    c._lo = std::min(v, w);
    c._hi = std::max(v, w);
    return c;
  }

  TreeVertex const& TreeCell::hi() const {
    if (!_hi) {
      throw std::logic_error("hi() of a tree vertex cell");
    }
    return *_hi;
  }

  std::strong_ordering operator<=>(TreeCell const& x, TreeCell const& y) {
    if (auto c = x.dim() <=> y.dim(); c != 0) {
      return c;
    }
    if (auto c = x._lo <=> y._lo; c != 0) {
      return c;
    }
    if (x._hi) {
      return *x._hi <=> *y._hi;
    }
    return std::strong_ordering::equal;
  }

  std::strong_ordering operator<=>(ProductVertex const& x,
                                   ProductVertex const& y) {
    if (auto c = x.rho <=> y.rho; c != 0) {
      return c;
    }
    return x.zeta <=> y.zeta;
  }

  std::string ProductVertex::to_string() const {
    if (auto g = grid_coordinates(*this)) {
      return "(" + std::to_string(g->first) + "," + std::to_string(g->second)
             + ")";
    }
    return "(" + rho.to_string() + ", " + zeta.to_string() + ")";
  }

  ProductVertex grid_vertex(Field f, long r, long s) {
    return {apartment_vertex(Place::infinity(f), r),
            apartment_vertex(Place::zero(f), s)};
  }

  std::optional<GridPoint> grid_coordinates(ProductVertex const& v) {
    if (!v.rho.place().is_infinity()
        || v.zeta.place() != Place::zero(v.zeta.place().field())) {
      return std::nullopt;
    }
    auto r = v.rho.apartment_coordinate();
    auto s = v.zeta.apartment_coordinate();
    if (!r || !s) {
      return std::nullopt;
    }
    return GridPoint{*r, *s};
  }

  Cell::Cell(TreeCell rho, TreeCell zeta)
      : _rho(std::move(rho)), _zeta(std::move(zeta)) {
    if (!_rho.lo().place().is_infinity() || _zeta.lo().place().is_infinity()) {
      throw std::invalid_argument("cell components must lie in T_inf x T_0");
    }
  }

  Cell::Cell(ProductVertex const& v)
      : Cell(TreeCell::vertex(v.rho), TreeCell::vertex(v.zeta)) {}

  namespace {
    std::vector<TreeVertex> corners(TreeCell const& c) {
      if (c.dim() == 0) {
        return {c.lo()};
      }
      return {c.lo(), c.hi()};
    }

    // Signed faces of a tree cell: d(lo -> hi) = hi - lo.
    std::vector<std::pair<TreeCell, int>> tree_boundary(TreeCell const& c) {
      if (c.dim() == 0) {
        return {};
      }
      return {{TreeCell::vertex(c.hi()), 1}, {TreeCell::vertex(c.lo()), -1}};
    }
  }  // namespace

  std::vector<ProductVertex> Cell::vertices() const {
    std::vector<ProductVertex> out;
    for (auto const& a : corners(_rho)) {
      for (auto const& b : corners(_zeta)) {
        out.push_back({a, b});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::pair<Cell, int>> Cell::boundary() const {
    std::vector<std::pair<Cell, int>> out;
    for (auto const& [f, s] : tree_boundary(_rho)) {
      out.emplace_back(Cell(f, _zeta), s);
    }
    int const sign = _rho.dim() == 0 ? 1 : -1;
    for (auto const& [f, s] : tree_boundary(_zeta)) {
      out.emplace_back(Cell(_rho, f), sign * s);
    }
    return out;
  }

  std::strong_ordering operator<=>(Cell const& x, Cell const& y) {
    if (auto c = x.dim() <=> y.dim(); c != 0) {
      return c;
    }
    if (auto c = x._rho <=> y._rho; c != 0) {
      return c;
    }
    return x._zeta <=> y._zeta;
  }

  std::string Cell::to_string() const {
    auto const vs = vertices();
    if (vs.size() == 1) {
      return vs[0].to_string();
    }
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      os << (i ? " " : "") << vs[i].to_string();
    }
    os << "]";
    return os.str();
  }

  void add_to(Chain& c, Cell const& cell, long coefficient) {
    if (coefficient == 0) {
      return;
    }
    auto [it, inserted] = c.emplace(cell, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) {
        c.erase(it);
      }
    }
  }

  Chain operator+(Chain const& x, Chain const& y) {
    Chain out = x;
    for (auto const& [cell, k] : y) {
      add_to(out, cell, k);
    }
    return out;
  }

  Chain operator-(Chain const& x, Chain const& y) {
    return x + (-1) * y;
  }

  Chain operator*(long k, Chain const& x) {
    Chain out;
    if (k == 0) {
      return out;
    }
    for (auto const& [cell, c] : x) {
      out.emplace(cell, k * c);
    }
    return out;
  }

  Chain boundary(Chain const& c) {
    Chain out;
    for (auto const& [cell, k] : c) {
      for (auto const& [face, s] : cell.boundary()) {
        add_to(out, face, s * k);
      }
    }
    return out;
  }

  ProductVertex pair_act(Matrix2 const& g, ProductVertex const& v) {
    return {act(g, v.rho), act(g, v.zeta)};
  }

  namespace {
    std::pair<TreeCell, int> tree_act(Matrix2 const& g, TreeCell const& c) {
      if (c.dim() == 0) {
        return {TreeCell::vertex(act(g, c.lo())), 1};
      }
      TreeVertex const a = act(g, c.lo());
      TreeVertex const b = act(g, c.hi());
      return {TreeCell::edge(a, b), a < b ? 1 : -1};
    }
  }  // namespace

  std::pair<Cell, int> pair_act_signed(Matrix2 const& g, Cell const& c) {
    auto [r, sr] = tree_act(g, c.rho());
    auto [z, sz] = tree_act(g, c.zeta());
    return {Cell(std::move(r), std::move(z)), sr * sz};
  }

  Cell pair_act(Matrix2 const& g, Cell const& c) {
    return pair_act_signed(g, c).first;
  }

  Chain pair_act(Matrix2 const& g, Chain const& c) {
    Chain out;
    for (auto const& [cell, k] : c) {
      auto const [image, s] = pair_act_signed(g, cell);
      add_to(out, image, s * k);
    }
    return out;
  }

  namespace {
    // The edge joining two adjacent product vertices.
    Cell joining_edge(ProductVertex const& a, ProductVertex const& b) {
      if (a.zeta == b.zeta && distance(a.rho, b.rho) == 1) {
        return Cell(TreeCell::edge(a.rho, b.rho), TreeCell::vertex(a.zeta));
      }
      if (a.rho == b.rho && distance(a.zeta, b.zeta) == 1) {
        return Cell(TreeCell::vertex(a.rho), TreeCell::edge(a.zeta, b.zeta));
      }
      throw std::invalid_argument("not adjacent: " + a.to_string() + " "
                                  + b.to_string());
    }
  }  // namespace

  EdgePath::EdgePath(std::vector<ProductVertex> vertices)
      : _vertices(std::move(vertices)) {
    for (std::size_t i = 1; i < _vertices.size(); ++i) {
      joining_edge(_vertices[i - 1], _vertices[i]);
    }
  }

  ProductVertex const& EdgePath::front() const {
    if (_vertices.empty()) {
      throw std::logic_error("front() of an empty path");
    }
    return _vertices.front();
  }

  ProductVertex const& EdgePath::back() const {
    if (_vertices.empty()) {
      throw std::logic_error("back() of an empty path");
    }
    return _vertices.back();
  }

  std::vector<std::pair<Cell, int>> EdgePath::edges() const {
    std::vector<std::pair<Cell, int>> out;
    for (std::size_t i = 1; i < _vertices.size(); ++i) {
      auto const& a = _vertices[i - 1];
      auto const& b = _vertices[i];
      out.emplace_back(joining_edge(a, b), a < b ? 1 : -1);
    }
    return out;
  }

  Chain EdgePath::chain() const {
    Chain out;
    for (auto const& [e, s] : edges()) {
      add_to(out, e, s);
    }
    return out;
  }

  EdgePath EdgePath::reversed() const {
    EdgePath p;
    p._vertices.assign(_vertices.rbegin(), _vertices.rend());
    return p;
  }

  EdgePath EdgePath::then(EdgePath const& other) const {
    if (_vertices.empty()) {
      return other;
    }
    if (other._vertices.empty()) {
      return *this;
    }
    if (back() != other.front()) {
      throw std::invalid_argument("paths do not meet: " + back().to_string()
                                  + " vs " + other.front().to_string());
    }
    EdgePath p = *this;
    p._vertices.insert(
        p._vertices.end(), other._vertices.begin() + 1, other._vertices.end());
    return p;
  }

  EdgePath pair_act(Matrix2 const& g, EdgePath const& p) {
    std::vector<ProductVertex> vs;
    vs.reserve(p.vertices().size());
    for (auto const& v : p.vertices()) {
      vs.push_back(pair_act(g, v));
    }
    return EdgePath(std::move(vs));
  }

  EdgePath staircase_path(Field f, GridPoint from, GridPoint to) {
    long const dr = to.first - from.first;
    long const ds = to.second - from.second;
    if (std::abs(dr) != std::abs(ds)) {
      throw std::invalid_argument("staircase endpoints are not antidiagonal");
    }
    long const                 sr = dr > 0 ? 1 : -1;
    long const                 ss = ds > 0 ? 1 : -1;
    auto [r, s]                   = from;
    std::vector<ProductVertex> vs{grid_vertex(f, r, s)};
    for (long k = 0; k < std::abs(dr); ++k) {
      r += sr;
      vs.push_back(grid_vertex(f, r, s));
      s += ss;
      vs.push_back(grid_vertex(f, r, s));
    }
    return EdgePath(std::move(vs));
  }

  void SubComplex::insert(Cell const& c) {
    if (!_cells[c.dim()].insert(c).second) {
      return;
    }
    for (auto const& [face, s] : c.boundary()) {
      insert(face);
    }
  }

  bool SubComplex::contains(Cell const& c) const {
    return _cells[c.dim()].contains(c);
  }

  std::set<Cell> const& SubComplex::cells(std::size_t dim) const {
    return _cells.at(dim);
  }

  bool SubComplex::is_face_closed() const {
    for (auto const& layer : _cells) {
      for (auto const& c : layer) {
        for (auto const& [face, s] : c.boundary()) {
          if (!contains(face)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  SubComplex remove_open_star(SubComplex const& s, ProductVertex const& v) {
    SubComplex out;
    for (std::size_t d = 0; d < 3; ++d) {
      for (auto const& c : s.cells(d)) {
        auto const vs = c.vertices();
        if (!std::binary_search(vs.begin(), vs.end(), v)) {
          out.insert(c);
        }
      }
    }
    return out;
  }

  SubComplex translate_union(SubComplex const&           s,
                             std::vector<Matrix2> const& gs) {
    SubComplex out = s;
    for (auto const& g : gs) {
      require_invertible(g);
      for (std::size_t d = 0; d < 3; ++d) {
        for (auto const& c : s.cells(d)) {
          out.insert(pair_act(g, c));
        }
      }
    }
    return out;
  }

  namespace {
    void require_positive(long n) {
      if (n < 1) {
        throw std::invalid_argument("n must be >= 1, got "
                                    + std::to_string(n));
      }
    }

    bool fixes_grid(Matrix2 const& g, Field f, long r, long s) {
      auto const v = grid_vertex(f, r, s);
      return fixes(g, v.rho) && fixes(g, v.zeta);
    }

    GridPoint antidiagonal_fixed_point(Field f, long n, long exponent) {
      Matrix2 const          u = matrices::unipotent(f, exponent);
      std::vector<GridPoint> hits;
      for (long a = -(n + 2); a <= n + 2; ++a) {
        if (fixes_grid(u, f, a, -a)) {
          hits.emplace_back(a, -a);
        }
      }
      if (hits.size() != 1) {
        throw std::logic_error("expected one antidiagonal fixed point of u_"
                               + std::to_string(exponent) + ", found "
                               + std::to_string(hits.size()));
      }
      return hits[0];
    }
  }  // namespace

  GridPoint segment_start(Field f, long n) {
    require_positive(n);
    return antidiagonal_fixed_point(f, n, n);
  }

  GridPoint segment_end(Field f, long n) {
    require_positive(n);
    return antidiagonal_fixed_point(f, n, -n);
  }

  GridPoint cone_apex(Field f, long n) {
    require_positive(n);
    Matrix2 const          up   = matrices::unipotent(f, n);
    Matrix2 const          down = matrices::unipotent(f, -n);
    std::vector<GridPoint> best;
    long                   best_sum = 0;
    for (long r = -(n + 2); r <= n + 2; ++r) {
      for (long s = -(n + 2); s <= n + 2; ++s) {
        if (!fixes_grid(up, f, r, s) || !fixes_grid(down, f, r, s)) {
          continue;
        }
        long const sum = std::abs(r + s);
        if (best.empty() || sum < best_sum) {
          best.clear();
          best_sum = sum;
        }
        if (sum == best_sum) {
          best.emplace_back(r, s);
        }
      }
    }
    if (best.size() != 1) {
      throw std::logic_error("no unique common fixed point near the "
                             "antidiagonal");
    }
    return best[0];
  }

  EdgePath build_segment(long n, Field f) {
    return staircase_path(f, segment_start(f, n), segment_end(f, n));
  }

  EdgePath build_loop(long n, Field f) {
    EdgePath const sigma = build_segment(n, f);
    Matrix2 const  up    = matrices::unipotent(f, n);
    Matrix2 const  down  = matrices::unipotent(f, -n);
    return sigma.then(pair_act(down, sigma).reversed())
        .then(pair_act(up * down, sigma))
        .then(pair_act(up, sigma).reversed());
  }

  Cone build_cone(long n, Field f) {
    EdgePath const  sigma = build_segment(n, f);
    GridPoint const apex  = cone_apex(f, n);
    GridPoint const p     = segment_start(f, n);
    GridPoint const q     = segment_end(f, n);
    // Squares between the staircase and the two legs through the apex.
    long const lo_r = std::min(p.first, q.first);
    long const lo_s = std::min(p.second, q.second);
    Chain      triangle;
    for (long i = lo_r; i < apex.first; ++i) {
      for (long j = lo_s; j < apex.second; ++j) {
        // The staircase dips one step below the antidiagonal.
        if (i + j < -1) {
          continue;
        }
        auto const a = grid_vertex(f, i, j);
        auto const b = grid_vertex(f, i + 1, j + 1);
        add_to(triangle,
               Cell(TreeCell::edge(a.rho, b.rho),
                    TreeCell::edge(a.zeta, b.zeta)),
               1);
      }
    }
    // Orient so the boundary runs along sigma.
    auto const [first_edge, first_sign] = sigma.edges().front();
    auto const bd                       = boundary(triangle);
    auto const it                       = bd.find(first_edge);
    if (it == bd.end()) {
      throw std::logic_error("triangle boundary misses the segment");
    }
    if (it->second != first_sign) {
      triangle = (-1) * triangle;
    }
    Matrix2 const up   = matrices::unipotent(f, n);
    Matrix2 const down = matrices::unipotent(f, -n);
    Cone          cone;
    cone.chain = triangle - pair_act(down, triangle)
                 + pair_act(up * down, triangle) - pair_act(up, triangle);
    cone.triangle = std::move(triangle);
    for (auto const& g : {Matrix2::identity(f), down, up * down, up}) {
      for (auto const& [cell, k] : cone.triangle) {
        cone.complex.insert(pair_act(g, cell));
      }
    }
    cone.apex = grid_vertex(f, apex.first, apex.second);
    return cone;
  }

}  // namespace fp2tree
