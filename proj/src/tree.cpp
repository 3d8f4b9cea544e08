#include "fp2tree/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  TreeVertex::TreeVertex(long level, TruncatedSeries coord)
      : _level(level), _coord(std::move(coord)) {
    if (_coord.order() != _level) {
      throw std::invalid_argument(
          "tree vertex coordinate must be truncated at its level");
    }
  }

  Matrix2 TreeVertex::representative() const {
    Field const f = place().field();
    return Matrix2(place().uniformizer_power(_level),
                   _coord.value(),
                   RationalFunction::zero(f),
                   RationalFunction::one(f));
  }

  std::optional<long> TreeVertex::apartment_coordinate() const {
    if (!_coord.empty()) {
      return std::nullopt;
    }
    return -_level;
  }

  TreeVertex TreeVertex::parent() const {
    return TreeVertex(_level - 1, _coord.truncated(_level - 1));
  }

  std::strong_ordering operator<=>(TreeVertex const& x, TreeVertex const& y) {
    if (auto c = x.place() <=> y.place(); c != 0) {
      return c;
    }
    if (auto c = x._level <=> y._level; c != 0) {
      return c;
    }
    auto const& xt = x._coord.terms();
    auto const& yt = y._coord.terms();
    return std::lexicographical_compare_three_way(
        xt.begin(), xt.end(), yt.begin(), yt.end());
  }

  std::string TreeVertex::to_string() const {
    std::ostringstream os;
    os << place().name() << "{" << _level;
    for (auto const& term : _coord.terms()) {
      os << "; " << term.exponent << ":" << term.coefficient.to_string();
    }
    os << "}";
    return os.str();
  }

  TreeVertex canonical_vertex(Matrix2 const& m, Place const& place) {
    require_invertible(m);
    check_same_field(m.field(), place.field());
    Valuation const vc = valuation(place, m.c());
    Valuation const vd = valuation(place, m.d());
    // Pivot column goes second.  Clearing the other bottom entry with an
    // O-multiple of the pivot column and scaling the bottom row to (0, 1)
    // leaves top-left +-det / pivot^2 and top-right top / pivot.
    bool const              swap  = vc <= vd;
    RationalFunction const& top   = swap ? m.a() : m.b();
    RationalFunction const& pivot = swap ? m.c() : m.d();
    RationalFunction const  beta  = top / pivot;
    long const              level = valuation(place, m.det()).value()
                       - 2 * valuation(place, pivot).value();
    return TreeVertex(level, expand(beta, place, level));
  }

  TreeVertex act(Matrix2 const& g, TreeVertex const& v) {
    return canonical_vertex(g * v.representative(), v.place());
  }

  namespace {
    void require_same_place(TreeVertex const& v, TreeVertex const& w) {
      if (v.place() != w.place()) {
        throw std::invalid_argument("tree vertices at different places: "
                                    + v.place().name() + " vs "
                                    + w.place().name());
      }
    }

    // min entry valuation and determinant valuation of n.
    std::pair<long, long> divisor_data(Matrix2 const& n, Place const& p) {
      Valuation lowest = Valuation::infinity();
      for (std::size_t i = 0; i < 4; ++i) {
        lowest = std::min(lowest, valuation(p, n.entry(i)));
      }
      return {lowest.value(), valuation(p, n.det()).value()};
    }
  }  // namespace

  long distance(TreeVertex const& v, TreeVertex const& w) {
    require_same_place(v, w);
    Matrix2 const n       = v.representative().inverse() * w.representative();
    auto const [low, det] = divisor_data(n, v.place());
    return det - 2 * low;
  }

  long meet_level(TreeVertex const& v, TreeVertex const& w) {
    require_same_place(v, w);
    long        bound = std::min(v.level(), w.level());
    auto const& xs    = v.coord().terms();
    auto const& ys    = w.coord().terms();
    std::size_t i = 0, j = 0;
    while (i < xs.size() || j < ys.size()) {
      if (j == ys.size() || (i < xs.size() && xs[i].exponent < ys[j].exponent)) {
        return std::min(bound, xs[i].exponent);
      }
      if (i == xs.size() || ys[j].exponent < xs[i].exponent) {
        return std::min(bound, ys[j].exponent);
      }
      if (xs[i].coefficient != ys[j].coefficient) {
        return std::min(bound, xs[i].exponent);
      }
      ++i;
      ++j;
    }
    return bound;
  }

  std::vector<TreeVertex> geodesic(TreeVertex const& v, TreeVertex const& w) {
    long const              m = meet_level(v, w);
    std::vector<TreeVertex> path;
    for (long l = v.level(); l >= m; --l) {
      path.emplace_back(l, v.coord().truncated(l));
    }
    for (long l = m + 1; l <= w.level(); ++l) {
      path.emplace_back(l, w.coord().truncated(l));
    }
    return path;
  }

  bool fixes(Matrix2 const& g, TreeVertex const& v) {
    require_invertible(g);
    Matrix2 const a       = v.representative();
    Matrix2 const n       = a.inverse() * g * a;
    auto const [low, det] = divisor_data(n, v.place());
    return 2 * low == det;
  }

  TreeVertex apartment_vertex(Place const& place, long r) {
    Field const f = place.field();
    return canonical_vertex(
        Matrix2::diagonal(place.uniformizer_power(-r),
                          RationalFunction::one(f)),
        place);
  }

  RayReduction reduce_to_ray(TreeVertex const& v) {
    Place const& place = v.place();
    if (place.residue_degree() != 1) {
      throw std::invalid_argument(
          "ray reduction needs a degree one place, got " + place.name());
    }
    Field const f   = place.field();
    Matrix2     g   = Matrix2::identity(f);
    TreeVertex  cur = v;
    // The level drops by >= 2 per round; this bound is never reached.
    long const max_rounds = std::abs(v.level()) + 2;
    for (long round = 0; round <= max_rounds; ++round) {
      std::vector<SeriesTerm> head;
      for (auto const& term : cur.coord().terms()) {
        if (term.exponent <= 0) {
          head.push_back(term);
        }
      }
      if (!head.empty()) {
        RationalFunction const p
            = TruncatedSeries(place, std::move(head), 1).value();
        Matrix2 const h = Matrix2::upper_unipotent(-p);
        g               = h * g;
        cur             = act(h, cur);
      }
      if (cur.level() <= 0) {
        return {g, -cur.level()};
      }
      Matrix2 const w = Matrix2::inversion(f);
      g               = w * g;
      cur             = act(w, cur);
    }
    throw std::logic_error("ray reduction failed to terminate at "
                           + v.to_string());
  }

}  // namespace fp2tree
