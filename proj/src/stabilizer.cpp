#include "fp2tree/stabilizer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  char entry_name(Entry e) noexcept {
    return "abcd"[static_cast<int>(e)];
  }

  namespace {
    RationalFunction const& entry_of(Matrix2 const& m, Entry e) {
      return m.entry(static_cast<std::size_t>(e));
    }

    constexpr Entry all_entries[] = {Entry::a, Entry::b, Entry::c, Entry::d};
  }  // namespace

  ConstraintSet::ConstraintSet(std::vector<ValuationConstraint> constraints,
                               std::optional<Matrix2>           conjugator)
      : _constraints(std::move(constraints)),
        _conjugator(std::move(conjugator)) {
    if (_conjugator) {
      require_invertible(*_conjugator);
      _conjugator_inverse = _conjugator->inverse();
    }
  }

  bool ConstraintSet::satisfied_by(Matrix2 const& g,
                                   RingSpec const& spec) const {
    if (!g.det().is_one()) {
      return false;
    }
    for (auto e : all_entries) {
      if (!in_ring(entry_of(g, e), spec)) {
        return false;
      }
    }
    Matrix2 const h
        = _conjugator ? *_conjugator_inverse * g * *_conjugator : g;
    return std::all_of(
        _constraints.begin(), _constraints.end(), [&](auto const& c) {
          return valuation(c.place, entry_of(h, c.entry)) >= Valuation(c.lower);
        });
  }

  std::string ConstraintSet::to_string() const {
    std::ostringstream os;
    if (_conjugator) {
      os << "conjugator T = " << _conjugator->to_string()
         << "; bounds on T^-1 g T\n";
    }
    for (auto const& c : _constraints) {
      os << "v_" << c.place.name() << "(" << entry_name(c.entry)
         << ") >= " << c.lower << "\n";
    }
    os << "det = 1\n";
    return os.str();
  }

  Json ConstraintSet::to_json() const {
    Json list = Json::array();
    for (auto const& c : _constraints) {
      list.push_back(Json{{"entry", std::string(1, entry_name(c.entry))},
                          {"place", fp2tree::to_json(c.place)},
                          {"lower", c.lower}});
    }
    return Json{{"constraints", list},
                {"det_one", true},
                {"conjugator",
                 _conjugator ? fp2tree::to_json(*_conjugator) : Json(nullptr)}};
  }

  CoefficientSpace::CoefficientSpace(Kind k, long n, Field f)
      : _kind(k), _n(n), _field(f) {
    if (n < 0) {
      throw std::invalid_argument("coefficient space index must be >= 0");
    }
  }

  std::size_t CoefficientSpace::dimension() const noexcept {
    switch (_kind) {
      case Kind::V:
        return static_cast<std::size_t>(_n + 1);
      case Kind::Vbar:
        return _n == 0 ? 1 : 0;
      case Kind::W:
        return static_cast<std::size_t>(2 * _n + 1);
    }
    return 0;
  }

  std::vector<RationalFunction> CoefficientSpace::basis() const {
    std::vector<RationalFunction> out;
    long lo = 0, hi = -1;
    switch (_kind) {
      case Kind::V:
        hi = _n;
        break;
      case Kind::Vbar:
        hi = _n == 0 ? 0 : -1;
        break;
      case Kind::W:
        lo = -_n;
        hi = _n;
        break;
    }
    for (long e = lo; e <= hi; ++e) {
      out.push_back(RationalFunction::t_power(_field, e));
    }
    return out;
  }

  bool CoefficientSpace::contains(RationalFunction const& f) const {
    if (f.is_zero()) {
      return true;
    }
    auto const terms = f.laurent_terms();
    if (!terms) {
      return false;
    }
    long const lo = terms->begin()->first, hi = terms->rbegin()->first;
    switch (_kind) {
      case Kind::V:
        return lo >= 0 && hi <= _n;
      case Kind::Vbar:
        return _n == 0 && lo == 0 && hi == 0;
      case Kind::W:
        return lo >= -_n && hi <= _n;
    }
    return false;
  }

  std::string CoefficientSpace::name() const {
    char const* base = _kind == Kind::V ? "V" : (_kind == Kind::Vbar ? "Vbar" : "W");
    return std::string(base) + "_" + std::to_string(_n);
  }

  ProductVertex standard_vertex(long n, Field f) {
    if (n < 0) {
      throw std::invalid_argument("standard vertex index must be >= 0");
    }
    return grid_vertex(f, n, 0);
  }

  CoefficientSpace entry_space(Entry e, long n, Field f) {
    using K = CoefficientSpace::Kind;
    switch (e) {
      case Entry::b:
        return CoefficientSpace(K::V, n, f);
      case Entry::c:
        return CoefficientSpace(K::Vbar, n, f);
      default:
        return CoefficientSpace(K::V, 0, f);
    }
  }

  PairReduction reduce_pair_to_standard(ProductVertex const& v) {
    Field const f = v.zeta.place().field();
    // Bring the zeta coordinate to x_0(s) with SL_2(k[1/t]), then to the
    // base with diag(t^s, 1).
    auto const    zr = reduce_to_ray(v.zeta);
    Matrix2 const g2 = Matrix2::diagonal(RationalFunction::t_power(f, zr.r),
                                         RationalFunction::one(f))
                       * zr.g;
    // SL_2(k[t]) fixes the zeta base vertex.
    auto const rr = reduce_to_ray(act(g2, v.rho));
    return {(rr.g * g2).inverse(), rr.r};
  }

  namespace {
    std::vector<ValuationConstraint> standard_bounds(long n, Field f) {
      Place const rho  = Place::infinity(f);
      Place const zeta = Place::zero(f);
      return {{Entry::a, rho, 0},     {Entry::b, rho, -n},
              {Entry::c, rho, n},     {Entry::d, rho, 0},
              {Entry::a, zeta, 0},    {Entry::b, zeta, 0},
              {Entry::c, zeta, 0},    {Entry::d, zeta, 0}};
    }
  }  // namespace

  ConstraintSet stabilizer_constraints(ProductVertex const& v) {
    Field const f = v.zeta.place().field();
    if (auto g = grid_coordinates(v); g && g->first >= 0 && g->second == 0) {
      return ConstraintSet(standard_bounds(g->first, f));
    }
    auto const red = reduce_pair_to_standard(v);
    return ConstraintSet(standard_bounds(red.n, f), red.g);
  }

  bool is_in_stabilizer(Matrix2 const&       g,
                        ProductVertex const& v,
                        RingSpec const&      spec) {
    if (!g.det().is_one()) {
      throw std::invalid_argument("stabilizer test needs det g = 1");
    }
    for (auto e : all_entries) {
      if (!in_ring(entry_of(g, e), spec)) {
        return false;
      }
    }
    return fixes(g, v.rho) && fixes(g, v.zeta);
  }

  long bounding_range(Matrix2 const& g, long n) {
    require_invertible(g);
    if (n < 0) {
      throw std::invalid_argument("n must be >= 0");
    }
    Field const f = g.field();
    for (auto e : all_entries) {
      if (!entry_of(g, e).is_laurent()) {
        throw std::invalid_argument("bounding_range needs Laurent entries");
      }
    }
    if (!g.det().is_laurent() || !g.det().numerator().is_monomial()) {
      throw std::invalid_argument("bounding_range needs a monomial det");
    }
    Matrix2 const ginv = g.inverse();
    Place const   places[] = {Place::infinity(f), Place::zero(f)};
    // Lower valuation bounds of the stabilizer entries at each place; c
    // vanishes identically for n > 0.
    auto lower = [n](Entry e, bool at_infinity) -> std::optional<long> {
      if (e == Entry::c && n > 0) {
        return std::nullopt;
      }
      if (e == Entry::b && at_infinity) {
        return -n;
      }
      return 0;
    };
    long r = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t pi = 0; pi < 2; ++pi) {
          Place const& p = places[pi];
          for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t l = 0; l < 2; ++l) {
              auto const bound
                  = lower(static_cast<Entry>(2 * k + l), p.is_infinity());
              Valuation const left  = valuation(p, g.entry(2 * i + k));
              Valuation const right = valuation(p, ginv.entry(2 * l + j));
              if (!bound || left.is_infinite() || right.is_infinite()) {
                continue;
              }
              long const v = left.value() + *bound + right.value();
              r            = std::max(r, -v);
            }
          }
        }
      }
    }
    return r;
  }

}  // namespace fp2tree
