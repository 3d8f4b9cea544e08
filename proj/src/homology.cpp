#include "fp2tree/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fp2tree {

  SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols) {}

  SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
    SparseIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i, 1);
    }
    return m;
  }

  SparseIntMatrix SparseIntMatrix::dense(
      std::vector<std::vector<long>> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows[0].size();
    SparseIntMatrix   m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("ragged dense matrix");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }

  void SparseIntMatrix::check(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols()) {
      throw std::out_of_range("matrix index (" + std::to_string(i) + ", "
                              + std::to_string(j) + ") out of range");
    }
  }

  std::size_t SparseIntMatrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (auto const& r : _rows) {
      n += r.size();
    }
    return n;
  }

  Integer SparseIntMatrix::get(std::size_t i, std::size_t j) const {
    check(i, j);
    auto it = _rows[i].find(j);
    return it == _rows[i].end() ? Integer(0) : it->second;
  }

  void SparseIntMatrix::set(std::size_t i, std::size_t j, Integer v) {
    check(i, j);
    if (v == 0) {
      _rows[i].erase(j);
      _cols[j].erase(i);
    } else {
      _rows[i][j] = std::move(v);
      _cols[j].insert(i);
    }
  }

  std::vector<std::tuple<std::size_t, std::size_t, Integer>>
  SparseIntMatrix::entries() const {
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> out;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (auto const& [j, v] : _rows[i]) {
        out.emplace_back(i, j, v);
      }
    }
    return out;
  }

  void SparseIntMatrix::add_row(std::size_t      dst,
                                std::size_t      src,
                                Integer const&   k) {
    if (dst >= rows() || src >= rows()) {
      throw std::out_of_range("row index out of range");
    }
    if (k == 0) {
      return;
    }
    if (dst == src) {
      throw std::invalid_argument("add_row onto itself");
    }
    for (auto const& [j, v] : _rows[src]) {
      Integer x = get(dst, j) + k * v;
      set(dst, j, std::move(x));
    }
  }

  void SparseIntMatrix::add_col(std::size_t    dst,
                                std::size_t    src,
                                Integer const& k) {
    if (dst >= cols() || src >= cols()) {
      throw std::out_of_range("column index out of range");
    }
    if (k == 0) {
      return;
    }
    if (dst == src) {
      throw std::invalid_argument("add_col onto itself");
    }
    std::vector<std::size_t> const support(_cols[src].begin(),
                                           _cols[src].end());
    for (std::size_t i : support) {
      Integer x = get(i, dst) + k * _rows[i].at(src);
      set(i, dst, std::move(x));
    }
  }

  void SparseIntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i >= rows() || j >= rows()) {
      throw std::out_of_range("row index out of range");
    }
    if (i == j) {
      return;
    }
    for (auto const& [c, v] : _rows[i]) {
      _cols[c].erase(i);
    }
    for (auto const& [c, v] : _rows[j]) {
      _cols[c].erase(j);
    }
    std::swap(_rows[i], _rows[j]);
    for (auto const& [c, v] : _rows[i]) {
      _cols[c].insert(i);
    }
    for (auto const& [c, v] : _rows[j]) {
      _cols[c].insert(j);
    }
  }

  void SparseIntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i >= cols() || j >= cols()) {
      throw std::out_of_range("column index out of range");
    }
    if (i == j) {
      return;
    }
    std::set<std::size_t> rows_touched = _cols[i];
    rows_touched.insert(_cols[j].begin(), _cols[j].end());
    for (std::size_t r : rows_touched) {
      auto&   row = _rows[r];
      Integer a   = row.contains(i) ? row[i] : Integer(0);
      Integer b   = row.contains(j) ? row[j] : Integer(0);
      row.erase(i);
      row.erase(j);
      if (b != 0) {
        row[i] = b;
      }
      if (a != 0) {
        row[j] = a;
      }
    }
    std::swap(_cols[i], _cols[j]);
  }

  void SparseIntMatrix::negate_row(std::size_t i) {
    for (auto& [c, v] : _rows.at(i)) {
      v = -v;
    }
  }

  SparseIntMatrix operator*(SparseIntMatrix const& x,
                            SparseIntMatrix const& y) {
    if (x.cols() != y.rows()) {
      throw std::invalid_argument("matrix product shape mismatch");
    }
    SparseIntMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
      std::map<std::size_t, Integer> acc;
      for (auto const& [k, v] : x._rows[i]) {
        for (auto const& [j, w] : y._rows[k]) {
          acc[j] += v * w;
        }
      }
      for (auto& [j, v] : acc) {
        out.set(i, j, std::move(v));
      }
    }
    return out;
  }

  std::string SparseIntMatrix::to_triplets() const {
    std::ostringstream os;
    for (auto const& [i, j, v] : entries()) {
      os << i << " " << j << " " << v.get_str() << "\n";
    }
    return os.str();
  }

  namespace {
    class Reducer {
     public:
      Reducer(SparseIntMatrix const& a, bool track)
          : _a(a), _track(track) {
        if (track) {
          _u = SparseIntMatrix::identity(a.rows());
          _v = SparseIntMatrix::identity(a.cols());
        }
      }

      SmithForm run() {
        std::size_t const n = std::min(_a.rows(), _a.cols());
        std::vector<Integer> invariants;
        for (std::size_t t = 0; t < n; ++t) {
          if (!place_pivot(t)) {
            break;
          }
          reduce_at(t);
          if (_a.get(t, t) < 0) {
            negate_row(t);
          }
          invariants.push_back(_a.get(t, t));
        }
        return {std::move(_u), std::move(_a), std::move(_v),
                std::move(invariants)};
      }

     private:
      void add_row(std::size_t dst, std::size_t src, Integer const& k) {
        _a.add_row(dst, src, k);
        if (_track) {
          _u.add_row(dst, src, k);
        }
      }
      void add_col(std::size_t dst, std::size_t src, Integer const& k) {
        _a.add_col(dst, src, k);
        if (_track) {
          _v.add_col(dst, src, k);
        }
      }
      void swap_rows(std::size_t i, std::size_t j) {
        _a.swap_rows(i, j);
        if (_track) {
          _u.swap_rows(i, j);
        }
      }
      void swap_cols(std::size_t i, std::size_t j) {
        _a.swap_cols(i, j);
        if (_track) {
          _v.swap_cols(i, j);
        }
      }
      void negate_row(std::size_t i) {
        _a.negate_row(i);
        if (_track) {
          _u.negate_row(i);
        }
      }

      // Minimal |entry| in the trailing block, Markowitz cost as tie-break;
      // moved to (t, t).  False when the block is zero.
      bool place_pivot(std::size_t t) {
        bool        found = false;
        std::size_t bi = 0, bj = 0, best_cost = 0;
        Integer     best;
        for (std::size_t i = t; i < _a.rows(); ++i) {
          auto const& row = _a.row(i);
          for (auto const& [j, v] : row) {
            Integer const     mag  = abs(v);
            std::size_t const cost = (row.size() - 1)
                                     * (_a.column_support(j).size() - 1);
            if (!found || mag < best || (mag == best && cost < best_cost)) {
              found     = true;
              best      = mag;
              best_cost = cost;
              bi        = i;
              bj        = j;
            }
          }
        }
        if (found) {
          swap_rows(t, bi);
          swap_cols(t, bj);
        }
        return found;
      }

      // Smallest |entry| in row t and column t moved to (t, t).
      void repivot(std::size_t t) {
        Integer     best = abs(_a.get(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i : _a.column_support(t)) {
          Integer const mag = abs(_a.get(i, t));
          if (mag < best) {
            best = mag;
            bi   = i;
            bj   = t;
          }
        }
        for (auto const& [j, v] : _a.row(t)) {
          if (abs(v) < best) {
            best = abs(v);
            bi   = t;
            bj   = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
      }

      void reduce_at(std::size_t t) {
        for (;;) {
          bool         residue = false;
          Integer const p       = _a.get(t, t);
          std::vector<std::size_t> const below(_a.column_support(t).begin(),
                                               _a.column_support(t).end());
          for (std::size_t i : below) {
            if (i == t) {
              continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), _a.get(i, t).get_mpz_t(), p.get_mpz_t());
            add_row(i, t, -q);
            residue = residue || _a.get(i, t) != 0;
          }
          if (residue) {
            repivot(t);
            continue;
          }
          std::vector<std::size_t> right;
          for (auto const& [j, v] : _a.row(t)) {
            if (j != t) {
              right.push_back(j);
            }
          }
          for (std::size_t j : right) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), _a.get(t, j).get_mpz_t(), p.get_mpz_t());
            add_col(j, t, -q);
            residue = residue || _a.get(t, j) != 0;
          }
          if (residue) {
            repivot(t);
            continue;
          }
          // Divisibility: fold in a row holding a non-multiple of the pivot.
          std::size_t bad = 0;
          bool        any = false;
          for (std::size_t i = t + 1; i < _a.rows() && !any; ++i) {
            for (auto const& [j, v] : _a.row(i)) {
              if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
                bad = i;
                any = true;
                break;
              }
            }
          }
          if (!any) {
            return;
          }
          add_row(t, bad, 1);
        }
      }

      SparseIntMatrix _a, _u, _v;
      bool            _track;
    };
  }  // namespace

  SmithForm smith_normal_form(SparseIntMatrix const& a, bool track) {
    SmithForm s = Reducer(a, track).run();
    if (track && !(s.U * a * s.V == s.D)) {
      throw std::logic_error("Smith form verification failed");
    }
    return s;
  }

  ChainComplexData boundary_matrices(SubComplex const& s) {
    if (!s.is_face_closed()) {
      throw std::invalid_argument("complex is not face-closed");
    }
    ChainComplexData data;
    std::map<Cell, std::size_t> index[3];
    for (std::size_t d = 0; d < 3; ++d) {
      for (auto const& c : s.cells(d)) {
        index[d].emplace(c, data.basis[d].size());
        data.basis[d].push_back(c);
      }
    }
    data.d1 = SparseIntMatrix(data.basis[0].size(), data.basis[1].size());
    data.d2 = SparseIntMatrix(data.basis[1].size(), data.basis[2].size());
    for (std::size_t d = 1; d < 3; ++d) {
      auto& m = d == 1 ? data.d1 : data.d2;
      for (std::size_t j = 0; j < data.basis[d].size(); ++j) {
        for (auto const& [face, sign] : data.basis[d][j].boundary()) {
          std::size_t const i = index[d - 1].at(face);
          m.set(i, j, m.get(i, j) + sign);
        }
      }
    }
    if (!(data.d1 * data.d2).is_zero()) {
      throw std::logic_error("boundary of boundary is nonzero");
    }
    return data;
  }

  HomologyRanks homology_ranks(SubComplex const& s) {
    auto const        data = boundary_matrices(s);
    auto const        s1   = smith_normal_form(data.d1, false);
    auto const        s2   = smith_normal_form(data.d2, false);
    std::size_t const v = data.basis[0].size(), e = data.basis[1].size(),
                      f = data.basis[2].size();
    HomologyRanks     h;
    h.b0 = v - s1.rank();
    h.b1 = e - s1.rank() - s2.rank();
    h.b2 = f - s2.rank();
    if (h.b2 != 0) {
      throw std::logic_error("nonzero second homology in a complex in X");
    }
    for (auto const& d : s2.invariants) {
      if (d > 1) {
        h.torsion.push_back(d);
      }
    }
    return h;
  }

  namespace {
    struct Solution {
      bool                 solvable = false;
      bool                 unique   = false;
      std::vector<Integer> x;
    };

    Solution solve_boundary(SubComplex const& s, Chain const& z) {
      for (auto const& [cell, k] : z) {
        if (cell.dim() != 1 || !s.contains(cell)) {
          throw std::invalid_argument("chain is not a 1-chain in the complex: "
                                      + cell.to_string());
        }
      }
      if (!boundary(z).empty()) {
        throw std::invalid_argument("chain is not a cycle");
      }
      auto const data = boundary_matrices(s);
      auto const snf  = smith_normal_form(data.d2, true);
      std::map<Cell, std::size_t> edge_index;
      for (std::size_t i = 0; i < data.basis[1].size(); ++i) {
        edge_index.emplace(data.basis[1][i], i);
      }
      std::vector<Integer> rhs(data.basis[1].size());
      for (auto const& [cell, k] : z) {
        rhs[edge_index.at(cell)] = k;
      }
      // D y = U z, x = V y.
      std::size_t const    f = data.basis[2].size();
      std::vector<Integer> y(f);
      Solution             sol;
      for (std::size_t i = 0; i < snf.U.rows(); ++i) {
        Integer uz = 0;
        for (auto const& [j, v] : snf.U.row(i)) {
          uz += v * rhs[j];
        }
        if (i < snf.rank()) {
          if (!mpz_divisible_p(uz.get_mpz_t(),
                               snf.invariants[i].get_mpz_t())) {
            return sol;
          }
          y[i] = uz / snf.invariants[i];
        } else if (uz != 0) {
          return sol;
        }
      }
      sol.solvable = true;
      sol.unique   = snf.rank() == f;
      sol.x.assign(f, 0);
      for (std::size_t j = 0; j < f; ++j) {
        for (auto const& [i, v] : snf.V.row(j)) {
          sol.x[j] += v * y[i];
        }
      }
      return sol;
    }
  }  // namespace

  bool cycle_class_is_trivial(SubComplex const& s, Chain const& z) {
    return solve_boundary(s, z).solvable;
  }

  Filling unique_filling(SubComplex const& s, Chain const& z) {
    auto const sol = solve_boundary(s, z);
    Filling    out;
    if (!sol.solvable) {
      return out;
    }
    out.status = sol.unique ? Filling::Status::unique
                            : Filling::Status::non_unique;
    std::size_t j = 0;
    for (auto const& cell : s.cells(2)) {
      if (sol.x[j] != 0) {
        if (!sol.x[j].fits_slong_p()) {
          throw std::overflow_error("filling coefficient out of range");
        }
        out.chain.emplace(cell, sol.x[j].get_si());
      }
      ++j;
    }
    return out;
  }

}  // namespace fp2tree
