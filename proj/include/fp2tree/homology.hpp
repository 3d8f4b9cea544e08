// Integer cellular homology of finite subcomplexes of X.

#ifndef FP2TREE_HOMOLOGY_HPP_
#define FP2TREE_HOMOLOGY_HPP_

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "complex.hpp"

namespace fp2tree {

  class SparseIntMatrix {
   public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols);
    static SparseIntMatrix identity(std::size_t n);
    static SparseIntMatrix dense(std::vector<std::vector<long>> const& rows);

    std::size_t rows() const noexcept {
      return _rows.size();
    }
    std::size_t cols() const noexcept {
      return _cols.size();
    }
    std::size_t nonzeros() const noexcept;

    Integer get(std::size_t i, std::size_t j) const;
    // Setting zero erases the entry.
    void set(std::size_t i, std::size_t j, Integer v);

    std::map<std::size_t, Integer> const& row(std::size_t i) const {
      return _rows.at(i);
    }
    // Rows with a nonzero entry in column j.
    std::set<std::size_t> const& column_support(std::size_t j) const {
      return _cols.at(j);
    }
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> entries()
        const;

    // row dst += k * row src
    void add_row(std::size_t dst, std::size_t src, Integer const& k);
    // col dst += k * col src
    void add_col(std::size_t dst, std::size_t src, Integer const& k);
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);

    bool is_zero() const noexcept {
      return nonzeros() == 0;
    }

    friend SparseIntMatrix operator*(SparseIntMatrix const& x,
                                     SparseIntMatrix const& y);
    friend bool operator==(SparseIntMatrix const& x,
                           SparseIntMatrix const& y) {
      return x._rows == y._rows && x.cols() == y.cols();
    }

    // One "row col value" line per nonzero entry, row-major.
    std::string to_triplets() const;

   private:
    void check(std::size_t i, std::size_t j) const;

    std::vector<std::map<std::size_t, Integer>> _rows;
    std::vector<std::set<std::size_t>>          _cols;
  };

  struct SmithForm {
    // U * A * V == D, U and V unimodular, D diagonal with
    // d_1 | d_2 | ... | d_rank, all positive.
    SparseIntMatrix      U, D, V;
    std::vector<Integer> invariants;

    std::size_t rank() const noexcept {
      return invariants.size();
    }
  };

  // With track == false U and V are left empty (rank and invariants only).
  // The identity U * A * V == D is checked before returning when tracked.
  SmithForm smith_normal_form(SparseIntMatrix const& a, bool track = true);

  struct ChainComplexData {
    std::vector<Cell> basis[3];
    SparseIntMatrix   d1;  // vertices x edges
    SparseIntMatrix   d2;  // edges x squares
  };

  // Throws std::invalid_argument on a complex that is not face-closed.
  ChainComplexData boundary_matrices(SubComplex const& s);

  struct HomologyRanks {
    std::size_t          b0 = 0, b1 = 0, b2 = 0;
    // Invariant factors > 1 of H_1.
    std::vector<Integer> torsion;
  };

  // Throws std::logic_error if b2 != 0: complexes in X carry no 2-cycles.
  HomologyRanks homology_ranks(SubComplex const& s);

  // z must be a 1-cycle supported in s; std::invalid_argument otherwise.
  bool cycle_class_is_trivial(SubComplex const& s, Chain const& z);

  struct Filling {
    enum class Status { unique, no_filling, non_unique };
    Status status = Status::no_filling;
    // A filling when one exists.
    Chain chain;
  };

  Filling unique_filling(SubComplex const& s, Chain const& z);

}  // namespace fp2tree

#endif  // FP2TREE_HOMOLOGY_HPP_
