#include "doctest.h"

#include "fp2tree/homology.hpp"
#include "fp2tree/random.hpp"

using namespace fp2tree;

namespace {
  Field const Q = Field::rationals();

  // Fraction-free Gaussian elimination.
  Integer bareiss_det(SparseIntMatrix const& m) {
    std::size_t const                 n = m.rows();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = m.get(i, j);
      }
    }
    Integer prev = 1;
    int     sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t r = k + 1;
        while (r < n && a[r][k] == 0) {
          ++r;
        }
        if (r == n) {
          return 0;
        }
        std::swap(a[k], a[r]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    return n == 0 ? Integer(1) : sign * a[n - 1][n - 1];
  }

  Integer gcd_of_entries(SparseIntMatrix const& m) {
    Integer g = 0;
    for (auto const& [i, j, v] : m.entries()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
  }

  bool is_diagonal(SparseIntMatrix const& d) {
    for (auto const& [i, j, v] : d.entries()) {
      if (i != j) {
        return false;
      }
    }
    return true;
  }

  void check_smith(SparseIntMatrix const& a) {
    auto const s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_diagonal(s.D));
    CHECK(abs(bareiss_det(s.U)) == 1);
    CHECK(abs(bareiss_det(s.V)) == 1);
    for (std::size_t i = 0; i < s.rank(); ++i) {
      CHECK(s.invariants[i] > 0);
      CHECK(s.D.get(i, i) == s.invariants[i]);
      if (i + 1 < s.rank()) {
        CHECK(mpz_divisible_p(s.invariants[i + 1].get_mpz_t(),
                              s.invariants[i].get_mpz_t()));
      }
    }
    CHECK(s.D.nonzeros() == s.rank());
    if (s.rank() > 0) {
      CHECK(s.invariants[0] == gcd_of_entries(a));
    }
    CHECK(smith_normal_form(a, false).invariants == s.invariants);
  }

  SubComplex square_complex() {
    auto const a = grid_vertex(Q, 0, 0);
    auto const b = grid_vertex(Q, 1, 1);
    return closure(std::vector<Cell>{
        Cell(TreeCell::edge(a.rho, b.rho), TreeCell::edge(a.zeta, b.zeta))});
  }

  SubComplex square_boundary() {
    auto const sq = square_complex();
    SubComplex s;
    for (auto const& e : sq.cells(1)) {
      s.insert(e);
    }
    return s;
  }

  Chain square_loop() {
    return staircase_path(Q, {0, 0}, {1, 1})
        .then(staircase_path(Q, {1, 1}, {0, 0}))
        .chain();
  }

  void check_euler(SubComplex const& s) {
    auto const h = homology_ranks(s);
    long const lhs = static_cast<long>(s.size(0)) - static_cast<long>(s.size(1))
                     + static_cast<long>(s.size(2));
    long const rhs = static_cast<long>(h.b0) - static_cast<long>(h.b1)
                     + static_cast<long>(h.b2);
    CHECK(lhs == rhs);
    auto const data = boundary_matrices(s);
    CHECK((data.d1 * data.d2).is_zero());
    // Kernel of d2 is trivial.
    CHECK(smith_normal_form(data.d2, false).rank() == s.size(2));
  }
}  // namespace

TEST_CASE("smith normal form examples") {
  auto const s = smith_normal_form(SparseIntMatrix::dense({{2, 4}, {6, 8}}));
  CHECK(s.invariants == std::vector<Integer>{2, 4});
  CHECK(s.D == SparseIntMatrix::dense({{2, 0}, {0, 4}}));
  auto const z = smith_normal_form(SparseIntMatrix(3, 2));
  CHECK(z.rank() == 0);
  CHECK(z.U == SparseIntMatrix::identity(3));
  CHECK(z.V == SparseIntMatrix::identity(2));
  CHECK(z.D.is_zero());
  check_smith(SparseIntMatrix::dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  auto const t = smith_normal_form(
      SparseIntMatrix::dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.invariants == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith normal form on random sparse matrices") {
  Sampler sampler(Q, 51);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const rows = static_cast<std::size_t>(sampler.integer(1, 8));
    std::size_t const cols = trial < 50 ? 8 : rows;
    SparseIntMatrix   a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (sampler.integer(0, 2) == 0) {
          a.set(i, j, sampler.integer(-9, 9));
        }
      }
    }
    check_smith(a);
    if (rows == cols) {
      auto const s       = smith_normal_form(a);
      Integer    product = s.rank() == rows ? Integer(1) : Integer(0);
      for (auto const& d : s.invariants) {
        product *= d;
      }
      CHECK(abs(bareiss_det(a)) == product);
    }
  }
}

TEST_CASE("sparse matrix operations") {
  SparseIntMatrix m(2, 3);
  m.set(0, 1, 5);
  m.set(1, 2, -2);
  CHECK(m.nonzeros() == 2);
  m.set(0, 1, 0);
  CHECK(m.nonzeros() == 1);
  CHECK(m.column_support(1).empty());
  CHECK_THROWS_AS(m.set(2, 0, 1), std::out_of_range);
  m.set(0, 0, 3);
  CHECK(m.to_triplets() == "0 0 3\n1 2 -2\n");
  CHECK_THROWS_AS(SparseIntMatrix(2, 2) * SparseIntMatrix(3, 1),
                  std::invalid_argument);
}

TEST_CASE("boundary_matrices examples") {
  auto const sq = boundary_matrices(square_complex());
  CHECK(sq.d2.rows() == 4);
  CHECK(sq.d2.cols() == 1);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(abs(sq.d2.get(i, 0)) == 1);
  }
  auto const loop = boundary_matrices(closure(build_loop(1).edges()));
  CHECK(loop.d2.cols() == 0);
  auto const cone = boundary_matrices(build_cone(1).complex);
  CHECK((cone.d1 * cone.d2).is_zero());
}

TEST_CASE("homology_ranks examples") {
  auto const h = homology_ranks(square_complex());
  CHECK(h.b0 == 1);
  CHECK(h.b1 == 0);
  CHECK(h.b2 == 0);
  auto const c = homology_ranks(square_boundary());
  CHECK(c.b0 == 1);
  CHECK(c.b1 == 1);
  CHECK(c.torsion.empty());
  auto const cone = build_cone(2);
  auto const hp   = homology_ranks(remove_open_star(cone.complex, cone.apex));
  CHECK(hp.b1 >= 1);
  CHECK(hp.torsion.empty());
}

TEST_CASE("cycle_class_is_trivial examples") {
  auto const z = square_loop();
  REQUIRE(boundary(z).empty());
  CHECK(cycle_class_is_trivial(square_complex(), z));
  CHECK_FALSE(cycle_class_is_trivial(square_boundary(), z));
  for (long n = 1; n <= 3; ++n) {
    auto const cone = build_cone(n);
    auto const g    = build_loop(n).chain();
    CHECK(cycle_class_is_trivial(cone.complex, g));
    CHECK_FALSE(
        cycle_class_is_trivial(remove_open_star(cone.complex, cone.apex), g));
  }
  Chain open = build_segment(1).chain();
  CHECK_THROWS_AS(cycle_class_is_trivial(build_cone(1).complex, open),
                  std::invalid_argument);
  CHECK_THROWS_AS(cycle_class_is_trivial(square_complex(), build_loop(1).chain()),
                  std::invalid_argument);
}

TEST_CASE("unique_filling examples") {
  for (long n = 1; n <= 3; ++n) {
    auto const cone = build_cone(n);
    auto const f    = unique_filling(cone.complex, build_loop(n).chain());
    REQUIRE(f.status == Filling::Status::unique);
    CHECK(f.chain == cone.chain);
    bool apex_in_support = false;
    for (auto const& [cell, k] : f.chain) {
      auto const vs = cell.vertices();
      apex_in_support = apex_in_support
                        || std::find(vs.begin(), vs.end(), cone.apex) != vs.end();
    }
    CHECK(apex_in_support);
  }
  auto const sq = unique_filling(square_complex(), square_loop());
  REQUIRE(sq.status == Filling::Status::unique);
  REQUIRE(sq.chain.size() == 1);
  CHECK(*square_complex().cells(2).begin() == sq.chain.begin()->first);
  CHECK(std::abs(sq.chain.begin()->second) == 1);
  CHECK(unique_filling(square_boundary(), square_loop()).status
        == Filling::Status::no_filling);
}

TEST_CASE("Euler characteristic and trivial kernel on constructed complexes") {
  auto const d = matrices::translation(Q);
  for (long n = 1; n <= 3; ++n) {
    auto const cone = build_cone(n);
    check_euler(cone.complex);
    auto const punctured = remove_open_star(cone.complex, cone.apex);
    check_euler(punctured);
    check_euler(closure(build_loop(n).edges()));
    if (n <= 2) {
      check_euler(translate_union(punctured, {d, d.inverse()}));
    }
  }
  check_euler(square_complex());
  check_euler(square_boundary());
}

TEST_CASE("enlarging the punctured cone keeps gamma_n nontrivial") {
  auto const d = matrices::translation(Q);
  for (long n = 1; n <= 2; ++n) {
    auto const cone      = build_cone(n);
    auto const punctured = remove_open_star(cone.complex, cone.apex);
    auto const gamma     = build_loop(n).chain();
    auto const z1        = translate_union(punctured, {d, d.inverse()});
    CHECK_FALSE(z1.contains(Cell(cone.apex)));
    CHECK(z1.size() > punctured.size());
    CHECK_FALSE(cycle_class_is_trivial(z1, gamma));
  }
}
