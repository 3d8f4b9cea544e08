// Verification suites shared by the command line tool and the acceptance
// runner.  Each suite returns named pass/fail checks; reports list them
// sorted by name.

#ifndef FP2TREE_VERIFY_HPP_
#define FP2TREE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "scalar.hpp"

namespace fp2tree {

  struct Check {
    std::string name;
    bool        passed;
    std::string detail;
  };

  class Report {
   public:
    explicit Report(std::string suite) : _suite(std::move(suite)) {}

    std::string const& suite() const noexcept {
      return _suite;
    }

    void add(std::string name, bool passed, std::string detail = {});
    // Adds every check of other with prefix + "." prepended.
    void merge(Report const& other, std::string const& prefix);

    bool               passed() const;
    std::vector<Check> sorted() const;
    // First failing check in name order.
    std::optional<Check> first_failure() const;

    // Free-form payload carried into the JSON report.
    Json&       data() noexcept {
      return _data;
    }
    Json const& data() const noexcept {
      return _data;
    }

    // {"schema": 1, "suite", "passed", "checks": [...], "data"}
    Json        to_json() const;
    // One "PASS name" / "FAIL name: detail" line per check.
    std::string to_text() const;

   private:
    std::string        _suite;
    std::vector<Check> _checks;
    Json               _data = Json::object();
  };

  struct TreeSuiteConfig {
    Field         field   = Field::rationals();
    std::uint64_t seed    = 0x5eed;
    int           samples = 200;
    // Seeded fault: read apartment coordinates with the wrong orientation.
    bool flip_orientation = false;
  };

  // Valuation laws, canonical forms, action and isometry, determinant
  // distance against geodesics (samples pairs per place), and the fixed
  // set of u_n on the apartment for |n| <= 3, |r| <= 8.
  Report tree_suite(TreeSuiteConfig const& config);

  // gamma_n, its unique filling by the cone, and nontriviality after
  // removing the apex and after `enlargements` rounds of translate_union
  // with {d, 1/d}.  n >= 1 (std::invalid_argument).
  Report loop_suite(long n, int enlargements = 2);

  struct EscapeSuiteConfig {
    std::vector<long> bounds;
    std::size_t       ball_length = 6;
    std::uint64_t     seed        = 0x5eed;
  };

  // Certificates and their replay for each bound, the word ball probe,
  // and the orbit distance growth for m = 1..4.
  Report escape_suite(EscapeSuiteConfig const& config);

  // Constraint against fixes membership, Stab(A_0) over Z[t,1/t] against
  // SL_2(Z), coefficient space dimensions, reduce_pair_to_standard round
  // trips.
  Report stabilizer_suite(std::uint64_t seed = 0x5eed, int samples = 200);

  // Exit points for f = t over Q[t], the overlap property, the translate
  // D_2, certificates and the disconnection probe.
  Report oneplace_suite(long n_max = 6);

  // Smith normal form identities on random matrices and the chain complex
  // checks on every constructed complex.
  Report homology_suite(std::uint64_t seed = 0x5eed, int samples = 100);

}  // namespace fp2tree

#endif  // FP2TREE_VERIFY_HPP_
