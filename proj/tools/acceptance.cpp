// Acceptance runner: one PASS/FAIL line per criterion.  All checks are
// exact (integer and rational arithmetic, zero tolerance); the only
// tolerances are the wall-clock limits below.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fp2tree/verify.hpp"

using namespace fp2tree;

namespace {

  struct Criterion {
    int                     id;
    std::string             name;
    double                  limit_seconds;
    std::function<Report()> run;
  };

  // Pinned parameters.
  constexpr std::uint64_t seed               = 0x5eed;
  constexpr int           tree_pairs         = 500;
  constexpr int           stabilizer_samples = 200;
  constexpr std::size_t   escape_ball_length = 6;
  constexpr long          oneplace_n_max     = 6;
  constexpr int           loop_enlargements  = 2;

  std::vector<Criterion> criteria() {
    return {
        {1, "loop nontriviality", 60.0,
         [] {
           Report r("loop");
           for (long n = 1; n <= 3; ++n) {
             r.merge(loop_suite(n, loop_enlargements), "n" + std::to_string(n));
           }
           return r;
         }},
        {2, "escape certificate", 120.0,
         [] {
           EscapeSuiteConfig cfg;
           for (long L = 0; L >= -10; --L) {
             cfg.bounds.push_back(L);
           }
           cfg.ball_length = escape_ball_length;
           cfg.seed        = seed;
           return escape_suite(cfg);
         }},
        {3, "tree engine cross-validation", 60.0,
         [] {
           TreeSuiteConfig cfg;
           cfg.seed    = seed;
           cfg.samples = tree_pairs;
           return tree_suite(cfg);
         }},
        {4, "stabilizer suite", 60.0,
         [] { return stabilizer_suite(seed, stabilizer_samples); }},
        {5, "one-place witnesses", 30.0,
         [] { return oneplace_suite(oneplace_n_max); }},
        {6, "homology kernel", 30.0, [] { return homology_suite(seed); }},
    };
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool     verbose = false;
  int      only    = 0;
  app.add_flag("--verbose", verbose, "print every check");
  app.add_option("--criterion", only, "run a single criterion (1-6)")
      ->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (auto const& c : criteria()) {
    if (only != 0 && c.id != only) {
      continue;
    }
    auto const start = std::chrono::steady_clock::now();
    std::optional<Report> report;
    std::string           error;
    try {
      report = c.run();
    } catch (std::exception const& e) {
      error = e.what();
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    bool const in_time = secs <= c.limit_seconds;
    bool const ok      = report && report->passed() && in_time;
    all                = all && ok;

    std::cout << "criterion " << c.id << " (" << c.name << "): "
              << (ok ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(1) << secs << " s of " << c.limit_seconds
              << " s";
    if (report) {
      std::cout << ", " << report->sorted().size() << " checks";
    }
    if (!error.empty()) {
      std::cout << ", error: " << error;
    } else if (auto f = report->first_failure()) {
      std::cout << ", first failure: " << f->name << " (" << f->detail << ")";
    } else if (!in_time) {
      std::cout << ", over the time limit";
    }
    std::cout << std::endl;
    if (verbose && report) {
      std::cout << report->to_text();
    }
  }
  return all ? 0 : 1;
}
