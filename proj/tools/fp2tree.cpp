// Command line entry point.  Exit codes: 0 verified, 1 verification
// failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fp2tree/escape.hpp"
#include "fp2tree/oneplace.hpp"
#include "fp2tree/verify.hpp"

using namespace fp2tree;

namespace {

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  constexpr int exit_ok       = 0;
  constexpr int exit_failed   = 1;
  constexpr int exit_usage    = 2;

  struct Output {
    std::string format = "text";
    std::string path;

    void write(std::string const& text) const {
      if (path.empty()) {
        std::cout << text;
        return;
      }
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw UsageError("cannot write " + path);
      }
      out << text;
    }
  };

  void add_output_options(CLI::App* app, Output& out) {
    app->add_option("--format", out.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app->add_option("--output", out.path, "write here instead of stdout");
  }

  int finish(Report const& r, Output const& out, std::string const& preamble = {}) {
    if (out.format == "json") {
      out.write(r.to_json().dump(2) + "\n");
    } else {
      std::string text = preamble + r.to_text();
      if (auto f = r.first_failure()) {
        text += r.suite() + ": FAILED at " + f->name + "\n";
      } else {
        text += r.suite() + ": verified\n";
      }
      out.write(text);
    }
    if (auto f = r.first_failure()) {
      std::cerr << "first failing check: " << f->name;
      if (!f->detail.empty()) {
        std::cerr << " (" << f->detail << ")";
      }
      std::cerr << "\n";
      return exit_failed;
    }
    return exit_ok;
  }

  std::string const brown_summary
      = "Loops: each gamma_n is a cycle whose only filling in the cone "
        "complex is the cone chain through the apex (n, n); it stays "
        "nontrivial in H_1 once the apex is removed and after the translate "
        "enlargements (essential loop lemma).\n"
        "Escape: for each bound L the valuation chains force a = c = 0 from "
        "m = 1 - L on, so the points (x_inf(2m), x_0(2m)) leave every bounded "
        "region modulo SL_2(Z[t,1/t]) (escape lemma).\n"
        "Brown's criterion, a filtration by invariant, cocompact subcomplexes "
        "with cell stabilizers of type FP_infinity, is assumed, not checked; "
        "granting it, these two ingredients show SL_2(Z[t,1/t]) is not of "
        "type FP_2.\n";

  OnePlaceInstance make_instance(std::string const& ring, long power) {
    Field const Q = Field::rationals();
    if (power < 1) {
      throw UsageError("--witness-power must be >= 1");
    }
    if (ring == "Q[t]") {
      return OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_k),
                              Place::infinity(Q),
                              RationalFunction::t_power(Q, power));
    }
    if (ring == "Z[t]") {
      return OnePlaceInstance(RingSpec(RingSpec::Kind::poly_over_z),
                              Place::infinity(Q),
                              RationalFunction::t_power(Q, power));
    }
    return OnePlaceInstance(RingSpec(RingSpec::Kind::poly_inv_over_k),
                            Place::zero(Q), RationalFunction::t_power(Q, -power));
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the SL_2(Z[t,1/t]) product-of-trees "
               "construction"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  // verify tree
  auto*         vt = verify->add_subcommand("tree", "tree and valuation laws");
  std::string   field = "Q";
  std::uint32_t prime = 0;
  std::uint64_t seed  = 0x5eed;
  int           samples = 200;
  std::string   fault;
  Output        out;
  vt->add_option("--field", field, "Q or Fp")->check(CLI::IsMember({"Q", "Fp"}));
  vt->add_option("--p", prime, "prime for --field Fp");
  vt->add_option("--seed", seed, "sampler seed");
  vt->add_option("--samples", samples, "samples per property and place")
      ->check(CLI::Range(1, 100000));
  vt->add_option("--fault", fault, "inject a known fault")
      ->check(CLI::IsMember({"flip-orientation"}));
  add_output_options(vt, out);

  // verify loop
  auto* vl = verify->add_subcommand("loop", "loop, cone and filling checks");
  long  n  = 1;
  int   enlargements = 2;
  vl->add_option("--n", n, "loop index, >= 1")->required();
  vl->add_option("--enlargements", enlargements, "translate_union rounds")
      ->check(CLI::Range(0, 4));
  add_output_options(vl, out);

  // verify escape
  auto*       ve    = verify->add_subcommand("escape", "escape certificate");
  long        bound = -3;
  std::size_t ball_length = 6;
  ve->add_option("--bound", bound, "valuation bound L <= 0");
  ve->add_option("--ball-length", ball_length, "word ball radius")
      ->check(CLI::Range(0, 8));
  add_output_options(ve, out);

  // verify fp2-witness
  auto* vw    = verify->add_subcommand("fp2-witness",
                                       "loops for n <= N and the escape suite");
  long  n_max = 3;
  vw->add_option("--n-max", n_max, "largest loop index, >= 1");
  add_output_options(vw, out);

  // oneplace
  auto*       op     = app.add_subcommand("oneplace", "one-place ring witnesses");
  std::string ring   = "Q[t]";
  long        power  = 1;
  long        radius = 0;
  long        op_n   = 6;
  long        op_bound = -3;
  std::size_t op_ball  = 4;
  op->add_option("--ring", ring, "Q[t], Z[t] or Q[1/t]")
      ->check(CLI::IsMember({"Q[t]", "Z[t]", "Q[1/t]"}));
  op->add_option("--witness-power", power, "f = t^k (or t^-k for Q[1/t])");
  op->add_option("--radius", radius, "orbit neighbourhood radius")
      ->check(CLI::Range(0L, 1000L));
  op->add_option("--n-max", op_n, "largest n, >= 1");
  op->add_option("--bound", op_bound, "certificate bound L <= 0");
  op->add_option("--ball-length", op_ball, "orbit sample word length")
      ->check(CLI::Range(0, 8));
  add_output_options(op, out);

  // export
  auto*       ex   = app.add_subcommand("export", "write a construction");
  std::string what = "loop";
  std::string ex_format = "json";
  std::string ex_path;
  long        ex_n = 1;
  ex->add_option("--what", what, "loop, cone or complex")
      ->required()
      ->check(CLI::IsMember({"loop", "cone", "complex"}));
  ex->add_option("--format", ex_format, "json or dot")
      ->required()
      ->check(CLI::IsMember({"json", "dot"}));
  ex->add_option("--n", ex_n, "loop index, >= 1");
  ex->add_option("--output", ex_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (vt->parsed()) {
      TreeSuiteConfig cfg;
      if (field == "Fp") {
        if (!is_prime(prime)) {
          throw UsageError("--p must be a prime");
        }
        cfg.field = Field::prime(prime);
      } else if (prime != 0) {
        throw UsageError("--p needs --field Fp");
      }
      cfg.seed             = seed;
      cfg.samples          = samples;
      cfg.flip_orientation = fault == "flip-orientation";
      return finish(tree_suite(cfg), out);
    }
    if (vl->parsed()) {
      if (n < 1) {
        throw UsageError("--n must be >= 1");
      }
      return finish(loop_suite(n, enlargements), out);
    }
    if (ve->parsed()) {
      if (bound > 0) {
        throw UsageError("--bound must be <= 0");
      }
      Report     r    = escape_suite({{bound}, ball_length});
      auto const cert = escape_certificate(bound);
      r.data()["certificate"] = cert.to_json();
      return finish(r, out, cert.to_text());
    }
    if (vw->parsed()) {
      if (n_max < 1) {
        throw UsageError("--n-max must be >= 1");
      }
      Report r("fp2-witness");
      for (long k = 1; k <= n_max; ++k) {
        r.merge(loop_suite(k), "loop.n" + std::to_string(k));
      }
      r.merge(escape_suite({}), "escape");
      r.data() = Json{{"n_max", n_max},
                      {"summary", brown_summary},
                      {"brown_criterion", "assumed, not checked"}};
      return finish(r, out, brown_summary);
    }
    if (op->parsed()) {
      if (op_n < 1) {
        throw UsageError("--n-max must be >= 1");
      }
      if (op_bound > 0) {
        throw UsageError("--bound must be <= 0");
      }
      auto const inst = make_instance(ring, power);
      ProbeOptions opts;
      opts.ball_length = op_ball;
      opts.bound       = op_bound;
      auto const probe = disconnection_probe(radius, inst, op_n, opts);
      auto const fit   = fit_exit_points(inst, 1, std::max(op_n, 2L));
      Report     r("oneplace");
      for (auto const& rec : probe.records) {
        std::string const pre = "n" + std::to_string(rec.n);
        r.add(pre + ".overlap", rec.overlap, "r_n = " + std::to_string(rec.r_n));
        r.add(pre + ".outside_orbit_sample", !rec.in_orbit_sample || radius > 0,
              rec.in_orbit_sample ? "within radius" : "disconnected");
      }
      for (auto const& t : probe.translations) {
        r.add("translation.n" + std::to_string(t.n), t.level == t.expected,
              "level " + std::to_string(t.level));
      }
      r.add("exit_points.slope", fit.exact && fit.slope == -inst.witness_valuation(),
            "slope " + fit.slope.get_str() + ", intercept "
                + fit.intercept.get_str());
      auto const rep = replay_oneplace(probe.certificate, inst);
      r.add("certificate.replay", rep.ok(),
            rep.ok() ? std::to_string(rep.checks) + " steps checked"
                     : rep.failures.front());
      r.data() = probe.to_json(inst);
      return finish(r, out, probe.certificate.to_text());
    }
    if (ex->parsed()) {
      if (ex_n < 1) {
        throw UsageError("--n must be >= 1");
      }
      std::string const name = what + "_" + std::to_string(ex_n);
      SubComplex        shown;
      Json              j{{"schema", 1}, {"what", what}, {"n", ex_n}};
      if (what == "loop") {
        auto const gamma = build_loop(ex_n);
        shown            = closure(gamma.edges());
        j["path"]        = to_json(gamma);
      } else {
        auto const cone = build_cone(ex_n);
        j["apex"]       = to_json(cone.apex);
        if (what == "cone") {
          shown      = cone.complex;
          j["chain"] = to_json(cone.chain);
        } else {
          shown = remove_open_star(cone.complex, cone.apex);
        }
      }
      j["complex"] = to_json(shown);
      Output o{"text", ex_path};
      o.write(ex_format == "json" ? j.dump(2) + "\n" : to_dot(shown, name));
      return exit_ok;
    }
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
