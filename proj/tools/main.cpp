#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpoly/betti.hpp"
#include "wpoly/codes.hpp"
#include "wpoly/errors.hpp"
#include "wpoly/io.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/verify.hpp"
#include "wpoly/weight_poly.hpp"

namespace {

struct Options {
  std::string input;
  std::string kind = "bases";
  std::string format = "text";
  int level = 1;
  bool level_given = false;
  int ext = 1;
  int threads = 1;
  bool naive = false;
};

std::string render_report_text(const std::vector<wpoly::CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.skipped ? "[SKIP] " : (r.pass ? "[PASS] " : "[FAIL] ");
    out += r.name;
    if (!r.detail.empty()) out += ": " + r.detail;
    out += "\n";
  }
  return out;
}

std::string render_report_json(const std::vector<wpoly::CheckResult>& results) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results)
    checks.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"skipped", r.skipped},
                      {"detail", r.detail}});
  nlohmann::ordered_json doc;
  doc["checks"] = std::move(checks);
  doc["ok"] = wpoly::all_passed(results);
  return doc.dump(2) + "\n";
}

int run(const std::string& command, const Options& opt) {
  using namespace wpoly;
  const bool json = opt.format == "json";

  std::optional<LinearCode> code;
  std::optional<Matroid> matroid;
  if (opt.kind == "bases") {
    matroid = load_matroid(opt.input);
  } else {
    const FieldMatrix a = load_matrix(opt.input);
    code = opt.kind == "gen" ? LinearCode::from_generator(a)
                             : LinearCode::from_parity_check(a);
    matroid = code->matroid();
  }
  const Matroid& m = *matroid;

  std::string out;
  if (command == "rank") {
    out = json ? render_rank_json(m) : render_rank_text(m);
  } else if (command == "circuits") {
    out = json ? render_circuits_json(m) : render_circuits_text(m);
  } else if (command == "dual") {
    out = json ? render_matroid_json(m.dual()) : render_matroid_text(m.dual());
  } else if (command == "elongate") {
    const Matroid e = m.elongate(opt.level);
    out = json ? render_matroid_json(e) : render_matroid_text(e);
  } else if (command == "betti") {
    const std::vector<BettiTable> tables =
        opt.level_given ? std::vector<BettiTable>{graded_betti_table(m, opt.level)}
                        : graded_betti_tables(m);
    out = json ? render_betti_json(tables) : render_betti_text(tables);
  } else if (command == "gwp") {
    const auto polys = opt.naive ? gwp_naive(m) : gwp_direct(m, opt.threads);
    out = json ? render_gwp_json(polys) : render_gwp_text(polys);
  } else if (command == "enumerator") {
    const TriPoly w = enumerator(m);
    out = json ? render_enumerator_json(w) : render_enumerator_text(w);
  } else if (command == "tutte") {
    const BiPoly t = tutte(m);
    out = json ? render_tutte_json(t) : render_tutte_text(t);
  } else if (command == "weights") {
    const WeightHierarchy h = higher_weights_by_nullity(m);
    out = json ? render_weights_json(h) : render_weights_text(h);
  } else if (command == "distribution") {
    if (!code) {
      std::cerr << "error: distribution needs a matrix input (--kind gen|pcheck)\n";
      return 2;
    }
    const WeightDistribution dist = brute_force_distribution(*code, opt.ext);
    out = json ? render_distribution_json(dist) : render_distribution_text(dist);
  } else if (command == "verify") {
    const auto results = code ? verify_code(*code, opt.threads) : verify_matroid(m, opt.threads);
    std::cout << (json ? render_report_json(results) : render_report_text(results));
    return all_passed(results) ? 0 : 1;
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight polynomials, Betti tables, and Tutte polynomials "
               "of matroids and linear codes"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input", opt.input, "input file (matroid bases or matrix)")->required();
  app.add_option("--kind", opt.kind, "how to read the input (default bases)")
      ->check(CLI::IsMember({"bases", "gen", "pcheck"}));
  app.add_option("--format", opt.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  auto* level_opt = app.add_option("--level", opt.level, "elongation level");
  app.add_option("--ext", opt.ext, "field extension exponent m for distribution")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "worker threads for subset sweeps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--naive", opt.naive, "use the literal definition for gwp (n <= 16)");

  const char* commands[] = {"rank",  "circuits",   "dual",  "elongate",     "betti",  "gwp",
                            "enumerator", "tutte", "weights", "distribution", "verify"};
  const char* descriptions[] = {
      "ground size, rank, and corank",
      "list the circuits",
      "dual matroid, in the bases format",
      "elongation to the given level (default 1)",
      "graded Betti tables (all levels, or --level)",
      "generalized weight polynomials P_0..P_n",
      "three-variable enumerator W(X,Y,Z)",
      "Tutte polynomial t(X,Y)",
      "higher weight hierarchy d_1..d_(n-k)",
      "weight distribution of the code (--ext m)",
      "run all cross-route consistency checks"};
  for (std::size_t i = 0; i < std::size(commands); ++i)
    app.add_subcommand(commands[i], descriptions[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opt.level_given = level_opt->count() > 0;

  try {
    return run(app.get_subcommands().front()->get_name(), opt);
  } catch (const wpoly::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
