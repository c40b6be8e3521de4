// Thin front end: parse flags, build one JSON request, hand it to the shared
// library through the C interface, print what comes back.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "dybe.h"

int main(int argc, char** argv) {
  CLI::App app{"exact constructor and verifier for the dynamical Yang-Baxter apparatus on type-A Lie algebras"};
  app.require_subcommand(1);

  std::string algebra = "A1";
  std::string modules;
  std::string mode = "symbolic";
  std::string outfile;
  std::uint64_t seed = 0;
  long depth = 4;
  long order = 10;
  long samples = 1;
  bool weighted = false;

  app.add_option("--algebra", algebra, "algebra spec: A1, A2, ...")->capture_default_str();
  auto* modopt =
      app.add_option("--modules", modules, "comma-separated module specs, e.g. L(1),L(2) or L(1,0)");
  app.add_option("--mode", mode, "symbolic | numeric")
      ->check(CLI::IsMember({"symbolic", "numeric"}))
      ->capture_default_str();
  auto* seedopt = app.add_option("--seed", seed, "sampling seed (required in numeric mode)");
  app.add_option("--depth", depth, "truncation depth for the eta check")->capture_default_str();
  app.add_option("--order", order, "series order for trace and mr")->capture_default_str();
  app.add_option("--samples", samples, "generic samples per numeric verification")
      ->capture_default_str();
  app.add_flag("--weighted", weighted, "trace: weighted trace function instead of the plain trace");
  app.add_option("--out", outfile, "write the JSON payload to this file instead of stdout");

  std::vector<std::pair<CLI::App*, std::pair<std::string, std::string>>> leaves;

  CLI::App* compute = app.add_subcommand("compute", "print one constructed object as JSON");
  compute->require_subcommand(1)->fallthrough();
  for (auto [t, d] : {std::pair{"fusion", "fusion matrix J for a module pair"},
                      std::pair{"exchange", "exchange matrix R for a module pair"},
                      std::pair{"qmatrix", "dual-pairing endomorphism Q of one module"},
                      std::pair{"diffop", "difference operator of a pair (V, U)"},
                      std::pair{"trace", "trace function of one module"}})
    leaves.push_back({compute->add_subcommand(t, d)->fallthrough(), {"compute", t}});

  CLI::App* verify = app.add_subcommand("verify", "check identities and report pass/fail");
  verify->require_subcommand(1)->fallthrough();
  for (auto [t, d] :
       {std::pair{"cocycle", "dynamical two-cocycle identity for a module triple"},
        std::pair{"qdybe", "dynamical Yang-Baxter equation for a module triple"},
        std::pair{"fusion-exchange", "fusion/exchange compatibility identities"},
        std::pair{"q-identities", "Q-matrix pairing, tensor, flip and dual-exchange identities"},
        std::pair{"eta", "intertwiner/exchange compatibility on a truncated Verma module"},
        std::pair{"diffop-commute", "difference operators commute and respect tensor products"},
        std::pair{"mr", "difference operator eigenvalue equation on the weighted trace"},
        std::pair{"all", "the whole battery on one module list"}})
    leaves.push_back({verify->add_subcommand(t, d)->fallthrough(), {"verify", t}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command, target;
  for (const auto& [leaf, names] : leaves)
    if (leaf->parsed()) {
      command = names.first;
      target = names.second;
    }

  nlohmann::json req{{"command", command}, {"target", target}, {"algebra", algebra},
                     {"mode", mode},       {"depth", depth},   {"order", order},
                     {"samples", samples}};
  if (modopt->count()) req["modules"] = modules;
  if (seedopt->count()) req["seed"] = seed;
  if (weighted) req["weighted"] = true;

  dybe_result* res = dybe_run_json(req.dump().c_str());
  if (!res) {
    std::cerr << "error: out of memory\n";
    return 2;
  }
  int status = dybe_result_status(res);
  std::cerr << dybe_result_report(res);
  std::string out = dybe_result_output(res);
  if (!out.empty()) {
    if (outfile.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(outfile, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << outfile << "\n";
        dybe_result_free(res);
        return 2;
      }
      f << out;
    }
  }
  dybe_result_free(res);
  return status;
}
