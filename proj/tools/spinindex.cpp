// spinindex: construct spin structures on the decagon surface and the Davis
// 4-manifold, enumerate fixed points of their odd-order symmetries, and
// evaluate the equivariant spinor indices exactly.
#include <CLI11.hpp>
#include <iostream>

#include "hspin/run.hpp"

using namespace hspin;

namespace {

std::vector<int> parse_powers(const std::string& text) {
  if (text.empty() || text == "all") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant spinor indices of hyperbolic space forms"};
  app.require_subcommand(1);

  // run subcommand
  std::string case_name = "davis";
  std::string powers_text = "all";
  std::string output_name = "text";
  std::string cache_path;
  std::string verify_name = "fast";
  int threads = 0;

  CLI::App* run = app.add_subcommand("run", "run a case end to end and emit a report");
  run->add_option("--case", case_name, "decagon or davis")
      ->envname("HSPIN_CASE")
      ->check(CLI::IsMember({"decagon", "davis"}));
  run->add_option("--powers", powers_text, "comma-separated powers, or 'all'")
      ->envname("HSPIN_POWERS");
  run->add_option("--output", output_name, "text or json")
      ->envname("HSPIN_OUTPUT")
      ->check(CLI::IsMember({"text", "json"}));
  run->add_option("--cache", cache_path, "path of the symmetry-group cache")
      ->envname("HSPIN_CACHE");
  run->add_option("--verify", verify_name, "fast or full")
      ->envname("HSPIN_VERIFY")
      ->check(CLI::IsMember({"fast", "full"}));
  run->add_option("--threads", threads, "worker threads for the power scan (0 = auto)")
      ->envname("HSPIN_THREADS");

  // cache subcommand
  std::string cache_action = "verify";
  std::string cache_file;
  CLI::App* cache_cmd = app.add_subcommand("cache", "build, verify or clear the davis cache");
  cache_cmd->add_option("action", cache_action, "build | verify | clear")
      ->check(CLI::IsMember({"build", "verify", "clear"}));
  cache_cmd->add_option("--cache", cache_file, "cache file path")
      ->envname("HSPIN_CACHE")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cache_cmd->parsed()) {
      if (cache_action == "build") {
        DavisCase d = build_davis();
        cache::build(cache_file, d);
        std::cout << "cache built: " << cache_file << "\n";
      } else if (cache_action == "verify") {
        cache::verify(cache_file);
        std::cout << "cache OK: " << cache_file << "\n";
      } else {
        cache::clear(cache_file);
        std::cout << "cache cleared: " << cache_file << "\n";
      }
      return 0;
    }

    RunConfig cfg;
    cfg.kind = (case_name == "decagon") ? CaseKind::Decagon : CaseKind::Davis;
    cfg.powers = parse_powers(powers_text);
    cfg.output = (output_name == "json") ? OutputKind::Json : OutputKind::Text;
    cfg.cache_path = cache_path;
    cfg.verify = (verify_name == "full") ? VerifyLevel::Full : VerifyLevel::Fast;
    cfg.threads = threads;
    int n = (cfg.kind == CaseKind::Decagon) ? 5 : 15;
    for (int k : cfg.powers)
      if (k < 1 || k > n) {
        std::cerr << "power " << k << " outside 1.." << n << "\n";
        return 2;
      }
    RunResult rr = run_case(cfg);
    std::cout << rr.rendered << "\n";
    return rr.exit_code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == Err::CorruptCache) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
