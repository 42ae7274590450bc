// Command-line front end over the C interface.

#include "tropmirror.h"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

struct SessionConfig {
  std::string input_path;
  std::string inline_json;
  std::string output_path;
  bool json = false;
  bool compact = false;
  int verbosity = 0;
};

bool read_input(const SessionConfig& cfg, std::string& text) {
  if (!cfg.inline_json.empty()) {
    text = cfg.inline_json;
    return true;
  }
  if (cfg.input_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(cfg.input_path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

int emit(const SessionConfig& cfg, const char* text) {
  if (cfg.output_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(cfg.output_path);
  if (!out) {
    std::cerr << "error: cannot write " << cfg.output_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int report_failure(tm_status s) {
  std::cerr << "error: " << tm_last_error() << "\n";
  return tm_exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical mirror construction for complete intersections in toric Fano varieties"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tm_version());

  SessionConfig cfg;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    auto* file = sub->add_option("-i,--input", cfg.input_path, "input JSON file, or - for stdin");
    auto* inl = sub->add_option("--inline", cfg.inline_json, "input JSON given on the command line");
    file->excludes(inl);
    inl->excludes(file);
    sub->add_option("-o,--output", cfg.output_path, "write the answer to this file");
    sub->add_flag("--json", cfg.json, "machine-readable output");
    sub->add_flag("--compact", cfg.compact, "single-line JSON");
    sub->add_flag("-v,--verbose", cfg.verbosity, "report timing on stderr");
    sub->callback([&, sub] {
      command = sub->get_name();
      if (cfg.input_path.empty() && cfg.inline_json.empty()) throw CLI::RequiredError("--input or --inline");
    });
  };

  add_common(app.add_subcommand("complex", "Stanley-Reisner complex of the ideal"));
  add_common(app.add_subcommand("pt1", "convex hull of the torus-invariant deformations"));
  add_common(app.add_subcommand("tropdef", "dual of the special fiber tropical variety"));
  add_common(app.add_subcommand("dualize", "dualize a complex, or the tropdef result of a problem"));
  add_common(app.add_subcommand("mirror", "the whole mirror construction"));

  std::string suite = "all";
  std::uint64_t seed = 20261019;
  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("suite", suite, "k3, quintic, elliptic, properties or all")->capture_default_str();
  verify->add_option("--seed", seed, "seed of the randomized properties")->capture_default_str();
  verify->add_flag("--json", cfg.json, "machine-readable report");
  verify->add_option("-o,--output", cfg.output_path, "write the report to this file");
  verify->callback([&] { command = "verify"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  char* out = nullptr;
  int code = 0;
  if (command == "verify") {
    int passed = 0;
    tm_status s = tm_verify(suite.c_str(), seed, cfg.json ? 1 : 0, &out, &passed);
    if (s != TM_OK) return report_failure(s);
    code = emit(cfg, out);
    if (code == 0 && !passed) code = 4;
  } else {
    std::string input;
    if (!read_input(cfg, input)) {
      std::cerr << "error: cannot read " << cfg.input_path << "\n";
      return 2;
    }
    tm_status s = tm_run_command(command.c_str(), input.c_str(), cfg.json ? 1 : 0, cfg.compact ? 0 : 1, &out);
    if (s != TM_OK) return report_failure(s);
    code = emit(cfg, out);
  }
  tm_string_free(out);
  if (cfg.verbosity > 0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cerr << command << " finished in " << ms << " ms\n";
  }
  return code;
}
