#include <fstream>
#include <iostream>
#include <sstream>
#include <CLI11.hpp>

#include "app/config.hpp"
#include "app/run.hpp"
#include "wgm/error.hpp"

int main(int argc, char** argv) {
  using namespace wgm::app;

  CLI::App cli{"Whispering-gallery-mode resonances and dipole-dipole coupling near a dielectric sphere"};
  cli.require_subcommand(1);
  std::string config_path;
  std::string out_path;
  std::string format;
  int threads = 0;

  for (const char* name :
       {"modes", "qext", "coupling-spectrum", "coupling-vs-distance", "suppressed", "dynamics"}) {
    auto* sub = cli.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_path, "output file (default: config output.path, else stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }
  const std::string command = cli.get_subcommands().front()->get_name();

  try {
    std::ifstream in(config_path);
    if (!in) throw wgm::ConfigError("--config", "cannot read '" + config_path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    RunConfig cfg = parse_config(ss.str());
    if (to_string(cfg.command) != command) {
      throw wgm::ConfigError("command", "config is for '" + to_string(cfg.command) + "', not '" + command + "'");
    }
    if (!out_path.empty()) cfg.output_path = out_path;
    if (!format.empty()) cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (threads > 0) cfg.threads = threads;

    const Table table = execute(cfg, std::cerr);
    const std::string text = cfg.format == OutputFormat::Json ? format_json(table) : format_csv(table);
    if (cfg.output_path) {
      std::ofstream out(*cfg.output_path, std::ios::binary);
      if (!out) throw wgm::ConfigError("output.path", "cannot write '" + *cfg.output_path + "'");
      out << text;
    } else {
      std::cout << text;
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for_current_exception();
  }
}
