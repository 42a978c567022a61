#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "cli.hpp"

namespace {

using namespace isokit::cli;

struct Invocation {
  std::string spec_path;
  std::string out_dir;
  std::string format = "json";
  std::string orientation = "deligne";
  bool oracle = false;
  bool strict = false;
  long class_id = -1;
};

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& help, Invocation& inv) {
  auto* sub = app.add_subcommand(name, help);
  sub->add_option("--spec", inv.spec_path, "TOML file describing the group and mu")->required()->check(CLI::ExistingFile);
  sub->add_option("--out", inv.out_dir, "directory for the report and any polygon files");
  sub->add_option("--format", inv.format, "json, tsv or svg")->check(CLI::IsMember({"json", "tsv", "svg"}));
  sub->add_option("--orientation", inv.orientation, "deligne (mu as given) or naive (mu negated)")
      ->check(CLI::IsMember({"deligne", "naive"}));
  sub->add_option("--class", inv.class_id, "class id from the strata report")->check(CLI::NonNegativeNumber);
  sub->add_flag("--oracle", inv.oracle, "compare against the brute-force polygon set");
  sub->add_flag("--strict", inv.strict, "exit 4 when the oracle disagrees");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isokit: Newton strata, (dagger) witnesses and Kottwitz triples for reductive groups"};
  app.require_subcommand(1, 1);
  Invocation inv;
  const std::map<std::string, std::string> commands = {
      {"strata", "enumerate B(G, mu) with its Hasse diagram"},
      {"polygons", "Newton polygons of the strata (GL and GSp)"},
      {"dagger", "witness tori and cocharacters for each class"},
      {"triple", "Kottwitz triple certificates for each class"},
      {"ordinary", "nonemptiness of the ordinary locus"},
  };
  for (const auto& [name, help] : commands) add_subcommand(app, name, help, inv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Options options;
  options.orientation = inv.orientation == "naive" ? Orientation::naive : Orientation::deligne;
  if (inv.class_id >= 0) options.class_id = static_cast<std::size_t>(inv.class_id);
  options.format = command == "polygons" && inv.format == "json" && !inv.out_dir.empty() ? "svg" : inv.format;
  options.oracle = inv.oracle;
  options.strict = inv.strict;
  options.out_dir = inv.out_dir;

  CommandResult result;
  try {
    result = run_command(command, load_spec(inv.spec_path), options);
  } catch (const SpecError& e) {
    std::cerr << "isokit: " << e.what() << '\n';
    return kParseError;
  }
  if (!result.message.empty()) std::cerr << "isokit: " << result.message << (result.message.back() == '\n' ? "" : "\n");
  if (result.report.is_null()) return result.exit_code;

  const std::string text = result.report.dump(2) + "\n";
  if (!inv.out_dir.empty()) {
    std::filesystem::create_directories(inv.out_dir);
    std::ofstream(std::filesystem::path(inv.out_dir) / (command + ".json")) << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
