#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "transemi/commands.hpp"
#include "transemi/error.hpp"
#include "transemi/generators.hpp"

using namespace transemi;

int main(int argc, char** argv) {
  CLI::App app{"Intersection-closed transformation semigroups: checks and faithful representations"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format = "text";
  std::string oracle = "off";
  std::string parallel = "off";
  CommandOptions opts;

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", input, "Instance file (JSON)");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", opts.seed, "PRNG seed");
    sub->add_option("--cap", opts.cap, "Maximum closure size for transformation inputs");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--oracle", oracle, "Brute-force cross-checks")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--pairs-parallel", parallel, "Parallel per-pair closures")->check(CLI::IsMember({"on", "off"}));
    sub->add_flag("--timings", opts.timings, "Attach wall-clock timings to checks (non-deterministic output)");
    sub->add_option("--output", output, "Write output to a file instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "Summarize an instance");
  auto* check = app.add_subcommand("check", "Run hypothesis, derived-property and scheme checks");
  auto* represent = app.add_subcommand("represent", "Build and verify the sum representation");
  auto* roundtrip = app.add_subcommand("roundtrip", "Close maps, encode abstractly, verify the representation");
  auto* generate = app.add_subcommand("generate", "Emit a seeded random instance");
  common(analyze, true);
  common(check, true);
  common(represent, true);
  common(roundtrip, false);
  common(generate, false);
  for (auto* sub : {roundtrip, generate}) {
    sub->add_option("--points", opts.points, "Carrier size for random maps");
    sub->add_option("--maps", opts.maps, "Number of random seed maps");
  }
  generate->add_option("--kind", opts.kind, "transformations or abstract")
      ->check(CLI::IsMember({"transformations", "abstract"}));
  generate->add_option("--size", opts.size, "Carrier size for abstract systems (1..3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.format = format == "machine" ? OutputFormat::machine : OutputFormat::text;
  opts.oracle = oracle == "on";
  opts.pairs_parallel = parallel == "on";

  try {
    CommandResult result;
    std::string name;
    if (*generate) {
      name = "generate";
      result = cmd_generate(opts);
    } else {
      InstanceFile inst;
      if (!input.empty()) {
        inst = parse_instance(input);
      } else {
        inst.seed = opts.seed;
        inst.body = random_maps(opts.seed, opts.points, opts.maps);
      }
      if (*analyze) name = "analyze", result = cmd_analyze(inst, opts);
      if (*check) name = "check", result = cmd_check(inst, opts);
      if (*represent) name = "represent", result = cmd_represent(inst, opts);
      if (*roundtrip) name = "roundtrip", result = cmd_roundtrip(inst, opts);
    }
    const std::string text = render(name, result, opts.format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) throw InputError(output + ": cannot write");
      out << text;
    }
    return result.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
