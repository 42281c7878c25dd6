#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "invkit/cli.hpp"

int main(int argc, char** argv) {
  using namespace invkit;
  cli::JobConfig config;
  std::string field = "q", out;

  CLI::App app{"Invariant rings, t-pgg certificates and embeddings"};
  app.add_option("command", config.command, "Subcommand")->required()->check(CLI::IsMember(cli::commands()));
  app.add_option("--group", config.group, "Group JSON file, or Sl|Sp|O|SO for the standard form");
  app.add_option("--presentation", config.presentation, "Presentation JSON file");
  app.add_option("--matrix", config.matrix, "Point as a JSON matrix (inline or file)");
  app.add_option("--m", config.m, "Dimension of the module");
  app.add_option("--n", config.n, "Number of copies");
  app.add_option("--t", config.t, "Degree bound t");
  app.add_option("--max-degree,-D", config.max_degree, "Verification degree bound D");
  app.add_option("--exponent,-e", config.exponent, "Veronese exponent e");
  app.add_option("--dmax", config.dmax, "Largest degree of image equations");
  app.add_option("--field", field, "q or pPRIME")->default_val("q");
  app.add_option("--threads", config.threads, "Worker threads")->default_val(1);
  app.add_option("--route", config.route, "pgg route: automatic|presentation|literal")->default_val("automatic");
  app.add_option("--out", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInvalidInput;
  }

  cli::JobResult result;
  try {
    config.field = Field::parse(field);
    result = cli::run(config);
  } catch (const std::invalid_argument& e) {
    result = {cli::kInvalidInput, io::Json{{"schema_version", io::kSchemaVersion}, {"command", config.command}, {"error", e.what()}}};
  }

  const std::string text = result.output.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write '" << out << "'\n";
      return cli::kInvalidInput;
    }
    f << text;
  }
  if (result.exit_code == cli::kInvalidInput && result.output.contains("error"))
    std::cerr << "error: " << result.output["error"].get<std::string>() << "\n";
  return result.exit_code;
}
