#include "f2sym/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "f2sym/error.hpp"
#include "f2sym/evaluator.hpp"
#include "f2sym/translate.hpp"

namespace f2sym {

std::string default_output_path(const std::string& input) {
  return std::filesystem::path(input).replace_extension(".m").string();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) {
    err << config.input_path << ": error: cannot open file\n";
    return kExitIo;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << config.input_path << ": error: read failed\n";
    return kExitIo;
  }

  Translation result;
  try {
    result = translate(buffer.str());
  } catch (const Error& e) {
    err << config.input_path << ":" << e.line() << ": error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Unsupported ? kExitUnsupported : kExitSyntax;
  }

  std::string text = config.normalize ? normalize(result.text) + "\n" : result.text;
  if (config.check_only) {
    if (config.normalize) out << text;
  } else {
    std::string path =
        config.output_path.empty() ? default_output_path(config.input_path) : config.output_path;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
      err << path << ": error: cannot write file\n";
      return kExitIo;
    }
  }

  if (config.evaluate) {
    EvalOptions options;
    options.strict_unbound = config.strict_unbound;
    options.stream = &out;
    try {
      run_program(result.program, options);
    } catch (const EvalError& e) {
      err << config.input_path << ": evaluation error: " << e.what();
      if (!e.statement().empty()) err << " in '" << e.statement() << "'";
      err << "\n";
      return kExitEval;
    }
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate fixed-form FORTRAN 77 into Mathematica code", "f2sym"};
  RunConfig config;
  app.add_option("input", config.input_path, "FORTRAN source file")->required();
  app.add_option("-o,--output", config.output_path, "Output file (default: input with .m)");
  app.add_flag("--check", config.check_only, "Translate only; write no file");
  app.add_flag("--eval", config.evaluate, "Run the translated program and print its output");
  app.add_flag("--normalize", config.normalize, "Write whitespace-normalized output");
  app.add_flag("--strict-unbound", config.strict_unbound,
               "With --eval, reading an unbound variable as a number is an error");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "f2sym: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace f2sym
