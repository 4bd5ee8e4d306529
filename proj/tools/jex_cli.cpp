// Command line front end. Everything goes through the C API in jex/jex.h.

#include <jex/jex.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

bool readInput(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int emit(jex_status status, char* report) {
  if (report) {
    std::fputs(report, stdout);
    jex_string_free(report);
  } else if (status != JEX_OK) {
    std::fprintf(stdout, "error: %s\n", jex_last_error());
  }
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker and normalizer for a proof-irrelevance modality calculus"};
  app.require_subcommand(1);

  long fuel = 100000;
  bool json = false, unicode = false, resugar = false;
  std::string path, exprText, propText;

  auto addFmt = [&](CLI::App* cmd) {
    cmd->add_flag("--unicode", unicode, "print with unicode symbols");
    cmd->add_flag("--resugar", resugar, "print A -> Ex B as A -o B");
  };
  auto flags = [&]() {
    unsigned f = 0;
    if (unicode) f |= JEX_FMT_UNICODE;
    if (resugar) f |= JEX_FMT_RESUGAR;
    if (json) f |= JEX_FMT_JSON;
    return f;
  };

  auto* check = app.add_subcommand("check", "run all declarations of a .jex file");
  check->add_option("file", path, "input file, or - for stdin")->required();
  check->add_option("--fuel", fuel, "step budget for normalize declarations");
  check->add_flag("--json", json, "machine-readable report");
  addFmt(check);
  check->callback([&] {
    std::string source;
    if (!readInput(path, source)) throw CLI::RuntimeError("cannot read " + path, 2);
    char* report = nullptr;
    jex_status st = jex_run_source(source.c_str(), fuel, 0, flags(), &report);
    std::exit(emit(st, report));
  });

  auto* norm = app.add_subcommand("normalize", "run a .jex file, printing rewrites");
  norm->add_option("file", path, "input file, or - for stdin")->required();
  norm->add_option("--fuel", fuel, "step budget");
  norm->add_flag("--json", json, "machine-readable report");
  addFmt(norm);
  norm->callback([&] {
    std::string source;
    if (!readInput(path, source)) throw CLI::RuntimeError("cannot read " + path, 2);
    char* report = nullptr;
    jex_status st = jex_run_source(source.c_str(), fuel, 1, flags(), &report);
    std::exit(emit(st, report));
  });

  auto* trace = app.add_subcommand("trace", "step an expression, tagging each rule");
  trace->add_option("expr", exprText, "expression")->required();
  trace->add_option("--fuel", fuel, "step budget");
  addFmt(trace);
  trace->callback([&] {
    char* report = nullptr;
    jex_status st = jex_trace_source(exprText.c_str(), fuel, flags(), &report);
    std::exit(emit(st, report));
  });

  auto* translate = app.add_subcommand("translate", "translate to or from the lax calculus");
  bool toLax = false, fromLax = false;
  translate->add_flag("--to-lax", toLax, "A -> B, Ex A  into  A => B, O A");
  translate->add_flag("--from-lax", fromLax, "A => B, O A  into  A -> B, Ex A");
  translate->add_option("prop", propText, "proposition")->required();
  addFmt(translate);
  translate->callback([&] {
    if (toLax == fromLax)
      throw CLI::RuntimeError("pass exactly one of --to-lax / --from-lax", 5);
    char* report = nullptr;
    jex_status st = jex_translate(propText.c_str(), toLax ? 1 : 0, flags(), &report);
    std::exit(emit(st, report));
  });

  auto* derive = app.add_subcommand("derive", "print a derived construction");
  std::string builder;
  std::vector<std::string> builderArgs;
  derive
      ->add_option("builder", builder,
                   "trunc-intro | trunc-elim | lax-i | lax-ii | lax-iii | prop-{1l..4r,5,6}")
      ->required();
  derive->add_option("props", builderArgs, "proposition arguments");
  addFmt(derive);
  derive->callback([&] {
    std::vector<const char*> argPtrs;
    for (auto& a : builderArgs) argPtrs.push_back(a.c_str());
    char* report = nullptr;
    jex_status st = jex_derive(builder.c_str(), argPtrs.data(), argPtrs.size(), flags(), &report);
    std::exit(emit(st, report));
  });

  auto* fuzz = app.add_subcommand("fuzz", "property suites over generated expressions");
  std::string suite;
  unsigned long long seed = 0;
  long count = 100;
  int depth = 12;
  fuzz->add_option("--suite", suite, "subject-reduction | normalization | roundtrip")->required();
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--count", count, "number of samples");
  fuzz->add_option("--depth", depth, "generator depth bound");
  fuzz->add_option("--fuel", fuel, "step budget per sample");
  fuzz->add_flag("--json", json, "machine-readable report");
  fuzz->callback([&] {
    char* report = nullptr;
    jex_status st = jex_fuzz(suite.c_str(), seed, count, depth, fuel, flags(), &report);
    std::exit(emit(st, report));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
