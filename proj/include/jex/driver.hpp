#pragma once

#include "jex/generator.hpp"
#include "jex/parser.hpp"
#include "jex/reduction.hpp"

#include <cstdint>

namespace jex {

// Exit codes shared by the drivers and the command line tool.
enum ExitCode {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitSyntaxError = 2,
  kExitCounterexample = 3,
  kExitFuelExhausted = 4,
};

struct RunOptions {
  long fuel = kDefaultFuel;
  bool json = false;
  bool unicodeSyms = false;
  bool resugar = false;
  bool printNormalForms = false;  // normalize subcommand: show rewrites
};

struct RunResult {
  std::string report;
  int exitCode = kExitOk;
};

// Runs every declaration of a .jex source in order; exit 0 iff all pass.
RunResult runSource(const std::string& source, const RunOptions& opts = {});

// Single-expression stepper: prints each step with its rule tag.
RunResult runTraceExpr(const std::string& exprText, const RunOptions& opts = {});

// Proposition translation; direction true maps into the lax calculus.
RunResult runTranslate(const std::string& propText, bool toLaxDirection,
                       const RunOptions& opts = {});

// Derived-construction builders: trunc-intro, trunc-elim, lax-i, lax-ii,
// lax-iii, prop-1l ... prop-6.
RunResult runDerive(const std::string& builder, const std::vector<std::string>& args,
                    const RunOptions& opts = {});

// Property suites over generated well-typed expressions:
// subject-reduction, normalization, roundtrip.
RunResult runFuzz(const std::string& suite, uint64_t seed, long count, int maxDepth,
                  const RunOptions& opts = {});

}  // namespace jex
