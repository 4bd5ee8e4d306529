#pragma once

#include "jex/syntax.hpp"

#include <cstdint>
#include <map>

namespace jex {

// Same (seed, config) reproduces the identical sample stream; sample i only
// depends on (seed, i), so streams can be consumed out of order.
struct GenConfig {
  int maxDepth = 12;
  uint64_t seed = 0;
  std::vector<std::string> atomPool = {"p", "q", "r"};
  std::map<Expr::Tag, double> weights;  // per-constructor; 1.0 where absent
};

struct Sample {
  Context ctx;
  ExprPtr expr;
  PropPtr type;
  Kind kind;
};

class Generator {
 public:
  explicit Generator(GenConfig cfg) : cfg_(std::move(cfg)) {}

  // Builds expressions by inverting the typing rules against a picked goal,
  // so every sample is inferable by construction. Mixes closed and open
  // contexts.
  Sample sample(uint64_t index, Kind kind) const;

  // Random proposition, for the translation round-trip suites.
  PropPtr sampleProp(uint64_t index) const;

  // Substitution-lemma corpora: a term t : A in ctx together with
  // ctx, x:A |- e :: C.
  struct SubstPair {
    Context ctx;
    ExprPtr term;
    PropPtr termType;
    std::string var;
    ExprPtr body;
    PropPtr bodyType;
  };
  SubstPair sampleSubstPair(uint64_t index) const;

  // Like sampleSubstPair but the substitutee is an irrelevant expression
  // whose spine uses only term and let forms (the shapes whose typed
  // behavior the substitution lemma covers).
  SubstPair sampleLetSpinePair(uint64_t index) const;

  const GenConfig& config() const { return cfg_; }

 private:
  GenConfig cfg_;
};

}  // namespace jex
