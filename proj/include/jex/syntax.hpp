#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jex {

// The two hypothetical judgments: proof-relevant typing `e : A` and
// proof-irrelevant typing `e :: A` ("there exists a proof").
enum class Kind { Relevant, Irrelevant };

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

// Propositions  A, B ::= p | A -> B | Ex A
// `A -o B` is surface sugar for `A -> Ex B` and never appears in the AST.
struct Prop {
  enum class Tag { Atom, Arrow, Exists };
  Tag tag;
  std::string name;  // Atom
  PropPtr lhs, rhs;  // Arrow: lhs -> rhs; Exists: lhs
};

PropPtr atom(std::string name);
PropPtr arrow(PropPtr domain, PropPtr codomain);
PropPtr exists(PropPtr body);
PropPtr existsArrow(PropPtr domain, PropPtr codomain);  // desugars on the spot

bool propEq(const PropPtr& a, const PropPtr& b);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expressions. The term fragment (Var, Lam, Ap, Box) inhabits the relevant
// judgment; a Box body may be any expression and the whole is still a term.
struct Expr {
  enum class Tag { Var, Lam, Ap, Box, LetBox, LamJ, ApJ, BoxJ, LetBoxJ };
  Tag tag;
  std::string name;  // Var: the variable; Lam/LamJ/LetBox/LetBoxJ: the binder
  PropPtr annot;     // Lam, LamJ
  ExprPtr a, b;      // Lam/LamJ/Box/BoxJ: body in a; Ap/ApJ: a=fun, b=arg;
                     // LetBox/LetBoxJ: a=scrutinee, b=body
};

ExprPtr var(std::string name);
ExprPtr lam(std::string binder, PropPtr annot, ExprPtr body);
ExprPtr ap(ExprPtr fun, ExprPtr arg);
ExprPtr box(ExprPtr body);
ExprPtr letBox(std::string binder, ExprPtr scrutinee, ExprPtr body);
ExprPtr lamJ(std::string binder, PropPtr annot, ExprPtr body);
ExprPtr apJ(ExprPtr fun, ExprPtr arg);
ExprPtr boxJ(ExprPtr body);
ExprPtr letBoxJ(std::string binder, ExprPtr scrutinee, ExprPtr body);

// Decidable term-hood: true exactly for the Var/Lam/Ap/Box fragment.
bool isTerm(const ExprPtr& e);

std::set<std::string> freeVars(const ExprPtr& e);

// All variable names occurring anywhere (free, bound, or as binder).
std::set<std::string> allNames(const ExprPtr& e);

// Equality up to consistent renaming of bound variables.
bool alphaEq(const ExprPtr& a, const ExprPtr& b);

// `hint` if unused, else hint1, hint2, ... (least suffix). Deterministic.
std::string fresh(const std::set<std::string>& avoid, const std::string& hint);

// Renames binders so that every binder is distinct from every other binder,
// from every free variable, and from everything in `avoid`. Parser output is
// passed through this so later substitutions rarely need to rename.
ExprPtr freshenBinders(const ExprPtr& e, std::set<std::string> avoid = {});

// Ordered list of proof-relevant hypotheses x : A with pairwise distinct
// names. Lookup returns the rightmost binding.
class Context {
 public:
  Context() = default;

  const std::vector<std::pair<std::string, PropPtr>>& items() const { return items_; }
  bool contains(const std::string& name) const;
  PropPtr lookup(const std::string& name) const;  // null if absent
  Context extended(const std::string& name, PropPtr type) const;  // throws on duplicate
  std::set<std::string> names() const;
  bool operator==(const Context& other) const;
  size_t size() const { return items_.size(); }

 private:
  std::vector<std::pair<std::string, PropPtr>> items_;
};

}  // namespace jex
