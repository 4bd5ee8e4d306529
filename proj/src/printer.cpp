#include "jex/printer.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace jex {

namespace {

// prop precedence: 0 arrow, 1 exists, 2 atom
void renderProp(std::ostream& os, const PropPtr& p, int minPrec, const PrintOpts& o) {
  switch (p->tag) {
    case Prop::Tag::Atom:
      os << p->name;
      return;
    case Prop::Tag::Exists: {
      bool parens = minPrec > 1;
      if (parens) os << "(";
      os << (o.unicodeSyms ? "∃" : "Ex ");
      renderProp(os, p->lhs, 2, o);
      if (parens) os << ")";
      return;
    }
    case Prop::Tag::Arrow: {
      bool parens = minPrec > 0;
      if (parens) os << "(";
      if (o.resugar && p->rhs->tag == Prop::Tag::Exists) {
        renderProp(os, p->lhs, 1, o);
        os << (o.unicodeSyms ? " ⊸ " : " -o ");
        renderProp(os, p->rhs->lhs, 0, o);
      } else {
        renderProp(os, p->lhs, 1, o);
        os << (o.unicodeSyms ? " → " : " -> ");
        renderProp(os, p->rhs, 0, o);
      }
      if (parens) os << ")";
      return;
    }
  }
}

struct ExprPrinter {
  const PrintOpts& o;
  std::set<std::string> used;
  std::map<std::string, std::string> renames;

  std::string enterBinder(const std::string& name, const ExprPtr& body,
                          std::optional<std::string>& saved) {
    std::string shown = name;
    if (used.count(name)) {
      std::set<std::string> avoid = used;
      auto names = allNames(body);
      avoid.insert(names.begin(), names.end());
      shown = fresh(avoid, name);
    }
    used.insert(shown);
    auto it = renames.find(name);
    saved = it == renames.end() ? std::nullopt : std::optional(it->second);
    renames[name] = shown;
    return shown;
  }

  void exitBinder(const std::string& name, const std::optional<std::string>& saved) {
    if (saved) renames[name] = *saved;
    else renames.erase(name);
  }

  // expr precedence: 0 lam/let, 1 application, 2 atomic
  void render(std::ostream& os, const ExprPtr& e, int minPrec) {
    switch (e->tag) {
      case Expr::Tag::Var: {
        auto it = renames.find(e->name);
        os << (it == renames.end() ? e->name : it->second);
        return;
      }
      case Expr::Tag::Lam:
      case Expr::Tag::LamJ: {
        bool parens = minPrec > 0;
        if (parens) os << "(";
        std::optional<std::string> saved;
        std::string shown = enterBinder(e->name, e->a, saved);
        if (o.unicodeSyms)
          os << (e->tag == Expr::Tag::Lam ? "λ(" : "λj(");
        else
          os << (e->tag == Expr::Tag::Lam ? "\\(" : "\\j(");
        os << shown << ":";
        renderProp(os, e->annot, 0, o);
        os << "). ";
        render(os, e->a, 0);
        exitBinder(e->name, saved);
        if (parens) os << ")";
        return;
      }
      case Expr::Tag::Ap:
      case Expr::Tag::ApJ: {
        bool parens = minPrec > 1;
        if (parens) os << "(";
        render(os, e->a, 1);
        os << (e->tag == Expr::Tag::Ap ? " " : " @j ");
        render(os, e->b, 2);
        if (parens) os << ")";
        return;
      }
      case Expr::Tag::Box:
      case Expr::Tag::BoxJ:
        os << (o.unicodeSyms ? "⟨" : "[");
        render(os, e->a, 0);
        os << (o.unicodeSyms ? "⟩" : "]");
        if (e->tag == Expr::Tag::BoxJ) os << "j";
        return;
      case Expr::Tag::LetBox:
      case Expr::Tag::LetBoxJ: {
        bool parens = minPrec > 0;
        if (parens) os << "(";
        os << "let ";
        // scrutinee first: the binder does not scope over it
        std::ostringstream scrut;
        ExprPrinter sub{o, used, renames};
        sub.render(scrut, e->a, 1);
        std::optional<std::string> saved;
        std::string shown = enterBinder(e->name, e->b, saved);
        os << (o.unicodeSyms ? "⟨" : "[") << shown << (o.unicodeSyms ? "⟩" : "]");
        if (e->tag == Expr::Tag::LetBoxJ) os << "j";
        os << " = " << scrut.str() << " in ";
        render(os, e->b, 0);
        exitBinder(e->name, saved);
        if (parens) os << ")";
        return;
      }
    }
  }
};

}  // namespace

std::string printProp(const PropPtr& p, PrintOpts opts) {
  std::ostringstream os;
  renderProp(os, p, 0, opts);
  return os.str();
}

std::string printExpr(const ExprPtr& e, PrintOpts opts) {
  std::ostringstream os;
  ExprPrinter pr{opts, freeVars(e), {}};
  pr.render(os, e, 0);
  return os.str();
}

std::string printContext(const Context& ctx, PrintOpts opts) {
  std::ostringstream os;
  bool first = true;
  for (auto& [name, ty] : ctx.items()) {
    if (!first) os << ", ";
    first = false;
    os << name << ":";
    renderProp(os, ty, 0, opts);
  }
  return os.str();
}

std::string kindSymbol(Kind k) { return k == Kind::Relevant ? ":" : "::"; }

}  // namespace jex
