#include "jex/parser.hpp"

#include "jex/sexpr.hpp"

namespace jex {

namespace {

[[noreturn]] void unexpected(const Token& t, const std::string& wanted) {
  std::string got = t.tok == Tok::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(t.line, t.col, "expected " + wanted + ", found " + got);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lx_(text) {}

  Token expect(Tok tok, const std::string& wanted) {
    if (lx_.peek().tok != tok) unexpected(lx_.peek(), wanted);
    return lx_.next();
  }

  void expectEnd() {
    if (lx_.peek().tok != Tok::End) unexpected(lx_.peek(), "end of input");
  }

  // prop := exprop (('->' | '-o') prop)?     right associative
  PropPtr prop() {
    PropPtr left = exProp();
    switch (lx_.peek().tok) {
      case Tok::Arrow:
        lx_.next();
        return arrow(left, prop());
      case Tok::Lolli:
        lx_.next();
        return existsArrow(left, prop());
      default:
        return left;
    }
  }

  // exprop := 'Ex' exprop | atomprop
  PropPtr exProp() {
    if (lx_.peek().tok == Tok::Ex) {
      lx_.next();
      return exists(exProp());
    }
    return atomProp();
  }

  PropPtr atomProp() {
    const Token& t = lx_.peek();
    if (t.tok == Tok::Ident) return atom(lx_.next().text);
    if (t.tok == Tok::LParen) {
      lx_.next();
      PropPtr p = prop();
      expect(Tok::RParen, "')'");
      return p;
    }
    unexpected(t, "a proposition");
  }

  LaxPropPtr laxProp() {
    LaxPropPtr left = laxCircleProp();
    if (lx_.peek().tok == Tok::FatArrow) {
      lx_.next();
      return laxImplies(left, laxProp());
    }
    return left;
  }

  LaxPropPtr laxCircleProp() {
    if (lx_.peek().tok == Tok::OCap) {
      lx_.next();
      return laxCircle(laxCircleProp());
    }
    const Token& t = lx_.peek();
    if (t.tok == Tok::Ident) return laxAtom(lx_.next().text);
    if (t.tok == Tok::LParen) {
      lx_.next();
      LaxPropPtr p = laxProp();
      expect(Tok::RParen, "')'");
      return p;
    }
    unexpected(t, "a lax proposition");
  }

  // expr := lambda / let / application chain
  ExprPtr expr() {
    switch (lx_.peek().tok) {
      case Tok::Lambda:
      case Tok::LambdaJ: {
        bool j = lx_.next().tok == Tok::LambdaJ;
        expect(Tok::LParen, "'('");
        std::string binder = expect(Tok::Ident, "a variable").text;
        expect(Tok::Colon, "':'");
        PropPtr annot = prop();
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        ExprPtr body = expr();
        return j ? lamJ(binder, annot, body) : lam(binder, annot, body);
      }
      case Tok::Let: {
        lx_.next();
        expect(Tok::LBrack, "'['");
        std::string binder = expect(Tok::Ident, "a variable").text;
        bool j;
        if (lx_.peek().tok == Tok::RBrackJ) {
          j = true;
          lx_.next();
        } else {
          expect(Tok::RBrack, "']' or ']j'");
          j = false;
        }
        expect(Tok::Equals, "'='");
        ExprPtr scrutinee = appExpr();
        expect(Tok::In, "'in'");
        ExprPtr body = expr();
        return j ? letBoxJ(binder, scrutinee, body) : letBox(binder, scrutinee, body);
      }
      default:
        return appExpr();
    }
  }

  ExprPtr appExpr() {
    ExprPtr head = atomExpr();
    for (;;) {
      if (lx_.peek().tok == Tok::AtJ) {
        lx_.next();
        head = apJ(head, atomExpr());
        continue;
      }
      if (startsAtom(lx_.peek().tok)) {
        head = ap(head, atomExpr());
        continue;
      }
      return head;
    }
  }

  static bool startsAtom(Tok t) {
    return t == Tok::Ident || t == Tok::LBrack || t == Tok::LParen;
  }

  ExprPtr atomExpr() {
    const Token& t = lx_.peek();
    switch (t.tok) {
      case Tok::Ident:
        return var(lx_.next().text);
      case Tok::LBrack: {
        lx_.next();
        ExprPtr body = expr();
        if (lx_.peek().tok == Tok::RBrackJ) {
          lx_.next();
          return boxJ(body);
        }
        expect(Tok::RBrack, "']' or ']j'");
        return box(body);
      }
      case Tok::LParen: {
        lx_.next();
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        unexpected(t, "an expression");
    }
  }

  Context context() {
    Context ctx;
    if (lx_.peek().tok == Tok::End) return ctx;
    for (;;) {
      std::string name = expect(Tok::Ident, "a variable").text;
      expect(Tok::Colon, "':'");
      ctx = ctx.extended(name, prop());
      if (lx_.peek().tok != Tok::Comma) return ctx;
      lx_.next();
    }
  }

  SourceFile source() {
    SourceFile out;
    for (;;) {
      const Token& t = lx_.peek();
      if (t.tok == Tok::End) return out;
      Decl d;
      d.line = t.line;
      d.col = t.col;
      switch (t.tok) {
        case Tok::Def: {
          lx_.next();
          d.tag = Decl::Tag::Def;
          d.name = expect(Tok::Ident, "a name").text;
          expect(Tok::Equals, "'='");
          d.expr = freshenBinders(expr());
          break;
        }
        case Tok::Check: {
          lx_.next();
          d.tag = Decl::Tag::Check;
          d.expr = freshenBinders(expr());
          if (lx_.peek().tok == Tok::ColonColon) {
            lx_.next();
            d.kind = Kind::Irrelevant;
          } else {
            expect(Tok::Colon, "':' or '::'");
            d.kind = Kind::Relevant;
          }
          d.prop = prop();
          break;
        }
        case Tok::Normalize: {
          lx_.next();
          d.tag = Decl::Tag::Normalize;
          d.expr = freshenBinders(expr());
          break;
        }
        case Tok::Trace: {
          lx_.next();
          d.tag = Decl::Tag::Trace;
          d.expr = freshenBinders(expr());
          break;
        }
        case Tok::Translate: {
          lx_.next();
          d.tag = Decl::Tag::Translate;
          d.prop = prop();
          break;
        }
        case Tok::Derive: {
          lx_.next();
          d.tag = Decl::Tag::Derive;
          d.name = expect(Tok::Ident, "a builder name").text;
          while (lx_.peek().tok == Tok::Ident || lx_.peek().tok == Tok::LParen ||
                 lx_.peek().tok == Tok::Ex)
            d.args.push_back(exPropArg());
          break;
        }
        case Tok::Derivation: {
          lx_.next();
          d.tag = Decl::Tag::Derivation;
          if (lx_.peek().tok == Tok::Ident) d.name = lx_.next().text;
          std::string span = lx_.rawBalanced();
          try {
            ParsedDerivation parsed = parseDerivationSexpr(span);
            d.logical = parsed.logical;
            d.typing = parsed.typing;
          } catch (const ParseError& e) {
            // positions inside the span are relative; re-anchor at the decl
            throw ParseError(d.line, d.col, std::string("in derivation: ") + e.what());
          }
          break;
        }
        default:
          unexpected(t, "a declaration");
      }
      out.decls.push_back(std::move(d));
    }
  }

  // derive arguments: atoms, Ex-chains, or parenthesized propositions
  PropPtr exPropArg() {
    if (lx_.peek().tok == Tok::Ex) {
      lx_.next();
      return exists(exPropArg());
    }
    return atomProp();
  }

 private:
  Lexer lx_;
};

}  // namespace

PropPtr parseProp(const std::string& text) {
  Parser p(text);
  PropPtr out = p.prop();
  p.expectEnd();
  return out;
}

LaxPropPtr parseLaxProp(const std::string& text) {
  Parser p(text);
  LaxPropPtr out = p.laxProp();
  p.expectEnd();
  return out;
}

ExprPtr parseExpr(const std::string& text) {
  Parser p(text);
  ExprPtr out = p.expr();
  p.expectEnd();
  return freshenBinders(out);
}

Context parseContext(const std::string& text) {
  Parser p(text);
  Context out = p.context();
  p.expectEnd();
  return out;
}

SourceFile parseSource(const std::string& text) {
  Parser p(text);
  return p.source();
}

}  // namespace jex
