#include "jex/sexpr.hpp"

#include "jex/parser.hpp"
#include "jex/printer.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace jex {

namespace {

struct SNode {
  enum class Tag { Sym, Str, List };
  Tag tag;
  std::string text;
  std::vector<SNode> items;
  int line = 1, col = 1;
};

class SReader {
 public:
  explicit SReader(const std::string& text) : src_(text) {}

  SNode read() {
    skip();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) throw ParseError(line, col, "unexpected end of derivation");
    char c = src_[pos_];
    if (c == '(') {
      step();
      SNode node{SNode::Tag::List, {}, {}, line, col};
      for (;;) {
        skip();
        if (pos_ >= src_.size()) throw ParseError(line, col, "missing ')'");
        if (src_[pos_] == ')') {
          step();
          return node;
        }
        node.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError(line, col, "unexpected ')'");
    if (c == '"') {
      step();
      std::string text;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
          step();
          char esc = src_[pos_];
          text.push_back(esc == 'n' ? '\n' : esc == 't' ? '\t' : esc);
          step();
          continue;
        }
        text.push_back(src_[pos_]);
        step();
      }
      if (pos_ >= src_.size()) throw ParseError(line, col, "unterminated string");
      step();
      return {SNode::Tag::Str, text, {}, line, col};
    }
    std::string sym;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != '"') {
      sym.push_back(src_[pos_]);
      step();
    }
    return {SNode::Tag::Sym, sym, {}, line, col};
  }

  void skip() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) step();
      if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
        continue;
      }
      return;
    }
  }

 private:
  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

const std::map<std::string, LRule>& lruleTable() {
  static const std::map<std::string, LRule> table = {
      {"hyp", LRule::Hyp},       {"just", LRule::Just},     {"->I", LRule::ArrowI},
      {"->E", LRule::ArrowE},    {"->Ij", LRule::ArrowIj},  {"->Ej", LRule::ArrowEj},
      {"ExI", LRule::ExistsI},   {"ExE", LRule::ExistsE},   {"ExIj", LRule::ExistsIj},
      {"ExEj", LRule::ExistsEj}, {"-oI", LRule::LolliI},    {"-oE", LRule::LolliE},
      {"-oIj", LRule::LolliIj},  {"-oEj", LRule::LolliEj},  {"sub1", LRule::Sub1},
      {"sub2", LRule::Sub2},     {"w", LRule::Weaken},      {"ex", LRule::Exchange},
      {"contr", LRule::Contract},{"R", LRule::R},           {"assume", LRule::Assume},
  };
  return table;
}

const std::map<std::string, Rule>& ruleTable() {
  static const std::map<std::string, Rule> table = {
      {"hyp", Rule::Hyp},       {"just", Rule::Just},     {"->I", Rule::ArrowI},
      {"->E", Rule::ArrowE},    {"->Ij", Rule::ArrowIj},  {"->Ej", Rule::ArrowEj},
      {"ExI", Rule::ExistsI},   {"ExE", Rule::ExistsE},   {"ExIj", Rule::ExistsIj},
      {"ExEj", Rule::ExistsEj},
  };
  return table;
}

[[noreturn]] void badNode(const SNode& n, const std::string& msg) {
  throw ParseError(n.line, n.col, msg);
}

bool isLogicalConclusion(const SNode& c) {
  return c.tag == SNode::Tag::List && c.items.size() == 3;
}

LogicalJudgment readLogicalConclusion(const SNode& c) {
  if (!isLogicalConclusion(c)) badNode(c, "expected ((hyps) \"goal\" kind)");
  const SNode& hyps = c.items[0];
  if (hyps.tag != SNode::Tag::List) badNode(hyps, "expected a hypothesis list");
  LogicalJudgment j;
  for (auto& h : hyps.items) {
    if (h.tag != SNode::Tag::Str) badNode(h, "expected a quoted proposition");
    j.hyps.push_back(parseProp(h.text));
  }
  if (c.items[1].tag != SNode::Tag::Str) badNode(c.items[1], "expected a quoted goal");
  j.goal = parseProp(c.items[1].text);
  const SNode& k = c.items[2];
  if (k.tag != SNode::Tag::Sym || (k.text != "true" && k.text != "just"))
    badNode(k, "expected kind 'true' or 'just'");
  j.kind = k.text == "true" ? Kind::Relevant : Kind::Irrelevant;
  return j;
}

LDerivPtr readLogical(const SNode& n) {
  if (n.tag != SNode::Tag::List || n.items.empty() || n.items[0].tag != SNode::Tag::Sym)
    badNode(n, "expected (rule conclusion premises...)");
  auto it = lruleTable().find(n.items[0].text);
  if (it == lruleTable().end()) badNode(n.items[0], "unknown rule '" + n.items[0].text + "'");
  if (n.items.size() < 2) badNode(n, "missing conclusion");
  LogicalJudgment j = readLogicalConclusion(n.items[1]);
  std::vector<LDerivPtr> premises;
  for (size_t i = 2; i < n.items.size(); ++i) premises.push_back(readLogical(n.items[i]));
  return lnode(it->second, std::move(j), std::move(premises));
}

DerivPtr readTyping(const SNode& n) {
  if (n.tag != SNode::Tag::List || n.items.empty() || n.items[0].tag != SNode::Tag::Sym)
    badNode(n, "expected (rule conclusion premises...)");
  auto it = ruleTable().find(n.items[0].text);
  if (it == ruleTable().end()) badNode(n.items[0], "unknown typing rule '" + n.items[0].text + "'");
  if (n.items.size() < 2) badNode(n, "missing conclusion");
  const SNode& c = n.items[1];
  if (c.tag != SNode::Tag::List || c.items.size() != 4)
    badNode(c, "expected ((ctx) \"expr\" kind \"type\")");
  const SNode& ctxNode = c.items[0];
  if (ctxNode.tag != SNode::Tag::List) badNode(ctxNode, "expected a context list");
  Context ctx;
  for (auto& pair : ctxNode.items) {
    if (pair.tag != SNode::Tag::List || pair.items.size() != 2 ||
        pair.items[0].tag != SNode::Tag::Sym || pair.items[1].tag != SNode::Tag::Str)
      badNode(pair, "expected (name \"type\")");
    ctx = ctx.extended(pair.items[0].text, parseProp(pair.items[1].text));
  }
  if (c.items[1].tag != SNode::Tag::Str) badNode(c.items[1], "expected a quoted expression");
  ExprPtr e = parseExpr(c.items[1].text);
  const SNode& k = c.items[2];
  if (k.tag != SNode::Tag::Sym || (k.text != ":" && k.text != "::"))
    badNode(k, "expected kind ':' or '::'");
  Kind kind = k.text == ":" ? Kind::Relevant : Kind::Irrelevant;
  if (c.items[3].tag != SNode::Tag::Str) badNode(c.items[3], "expected a quoted type");
  PropPtr ty = parseProp(c.items[3].text);
  std::vector<DerivPtr> premises;
  for (size_t i = 2; i < n.items.size(); ++i) premises.push_back(readTyping(n.items[i]));
  return derivation(it->second, std::move(ctx), e, kind, ty, std::move(premises));
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void writeLogical(std::ostream& os, const LDerivPtr& d, int indent) {
  std::string pad(indent, ' ');
  os << pad << "(" << lruleName(d->rule) << " ((";
  bool first = true;
  for (auto& h : d->conclusion.hyps) {
    if (!first) os << " ";
    first = false;
    os << "\"" << escape(printProp(h)) << "\"";
  }
  os << ") \"" << escape(printProp(d->conclusion.goal)) << "\" "
     << (d->conclusion.kind == Kind::Relevant ? "true" : "just") << ")";
  if (d->premises.empty()) {
    os << ")";
    return;
  }
  for (auto& p : d->premises) {
    os << "\n";
    writeLogical(os, p, indent + 2);
  }
  os << ")";
}

void writeTyping(std::ostream& os, const DerivPtr& d, int indent) {
  std::string pad(indent, ' ');
  os << pad << "(" << ruleName(d->rule) << " ((";
  bool first = true;
  for (auto& [name, ty] : d->ctx.items()) {
    if (!first) os << " ";
    first = false;
    os << "(" << name << " \"" << escape(printProp(ty)) << "\")";
  }
  os << ") \"" << escape(printExpr(d->expr)) << "\" " << kindSymbol(d->kind) << " \""
     << escape(printProp(d->type)) << "\")";
  if (d->premises.empty()) {
    os << ")";
    return;
  }
  for (auto& p : d->premises) {
    os << "\n";
    writeTyping(os, p, indent + 2);
  }
  os << ")";
}

}  // namespace

ParsedDerivation parseDerivationSexpr(const std::string& text) {
  SReader reader(text);
  SNode root = reader.read();
  if (root.tag != SNode::Tag::List || root.items.size() < 2)
    badNode(root, "expected (rule conclusion premises...)");
  ParsedDerivation out;
  if (isLogicalConclusion(root.items[1]))
    out.logical = readLogical(root);
  else
    out.typing = readTyping(root);
  return out;
}

std::string printLogicalSexpr(const LDerivPtr& d, int indent) {
  std::ostringstream os;
  writeLogical(os, d, indent);
  return os.str();
}

std::string printTypingSexpr(const DerivPtr& d, int indent) {
  std::ostringstream os;
  writeTyping(os, d, indent);
  return os.str();
}

}  // namespace jex
