#include "etr/formula.hpp"

#include <algorithm>

namespace etr::logic {

FormulaPtr make_atom(std::string predicate, std::vector<LogicTerm> args) {
  return std::make_shared<Formula>(Formula{Atom{std::move(predicate), std::move(args)}});
}

FormulaPtr make_conjunction(std::vector<FormulaPtr> conjuncts) {
  if (conjuncts.empty()) {
    throw Error(ErrorKind::SyntaxError, "conjunction needs at least one conjunct");
  }
  return std::make_shared<Formula>(Formula{Conjunction{std::move(conjuncts)}});
}

FormulaPtr make_exists(std::vector<std::string> bound, FormulaPtr body) {
  if (bound.empty()) {
    throw Error(ErrorKind::SyntaxError, "exists needs at least one variable");
  }
  for (std::size_t i = 0; i < bound.size(); ++i) {
    for (std::size_t j = i + 1; j < bound.size(); ++j) {
      if (bound[i] == bound[j]) {
        throw Error(ErrorKind::SyntaxError,
                    "variable " + bound[i] + " bound twice in one exists");
      }
    }
  }
  return std::make_shared<Formula>(Formula{Exists{std::move(bound), std::move(body)}});
}

FormulaPtr make_negation(FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Negation{std::move(body)}});
}

bool equal(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<Atom>(&a.node)) {
    const auto& y = std::get<Atom>(b.node);
    return x->predicate == y.predicate && x->args == y.args;
  }
  if (const auto* x = std::get_if<Conjunction>(&a.node)) {
    const auto& y = std::get<Conjunction>(b.node);
    if (x->conjuncts.size() != y.conjuncts.size()) return false;
    for (std::size_t i = 0; i < x->conjuncts.size(); ++i) {
      if (!equal(*x->conjuncts[i], *y.conjuncts[i])) return false;
    }
    return true;
  }
  if (const auto* x = std::get_if<Exists>(&a.node)) {
    const auto& y = std::get<Exists>(b.node);
    return x->bound == y.bound && equal(*x->body, *y.body);
  }
  const auto& x = std::get<Negation>(a.node);
  const auto& y = std::get<Negation>(b.node);
  return equal(*x.body, *y.body);
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  if (const auto* atom = std::get_if<Atom>(&f.node)) {
    for (const LogicTerm& t : atom->args) {
      if (t.is_variable()) out.insert(t.text());
    }
  } else if (const auto* conj = std::get_if<Conjunction>(&f.node)) {
    for (const FormulaPtr& c : conj->conjuncts) {
      auto sub = free_vars(*c);
      out.insert(sub.begin(), sub.end());
    }
  } else if (const auto* ex = std::get_if<Exists>(&f.node)) {
    out = free_vars(*ex->body);
    for (const std::string& v : ex->bound) out.erase(v);
  } else {
    out = free_vars(*std::get<Negation>(f.node).body);
  }
  return out;
}

namespace {

std::string print_term(const LogicTerm& t) {
  return t.is_variable() ? t.text() : "'" + t.text() + "'";
}

// Levels mirror the grammar: 0 formula, 1 conjunction operand, 2 negation
// operand. A node printed below its own level gets parenthesized.
std::string print_at(const Formula& f, int level) {
  if (const auto* atom = std::get_if<Atom>(&f.node)) {
    std::string out = atom->predicate + "(";
    for (std::size_t i = 0; i < atom->args.size(); ++i) {
      if (i) out += ",";
      out += print_term(atom->args[i]);
    }
    return out + ")";
  }
  if (const auto* ex = std::get_if<Exists>(&f.node)) {
    std::string out = "exists";
    for (const std::string& v : ex->bound) out += " " + v;
    out += ". " + print_at(*ex->body, 0);
    return level > 0 ? "(" + out + ")" : out;
  }
  if (const auto* conj = std::get_if<Conjunction>(&f.node)) {
    if (conj->conjuncts.size() == 1) return print_at(*conj->conjuncts[0], level);
    std::string out;
    for (std::size_t i = 0; i < conj->conjuncts.size(); ++i) {
      if (i) out += " & ";
      out += print_at(*conj->conjuncts[i], 2);
    }
    return level > 1 ? "(" + out + ")" : out;
  }
  return "!" + print_at(*std::get<Negation>(f.node).body, 2);
}

}  // namespace

std::string print_formula(const Formula& f) { return print_at(f, 0); }

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = quantified();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) {
    throw Error(ErrorKind::SyntaxError, message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  static bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
  static bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      fail("expected an identifier");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_identifier() {
    skip_space();
    return pos_ < text_.size() && ident_start(text_[pos_]);
  }

  FormulaPtr quantified() {
    skip_space();
    std::size_t mark = pos_;
    if (at_identifier()) {
      std::string word = identifier();
      if (word == "exists") {
        std::vector<std::string> bound;
        while (at_identifier()) bound.push_back(identifier());
        if (bound.empty()) fail("expected at least one bound variable");
        for (std::size_t i = 0; i < bound.size(); ++i) {
          for (std::size_t j = i + 1; j < bound.size(); ++j) {
            if (bound[i] == bound[j]) fail("variable " + bound[i] + " bound twice");
          }
        }
        expect('.', "'.' after the bound variables");
        return make_exists(std::move(bound), quantified());
      }
      pos_ = mark;
    }
    return conjunction();
  }

  FormulaPtr conjunction() {
    std::vector<FormulaPtr> parts;
    parts.push_back(negation());
    while (consume('&')) parts.push_back(negation());
    if (parts.size() == 1) return parts[0];
    return make_conjunction(std::move(parts));
  }

  FormulaPtr negation() {
    if (consume('!')) return make_negation(negation());
    return primary();
  }

  FormulaPtr primary() {
    if (consume('(')) {
      FormulaPtr f = quantified();
      expect(')', "')'");
      return f;
    }
    return atom();
  }

  FormulaPtr atom() {
    skip_space();
    if (!at_identifier()) fail("expected a predicate symbol");
    std::string pred = identifier();
    if (pred == "exists") fail("'exists' is a keyword, not a predicate");
    expect('(', "'(' after the predicate symbol");
    std::vector<LogicTerm> args;
    args.push_back(term());
    while (true) {
      skip_space();
      if (consume(',')) {
        args.push_back(term());
        continue;
      }
      if (consume(')')) break;
      fail("expected ',' or ')' in the argument list");
    }
    return make_atom(std::move(pred), std::move(args));
  }

  LogicTerm term() {
    skip_space();
    if (consume('\'')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '\'') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated constant");
      std::string lit(text_.substr(start, pos_ - start));
      ++pos_;
      return LogicTerm::constant(std::move(lit));
    }
    if (!at_identifier()) fail("expected a variable or a quoted constant");
    std::string name = identifier();
    if (name == "exists") fail("'exists' is a keyword, not a variable");
    return LogicTerm::variable(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return FormulaParser(text).parse();
}

}  // namespace etr::logic
