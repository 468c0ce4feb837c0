#include "etr/algebra.hpp"

namespace etr::algebra {

namespace {

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
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

  bool consume_join() {
    skip_space();
    if (text_.substr(pos_).starts_with("|x|")) {
      pos_ += 3;
      return true;
    }
    return false;
  }

  static bool word_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  std::string word() {
    skip_space();
    if (pos_ >= text_.size() || !word_char(text_[pos_])) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_word() {
    skip_space();
    return pos_ < text_.size() && word_char(text_[pos_]);
  }

  ExprPtr expr() {
    ExprPtr left = joinexpr();
    for (;;) {
      skip_space();
      if (consume('&')) {
        left = make_set_op(SetOpKind::Intersect, left, joinexpr());
      } else if (consume('+')) {
        left = make_set_op(SetOpKind::Union, left, joinexpr());
      } else if (consume('-')) {
        left = make_set_op(SetOpKind::Difference, left, joinexpr());
      } else {
        return left;
      }
    }
  }

  ExprPtr joinexpr() {
    std::vector<ExprPtr> parts;
    parts.push_back(unary());
    while (consume_join()) parts.push_back(unary());
    if (parts.size() == 1) return parts[0];
    return make_join(std::move(parts));
  }

  ExprPtr unary() {
    if (consume('~')) return make_complement(unary());
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (consume(':')) e = make_filter(e, pattern());
    return e;
  }

  ExprPtr primary() {
    if (consume('(')) {
      ExprPtr e = expr();
      expect(')', "')'");
      return e;
    }
    std::string name = word();
    // "project" and "cyl" act as keywords only when a brace follows, so
    // relations carrying those names stay reachable.
    if ((name == "project" || name == "cyl") && peek('{')) {
      expect('{', "'{'");
      std::vector<Index> names;
      if (!peek('}')) {
        names.emplace_back(word());
        while (consume(',')) names.emplace_back(word());
      }
      expect('}', "'}'");
      expect('(', "'('");
      ExprPtr child = expr();
      expect(')', "')'");
      if (name == "project") {
        return make_project(child, IndexSet(names.begin(), names.end()));
      }
      return make_cylinder(child, std::move(names));
    }
    return make_base(std::move(name));
  }

  PatternSpec pattern() {
    PatternSpec spec;
    std::vector<FiniteMap<Index, SynTerm>::Entry> entries;
    skip_space();
    if (consume('[')) {
      std::vector<SynTerm> terms;
      terms.push_back(term());
      while (consume(',')) terms.push_back(term());
      expect(']', "']'");
      spec.positional = std::move(terms);
      return spec;
    } else if (consume('{')) {
      do {
        Index idx(word());
        expect(':', "':' after the index name");
        entries.emplace_back(std::move(idx), term());
      } while (consume(','));
      expect('}', "'}'");
    } else {
      fail("expected '[' or '{' to open a pattern");
    }
    try {
      spec.entries = FiniteMap<Index, SynTerm>(std::move(entries));
    } catch (const std::invalid_argument&) {
      fail("pattern names an index twice");
    }
    return spec;
  }

  SynTerm term() {
    skip_space();
    if (consume('\'')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '\'') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated literal");
      std::string lit(text_.substr(start, pos_ - start));
      ++pos_;
      return SynTerm::lit(std::move(lit));
    }
    if (!at_word()) fail("expected an indeterminate or a quoted literal");
    return SynTerm::var(Index(word()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_algebra(std::string_view text) {
  return AlgebraParser(text).parse();
}

}  // namespace etr::algebra
