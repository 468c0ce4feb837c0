#include <doctest.h>

#include <random>

#include "etr/algebra.hpp"
#include "etr/interpretation.hpp"
#include "support/builders.hpp"
#include "support/random_instances.hpp"

using namespace etr;
using namespace etr::logic;
using test_support::numeric_sig;
using test_support::row;
using test_support::seq;
using test_support::sequences;

namespace {

const DomainId kPerson("person");

Interpretation parent_child() {
  Domain d{kPerson, {"mary", "john", "alan", "joan"}};
  std::map<std::string, Relation> preds;
  preds.emplace("pc", sequences(kPerson, 2,
                                {{"mary", "john"}, {"john", "alan"}, {"mary", "joan"}}));
  return Interpretation::make(d, std::move(preds));
}

const DomainId kAbc("abc");

Interpretation rho_sigma() {
  Domain d{kAbc, {"a", "b", "c"}};
  std::map<std::string, Relation> preds;
  preds.emplace("r", sequences(kAbc, 2, {{"a", "c"}, {"c", "b"}, {"b", "a"}, {"b", "b"}}));
  preds.emplace("s", sequences(kAbc, 2, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  return Interpretation::make(d, std::move(preds));
}

Assignment bind(std::initializer_list<std::pair<std::string, std::string>> pairs,
                const DomainId& dom) {
  std::vector<Assignment::Entry> entries;
  for (const auto& [var, lit] : pairs) entries.emplace_back(Index(var), Value{dom, lit});
  return Assignment(std::move(entries));
}

}  // namespace

TEST_CASE("parser accepts the grammar") {
  FormulaPtr f = parse_formula("exists y. pc(x,y) & pc(y,z)");
  const auto* ex = std::get_if<Exists>(&f->node);
  REQUIRE(ex != nullptr);
  CHECK(ex->bound == std::vector<std::string>{"y"});
  const auto* conj = std::get_if<Conjunction>(&ex->body->node);
  REQUIRE(conj != nullptr);
  CHECK(conj->conjuncts.size() == 2);

  FormulaPtr neg = parse_formula("!r(x,x)");
  const auto* n = std::get_if<Negation>(&neg->node);
  REQUIRE(n != nullptr);
  CHECK(std::get_if<Atom>(&n->body->node) != nullptr);

  // "!" binds tighter than "&"
  FormulaPtr mixed = parse_formula("!p(x) & q(x)");
  CHECK(std::get_if<Conjunction>(&mixed->node) != nullptr);

  FormulaPtr with_const = parse_formula("q(x,'a')");
  const auto* atom = std::get_if<Atom>(&with_const->node);
  REQUIRE(atom != nullptr);
  CHECK(atom->args[1] == LogicTerm::constant("a"));

  FormulaPtr multi = parse_formula("exists x y. p(x,y)");
  CHECK(std::get<Exists>(multi->node).bound.size() == 2);
}

TEST_CASE("parser rejects malformed input with a position") {
  try {
    parse_formula("r(x y)");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.position().has_value());
  }
  CHECK_THROWS_AS(parse_formula(""), Error);
  CHECK_THROWS_AS(parse_formula("p(x) &"), Error);
  CHECK_THROWS_AS(parse_formula("exists . p(x)"), Error);
  CHECK_THROWS_AS(parse_formula("exists y y. p(y)"), Error);
  CHECK_THROWS_AS(parse_formula("p(x) extra"), Error);
  CHECK_THROWS_AS(parse_formula("p('unterminated)"), Error);
}

TEST_CASE("free variables") {
  CHECK(free_vars(*parse_formula("pc(x,y) & pc(y,z)")) ==
        std::set<std::string>{"x", "y", "z"});
  CHECK(free_vars(*parse_formula("exists y. pc(x,y) & pc(y,z)")) ==
        std::set<std::string>{"x", "z"});
  CHECK(free_vars(*parse_formula("p('a','b')")).empty());
}

TEST_CASE("printer round-trips random formulas") {
  std::mt19937 rng(41);
  for (int round = 0; round < 300; ++round) {
    test_support::LogicSpace space = test_support::random_logic_space(rng);
    FormulaPtr f = test_support::random_formula(rng, space, 4);
    FormulaPtr back = parse_formula(print_formula(*f));
    CHECK(equal(*f, *back));
  }
}

TEST_CASE("satisfaction over the parent-child model") {
  Interpretation m = parent_child();
  FormulaPtr grand = parse_formula("exists y. pc(x,y) & pc(y,z)");

  CHECK(satisfies(m, bind({{"x", "mary"}, {"z", "alan"}}, kPerson), *grand));
  CHECK(!satisfies(m, bind({{"x", "john"}, {"z", "john"}}, kPerson), *grand));

  FormulaPtr direct = parse_formula("pc(x,y)");
  Assignment a = bind({{"x", "mary"}, {"y", "john"}}, kPerson);
  CHECK(satisfies(m, a, *direct));
  CHECK(!satisfies(m, a, *make_negation(direct)));

  try {
    satisfies(m, Assignment{}, *direct);
    FAIL("expected UnboundVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
  CHECK_THROWS_AS(satisfies(m, a, *parse_formula("nosuch(x)")), Error);
  CHECK_THROWS_AS(satisfies(m, a, *parse_formula("pc(x,y,y)")), Error);
  CHECK_THROWS_AS(satisfies(m, a, *parse_formula("pc(x,'nobody')")), Error);
}

TEST_CASE("denotation oracle") {
  Interpretation m = parent_child();

  // closed satisfied sentence denotes the unit relation
  Relation yes = denote_oracle(m, *parse_formula("exists x y. pc(x,y)"));
  CHECK(yes.signature() == Signature{});
  CHECK(yes.extent() == std::set<Tuple>{Tuple{}});

  Relation no = denote_oracle(m, *parse_formula("pc('alan','alan')"));
  CHECK(no.extent().empty());

  Interpretation rs = rho_sigma();
  Relation rxy = denote_oracle(rs, *parse_formula("r(x,y)"));
  CHECK(rxy.size() == 4);
  CHECK(rxy.signature() == Signature({{Index("x"), kAbc}, {Index("y"), kAbc}}));

  Relation grand = denote_oracle(m, *parse_formula("exists y. pc(x,y) & pc(y,z)"));
  Signature xz({{Index("x"), kPerson}, {Index("z"), kPerson}});
  CHECK(grand == Relation(xz, {row(xz, {{"x", "mary"}, {"z", "alan"}})}));
}

TEST_CASE("oracle ignores padding in assignments") {
  Interpretation m = parent_child();
  FormulaPtr f = parse_formula("pc(x,y)");
  Assignment minimal = bind({{"x", "mary"}, {"y", "john"}}, kPerson);
  Assignment padded = bind({{"x", "mary"}, {"y", "john"}, {"w", "joan"}}, kPerson);
  CHECK(satisfies(m, minimal, *f) == satisfies(m, padded, *f));
}

TEST_CASE("compile maps each connective to its operation") {
  Interpretation rs = rho_sigma();

  algebra::ExprPtr conj = algebra::compile(*parse_formula("r(x,y) & s(y,z)"), rs);
  const auto* join_node = std::get_if<algebra::Join>(&conj->node);
  REQUIRE(join_node != nullptr);
  CHECK(join_node->children.size() == 2);
  for (const auto& child : join_node->children) {
    const auto* filt = std::get_if<algebra::Filter>(&child->node);
    REQUIRE(filt != nullptr);
    CHECK(std::get_if<algebra::Base>(&filt->child->node) != nullptr);
  }

  algebra::ExprPtr ex = algebra::compile(*parse_formula("exists y. r(x,y) & r(y,z)"), rs);
  const auto* proj = std::get_if<algebra::Project>(&ex->node);
  REQUIRE(proj != nullptr);
  CHECK(proj->indexes == IndexSet{Index("x"), Index("z")});

  algebra::ExprPtr neg = algebra::compile(*parse_formula("!r(x,x)"), rs);
  CHECK(std::get_if<algebra::Complement>(&neg->node) != nullptr);

  CHECK_THROWS_AS(algebra::compile(*parse_formula("nosuch(x)"), rs), Error);
  CHECK_THROWS_AS(algebra::compile(*parse_formula("r(x)"), rs), Error);
  CHECK_THROWS_AS(algebra::compile(*parse_formula("r(x,'zz')"), rs), Error);
}

TEST_CASE("algebra parser shapes and precedence") {
  algebra::ExprPtr grand = algebra::parse_algebra("project{x,z}(pc:[x,y] |x| pc:[y,z])");
  const auto* proj = std::get_if<algebra::Project>(&grand->node);
  REQUIRE(proj != nullptr);
  CHECK(proj->indexes == IndexSet{Index("x"), Index("z")});
  const auto* join_node = std::get_if<algebra::Join>(&proj->child->node);
  REQUIRE(join_node != nullptr);
  CHECK(join_node->children.size() == 2);
  const auto* filt = std::get_if<algebra::Filter>(&join_node->children[0]->node);
  REQUIRE(filt != nullptr);
  REQUIRE(filt->pattern.positional.has_value());
  CHECK(filt->pattern.positional->size() == 2);
  CHECK(std::get_if<algebra::Base>(&filt->child->node) != nullptr);

  // '~' binds tighter than '|x|', which binds tighter than the set operators
  algebra::ExprPtr mixed = algebra::parse_algebra("~a |x| b & c");
  const auto* setop = std::get_if<algebra::SetOp>(&mixed->node);
  REQUIRE(setop != nullptr);
  CHECK(setop->kind == algebra::SetOpKind::Intersect);
  const auto* left_join = std::get_if<algebra::Join>(&setop->left->node);
  REQUIRE(left_join != nullptr);
  CHECK(std::get_if<algebra::Complement>(&left_join->children[0]->node) != nullptr);

  CHECK_THROWS_AS(algebra::parse_algebra("a |x|"), Error);
  CHECK_THROWS_AS(algebra::parse_algebra("a:[x"), Error);
  CHECK_THROWS_AS(algebra::parse_algebra("project{x}(a"), Error);
  CHECK_THROWS_AS(algebra::parse_algebra(""), Error);
  CHECK_THROWS_AS(algebra::parse_algebra("a:{i: x, i: y}"), Error);

  // bare "project" and "cyl" are ordinary relation names
  algebra::ExprPtr bare = algebra::parse_algebra("project |x| cyl");
  const auto* bare_join = std::get_if<algebra::Join>(&bare->node);
  REQUIRE(bare_join != nullptr);
  CHECK(std::get<algebra::Base>(bare_join->children[0]->node).name == "project");
}

TEST_CASE("parsers reject garbage without crashing") {
  std::mt19937 rng(59);
  const std::string alphabet = "px y,()'&!.[]{}:|~0a_\"\\\t";
  for (int round = 0; round < 3000; ++round) {
    std::string text;
    const int len = test_support::pick(rng, 0, 24);
    for (int i = 0; i < len; ++i) {
      text.push_back(alphabet[test_support::pick(rng, 0, static_cast<int>(alphabet.size()) - 1)]);
    }
    try {
      parse_formula(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
    }
    try {
      algebra::parse_algebra(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
    }
  }
}

TEST_CASE("the worked join pipeline over rho and sigma") {
  Interpretation rs = rho_sigma();
  FormulaPtr f = parse_formula("r(x,y) & s(y,z)");
  Relation named = algebra::evaluate_logic(*f, rs);

  // rename {x,y,z} back to numeric indexes and compare with the printed rows
  FiniteMap<Index, Index> to_num(
      {{Index("x"), Index("0")}, {Index("y"), Index("1")}, {Index("z"), Index("2")}});
  Relation numeric = rename(named, to_num, rs.registry());

  Relation expected = sequences(kAbc, 3,
                                {{"a", "c", "a"}, {"c", "b", "c"}, {"b", "a", "b"}, {"b", "b", "c"}});
  CHECK(numeric == expected);

  CHECK(named == denote_oracle(rs, *f));
}

TEST_CASE("compiled evaluation agrees with the oracle on the grandparent query") {
  Interpretation m = parent_child();
  FormulaPtr f = parse_formula("exists y. pc(x,y) & pc(y,z)");
  CHECK(algebra::evaluate_logic(*f, m) == denote_oracle(m, *f));
  CHECK(algebra::evaluate_logic(*f, m, algebra::JoinMode::ByCylinders) ==
        denote_oracle(m, *f));
}

TEST_CASE("double negation and vacuous quantification") {
  Interpretation m = parent_child();
  FormulaPtr f = parse_formula("pc(x,y)");
  FormulaPtr nn = make_negation(make_negation(f));
  CHECK(algebra::evaluate_logic(*nn, m) == algebra::evaluate_logic(*f, m));

  FormulaPtr vac = parse_formula("exists w. pc(x,y)");
  CHECK(algebra::evaluate_logic(*vac, m) == algebra::evaluate_logic(*f, m));
  CHECK(denote_oracle(m, *vac) == denote_oracle(m, *f));
}

TEST_CASE("multi-variable exists equals nested exists") {
  Interpretation m = parent_child();
  FormulaPtr joint = parse_formula("exists x z. pc(x,y) & pc(y,z)");
  FormulaPtr nested = parse_formula("exists x. exists z. pc(x,y) & pc(y,z)");
  CHECK(algebra::evaluate_logic(*joint, m) == algebra::evaluate_logic(*nested, m));
  CHECK(denote_oracle(m, *joint) == denote_oracle(m, *nested));
}

TEST_CASE("closed-formula bridge") {
  Interpretation m = parent_child();
  for (const char* text : {"exists x y. pc(x,y)", "pc('mary','alan')",
                           "!pc('mary','alan')", "exists x. pc(x,x)"}) {
    FormulaPtr f = parse_formula(text);
    CHECK(free_vars(*f).empty());
    CHECK(denote_oracle(m, *f).extent().empty() == !satisfies(m, Assignment{}, *f));
    CHECK(algebra::evaluate_logic(*f, m) == denote_oracle(m, *f));
  }
  // an unsatisfiable sentence evaluates to the empty extent
  Relation unsat = algebra::evaluate_logic(*parse_formula("pc('alan','mary')"), m);
  CHECK(unsat.signature() == Signature{});
  CHECK(unsat.extent().empty());
}

TEST_CASE("compiler equals oracle across random instances") {
  std::mt19937 rng(47);
  for (int round = 0; round < 200; ++round) {
    test_support::LogicSpace space = test_support::random_logic_space(rng);
    FormulaPtr f = test_support::random_formula(rng, space, 4);
    Relation compiled = algebra::evaluate_logic(*f, space.m);
    Relation oracle = denote_oracle(space.m, *f);
    if (!(compiled == oracle)) {
      CAPTURE(print_formula(*f));
      CHECK(compiled == oracle);
      break;
    }
  }
}

TEST_CASE("joins of non-atomic conjuncts still match the oracle") {
  std::mt19937 rng(53);
  int used = 0;
  for (int round = 0; round < 500 && used < 120; ++round) {
    test_support::LogicSpace space = test_support::random_logic_space(rng);
    std::vector<FormulaPtr> parts;
    const int n = test_support::pick(rng, 2, 3);
    bool nontrivial = false;
    for (int i = 0; i < n; ++i) {
      FormulaPtr part = test_support::random_formula(rng, space, 2);
      if (std::get_if<Atom>(&part->node) == nullptr) nontrivial = true;
      parts.push_back(std::move(part));
    }
    if (!nontrivial) continue;
    ++used;
    FormulaPtr conj = make_conjunction(std::move(parts));
    CHECK(algebra::evaluate_logic(*conj, space.m) == denote_oracle(space.m, *conj));
  }
  CHECK(used >= 100);
}
