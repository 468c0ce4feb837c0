#include "etr/algebra.hpp"

namespace etr::algebra {

ExprPtr make_base(std::string name) {
  return std::make_shared<Expr>(Expr{Base{std::move(name)}});
}
ExprPtr make_filter(ExprPtr child, PatternSpec pattern) {
  return std::make_shared<Expr>(Expr{Filter{std::move(child), std::move(pattern)}});
}
ExprPtr make_join(std::vector<ExprPtr> children) {
  if (children.size() < 2) {
    throw Error(ErrorKind::SyntaxError, "join needs at least two operands");
  }
  return std::make_shared<Expr>(Expr{Join{std::move(children)}});
}
ExprPtr make_project(ExprPtr child, IndexSet indexes) {
  return std::make_shared<Expr>(Expr{Project{std::move(child), std::move(indexes)}});
}
ExprPtr make_complement(ExprPtr child) {
  return std::make_shared<Expr>(Expr{Complement{std::move(child)}});
}
ExprPtr make_set_op(SetOpKind kind, ExprPtr left, ExprPtr right) {
  return std::make_shared<Expr>(Expr{SetOp{kind, std::move(left), std::move(right)}});
}
ExprPtr make_cylinder(ExprPtr child, std::vector<Index> attrs) {
  return std::make_shared<Expr>(Expr{Cylinder{std::move(child), std::move(attrs)}});
}

namespace {

// Turn a pattern spec into a typed pattern against the child signature.
// Explicit typing wins; otherwise each variable takes the domain of the
// indexes it occupies, which must agree.
Pattern resolve_pattern(const PatternSpec& spec, const Signature& tau,
                        const DomainRegistry& registry) {
  std::vector<FiniteMap<Index, Term>::Entry> entries;
  FiniteMap<Index, DomainId> typing = spec.typing.value_or(FiniteMap<Index, DomainId>{});
  for (const auto& [idx, term] : spec.entries) {
    const DomainId* expected = tau.find(idx);
    if (expected == nullptr) {
      throw Error(ErrorKind::IncompatiblePattern,
                  "pattern names index " + idx.name + " absent from the relation");
    }
    if (term.is_var()) {
      if (!spec.typing.has_value()) {
        if (const DomainId* prior = typing.find(term.name())) {
          if (*prior != *expected) {
            throw Error(ErrorKind::IncompatiblePattern,
                        term.name().name + " occupies indexes of domains " +
                            prior->name + " and " + expected->name);
          }
        } else {
          typing.set(term.name(), *expected);
        }
      }
      entries.emplace_back(idx, Term::indeterminate(term.name()));
    } else if (term.is_lit()) {
      const Domain& dom = registry.domain(*expected);
      if (!dom.contains(term.literal())) {
        throw Error(ErrorKind::IncompatiblePattern,
                    "'" + term.literal() + "' is not a value of domain " + dom.id.name +
                        " at index " + idx.name);
      }
      entries.emplace_back(idx, Term::ground(Value{*expected, term.literal()}));
    } else {
      entries.emplace_back(idx, Term::ground(term.value()));
    }
  }
  return Pattern::make(FiniteMap<Index, Term>(std::move(entries)), std::move(typing));
}

Relation eval_join(const std::vector<Relation>& parts, const EvalContext& ctx) {
  Relation acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = ctx.join_mode == JoinMode::Direct
              ? join(acc, parts[i])
              : join_by_cylinders(acc, parts[i], *ctx.registry);
  }
  return acc;
}

}  // namespace

Relation evaluate(const Expr& expr, const EvalContext& ctx) {
  if (const auto* base = std::get_if<Base>(&expr.node)) {
    return ctx.resolve(base->name);
  }
  if (const auto* f = std::get_if<Filter>(&expr.node)) {
    Relation child = evaluate(*f->child, ctx);
    PatternSpec spec = f->pattern;
    if (spec.positional) {
      // Bind the terms to the child's canonical column order.
      std::vector<Index> order;
      const auto* base = std::get_if<Base>(&f->child->node);
      if (base != nullptr && ctx.column_order) {
        if (auto declared = ctx.column_order(base->name)) order = *declared;
      }
      if (order.empty()) {
        for (const auto& [idx, dom] : child.signature()) order.push_back(idx);
      }
      if (order.size() != spec.positional->size()) {
        throw Error(ErrorKind::IncompatiblePattern,
                    "pattern lists " + std::to_string(spec.positional->size()) +
                        " terms but the relation has " + std::to_string(order.size()) +
                        " columns");
      }
      std::vector<FiniteMap<Index, SynTerm>::Entry> entries;
      for (std::size_t i = 0; i < order.size(); ++i) {
        entries.emplace_back(order[i], (*spec.positional)[i]);
      }
      spec.entries = FiniteMap<Index, SynTerm>(std::move(entries));
      spec.positional.reset();
    }
    Pattern p = resolve_pattern(spec, child.signature(), *ctx.registry);
    return filter(child, p, *ctx.registry);
  }
  if (const auto* j = std::get_if<Join>(&expr.node)) {
    std::vector<Relation> parts;
    parts.reserve(j->children.size());
    for (const ExprPtr& c : j->children) parts.push_back(evaluate(*c, ctx));
    return eval_join(parts, ctx);
  }
  if (const auto* pr = std::get_if<Project>(&expr.node)) {
    return project(evaluate(*pr->child, ctx), pr->indexes);
  }
  if (const auto* c = std::get_if<Complement>(&expr.node)) {
    return complement(evaluate(*c->child, ctx), *ctx.registry);
  }
  if (const auto* s = std::get_if<SetOp>(&expr.node)) {
    Relation left = evaluate(*s->left, ctx);
    Relation right = evaluate(*s->right, ctx);
    if (s->kind == SetOpKind::Intersect) return intersect(left, right);
    if (s->kind == SetOpKind::Union) return unite(left, right);
    return difference(left, right);
  }
  const auto& cyl = std::get<Cylinder>(expr.node);
  if (!ctx.cylinder_signature) {
    throw Error(ErrorKind::SyntaxError, "cyl{} is not available in this context");
  }
  return cylinder(evaluate(*cyl.child, ctx), ctx.cylinder_signature(cyl.attrs),
                  *ctx.registry);
}

ExprPtr compile(const logic::Formula& f, const logic::Interpretation& m) {
  if (const auto* atom = std::get_if<logic::Atom>(&f.node)) {
    const Relation& meaning = m.predicate(atom->predicate);
    if (meaning.signature().size() != atom->args.size()) {
      throw Error(ErrorKind::ArityMismatch,
                  atom->predicate + " expects " +
                      std::to_string(meaning.signature().size()) + " arguments, got " +
                      std::to_string(atom->args.size()));
    }
    std::vector<FiniteMap<Index, SynTerm>::Entry> entries;
    FiniteMap<Index, DomainId> typing;
    for (std::size_t i = 0; i < atom->args.size(); ++i) {
      const logic::LogicTerm& t = atom->args[i];
      if (t.is_variable()) {
        entries.emplace_back(Index(std::to_string(i)), SynTerm::var(Index(t.text())));
        typing.set(Index(t.text()), m.domain().id);
      } else {
        entries.emplace_back(Index(std::to_string(i)), SynTerm::ground(m.constant(t.text())));
      }
    }
    PatternSpec spec;
    spec.entries = FiniteMap<Index, SynTerm>(std::move(entries));
    spec.typing = std::move(typing);
    return make_filter(make_base(atom->predicate), std::move(spec));
  }
  if (const auto* conj = std::get_if<logic::Conjunction>(&f.node)) {
    std::vector<ExprPtr> parts;
    parts.reserve(conj->conjuncts.size());
    for (const logic::FormulaPtr& c : conj->conjuncts) parts.push_back(compile(*c, m));
    if (parts.size() == 1) return parts[0];
    return make_join(std::move(parts));
  }
  if (const auto* ex = std::get_if<logic::Exists>(&f.node)) {
    // One projection onto X \ Y, also when some bound variable is not free
    // in the body.
    std::set<std::string> keep = logic::free_vars(*ex->body);
    for (const std::string& v : ex->bound) keep.erase(v);
    IndexSet indexes;
    for (const std::string& v : keep) indexes.insert(Index(v));
    return make_project(compile(*ex->body, m), std::move(indexes));
  }
  return make_complement(compile(*std::get<logic::Negation>(f.node).body, m));
}

Relation evaluate_logic(const logic::Formula& f, const logic::Interpretation& m,
                        JoinMode join_mode) {
  ExprPtr expr = compile(f, m);
  EvalContext ctx;
  ctx.resolve = [&m](const std::string& name) -> const Relation& {
    return m.predicate(name);
  };
  ctx.registry = &m.registry();
  ctx.join_mode = join_mode;
  return evaluate(*expr, ctx);
}

}  // namespace etr::algebra
