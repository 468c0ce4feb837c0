#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "etr/algebra.hpp"
#include "etr/catalog.hpp"
#include "etr/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitOracle = 3;

struct Options {
  std::string scheme;
  std::string data;
  std::string mode = "logic";
  std::string query;
  std::string batch;
  std::string logic_domain;
  std::string delimiter = ",";
  bool count = false;
  bool oracle_check = false;
};

int exit_code_for(const etr::Error& e) {
  if (etr::is_syntax_class(e.kind())) return kExitParse;
  if (e.kind() == etr::ErrorKind::OracleMismatch) return kExitOracle;
  return kExitSemantic;
}

struct QueryResult {
  std::string output;  // table or count text
  std::string diagnostic;
  int code = kExitOk;
};

etr::Relation run_algebra(const std::string& text, const etr::catalog::Instance& instance,
                          bool oracle_check) {
  etr::algebra::ExprPtr expr = etr::algebra::parse_algebra(text);

  etr::algebra::EvalContext ctx;
  ctx.resolve = [&instance](const std::string& name) -> const etr::Relation& {
    return instance.relation(name);
  };
  ctx.registry = &instance.scheme.registry;
  ctx.cylinder_signature = [&instance](const std::vector<etr::Index>& attrs) {
    std::vector<etr::Signature::Entry> entries;
    for (const etr::Index& a : attrs) {
      entries.emplace_back(a, instance.scheme.attribute_domain(a));
    }
    return etr::Signature(std::move(entries));
  };
  ctx.column_order =
      [&instance](const std::string& name) -> std::optional<std::vector<etr::Index>> {
    if (const auto* attrs = instance.scheme.relation_attrs(name)) return *attrs;
    for (const auto& b : instance.scheme.builtins) {
      if (b.name == name) return std::vector<etr::Index>{b.left, b.right};
    }
    return std::nullopt;
  };

  etr::Relation result = etr::algebra::evaluate(*expr, ctx);
  if (oracle_check) {
    ctx.join_mode = etr::algebra::JoinMode::ByCylinders;
    etr::Relation definitional = etr::algebra::evaluate(*expr, ctx);
    if (!(definitional == result)) {
      throw etr::Error(etr::ErrorKind::OracleMismatch,
                       "direct evaluation disagrees with the cylinder-definition route");
    }
  }
  return result;
}

etr::Relation run_logic(const std::string& text, const etr::logic::Interpretation& m,
                        bool oracle_check) {
  etr::logic::FormulaPtr f = etr::logic::parse_formula(text);
  etr::Relation result = etr::algebra::evaluate_logic(*f, m);
  if (oracle_check) {
    etr::Relation oracle = etr::logic::denote_oracle(m, *f);
    if (!(oracle == result)) {
      throw etr::Error(etr::ErrorKind::OracleMismatch,
                       "compiled algebra disagrees with the satisfaction-semantics oracle");
    }
  }
  return result;
}

QueryResult run_query(const std::string& text, const Options& opt,
                      const etr::catalog::Instance& instance,
                      const std::optional<etr::logic::Interpretation>& interp,
                      const std::string& interp_error) {
  QueryResult out;
  try {
    etr::Relation result = [&] {
      if (opt.mode == "algebra") return run_algebra(text, instance, opt.oracle_check);
      if (!interp) {
        throw etr::Error(etr::ErrorKind::MixedDomains, interp_error);
      }
      return run_logic(text, *interp, opt.oracle_check);
    }();
    out.output = opt.count ? etr::render_count(result) : etr::render_table(result);
  } catch (const etr::Error& e) {
    out.code = exit_code_for(e);
    out.diagnostic = e.what();
    out.output = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.code = kExitSemantic;
    out.diagnostic = e.what();
    out.output = std::string("error: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;

  CLI::App app{"ETR: an in-memory relational engine with predicate-calculus "
               "and relational-algebra query front ends"};
  app.add_option("--scheme", opt.scheme, "scheme file")
      ->required()
      ->envname("ETR_SCHEME");
  app.add_option("--data", opt.data, "directory of <relation>.csv data files")
      ->envname("ETR_DATA");
  app.add_option("--mode", opt.mode, "query language: logic or algebra")
      ->check(CLI::IsMember({"logic", "algebra"}))
      ->envname("ETR_MODE");
  app.add_option("--query", opt.query, "query text")->envname("ETR_QUERY");
  app.add_option("--batch", opt.batch, "file with one query per line")
      ->envname("ETR_BATCH");
  app.add_option("--logic-domain", opt.logic_domain,
                 "domain for the logic front end (defaults to the sole domain)")
      ->envname("ETR_LOGIC_DOMAIN");
  app.add_option("--delimiter", opt.delimiter, "data file field delimiter")
      ->envname("ETR_DELIMITER");
  app.add_flag("--count", opt.count, "print tuple counts instead of tables")
      ->envname("ETR_COUNT");
  app.add_flag("--oracle-check", opt.oracle_check,
               "cross-check results against the independent evaluation route")
      ->envname("ETR_ORACLE_CHECK");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  if (opt.query.empty() == opt.batch.empty()) {
    std::cerr << "error: exactly one of --query and --batch is required\n";
    return kExitParse;
  }
  if (opt.delimiter.size() != 1) {
    std::cerr << "error: --delimiter must be a single character\n";
    return kExitParse;
  }

  etr::catalog::Instance instance{{}, {}};
  try {
    std::optional<std::filesystem::path> data_dir;
    if (!opt.data.empty()) data_dir = opt.data;
    instance = etr::catalog::load_instance(opt.scheme, data_dir, opt.delimiter[0]);
  } catch (const etr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }

  // The interpretation is shared by every logic query; failure to build it
  // only matters once a logic query actually runs.
  std::optional<etr::logic::Interpretation> interp;
  std::string interp_error;
  if (opt.mode == "logic") {
    try {
      std::optional<std::string> domain_name;
      if (!opt.logic_domain.empty()) domain_name = opt.logic_domain;
      interp = etr::catalog::as_interpretation(instance, domain_name);
    } catch (const etr::Error& e) {
      interp_error = e.what();
    }
  }

  std::vector<std::string> queries;
  if (!opt.query.empty()) {
    queries.push_back(opt.query);
  } else {
    std::ifstream in(opt.batch);
    if (!in) {
      std::cerr << "error: cannot open batch file " << opt.batch << "\n";
      return kExitParse;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      queries.push_back(line);
    }
  }

  // Queries only read the shared immutable instance, so a batch evaluates
  // them concurrently; output order stays the batch order.
  std::vector<std::future<QueryResult>> futures;
  futures.reserve(queries.size());
  for (const std::string& q : queries) {
    futures.push_back(std::async(std::launch::async, [&, q] {
      return run_query(q, opt, instance, interp, interp_error);
    }));
  }

  int exit_code = kExitOk;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    QueryResult r = futures[i].get();
    if (i) std::cout << "\n";
    std::cout << r.output;
    if (!r.diagnostic.empty()) {
      std::cerr << "query " << (i + 1) << ": " << r.diagnostic << "\n";
    }
    exit_code = std::max(exit_code, r.code);
  }
  return exit_code;
}
