#include "swapdeon/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapdeon/algebra.hpp"
#include "swapdeon/error.hpp"
#include "swapdeon/formula.hpp"
#include "swapdeon/logics.hpp"
#include "swapdeon/models.hpp"
#include "swapdeon/proofs.hpp"
#include "swapdeon/search.hpp"

namespace swapdeon {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string logic;
  std::optional<int> n;
  bool json = false;
  bool full = false;
  int max_worlds = 2;
  long timeout_ms = 10000;
  bool deterministic = true;
  int threads = 1;
  std::vector<std::string> disabled;
  std::vector<std::string> premises;
  std::string conclusion;
  std::string op;
  std::string file;
  std::vector<std::string> formulas;
};

// Input problems that are not parse errors of the command line itself.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Logic select_logic(const Options& o) {
  if (o.logic.empty()) throw UsageError("--logic is required");
  Logic logic = get_logic(o.logic, o.n);
  for (const std::string& id : o.disabled) {
    auto r = parse_restriction(id);
    if (!r) throw UsageError("unknown restriction \"" + id + "\"");
    logic = logic.without(*r);
  }
  return logic;
}

std::vector<std::string> disabled_ids(const Options& o) {
  std::vector<std::string> out;
  for (const std::string& id : o.disabled) {
    out.push_back(restriction_id(*parse_restriction(id)));
  }
  return out;
}

std::string counted(std::size_t k, const std::string& noun) {
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count());
}

int cmd_parse(const Options& o, std::ostream& out) {
  Dialect dialect = Dialect::primitive(Signature::Sigma);
  if (!o.logic.empty()) dialect = select_logic(o).dialect();
  const auto start = Clock::now();
  Formula f = parse(o.formulas.at(0), dialect);
  std::string text =
      render(f, o.full ? RenderMode::FullyParenthesized : RenderMode::Minimal);
  if (o.json) {
    json doc;
    doc["verdict"] = "ok";
    doc["formula"] = text;
    doc["elapsed_ms"] = elapsed_ms(start);
    out << doc.dump() << "\n";
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_tables(const Options& o, std::ostream& out) {
  Logic logic = select_logic(o);
  const Algebra& alg = logic.algebra();
  std::vector<Op> ops;
  if (!o.op.empty()) {
    auto op = parse_op(o.op);
    if (!op) throw UsageError("unknown operator \"" + o.op + "\"");
    ops.push_back(*op);
  } else {
    ops = {Op::And, Op::Or, Op::Imp, Op::Neg};
    if (alg.has_circ()) ops.push_back(Op::Circ);
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops.size() > 1) out << (i ? "\n" : "") << "# " << op_name(ops[i]) << "\n";
    out << alg.truth_table(ops[i]);
  }
  return 0;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  Logic logic = select_logic(o);
  if (o.json) {
    json list = json::array();
    for (const AxiomSchema& s : logic.axioms()) {
      list.push_back({{"id", s.id}, {"schema", render(s.templ)}});
    }
    out << json{{"verdict", "ok"}, {"logic", logic.name()}, {"axioms", list}}
               .dump()
        << "\n";
    return 0;
  }
  for (const AxiomSchema& s : logic.axioms()) {
    out << s.id << ": " << render(s.templ) << "\n";
  }
  return 0;
}

std::optional<Logic> model_logic(const Options& o, const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ModelError("malformed model JSON");
  if (doc.contains("model")) doc = doc["model"];
  Options copy = o;
  if (copy.logic.empty()) {
    if (!doc.contains("logic")) return std::nullopt;
    copy.logic = doc["logic"].get<std::string>();
    if (!copy.n && doc.contains("n") && doc["n"].is_number_integer()) {
      copy.n = doc["n"].get<int>();
    }
  }
  return select_logic(copy);
}

int cmd_check_model(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string text = read_file(o.file);
  SwapKripkeModel m = load_model(text, model_logic(o, text));
  ValuationReport report = check_valuation(m);
  if (o.json) {
    json doc;
    doc["verdict"] = report.ok() ? "ok" : "violations";
    json vs = json::array();
    for (const Violation& v : report.violations) {
      vs.push_back({{"world", v.world},
                    {"formula", v.formula},
                    {"rule", v.rule},
                    {"expected", v.expected},
                    {"actual", v.actual}});
    }
    doc["violations"] = vs;
    doc["unchecked"] = report.unchecked;
    doc["elapsed_ms"] = elapsed_ms(start);
    out << doc.dump() << "\n";
  } else {
    if (!m.logic.standard()) out << "non-standard semantics\n";
    for (const Violation& v : report.violations) {
      out << v.world << ": " << v.formula << " violates " << v.rule
          << ": expected " << v.expected << ", got " << v.actual << "\n";
    }
    for (const std::string& u : report.unchecked) {
      out << "unchecked: " << u << "\n";
    }
    if (report.ok()) {
      out << "ok: " << counted(m.closure.size(), "formula") << " over "
          << counted(m.frame.size(), "world") << " under " << m.logic.name()
          << "\n";
    }
  }
  return report.ok() ? 0 : 1;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  SwapKripkeModel m = load_model(text, model_logic(o, text));
  if (o.formulas.empty()) throw UsageError("eval needs at least one formula");
  json rows = json::array();
  for (const std::string& ftext : o.formulas) {
    Formula f = parse(ftext, m.logic);
    for (int w = 0; w < m.frame.size(); ++w) {
      Value v = m.value_of(f, w);
      bool t = m.logic.algebra().is_designated(v);
      if (o.json) {
        rows.push_back({{"world", m.frame.name(w)},
                        {"formula", render(f)},
                        {"value", m.logic.algebra().label(v)},
                        {"true", t}});
      } else {
        out << m.frame.name(w) << ": " << render(f) << " = "
            << m.logic.algebra().label(v) << (t ? " (true)" : " (false)")
            << "\n";
      }
    }
  }
  if (o.json) {
    out << json{{"verdict", "ok"}, {"values", rows}, {"elapsed_ms", 0}}.dump()
        << "\n";
  }
  return 0;
}

int cmd_search(const Options& o, std::ostream& out, bool validity) {
  Logic logic = select_logic(o);
  std::vector<Formula> premises;
  for (const std::string& p : o.premises) premises.push_back(parse(p, logic));
  std::string conclusion_text = o.conclusion;
  if (conclusion_text.empty()) {
    if (o.formulas.size() != 1) throw UsageError("exactly one conclusion is required");
    conclusion_text = o.formulas.front();
  } else if (!o.formulas.empty()) {
    throw UsageError("conclusion given twice");
  }
  if (validity && !premises.empty()) {
    throw UsageError("valid takes no premises; use entails");
  }
  Formula conclusion = parse(conclusion_text, logic);

  SearchBounds bounds;
  bounds.max_worlds = o.max_worlds;
  bounds.time_budget = std::chrono::milliseconds(o.timeout_ms);
  bounds.deterministic = o.deterministic;
  bounds.threads = o.threads;

  const auto start = Clock::now();
  Verdict v = find_countermodel(logic, premises, conclusion, bounds);
  const long ms = elapsed_ms(start);
  const int code = v.kind == Verdict::Kind::Countermodel ? 1
                   : v.kind == Verdict::Kind::BudgetExhausted ? 3
                                                              : 0;
  if (o.json) {
    json doc;
    doc["verdict"] = verdict_name(v.kind);
    doc["logic"] = logic.name();
    if (!logic.standard()) doc["non_standard"] = disabled_ids(o);
    if (v.model) {
      doc["world"] = v.model->frame.name(v.world);
      doc["model"] = json::parse(dump_model(*v.model, -1));
    }
    doc["max_worlds"] = o.max_worlds;
    doc["closure_size"] = v.closure_size;
    doc["elapsed_ms"] = ms;
    out << doc.dump(2) << "\n";
    return code;
  }
  if (!logic.standard()) {
    out << "non-standard semantics: disabled";
    for (const std::string& id : disabled_ids(o)) out << " " << id;
    out << "\n";
  }
  switch (v.kind) {
    case Verdict::Kind::Countermodel:
      out << "countermodel at world " << v.model->frame.name(v.world)
          << " (certified on a closure of " << v.closure_size
          << " formulas)\n"
          << dump_model(*v.model) << "\n";
      break;
    case Verdict::Kind::NoCounterexampleWithinBounds:
      out << "no counterexample within bounds (max_worlds=" << o.max_worlds
          << "); this is not a validity proof\n";
      break;
    case Verdict::Kind::BudgetExhausted:
      out << "budget exhausted after " << ms << " ms without a countermodel\n";
      break;
  }
  return code;
}

int cmd_verify_proof(const Options& o, std::ostream& out) {
  const auto start = Clock::now();
  PremiseDerivation pd = load_proof(read_file(o.file));
  ProofCheck check = verify_from_premises(pd);
  if (o.json) {
    json doc;
    doc["verdict"] = check.ok()                     ? "ok"
                     : check.status == ProofCheck::Status::StepFailure
                         ? "step_failure"
                         : "conclusion_mismatch";
    if (!check.ok()) {
      doc["step"] = check.step;
      doc["reason"] = check.reason;
    }
    doc["elapsed_ms"] = elapsed_ms(start);
    out << doc.dump() << "\n";
  } else if (check.ok()) {
    out << "ok: " << counted(pd.inner.steps.size(), "step") << " in "
        << pd.inner.logic.name() << "\n";
  } else if (check.status == ProofCheck::Status::StepFailure) {
    out << "failed at step " << check.step << ": " << check.reason << "\n";
  } else {
    out << "conclusion mismatch: " << check.reason << "\n";
  }
  return check.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Swap Kripke semantics for paraconsistent deontic logics",
               "swapdeon"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Options o;
  bool version = false;
  app.add_flag("--version", version, "Print the version and exit");
  app.add_option("--logic", o.logic,
                 "dmbc, dmbcciw, dmbcci, dbc, dci, dmbccl, dcila, c1d, cnd, "
                 "cnd-strict");
  app.add_option("--n", o.n, "Hierarchy level for cnd / cnd-strict");
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-worlds", o.max_worlds, "Largest frame size searched")
      ->check(CLI::Range(1, 5));
  app.add_option("--timeout-ms", o.timeout_ms, "Search time budget")
      ->check(CLI::PositiveNumber);
  app.add_flag("--deterministic,!--no-deterministic", o.deterministic,
               "Report the first countermodel in enumeration order");
  app.add_option("--threads", o.threads, "Search workers")
      ->check(CLI::Range(1, 256));
  app.add_option("--disable-restriction", o.disabled,
                 "Switch off a valuation restriction (non-standard)")
      ->allow_extra_args(false);

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a formula");
  parse_cmd->add_flag("--full", o.full, "Fully parenthesized output");
  parse_cmd->add_option("formula", o.formulas)->required()->expected(1);
  auto* tables = app.add_subcommand("tables", "Print multioperation tables");
  tables->add_option("--op", o.op, "and, or, imp, neg, circ");
  auto* axioms = app.add_subcommand("axioms", "List axiom schemas");
  auto* check = app.add_subcommand("check-model", "Check a model file");
  check->add_option("file", o.file)->required();
  auto* eval = app.add_subcommand("eval", "Evaluate formulas in a model file");
  eval->add_option("file", o.file)->required();
  eval->add_option("formulas", o.formulas)->required();
  auto* valid = app.add_subcommand("valid", "Bounded validity check");
  valid->add_option("formula", o.formulas);
  valid->add_option("--conclusion", o.conclusion);
  auto add_entailment = [&](CLI::App* cmd) {
    cmd->add_option("--premise", o.premises, "Premise (repeatable)")->allow_extra_args(false);
    cmd->add_option("--conclusion", o.conclusion);
    cmd->add_option("conclusion_text", o.formulas);
  };
  auto* entails = app.add_subcommand("entails", "Bounded entailment check");
  add_entailment(entails);
  auto* countermodel =
      app.add_subcommand("countermodel", "Search for a countermodel");
  add_entailment(countermodel);
  auto* verify = app.add_subcommand("verify-proof", "Check a proof file");
  verify->add_option("file", o.file)->required();

  std::vector<const char*> argv{"swapdeon"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (version) {
    out << "swapdeon " << kVersion << "\n";
    return 0;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o, out);
    if (tables->parsed()) return cmd_tables(o, out);
    if (axioms->parsed()) return cmd_axioms(o, out);
    if (check->parsed()) return cmd_check_model(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (valid->parsed()) return cmd_search(o, out, true);
    if (entails->parsed() || countermodel->parsed()) {
      return cmd_search(o, out, false);
    }
    if (verify->parsed()) return cmd_verify_proof(o, out);
    err << "error: a subcommand is required (see --help)\n";
    return 2;
  } catch (const std::exception& e) {
    std::string line = e.what();
    line = line.substr(0, line.find('\n'));
    err << "error: " << line << "\n";
    return 2;
  }
}

}  // namespace swapdeon
