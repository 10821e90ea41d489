#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "engelkit/catalog.hpp"
#include "engelkit/deltakernel.hpp"
#include "engelkit/finalg.hpp"
#include "engelkit/parse.hpp"
#include "engelkit/selftest.hpp"
#include "engelkit/transforms.hpp"

using namespace engelkit;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Output {
  bool as_json = false;
  json report;
  std::vector<std::string> lines;

  void line(const std::string& s) { lines.push_back(s); }

  void emit(const std::string& command, double ms) {
    if (as_json) {
      report["command"] = command;
      report["timing_ms"] = ms;
      std::cout << report.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
  }
};

const char* step_kind_name(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::PermuteVariables: return "permute-variables";
    case TraceStep::Kind::SubstituteWordForVariable: return "substitute-word";
    case TraceStep::Kind::ConcatenateIdentity: return "concatenate-identity";
    case TraceStep::Kind::ToPolynomial: return "to-polynomial";
    case TraceStep::Kind::SubstitutePolynomial: return "substitute-polynomial";
    case TraceStep::Kind::ExtractComponent: return "extract-component";
    case TraceStep::Kind::ToPartialLinear: return "to-partial-linear";
    case TraceStep::Kind::StripPrefixLetter: return "strip-prefix-letter";
    case TraceStep::Kind::StripSuffixLetter: return "strip-suffix-letter";
    case TraceStep::Kind::EngelConclusion: return "engel-conclusion";
  }
  return "?";
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json arr = json::array();
  for (const auto& s : trace) {
    json j;
    j["kind"] = step_kind_name(s.kind);
    if (!s.note.empty()) j["note"] = s.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_transform_report(Output& out, const TransformReport& rep) {
  out.line("input:  " + state_to_string(rep.input));
  out.line("output: " + state_to_string(rep.output));
  for (const auto& s : rep.trace) {
    std::string l = std::string("  step ") + step_kind_name(s.kind);
    if (!s.note.empty()) l += ": " + s.note;
    out.line(l);
  }
  bool ok = replay_matches(rep);
  out.line(std::string("replay: ") + (ok ? "exact" : "MISMATCH"));
  if (out.as_json) {
    out.report["input"] = {{"state", state_to_string(rep.input)}};
    out.report["result"] = {{"output", state_to_string(rep.output)},
                            {"replay_exact", ok}};
    out.report["trace"] = trace_to_json(rep.trace);
  }
  if (!ok) throw std::logic_error("transform trace does not replay");
}

FiniteAlgebra load_algebra(const std::string& file, const std::string& name) {
  if (file.empty() == name.empty())
    throw CLI::ValidationError("exactly one of --algebra and --builtin is required");
  if (!name.empty()) return builtin(name);
  std::ifstream in(file);
  if (!in.good()) throw CLI::ValidationError("cannot read algebra file " + file);
  json j = json::parse(in);
  return FiniteAlgebra::from_json(j);
}

std::string witness_to_string(const FiniteAlgebra& alg,
                              const std::map<Variable, AlgebraElement>& w) {
  std::string out;
  for (const auto& [v, e] : w) {
    if (!out.empty()) out += ", ";
    out += v.name() + " = " + alg.to_string(e);
  }
  return out;
}

json witness_to_json(const FiniteAlgebra& alg,
                     const std::map<Variable, AlgebraElement>& w) {
  json j;
  for (const auto& [v, e] : w) j[v.name()] = alg.to_string(e);
  return j;
}

// ---------------------------------------------------------------- commands

int run_gen(Output& out, const std::string& kind, unsigned n, unsigned t) {
  std::string text;
  if (kind == "engel") {
    text = engel_poly(n, Domain::integers()).to_string() + " = 0";
  } else if (kind == "malcev") {
    auto [f, g] = malcev_pair(n);
    text = WordIdentity(f, g).to_string();
  } else if (kind == "morse") {
    auto [u, v] = morse_pair(n);
    text = WordIdentity(u, v).to_string();
  } else if (kind == "sandwich-semigroup") {
    text = engel_sandwich_semigroup(n, t).to_string();
  } else {
    throw CLI::ValidationError("unknown generator '" + kind + "'");
  }
  out.line(text);
  if (out.as_json) {
    out.report["input"] = {{"generator", kind}, {"n", n}};
    out.report["result"] = {{"identity", text}};
  }
  return kExitHolds;
}

int run_transform(Output& out, const std::string& op, const std::string& identity,
                  std::size_t m, std::size_t k, const std::string& side_name,
                  const std::string& field_spec) {
  Domain field = parse_field_spec(field_spec);
  Side side = side_name == "left"    ? Side::left
              : side_name == "right" ? Side::right
                                     : Side::reduced;
  IdentityExpr ast = parse_identity(identity);
  TransformReport rep;

  auto as_word_identity = [&]() {
    LoweredIdentity low = lower_identity(ast);
    if (!std::holds_alternative<WordIdentity>(low))
      throw CLI::ValidationError("this transform needs a word identity u = v");
    return std::get<WordIdentity>(low);
  };

  if (op == "reduce2var") {
    reduce_to_two_vars(as_word_identity(), &rep);
  } else if (op == "linearize") {
    binomial_to_partial_linear(as_word_identity(), field, &rep);
  } else if (op == "strip") {
    strip_affixes(as_word_identity(), &rep);
  } else if (op == "collapse") {
    WordIdentity id = as_word_identity();
    BinomialIdentity b(Scalar::one(field), id.lhs, -Scalar::one(field), id.rhs);
    auto res = binomial_collapse(b);
    if (const auto* nil = std::get_if<NilCertificate>(&res)) {
      out.line("nil certificate: every element satisfies x^" +
               std::to_string(nil->n) + " = 0");
      if (out.as_json)
        out.report["result"] = {{"nil_degree", nil->n}};
    } else {
      const auto& wid = std::get<WordIdentity>(res);
      out.line(wid.to_string());
      if (out.as_json) out.report["result"] = {{"identity", wid.to_string()}};
    }
    if (out.as_json) out.report["input"] = {{"identity", identity}, {"op", op}};
    return kExitHolds;
  } else if (op == "lemma1") {
    if ((ast.lhs == nullptr) == (ast.rhs == nullptr))
      throw CLI::ValidationError("lemma1 needs an identity of the form alpha = 0");
    NCPolynomial p = lower_expr(ast.lhs ? ast.lhs : ast.rhs, field);
    auto alpha = PartialLinear::from_poly(p.with_unital(false));
    if (!alpha)
      throw CLI::ValidationError("lemma1 input is not a partial linear identity");
    lemma1_transform(*alpha, m, k, side, &rep);
  } else {
    throw CLI::ValidationError("unknown transform '" + op + "'");
  }
  print_transform_report(out, rep);
  if (out.as_json) out.report["input"] = {{"identity", identity}, {"op", op}};
  return kExitHolds;
}

int run_check(Output& out, const FiniteAlgebra& alg, const std::string& identity,
              const std::string& mode_name, unsigned engel_upto, unsigned jobs) {
  CheckMode mode = mode_name == "circle" ? CheckMode::circle : CheckMode::multiplicative;
  bool all_hold = true;
  json results = json::array();

  if (engel_upto > 0) {
    auto res = check_engel_upto(alg, engel_upto, jobs);
    for (unsigned n = 1; n <= engel_upto; ++n) {
      const auto& r = res[n - 1];
      std::string l = "e_" + std::to_string(n) + ": " + (r.holds ? "holds" : "fails");
      if (!r.holds) l += "  witness: " + witness_to_string(alg, *r.witness);
      out.line(l);
      json jr = {{"n", n}, {"holds", r.holds}, {"tuples_checked", r.tuples_checked}};
      if (!r.holds) jr["witness"] = witness_to_json(alg, *r.witness);
      results.push_back(std::move(jr));
      all_hold = all_hold && r.holds;
    }
    if (out.as_json) {
      out.report["input"] = {{"engel_upto", engel_upto}};
      out.report["result"] = {{"checks", results}, {"holds", all_hold}};
    }
    return all_hold ? kExitHolds : kExitFails;
  }

  if (identity.empty())
    throw CLI::ValidationError("--identity or --engel-upto is required");
  LoweredIdentity low = lower_identity(parse_identity(identity));
  CheckableIdentity id = std::holds_alternative<WordIdentity>(low)
                             ? CheckableIdentity(std::get<WordIdentity>(low))
                             : CheckableIdentity(std::get<NCPolynomial>(low));
  CheckResult r = check_identity(alg, id, mode, jobs);
  std::string l = r.holds ? "holds" : "fails";
  if (!r.holds) l += "  witness: " + witness_to_string(alg, *r.witness);
  l += "  (" + std::to_string(r.tuples_checked) + " tuples)";
  out.line(l);
  if (out.as_json) {
    out.report["input"] = {{"identity", identity}, {"mode", mode_name}};
    json jr = {{"holds", r.holds}, {"tuples_checked", r.tuples_checked}};
    if (!r.holds) jr["witness"] = witness_to_json(alg, *r.witness);
    out.report["result"] = std::move(jr);
  }
  return r.holds ? kExitHolds : kExitFails;
}

int run_analyze(Output& out, const FiniteAlgebra& alg, bool gamma, bool idem,
                bool exponent, bool lie) {
  bool finite = alg.is_finite();
  if (!gamma && !idem && !exponent && !lie) {
    gamma = lie = true;
    idem = exponent = finite;
  }
  json result;
  if (gamma) {
    GammaSeries g = gamma_series(alg);
    std::string dims;
    for (std::size_t d : g.dims) dims += (dims.empty() ? "" : ", ") + std::to_string(d);
    std::string verdict = g.index ? "upper Lie nilpotent of index " + std::to_string(*g.index)
                                  : "not upper Lie nilpotent";
    out.line("gamma dims: [" + dims + "]  " + verdict);
    result["gamma"] = {{"dims", g.dims}};
    if (g.index)
      result["gamma"]["index"] = *g.index;
    else
      result["gamma"]["index"] = "not nilpotent";
  }
  if (idem) {
    auto es = idempotents(alg);
    bool central = all_idempotents_central(alg);
    std::string l = "idempotents (" + std::to_string(es.size()) + "):";
    json names = json::array();
    for (const auto& e : es) {
      l += " " + alg.to_string(e);
      names.push_back(alg.to_string(e));
    }
    out.line(l + (central ? "  all central" : "  not all central"));
    result["idempotents"] = {{"elements", names}, {"all_central", central}};
  }
  if (exponent) {
    ExponentReport e = find_exponent(alg);
    out.line("exponent: least t = " + std::to_string(e.least) +
             "  (product construction: " + e.product.str() + ")");
    result["exponent"] = {{"least", e.least}, {"product", e.product.str()}};
  }
  if (lie) {
    auto c = lie_lower_central_class(alg);
    out.line(c ? "Lie lower central class: " + std::to_string(*c)
               : "Lie lower central series does not reach zero");
    if (c)
      result["lie_class"] = *c;
    else
      result["lie_class"] = "not nilpotent";
  }
  if (out.as_json) {
    out.report["input"] = json::object();
    out.report["result"] = std::move(result);
  }
  return kExitHolds;
}

int run_kernel(Output& out, unsigned n, const std::string& field_spec, bool hausdorff) {
  Domain d = parse_field_spec(field_spec);
  ExactMatrix m = hausdorff ? build_hausdorff_matrix(n, d) : build_delta_matrix(n, d);
  std::size_t r = rank(m);
  auto kernel = kernel_basis(m);
  out.line("matrix: " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  out.line("rank: " + std::to_string(r));
  json kvecs = json::array();
  for (const auto& v : kernel) {
    std::string l = "kernel vector:";
    json jv = json::array();
    for (const auto& c : v) {
      l += " " + c.to_string();
      jv.push_back(c.to_string());
    }
    out.line(l);
    kvecs.push_back(std::move(jv));
  }
  if (out.as_json) {
    out.report["input"] = {{"n", n}, {"field", field_spec}, {"hausdorff", hausdorff}};
    out.report["result"] = {{"rows", m.rows()},
                            {"cols", m.cols()},
                            {"rank", r},
                            {"kernel", std::move(kvecs)}};
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for semigroup and Engel identities"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable JSON report");

  std::string gen_kind;
  unsigned gen_n = 1, gen_t = 1;
  auto* gen = app.add_subcommand("gen", "generate a catalog identity");
  gen->add_option("kind", gen_kind, "engel | malcev | morse | sandwich-semigroup")
      ->required();
  gen->add_option("n", gen_n, "index (or the prime p for sandwich-semigroup)")
      ->required();
  gen->add_option("t", gen_t, "power t for sandwich-semigroup");

  std::string tr_op, tr_identity, tr_side = "reduced", tr_field = "Q";
  std::size_t tr_m = 0, tr_k = 0;
  auto* tr = app.add_subcommand("transform", "apply an identity transform");
  tr->add_option("op", tr_op, "reduce2var | linearize | lemma1 | strip | collapse")
      ->required();
  tr->add_option("--identity", tr_identity, "identity expression")->required();
  tr->add_option("--m", tr_m, "left sandwich exponent");
  tr->add_option("--k", tr_k, "right sandwich exponent");
  tr->add_option("--side", tr_side, "left | right | reduced")
      ->check(CLI::IsMember({"left", "right", "reduced"}));
  tr->add_option("--field", tr_field, "coefficient field (Q or a prime power)");

  std::string ck_file, ck_builtin, ck_identity, ck_mode = "mult";
  unsigned ck_engel = 0, ck_jobs = 1;
  auto* ck = app.add_subcommand("check", "exhaustively check an identity");
  ck->add_option("--algebra", ck_file, "algebra description file");
  ck->add_option("--builtin", ck_builtin, "builtin algebra name");
  ck->add_option("--identity", ck_identity, "identity expression");
  ck->add_option("--mode", ck_mode, "mult | circle")
      ->check(CLI::IsMember({"mult", "circle"}));
  ck->add_option("--engel-upto", ck_engel, "check e_n for n = 1..N");
  ck->add_option("--jobs", ck_jobs, "parallel workers");

  std::string an_file, an_builtin;
  bool an_gamma = false, an_idem = false, an_exp = false, an_lie = false;
  auto* an = app.add_subcommand("analyze", "structural analysis of an algebra");
  an->add_option("--algebra", an_file, "algebra description file");
  an->add_option("--builtin", an_builtin, "builtin algebra name");
  an->add_flag("--gamma", an_gamma, "gamma series");
  an->add_flag("--idempotents", an_idem, "idempotents and centrality");
  an->add_flag("--exponent", an_exp, "least t with x^t = x^2t");
  an->add_flag("--lie-class", an_lie, "Lie lower central class");

  unsigned ke_n = 1;
  std::string ke_field = "Q";
  bool ke_hausdorff = false;
  auto* ke = app.add_subcommand("kernel", "rank/kernel of the delta system");
  ke->add_option("--n", ke_n, "Engel degree")->required();
  ke->add_option("--field", ke_field, "Q or a prime power");
  ke->add_flag("--hausdorff", ke_hausdorff, "use the Hausdorff submatrix");

  auto* vp = app.add_subcommand("verify-paper", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (vp->parsed()) {
    auto results = run_acceptance_criteria(&std::cout);
    return all_passed(results) ? kExitHolds : kExitFails;
  }

  Output out;
  out.as_json = as_json;
  auto start = std::chrono::steady_clock::now();
  int code = kExitHolds;
  std::string command;
  try {
    if (gen->parsed()) {
      command = "gen";
      code = run_gen(out, gen_kind, gen_n, gen_t);
    } else if (tr->parsed()) {
      command = "transform";
      code = run_transform(out, tr_op, tr_identity, tr_m, tr_k, tr_side, tr_field);
    } else if (ck->parsed()) {
      command = "check";
      code = run_check(out, load_algebra(ck_file, ck_builtin), ck_identity, ck_mode,
                       ck_engel, ck_jobs);
    } else if (an->parsed()) {
      command = "analyze";
      code = run_analyze(out, load_algebra(an_file, an_builtin), an_gamma, an_idem,
                         an_exp, an_lie);
    } else if (ke->parsed()) {
      command = "kernel";
      code = run_kernel(out, ke_n, ke_field, ke_hausdorff);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  out.emit(command, ms);
  return code;
}
