#include "branchlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchlab/chartab.hpp"
#include "branchlab/grp.hpp"
#include "branchlab/predict.hpp"
#include "branchlab/ring.hpp"
#include "branchlab/verify.hpp"

namespace branchlab {

namespace {

struct Options {
  std::string kind = "f2t";
  unsigned q = 0;  // 0: the kind's default
  unsigned r = 2;
  unsigned jobs = 1;
  std::string out_path;
  std::string format;
  std::uint64_t budget = kVerifyBudget;
  std::uint64_t seed = 0;
  std::string trace_class = "unit";
  std::optional<std::uint64_t> det_cent;
  std::string group = "gl2";
  std::optional<bool> mackey;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RingShape shape_of(const Options& o) {
  RingShape s = shape_from_name(o.kind, o.r);
  if (o.q != 0 && o.q != s.q) throw UsageError("--q " + std::to_string(o.q) + " does not match --kind " + o.kind);
  return s;
}

std::uint64_t effective_budget(const Options& o) {
  if (const char* env = std::getenv("BRANCHLAB_BUDGET"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BRANCHLAB_BUDGET is not a number: ") + env);
    }
  }
  return o.budget;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw UsageError("cannot write " + o.out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::optional<std::uint64_t> power_or_none(std::uint64_t b, unsigned k) {
  unsigned __int128 v = 1;
  for (unsigned i = 0; i < k; ++i) {
    v *= b;
    if (v > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

int run_ring_info(const Options& o, std::ostream& out) {
  const RingShape s = shape_of(o);
  using json = nlohmann::ordered_json;
  auto opt = [](std::optional<std::uint64_t> v) { return v ? json(*v) : json(nullptr); };
  const unsigned lp = s.ell_prime();
  json j;
  j["schema"] = 1;
  j["kind"] = s.kind_name();
  j["q"] = s.q;
  j["r"] = s.r;
  j["e"] = s.e() == 0 ? json(nullptr) : json(s.e());
  j["ell"] = s.ell();
  j["ell_prime"] = lp;
  const auto size = power_or_none(s.q, s.r);
  j["size"] = opt(size);
  const auto units_tail = power_or_none(s.q, s.r - 1);
  j["units"] = units_tail ? json((s.q - 1) * *units_tail) : json(nullptr);
  j["psi_order"] = nullptr;
  try {
    const RingSpec R = RingSpec::make(s.kind, s.q, s.r);
    j["psi_order"] = R.psi_order();
  } catch (const RingError&) {
  }
  const std::uint64_t gl = gl2_order(s);
  j["gl2_order"] = gl == UINT64_MAX ? json(nullptr) : json(gl);
  j["sl2_order"] = gl == UINT64_MAX || !units_tail ? json(nullptr) : json(gl / ((s.q - 1) * *units_tail));
  std::optional<std::uint64_t> roots;
  try {
    roots = sqrt1_count(s.kind, s.q, lp);
  } catch (const RingError&) {
  }
  j["sqrt1_count_ell_prime"] = opt(roots);
  j["n_r"] = n_r(s);
  j["n_r_statement_branch"] = n_r_statement(s);
  out << j.dump(2) << '\n';
  return 0;
}

int run_predict(const Options& o, std::ostream& out) {
  const RingShape s = shape_of(o);
  const TraceClass tc = parse_trace_class(o.trace_class);
  emit(o, prediction_json(predict_branching(s, tc, o.det_cent)), out);
  return 0;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const RingShape s = shape_of(o);
  if (!o.format.empty() && o.format != "json") throw UsageError("verify only writes json");
  VerifySpec spec;
  spec.kind = s.kind;
  spec.q = s.q;
  spec.r = s.r;
  spec.jobs = o.jobs;
  spec.budget = effective_budget(o);
  spec.seed = o.seed;
  spec.mackey = o.mackey;
  const BranchReport rep = verify_branching(spec);
  emit(o, report_json(rep), out);
  if (!rep.pass)
    for (const auto& c : rep.checks)
      if (!c.pass()) err << "FAIL " << c.name << ": " << c.detail << '\n';
  return rep.pass ? 0 : 1;
}

int run_chartab(const Options& o, std::ostream& out) {
  const RingShape s = shape_of(o);
  if (o.group != "gl2" && o.group != "sl2") throw UsageError("--group must be gl2 or sl2");
  const std::uint64_t budget = effective_budget(o);
  const std::uint64_t order = gl2_order(s);
  if (order > budget)
    throw BudgetExceeded("|GL_2| = " + std::to_string(order) + " exceeds the enumeration budget " +
                         std::to_string(budget));
  const RingSpec R = RingSpec::make(s.kind, s.q, s.r);
  const GroupPtr G = classify(o.group == "gl2" ? GroupTable::gl2(R, budget) : GroupTable::sl2(R, budget));
  const CharacterTable T = dixon_table(G, o.seed);
  const std::string fmt = o.format.empty() ? "csv" : o.format;
  if (fmt == "csv") {
    emit(o, table_csv(T), out);
    return 0;
  }
  if (fmt != "json") throw UsageError("--format must be csv or json");
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = 1;
  j["group"] = o.group;
  j["kind"] = R.kind_name();
  j["r"] = R.r();
  j["order"] = G->order();
  j["exponent"] = G->exponent();
  json classes = json::array();
  for (std::size_t k = 0; k < G->class_count(); ++k)
    classes.push_back({{"rep", format_mat(R, G->table().element(G->rep(k)))}, {"size", G->class_size(k)}});
  j["classes"] = classes;
  json chars = json::array();
  for (const auto& chi : T.irreducibles) {
    json row = json::array();
    for (const auto& v : chi.values()) row.push_back(v.reduced().str());
    chars.push_back({{"degree", chi.degree()}, {"modulus", chi.value(0).modulus()}, {"values", row}});
  }
  j["characters"] = chars;
  emit(o, j.dump(2), out);
  return 0;
}

int run_selftest(const Options& o, std::ostream& out) {
  bool all = true;
  auto line = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };
  {
    const RingSpec R = RingSpec::make(RingKind::char0_unramified, 2, 2);
    const GroupPtr G = classify(GroupTable::gl2(R));
    const CharacterTable T = dixon_table(G, o.seed);
    line("gl2(z/4) order 96", G->order() == 96);
    line("gl2(z/4) orthogonality", check_orthogonality(T).ok());
  }
  for (const char* kind : {"z2", "f2t"}) {
    VerifySpec spec;
    spec.kind = shape_from_name(kind, 2).kind;
    spec.r = 2;
    spec.jobs = o.jobs;
    spec.seed = o.seed;
    line(std::string("verify ") + kind + " r=2", verify_branching(spec).pass);
  }
  {
    const Prediction p = predict_branching(shape_from_name("f2t", 4), TraceClass::nonunit);
    line("predict f2t r=4 witness", p.d_a == 2 && p.delta_min == 2 && p.delta_max == 8u);
  }
  return all ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"branchlab: branching of GL_2 representations to SL_2 over 2-adic chain rings", "branchlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--kind", o.kind, "Ring kind: z2, f2t, f4t or eis2")
      ->check(CLI::IsMember({"z2", "f2t", "f4t", "eis2"}));
  app.add_option("--q", o.q, "Residue field size (implied by --kind)");
  app.add_option("--r", o.r, "Level r of o_r")->check(CLI::Range(1u, 4096u));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", o.out_path, "Write output to this file");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--budget", o.budget, "Largest |GL_2| to enumerate (BRANCHLAB_BUDGET overrides)");
  app.add_option("--seed", o.seed, "Seed for the character table computation");

  CLI::App* ring = app.add_subcommand("ring", "Ring facts");
  ring->require_subcommand(1);
  CLI::App* ring_info = ring->add_subcommand("info", "Sizes, psi order, square roots of 1 and N_r as JSON");
  CLI::App* predict = app.add_subcommand("predict", "Closed-form branching prediction as JSON");
  predict->add_option("--trace-class", o.trace_class, "unit, unit-square, unit-nonsquare or nonunit")
      ->check(CLI::IsMember({"unit", "unit-square", "unit-nonsquare", "nonunit"}));
  predict->add_option("--det-cent", o.det_cent, "|det C_{GL_2(o_ell')}(A)|");
  CLI::App* verify = app.add_subcommand("verify", "Brute-force verification report as JSON");
  verify->add_flag("--mackey,!--no-mackey", o.mackey, "Force the Mackey cross-check on or off");
  CLI::App* chartab = app.add_subcommand("chartab", "Character table of GL_2 or SL_2");
  chartab->add_option("--group", o.group, "gl2 or sl2")->check(CLI::IsMember({"gl2", "sl2"}));
  CLI::App* selftest = app.add_subcommand("selftest", "Quick end-to-end self check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (ring->parsed() && ring_info->parsed()) return run_ring_info(o, out);
    if (predict->parsed()) return run_predict(o, out);
    if (verify->parsed()) return run_verify(o, out, err);
    if (chartab->parsed()) return run_chartab(o, out);
    if (selftest->parsed()) return run_selftest(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const RingError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace branchlab
