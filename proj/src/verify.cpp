#include "branchlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "branchlab/grp.hpp"
#include "branchlab/mat.hpp"

namespace branchlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t upow(std::uint64_t b, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out *= b;
  return out;
}

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next++;
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

class Checks {
 public:
  void record(const std::string& name, bool ok, const std::string& failure = {}) {
    CheckResult& c = slot(name);
    if (ok) {
      ++c.passed;
    } else {
      if (c.failed == 0) c.detail = failure;
      ++c.failed;
    }
  }
  void note(const std::string& name, const std::string& detail) {
    CheckResult& c = slot(name);
    if (c.failed == 0) c.detail = detail;
  }
  void merge(const Checks& other) {
    for (const auto& c : other.list_) {
      CheckResult& mine = slot(c.name);
      if (mine.failed == 0 && (c.failed > 0 || mine.detail.empty())) mine.detail = c.detail;
      mine.passed += c.passed;
      mine.failed += c.failed;
    }
  }
  const std::vector<CheckResult>& results() const noexcept { return list_; }

 private:
  CheckResult& slot(const std::string& name) {
    for (auto& c : list_)
      if (c.name == name) return c;
    list_.push_back(CheckResult{name, 0, 0, {}});
    return list_.back();
  }

  std::vector<CheckResult> list_;
};

CompanionTriple triple_of(const RingSpec& low, const Mat2& A) {
  return CompanionTriple{low.one(), low.neg(det(low, A)), trace(low, A)};
}

std::string triple_text(const RingSpec& low, const CompanionTriple& t) {
  return "(" + low.format(t.a) + ", " + low.format(t.alpha) + ", " + low.format(t.beta) + ")";
}

struct OrbitTask {
  CompanionTriple key;
  std::vector<std::size_t> rhos;
};

struct OrbitOutcome {
  OrbitRecord orbit;
  std::vector<RhoRecord> records;
  Checks checks;
};

struct Shared {
  const RingSpec& R;
  const CliffordContext& ctx;
  const CharacterTable& gl_table;
  const CharacterTable& sl_table;
  bool mackey;
};

void check_extension_set(const Shared& S, const InertiaData& in, Checks& checks) {
  const RingSpec& R = S.R;
  const unsigned l = R.ell();
  std::vector<RingElem> expected_E;
  std::vector<RingElem> expected_h;
  for (RingElem x : R.elements()) {
    if (R.val(x) >= l) expected_E.push_back(x);
    const RingElem y = R.sub(x, in.psi.lift.d);
    if (R.val(x) >= l || R.val(y) >= l) expected_h.push_back(x);
  }
  const auto E = extension_set(S.ctx, in);
  checks.record("extension-set", E == expected_E,
                "E has " + std::to_string(E.size()) + " elements, expected pi^ell o_r");
  checks.record("h-set-nonsquare", in.h_ell == expected_h,
                "h^ell differs from {0, beta} + pi^ell o_r");
}

void check_min_dim(const Shared& S, const InertiaData& in, OrbitRecord& orec, Checks& checks) {
  const RingSpec& R = S.R;
  const Fraction bound = min_dim_bound(R, in.psi.A);
  const std::uint64_t q = R.q();
  const Fraction direct = Fraction::make(sl2_order(R), q * q * in.C_sl_psi.size());
  checks.record("min-dim-bound-formula", bound == direct,
                "closed form " + bound.str() + " vs " + direct.str() + " from C_SL(psi_A)");
  const GroupPtr K = S.ctx.K_ell_group();
  const ClassFunction psiK = S.ctx.psi_on(in.psi, K);
  std::optional<long long> smallest;
  bool ok = true;
  for (const auto& chi : S.sl_table.irreducibles) {
    if (inner(restrict_to(chi, K), psiK) == 0) continue;
    const long long d = chi.degree();
    smallest = smallest ? std::min(*smallest, d) : d;
    if (!bound.at_most(static_cast<std::uint64_t>(d))) ok = false;
  }
  ok = ok && smallest.has_value();
  orec.min_dim_bound = bound.str();
  orec.min_dim_observed = smallest;
  checks.record("min-dim-bound", ok,
                "orbit " + triple_text(in.psi.low, orec.orbit) + ": smallest dimension " +
                    (smallest ? std::to_string(*smallest) : "none") + " below " + bound.str());
}

OrbitOutcome run_orbit(const Shared& S, const OrbitTask& task) {
  const RingSpec& R = S.R;
  const CliffordContext& ctx = S.ctx;
  const RingSpec low = R.truncated(R.ell_prime());
  OrbitOutcome out;
  Checks& checks = out.checks;
  OrbitRecord& orec = out.orbit;
  orec.orbit = task.key;
  orec.A = companion_matrix(low, task.key.a, task.key.alpha, task.key.beta);
  orec.trace_class = classify_trace(low, orec.A);
  orec.rho_count = task.rhos.size();
  const CentralizerInfo cent = centralizer_units(low, orec.A);
  orec.orbit_size = gl2_order(low) / cent.size;
  const std::string where = "orbit " + triple_text(low, task.key);

  const PsiA psi = make_psiA(R, orec.A);
  const InertiaData in = inertia(ctx, psi);
  orec.d_a = in.D_A.reps.size();
  orec.d_a_formula = in.D_A.formula;
  orec.double_cosets = in.double_coset_count;
  orec.inertia_gl = in.C_gl_psi.size();
  orec.inertia_sl = in.C_sl_psi.size();
  orec.inertia_bracket = in.C_sl_bracket.size();

  checks.record("inertia-product-gl", in.gl_product_formula, where + ": C_GL(psi_A) != C_GL(A~) M^ell'");
  checks.record("inertia-product-sl", in.sl_product_formula, where + ": C_SL(psi_[A]) != C_SL(psi_A) H^ell'");
  checks.record("d-a-count", orec.d_a == orec.d_a_formula && orec.d_a == orec.double_cosets,
                where + ": cosets " + std::to_string(orec.d_a) + ", formula " + std::to_string(orec.d_a_formula) +
                    ", double cosets " + std::to_string(orec.double_cosets));
  checks.record("det-image", in.D_A.det_image_size == in.D_A.low_centralizer.det_image_size * upow(R.q(), R.ell()),
                where + ": |det C_GL(psi_A)| = " + std::to_string(in.D_A.det_image_size));

  const auto phis = phi_set(ctx, in);
  const long long want_dim = R.r() % 2 == 0 ? 1 : static_cast<long long>(R.q());
  bool dims_ok = !phis.empty();
  for (const auto& phi : phis) {
    orec.phi_dims.push_back(phi.degree());
    dims_ok = dims_ok && phi.degree() == want_dim;
  }
  checks.record("phi-dimensions", dims_ok, where + ": phi dimensions differ from " + std::to_string(want_dim));

  // Clifford correspondence: Ind phi runs through the rho's of this orbit once each.
  std::map<std::size_t, std::size_t> phi_of_rho;
  bool bijective = phis.size() == task.rhos.size();
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const ClassFunction ind = induce(phis[k], ctx.gl());
    std::size_t hits = 0;
    for (std::size_t rho : task.rhos)
      if (S.gl_table[rho] == ind) {
        ++hits;
        bijective = bijective && phi_of_rho.emplace(rho, k).second;
      }
    bijective = bijective && hits == 1;
  }
  checks.record("clifford-correspondence", bijective,
                where + ": " + std::to_string(phis.size()) + " phi for " + std::to_string(task.rhos.size()) + " rho");

  const Prediction pred = predict_for_matrix(R, orec.A);
  for (std::size_t rho : task.rhos) {
    RhoRecord rec;
    rec.rho = rho;
    rec.dim = S.gl_table[rho].degree();
    rec.orbit = task.key;
    rec.trace_class = orec.trace_class;
    rec.d_a = orec.d_a;
    rec.prediction = pred;
    const ClassFunction res = restrict_to(S.gl_table[rho], ctx.sl());
    const auto cons = decompose(res, S.sl_table);
    rec.delta = cons.size();
    rec.multiplicity_free = true;
    for (const auto& c : cons) {
      rec.constituent_dims.push_back(S.sl_table[c.index].degree());
      rec.multiplicity_free = rec.multiplicity_free && c.multiplicity == 1;
    }
    std::sort(rec.constituent_dims.begin(), rec.constituent_dims.end());
    rec.dims_equal = true;
    for (long long d : rec.constituent_dims)
      rec.dims_equal = rec.dims_equal && d * static_cast<long long>(rec.delta) == rec.dim;
    if (R.is_char2() && R.r() % 2 == 0 && orec.trace_class == TraceClass::unit_square)
      rec.outcome = rec.delta == 1 ? "irreducible" : rec.delta == 2 ? "two-halves" : "other";

    if (S.mackey) {
      const auto it = phi_of_rho.find(rho);
      bool same = false;
      if (it != phi_of_rho.end()) {
        const auto parts = mackey_restriction(ctx, in, phis[it->second]);
        ClassFunction sum = ClassFunction::zero(ctx.sl());
        for (const auto& p : parts) sum += p;
        same = parts.size() == orec.d_a && sum == res && decompose(sum, S.sl_table).size() == rec.delta;
      }
      rec.mackey = same;
      checks.record("mackey-identity", same, where + ": rho " + std::to_string(rho));
    }

    const bool admitted = pred.admits(rec.delta);
    const bool dims_match = !pred.equal_dims || rec.dims_equal;
    rec.pass = rec.multiplicity_free && admitted && dims_match && rec.mackey.value_or(true);
    checks.record("multiplicity-free", rec.multiplicity_free, where + ": rho " + std::to_string(rho));
    checks.record("delta-in-range", admitted,
                  where + ": rho " + std::to_string(rho) + " has Delta = " + std::to_string(rec.delta));
    checks.record("equal-dimensions", dims_match, where + ": rho " + std::to_string(rho));
    out.records.push_back(std::move(rec));
  }

  if (R.is_char2() && R.r() % 2 == 0 && orec.trace_class == TraceClass::unit_nonsquare)
    check_extension_set(S, in, checks);
  if (R.is_char2() && R.r() % 2 == 1 && R.r() > 2 && orec.trace_class == TraceClass::nonunit)
    check_min_dim(S, in, orec, checks);
  return out;
}

}  // namespace

std::uint64_t gl2_order(const RingShape& shape) {
  using u128 = unsigned __int128;
  const unsigned bits = shape.q == 4 ? 2 : 1;
  if (bits * (4 * shape.r) > 100) return UINT64_MAX;
  const u128 q = shape.q;
  u128 n = (q - 1) * (q * q - 1);
  for (unsigned i = 0; i + 3 < 4 * shape.r; ++i) n *= q;
  return n > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(n);
}

PsiTable psi_characters(const CliffordContext& ctx) {
  const RingSpec& R = ctx.ring();
  const RingSpec low = R.truncated(R.ell_prime());
  const GroupPtr M = ctx.M_ell_group();
  const auto elems = low.elements();
  PsiTable out{{}, CharacterTable{M, {}, 0}};
  std::vector<std::vector<std::uint32_t>> seen;
  for (RingElem a : elems)
    for (RingElem b : elems)
      for (RingElem c : elems)
        for (RingElem d : elems) {
          const Mat2 A{a, b, c, d};
          const PsiA psi = make_psiA(R, A);
          seen.push_back(ctx.psi_table(psi));
          out.matrices.push_back(A);
          out.table.irreducibles.push_back(ctx.psi_on(psi, M));
        }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen.size() != M->order())
    throw std::logic_error("psi_characters: the psi_A are not the distinct characters of M^ell");
  return out;
}

std::vector<SupportInfo> find_regular(const CliffordContext& ctx, const CharacterTable& gl_table,
                                      const PsiTable& psis) {
  const RingSpec low = ctx.ring().truncated(ctx.ring().ell_prime());
  std::vector<char> cyclic(psis.matrices.size());
  for (std::size_t i = 0; i < cyclic.size(); ++i) cyclic[i] = is_cyclic(low, psis.matrices[i]);
  const GroupPtr M = ctx.M_ell_group();
  std::vector<SupportInfo> out;
  for (std::size_t rho = 0; rho < gl_table.size(); ++rho) {
    SupportInfo s;
    s.rho = rho;
    s.regular = true;
    for (const auto& c : decompose(restrict_to(gl_table[rho], M), psis.table)) {
      s.support.push_back(psis.matrices[c.index]);
      s.multiplicities.push_back(c.multiplicity);
      s.regular = s.regular && cyclic[c.index];
    }
    out.push_back(std::move(s));
  }
  return out;
}

const CheckResult* BranchReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

BranchReport verify_branching(const VerifySpec& spec) {
  const auto t0 = Clock::now();
  const RingShape shape = RingShape::make(spec.kind, spec.q, spec.r);
  if (spec.r < 2) throw std::invalid_argument("verify: needs r >= 2");
  const std::uint64_t order = gl2_order(shape);
  if (order > spec.budget)
    throw BudgetExceeded("|GL_2(o_" + std::to_string(spec.r) + ")| = " +
                         (order == UINT64_MAX ? std::string("too large") : std::to_string(order)) +
                         " exceeds the enumeration budget " + std::to_string(spec.budget) +
                         "; use `predict` for closed forms or raise --budget");

  const RingSpec R = RingSpec::make(spec.kind, spec.q, spec.r);
  const RingSpec low = R.truncated(R.ell_prime());
  BranchReport rep;
  rep.kind = R.kind_name();
  rep.q = R.q();
  rep.r = R.r();
  rep.n_r = n_r(shape);
  Checks checks;

  auto phase = Clock::now();
  auto end_phase = [&](const std::string& name) {
    rep.phases.emplace_back(name, seconds_since(phase));
    phase = Clock::now();
  };

  const GroupPtr gl = classify(GroupTable::gl2(R, spec.budget));
  const GroupPtr sl = classify(GroupTable::sl2(R, spec.budget));
  rep.gl_order = gl->order();
  rep.sl_order = sl->order();
  rep.gl_classes = gl->class_count();
  rep.sl_classes = sl->class_count();
  checks.record("group-orders", rep.gl_order == gl2_order(R) && rep.sl_order == sl2_order(R),
                "enumerated orders differ from the closed forms");
  CharacterTable gl_table;
  CharacterTable sl_table;
  {
    std::vector<CharacterTable> tabs(2);
    parallel_for(2, spec.jobs, [&](std::size_t i) { tabs[i] = dixon_table(i == 0 ? gl : sl, spec.seed); });
    gl_table = std::move(tabs[0]);
    sl_table = std::move(tabs[1]);
  }
  rep.irreducibles = gl_table.size();
  checks.record("gl-orthogonality", check_orthogonality(gl_table).ok(), "GL_2 table fails orthogonality");
  checks.record("sl-orthogonality", check_orthogonality(sl_table).ok(), "SL_2 table fails orthogonality");
  end_phase("tables");

  const CliffordContext ctx(gl, sl);
  const PsiTable psis = psi_characters(ctx);
  const auto supports = find_regular(ctx, gl_table, psis);
  std::map<CompanionTriple, std::vector<std::size_t>> by_orbit;
  for (const auto& s : supports) {
    long long total = 0;
    for (long long m : s.multiplicities) total += m;
    checks.record("support-bookkeeping", total == gl_table[s.rho].degree(),
                  "rho " + std::to_string(s.rho) + ": multiplicities on M^ell do not add up to dim");
    if (!s.regular) continue;
    const CompanionTriple key = triple_of(low, s.support.front());
    bool one_orbit = true;
    for (const auto& A : s.support) one_orbit = one_orbit && triple_of(low, A) == key;
    for (long long m : s.multiplicities) one_orbit = one_orbit && m == s.multiplicities.front();
    const std::uint64_t orbit_size = gl2_order(low) / centralizer_units(low, s.support.front()).size;
    one_orbit = one_orbit && s.support.size() == orbit_size;
    checks.record("regular-support-single-orbit", one_orbit,
                  "rho " + std::to_string(s.rho) + ": support is not one conjugacy orbit");
    by_orbit[key].push_back(s.rho);
  }
  checks.record("regular-found", !by_orbit.empty(), "no regular representation");
  end_phase("supports");

  std::vector<OrbitTask> tasks;
  for (auto& [key, rhos] : by_orbit) tasks.push_back(OrbitTask{key, rhos});
  std::vector<OrbitOutcome> outcomes(tasks.size());
  const Shared shared{R, ctx, gl_table, sl_table, spec.mackey.value_or(spec.r <= 3)};
  parallel_for(tasks.size(), spec.jobs, [&](std::size_t i) {
    try {
      outcomes[i] = run_orbit(shared, tasks[i]);
    } catch (const std::logic_error& e) {
      outcomes[i] = OrbitOutcome{};
      outcomes[i].orbit.orbit = tasks[i].key;
      outcomes[i].checks.record("internal-consistency", false,
                                "orbit " + triple_text(low, tasks[i].key) + ": " + e.what());
    }
  });
  for (auto& o : outcomes) {
    checks.merge(o.checks);
    for (auto& r : o.records) rep.records.push_back(std::move(r));
    rep.orbits.push_back(std::move(o.orbit));
  }
  std::sort(rep.records.begin(), rep.records.end(),
            [](const RhoRecord& x, const RhoRecord& y) { return x.rho < y.rho; });
  end_phase("orbits");

  // |D_A| for every cyclic A over o_ell', not only orbit representatives.
  {
    std::vector<Mat2> cyclic;
    for (const auto& A : psis.matrices)
      if (is_cyclic(low, A)) cyclic.push_back(A);
    std::vector<char> ok(cyclic.size(), 0);
    parallel_for(cyclic.size(), spec.jobs, [&](std::size_t i) {
      const PsiA psi = make_psiA(R, cyclic[i]);
      const Subgroup C = ctx.stabilizer(ctx.psi_table(psi), false, whole_group(ctx.G()));
      const DetCosets d = det_cosets(ctx, psi, C);
      ok[i] = d.reps.size() == d.formula;
    });
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
      checks.record("d-a-all-cyclic", ok[i] != 0, "A = " + format_mat(low, cyclic[i]));
      bad += ok[i] == 0;
    }
    if (bad == 0) checks.note("d-a-all-cyclic", std::to_string(cyclic.size()) + " cyclic matrices over o_ell'");
  }
  end_phase("all-cyclic");

  // Minimal-count witness A = [[0,0],[1,0]].
  {
    const CompanionTriple witness{low.one(), low.zero(), low.zero()};
    std::optional<std::uint64_t> best;
    for (const auto& rec : rep.records)
      if (rec.orbit == witness) best = std::max(best.value_or(0), rec.delta);
    rep.n_r_witness_delta = best;
    std::uint64_t d_a = 0;
    for (const auto& o : rep.orbits)
      if (o.orbit == witness) d_a = o.d_a;
    const std::uint64_t roots = sqrt1_count(low);
    checks.record("n-r-witness", best && *best >= rep.n_r && d_a == roots,
                  "max Delta " + (best ? std::to_string(*best) : std::string("none")) + ", N_r " +
                      std::to_string(rep.n_r) + ", |D_A| " + std::to_string(d_a) + ", square roots of 1 " +
                      std::to_string(roots));
    if (best && *best >= rep.n_r && d_a == roots)
      checks.note("n-r-witness", "max Delta " + std::to_string(*best) + " >= N_r = " + std::to_string(rep.n_r) +
                                     "; |D_A| = " + std::to_string(d_a));
  }

  for (const auto& rec : rep.records) rep.max_delta = std::max(rep.max_delta, rec.delta);
  rep.checks = checks.results();
  rep.pass = !rep.records.empty();
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass();
  for (const auto& rec : rep.records) rep.pass = rep.pass && rec.pass;
  rep.seconds = seconds_since(t0);
  return rep;
}

std::string report_json(const BranchReport& rep, bool with_timing, int indent) {
  using json = nlohmann::ordered_json;
  const RingSpec R = RingSpec::make(shape_from_name(rep.kind, rep.r).kind, rep.q, rep.r);
  const RingSpec low = R.truncated(R.ell_prime());
  auto triple = [&](const CompanionTriple& t) {
    json j;
    j["a"] = low.format(t.a);
    j["alpha"] = low.format(t.alpha);
    j["beta"] = low.format(t.beta);
    return j;
  };
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };

  json j;
  j["schema"] = 1;
  j["ring"] = {{"kind", rep.kind},
               {"q", rep.q},
               {"r", rep.r},
               {"e", R.e() == 0 ? json(nullptr) : json(R.e())},
               {"ell", R.ell()},
               {"ell_prime", R.ell_prime()}};
  j["groups"] = {{"gl_order", rep.gl_order},
                 {"sl_order", rep.sl_order},
                 {"gl_classes", rep.gl_classes},
                 {"sl_classes", rep.sl_classes}};
  j["pass"] = rep.pass;

  std::size_t passed = 0;
  for (const auto& rec : rep.records) passed += rec.pass;
  j["summary"] = {{"irreducibles", rep.irreducibles},
                  {"regular", rep.records.size()},
                  {"orbits", rep.orbits.size()},
                  {"records_passed", passed},
                  {"records_failed", rep.records.size() - passed},
                  {"max_delta", rep.max_delta},
                  {"n_r", rep.n_r},
                  {"n_r_witness_delta", opt(rep.n_r_witness_delta)}};

  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass()}, {"passed", c.passed}, {"failed", c.failed},
                      {"detail", c.detail}});
  j["checks"] = checks;

  json orbits = json::array();
  for (const auto& o : rep.orbits) {
    json x;
    x["orbit"] = triple(o.orbit);
    x["A"] = format_mat(low, o.A);
    x["trace_class"] = trace_class_name(o.trace_class);
    x["orbit_size"] = o.orbit_size;
    x["rho_count"] = o.rho_count;
    x["d_a"] = o.d_a;
    x["d_a_formula"] = o.d_a_formula;
    x["double_cosets"] = o.double_cosets;
    x["inertia"] = {{"gl", o.inertia_gl}, {"sl", o.inertia_sl}, {"sl_bracket", o.inertia_bracket}};
    x["phi_dims"] = o.phi_dims;
    x["min_dim_bound"] = opt(o.min_dim_bound);
    x["min_dim_observed"] = opt(o.min_dim_observed);
    orbits.push_back(std::move(x));
  }
  j["orbits"] = orbits;

  json records = json::array();
  for (const auto& r : rep.records) {
    json x;
    x["rho"] = r.rho;
    x["dim"] = r.dim;
    x["orbit"] = triple(r.orbit);
    x["trace_class"] = trace_class_name(r.trace_class);
    x["d_a"] = r.d_a;
    x["delta"] = r.delta;
    x["constituent_dims"] = r.constituent_dims;
    x["multiplicity_free"] = r.multiplicity_free;
    x["dims_equal"] = r.dims_equal;
    x["predicted"] = {{"delta_min", r.prediction.delta_min},
                      {"delta_max", opt(r.prediction.delta_max)},
                      {"delta_values", r.prediction.delta_values},
                      {"equal_dims", r.prediction.equal_dims},
                      {"rules", r.prediction.rules}};
    x["mackey"] = opt(r.mackey);
    x["outcome"] = r.outcome.empty() ? json(nullptr) : json(r.outcome);
    x["pass"] = r.pass;
    records.push_back(std::move(x));
  }
  j["records"] = records;

  if (with_timing) {
    json phases = json::object();
    for (const auto& [name, s] : rep.phases) phases[name] = s;
    j["timing"] = {{"seconds", rep.seconds}, {"phases", phases}};
  }
  return j.dump(indent);
}

}  // namespace branchlab
