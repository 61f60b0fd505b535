#include "qsuper/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "qsuper/contraction.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/frt.hpp"
#include "qsuper/hopfstar.hpp"
#include "qsuper/liesuper.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/reps.hpp"
#include "qsuper/rmatrix.hpp"

#ifndef QSUPER_VERSION
#define QSUPER_VERSION "0.0.0"
#endif

namespace qsuper {

namespace {

/// A value computed once and shared by several checks.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> f) : f_(std::move(f)) {}
  const T& get() {
    std::call_once(once_, [this] {
      try {
        value_.emplace(f_());
      } catch (...) {
        error_ = std::current_exception();
      }
    });
    if (error_) std::rethrow_exception(error_);
    return *value_;
  }

 private:
  std::function<T()> f_;
  std::once_flag once_;
  std::optional<T> value_;
  std::exception_ptr error_;
};

template <class F>
auto lazy(F f) {
  using T = std::invoke_result_t<F>;
  return std::make_shared<Lazy<T>>(std::function<T()>(std::move(f)));
}

const Json& checks_doc() { return fixture_store().load("checks.json"); }

Outcome from_equiv(const EquivVerdict& v) { return v.equal ? Outcome::ok() : Outcome::fail(v.str()); }

/// Both must pass; the first failure supplies the witness.
Outcome both(Outcome a, const Outcome& b, const std::string& b_label) {
  if (a.pass && !b.pass) {
    Outcome out = Outcome::fail(b_label + ": " + b.witness, a.notes);
    for (const auto& n : b.notes) out.note(n);
    return out;
  }
  for (const auto& n : b.notes) a.note(n);
  if (b.pass) a.note(b_label + " holds");
  return a;
}

Outcome with_mode(Outcome o, KronMode m) {
  o.note("Kronecker convention " + kron_mode_name(m));
  return o;
}

std::vector<std::pair<std::string, KronMode>> selected_modes(const SuiteOptions& opts) {
  std::vector<std::pair<std::string, KronMode>> out;
  if (opts.modes != ModeSelection::Ungraded) out.emplace_back("graded", reproducing_kron_mode());
  if (opts.modes != ModeSelection::Graded) out.emplace_back("ungraded", KronMode::Ungraded);
  return out;
}

/// The permutation matching the tensor product of the mode.
ScalarMatrix permutation_for(KronMode m) { return super_permutation(superspace_parities(), m != KronMode::Ungraded); }

std::string lower_id(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '\'') out += 'p';
    else out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<GenId> coords_of(const Presentation& p, std::initializer_list<const char*> names) {
  std::vector<GenId> out;
  for (const char* n : names) out.push_back(p.gen(n));
  return out;
}

// ---- suites ---------------------------------------------------------------

void rmatrix_checks(std::vector<CheckDef>& out, const SuiteOptions& opts) {
  const Parities& par = superspace_parities();
  auto pq = lazy([] { return build_rhat_pq().rhat; });
  auto hh = lazy([] { return build_rhat_hh().rhat; });
  for (const auto& [name, mode] : selected_modes(opts)) {
    const KronMode m = mode;
    out.push_back({"rmatrix.braid.pq." + name, [=] { return with_mode(braid_check(pq->get(), par, m), m); }});
    out.push_back({"rmatrix.ybe.pq." + name, [=] { return with_mode(ybe_check(permutation_for(m) * pq->get(), par, m), m); }});
  }
  for (const auto& [name, mode] : selected_modes(opts)) {
    const KronMode m = mode;
    out.push_back({"rmatrix.braid.hh." + name, [=] { return with_mode(braid_check(hh->get(), par, m), m); }});
    out.push_back({"rmatrix.ybe.hh." + name, [=] { return with_mode(ybe_check(permutation_for(m) * hh->get(), par, m), m); }});
  }
  out.push_back({"rmatrix.kron_convention", [=] {
                   const KronMode want = reproducing_kron_mode();
                   Outcome o = Outcome::ok();
                   for (KronMode m : {KronMode::Graded, KronMode::GradedAlt, KronMode::Ungraded}) {
                     const Outcome b = braid_check(hh->get(), par, m);
                     o.note(kron_mode_name(m) + ": " + (b.pass ? "braid holds" : "braid fails, " + b.witness));
                     if (m == want && !b.pass) o = Outcome::fail(b.witness, o.notes);
                   }
                   o.note("graded tensor product realized by " + kron_mode_name(want));
                   return o;
                 }});
  for (const auto& [name, mode] : selected_modes(opts)) {
    const KronMode m = mode;
    out.push_back({"rmatrix.ybe.r_h." + name, [=] { return with_mode(ybe_check(build_r_h("h"), par, m), m); }});
    out.push_back({"rmatrix.ybe.r_hprime." + name, [=] {
                     const ScalarMatrix r = rename_odd_param(supertranspose(build_r_h("h"), StConvention::Total), "h", "h'");
                     Outcome o = with_mode(ybe_check(r, par, m), m);
                     return o.note("R(h') = R(h)^st with " + st_convention_name(StConvention::Total));
                   }});
  }
  out.push_back({"rmatrix.ybe.r_h.printed", [=] {
                   const KronMode m = reproducing_kron_mode();
                   return with_mode(ybe_check(build_r_h("h", true), par, m), m).note("matrix as printed, no erratum");
                 }});
  out.push_back({"rmatrix.decompose", [] {
                   const DecomposeResult d = decompose_check();
                   Outcome o = d.outcome;
                   if (!d.printed_factor_passes) o.note("the printed R(h) does not factor R_{h,h'}; the corrected one is used");
                   return o;
                 }});
  out.push_back({"rmatrix.involutive.hh", [=] { return involutive_check(hh->get()); }});
  out.push_back({"rmatrix.projectors.hh", [=] { return projector_laws(hh->get()); }});
  auto proj = lazy([=] { return projectors(hh->get()); });
  out.push_back({"rmatrix.kernel.minus", [=] {
                   const Presentation& ah = preset("Ah12");
                   const auto rels = kernel_relations(proj->get().minus, coords_of(ah, {"x", "theta1", "theta2"}), KernelSign::None);
                   return from_equiv(ideal_equiv(rels, ah.relations(), ah)).note("kernel of P- against Ah12, no sign");
                 }});
  out.push_back({"rmatrix.kernel.plus", [=] {
                   const Presentation& ahp = preset("Ah'21");
                   const auto coords = coords_of(ahp, {"phi", "y1", "y2"});
                   Outcome o = from_equiv(ideal_equiv(kernel_relations(proj->get().plus, coords, KernelSign::SecondFactor),
                                                      ahp.relations(), ahp));
                   o.note("kernel of P+ against Ah'21 with sign " + kernel_sign_name(KernelSign::SecondFactor));
                   for (KernelSign s : all_kernel_signs()) {
                     if (s == KernelSign::SecondFactor) continue;
                     const bool eq = ideal_equiv(kernel_relations(proj->get().plus, coords, s), ahp.relations(), ahp).equal;
                     o.note("sign " + kernel_sign_name(s) + (eq ? ": equal" : ": differs"));
                   }
                   return o;
                 }});
  out.push_back({"rmatrix.compact.hh", [=] {
                   const Presentation& ah = preset("Ah12");
                   return compact_form_check(hh->get(), ah, coords_of(ah, {"x", "theta1", "theta2"}), GrassmannScalar(1));
                 }});
  for (const auto& [id, name] : {std::pair{"rmatrix.compact.pq.aq12", "Aq12"}, std::pair{"rmatrix.compact.pq.apq12", "Apq12"}}) {
    const std::string target = name;
    out.push_back({id, [=] {
                     const Presentation& p = preset(target);
                     return compact_form_check(pq->get(), p, coords_of(p, {"X", "Theta1", "Theta2"}), parse_scalar("p"))
                         .note("against " + target);
                   }});
  }
}

Outcome without_param(Outcome o, const std::vector<Relation>& rels, const std::string& param) {
  const auto params = odd_params_in(rels);
  std::string list;
  for (const auto& s : params) list += (list.empty() ? "" : ", ") + s;
  o.note("odd parameters present: " + (list.empty() ? std::string("none") : list));
  if (o.pass && std::find(params.begin(), params.end(), param) != params.end())
    return Outcome::fail("'" + param + "' occurs in the transformed relations", o.notes);
  return o;
}

void contraction_checks(std::vector<CheckDef>& out, const SuiteOptions& opts) {
  auto sup = lazy([] { return contract("superspace", "full"); });
  auto ext = lazy([] { return contract("exterior", "full"); });
  out.push_back({"contraction.superspace.relations", [=] { return without_param(sup->get().prelimit_match, sup->get().prelimit, "h'"); }});
  out.push_back({"contraction.superspace.limit", [=] { return sup->get().limit_match; }});
  out.push_back({"contraction.exterior.relations", [=] {
                   const auto& r = ext->get();
                   return without_param(both(r.prelimit_match, r.limit_match, "limit"), r.limit, "h");
                 }});
  for (const auto& [name, mode] : selected_modes(opts)) {
    const KronMode m = mode;
    out.push_back({"contraction.rmatrix." + name, [m] {
                     const ScalarMatrix g = basis_change("full", superspace_parities()).g;
                     return with_mode(contract_rmatrix(build_rhat_pq().rhat, g, m, build_rhat_hh().rhat).match, m);
                   }});
  }
}

void frt_checks(std::vector<CheckDef>& out, const SuiteOptions& opts) {
  const auto modes = selected_modes(opts);
  std::map<std::string, std::shared_ptr<Lazy<FrtTriangle>>> tri;
  for (const auto& [name, mode] : modes) {
    const KronMode m = mode;
    tri[name] = lazy([m] { return frt_triangle(build_rhat_hh().rhat, m); });
  }
  auto first = tri.at(modes.front().first);
  out.push_back({"frt.coaction_vs_fixture", [=] { return first->get().coaction_vs_fixture; }});
  for (const auto& [name, mode] : modes) {
    const KronMode m = mode;
    auto t = tri.at(name);
    out.push_back({"frt.frt_vs_fixture." + name, [=] { return with_mode(t->get().frt_vs_fixture, m); }});
    out.push_back({"frt.frt_vs_coaction." + name, [=] { return with_mode(t->get().frt_vs_coaction, m); }});
  }
  out.push_back({"frt.bialgebra", [] { return bialgebra_check(matrix_preset(), t_matrix()); }});
  out.push_back({"frt.comodule.superspace", [] { return comodule_check(superspace_coaction(), matrix_preset(), t_matrix()); }});
  out.push_back({"frt.comodule.exterior", [] { return comodule_check(dual_coaction(), matrix_preset(), t_matrix()); }});
}

Outcome readings_outcome(const HopfVerdict& v) {
  Outcome o = Outcome::fail("no reading of the antipode holds");
  for (const auto& r : v.readings)
    if (r.outcome.pass) o = Outcome::ok();
  for (const auto& r : v.readings) o.note(r.str() + (r.outcome.pass ? ": holds" : ": fails, " + r.outcome.witness));
  return o;
}

void hopf_checks(std::vector<CheckDef>& out, const SuiteOptions&) {
  auto hv = lazy([] { return hopf_check(costructure("FAq12")); });
  out.push_back({"hopf.faq12.coproduct", [=] { return hv->get().coproduct_hom; }});
  out.push_back({"hopf.faq12.coassociativity", [=] { return hv->get().coassociativity; }});
  out.push_back({"hopf.faq12.counit", [=] { return hv->get().counit; }});
  out.push_back({"hopf.faq12.antipode", [=] { return hv->get().antipode_laws; }});
  out.push_back({"hopf.faq12.antipode_antihom", [=] {
                   const HopfVerdict& v = hv->get();
                   Outcome o = Outcome::ok();
                   if (v.winning_sign) {
                     o.note("winning sign " + anti_sign_name(*v.winning_sign));
                   } else {
                     o = Outcome::fail(v.readings.front().outcome.witness);
                   }
                   for (const auto& r : v.readings)
                     if (r.antihomomorphism && r.target == v.readings.front().target)
                       o.note(r.str() + (r.outcome.pass ? ": holds" : ": fails"));
                   return o;
                 }});
  out.push_back({"hopf.faq12.antipode_readings", [=] { return readings_outcome(hv->get()); }});
}

void star_checks(std::vector<CheckDef>& out, const SuiteOptions&) {
  for (const auto& name : involution_names())
    out.push_back({"star.involution." + lower_id(name), [name] { return star_check(involution(name)); }});
  auto h_only = lazy([] { return induce_star("h-only"); });
  out.push_back({"star.induce.h-only", [=] { return both(h_only->get().match, h_only->get().closure, "closure"); }});
  out.push_back({"star.induce.h-only.pre_constraint", [=] { return h_only->get().pre_constraint; }});
  out.push_back({"star.induce.hprime-only", [] {
                   const InducedStar s = induce_star("hprime-only");
                   return both(s.match, s.closure, "closure");
                 }});
  out.push_back({"star.induce.full", [] {
                   const InducedStar s = induce_star("full");
                   return both(s.match, s.closure, "closure");
                 }});
  out.push_back({"star.induce.full.first_order", [] {
                   const InducedStar s = induce_star("full", true);
                   Outcome o = s.match;
                   for (const auto& [g, p] : s.induced.images) o.note(generator_name(g) + "* = " + p.str());
                   return o.note("components containing every odd parameter of g dropped");
                 }});
}

void liesuper_checks(std::vector<CheckDef>& out, const SuiteOptions& opts) {
  const int order = opts.order;
  out.push_back({"liesuper.exp", [order] {
                   const ExpCheck e = exp_relation_check(order);
                   Outcome o = e.overall;
                   for (const auto& r : e.relations) o.note(r.label + (r.outcome.pass ? ": holds" : ": fails"));
                   return o;
                 }});
  out.push_back({"liesuper.primitive_hopf", [] {
                   const HopfVerdict v = primitive_hopf_check();
                   Outcome o = v.overall;
                   for (const auto& r : v.readings) o.note(r.str() + (r.outcome.pass ? ": holds" : ": fails"));
                   return o;
                 }});
  out.push_back({"liesuper.mu", [] { return mu_check(); }});
}

void reps_checks(std::vector<CheckDef>& out, const SuiteOptions&) {
  for (const auto& name : representation_names()) {
    auto a = lazy([name] { return adjudicate(name); });
    out.push_back({"reps." + name + ".left", [=] { return a->get().left.outcome; }});
    out.push_back({"reps." + name + ".opposite", [=] { return a->get().opposite.outcome; }});
    if (representation(name).derived_from)
      out.push_back({"reps." + name + ".derived", [=] { return *a->get().derived_match; }});
  }
}

using SuiteFn = void (*)(std::vector<CheckDef>&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"rmatrix", rmatrix_checks}, {"contraction", contraction_checks}, {"frt", frt_checks},
      {"hopf", hopf_checks},       {"star", star_checks},               {"liesuper", liesuper_checks},
      {"reps", reps_checks},
  };
  return s;
}

CheckRecord run_one(const CheckDef& def) {
  CheckRecord rec;
  rec.id = def.id;
  const auto t0 = std::chrono::steady_clock::now();
  auto fail_with = [&](const std::string& kind, const std::string& what) {
    rec.verdict = Verdict::Fail;
    rec.witness = what;
    rec.notes.push_back("raised " + kind);
  };
  try {
    const Outcome o = def.run();
    rec.verdict = o.pass ? Verdict::Pass : Verdict::Fail;
    rec.witness = o.witness;
    rec.notes = o.notes;
  } catch (const FixtureMissing&) {
    throw;
  } catch (const FixtureCorrupt&) {
    throw;
  } catch (const ConstraintUnsatisfied& e) {
    fail_with("ConstraintUnsatisfied", e.what());
  } catch (const PoleAtLimit& e) {
    fail_with("PoleAtLimit", e.what());
  } catch (const NotInvolutive& e) {
    fail_with("NotInvolutive", e.what());
  } catch (const NonInvertibleBasisChange& e) {
    fail_with("NonInvertibleBasisChange", e.what());
  } catch (const std::exception& e) {
    rec.verdict = Verdict::Indeterminate;
    rec.witness = e.what();
    rec.notes.push_back("the check did not reach a verdict");
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace

std::string check_kind_name(CheckKind k) { return k == CheckKind::PaperAsserted ? "paper-asserted" : "adjudication"; }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "indeterminate";
  }
}

std::string engine_version() { return QSUPER_VERSION; }

ModeSelection parse_mode_selection(const std::string& s) {
  if (s == "graded") return ModeSelection::Graded;
  if (s == "ungraded") return ModeSelection::Ungraded;
  if (s == "both") return ModeSelection::Both;
  throw ParseError("mode must be graded, ungraded or both, got '" + s + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& [k, f] : suites()) n.push_back(k);
    return n;
  }();
  return names;
}

std::vector<CheckDef> suite_checks(const std::string& suite, const SuiteOptions& opts) {
  std::vector<CheckDef> out;
  bool found = false;
  for (const auto& [name, fn] : suites())
    if (suite == "all" || suite == name) {
      fn(out, opts);
      found = true;
    }
  if (!found) throw UnknownPreset("unknown suite '" + suite + "'");
  return out;
}

void warm_up() {
  register_conjugate_symbols();
  for (const auto& n : preset_names()) (void)preset(n);
  (void)checks_doc();
}

VerificationReport run_checks(const std::string& suite, const std::vector<CheckDef>& defs, const SuiteOptions& opts) {
  const Json& table = checks_doc().at("checks");
  for (const auto& d : defs)
    if (!table.contains(d.id)) throw FixtureMissing("checks.json has no citation for '" + d.id + "'");
  warm_up();

  VerificationReport rep;
  rep.suite = suite;
  rep.engine_version = engine_version();
  rep.fixture_hashes = fixture_store().manifest();
  rep.options["mode"] = opts.modes == ModeSelection::Both ? "both" : opts.modes == ModeSelection::Graded ? "graded" : "ungraded";
  rep.options["order"] = std::to_string(opts.order);
  rep.checks.resize(defs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < defs.size(); i = next++) {
      try {
        rep.checks[i] = run_one(defs[i]);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(defs.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (auto& rec : rep.checks) {
    const Json& e = table.at(rec.id);
    rec.cite = e.at("cite").get<std::string>();
    rec.kind = e.at("kind").get<std::string>() == "adjudication" ? CheckKind::Adjudication : CheckKind::PaperAsserted;
  }
  return rep;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opts) {
  return run_checks(suite, suite_checks(suite, opts), opts);
}

std::string resolve_alias(const std::string& group, const std::string& key) {
  const Json& a = checks_doc().at("aliases");
  if (a.contains(group) && a.at(group).contains(key)) return a.at(group).at(key).get<std::string>();
  return key;
}

Json VerificationReport::to_json(bool timing) const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json j = {{"id", c.id},          {"cite", c.cite},     {"kind", check_kind_name(c.kind)},
              {"verdict", verdict_name(c.verdict)}, {"witness", c.witness}, {"notes", c.notes}};
    if (timing) j["wall_seconds"] = c.seconds;
    checks_json.push_back(std::move(j));
  }
  std::size_t gating = 0;
  for (const auto& c : checks) gating += c.kind == CheckKind::PaperAsserted && c.verdict != Verdict::Pass;
  return Json{{"suite", suite},
              {"engine_version", engine_version},
              {"options", options},
              {"fixture_hashes", fixture_hashes},
              {"checks", checks_json},
              {"paper_asserted_failures", gating}};
}

std::string VerificationReport::summary() const {
  std::string out = fmt::format("suite {} (engine {})\n", suite, engine_version);
  std::size_t pass = 0, gating = 0;
  for (const auto& c : checks) {
    const std::string tag = c.verdict == Verdict::Pass ? "PASS" : c.verdict == Verdict::Fail ? "FAIL" : "INDT";
    out += fmt::format("[{}] {:<40} {:<14} {:7.3f}s\n", tag, c.id, check_kind_name(c.kind), c.seconds);
    if (c.verdict != Verdict::Pass) out += "       " + c.witness + "\n";
    pass += c.verdict == Verdict::Pass;
    gating += c.kind == CheckKind::PaperAsserted && c.verdict != Verdict::Pass;
  }
  out += fmt::format("{} of {} checks pass; {} paper-asserted checks do not\n", pass, checks.size(), gating);
  return out;
}

int VerificationReport::exit_status(bool strict) const {
  for (const auto& c : checks)
    if (c.verdict != Verdict::Pass && (strict || c.kind == CheckKind::PaperAsserted)) return 1;
  return 0;
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace qsuper
