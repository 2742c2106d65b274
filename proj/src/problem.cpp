#include "pckit/problem.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "pckit/cohomology.hpp"

namespace pckit {

namespace {

const Representation& find_rep(const Session& s, const Json& task, const char* field) {
  require(task.contains(field), Err::SchemaError,
          std::string("task needs a '") + field + "' representation name");
  std::string name = task.at(field).get<std::string>();
  auto it = s.reps.find(name);
  require(it != s.reps.end(), Err::SchemaError, "unknown representation '" + name + "'");
  return it->second;
}

bool oracle_supported(const Representation& rho) {
  return rho.ring.is_field() && rho.ring.size() <= 9 && rho.dim() <= 4;
}

Json conj_to_json(const ConjugacyResult& r) {
  Json out = {{"conjugate", r.found}};
  if (r.found) {
    out["ext_degree"] = r.ext_degree;
    out["conjugator"] = mat_to_json(r.conjugator);
  } else {
    out["searched_ext_degree"] = r.ext_degree;
  }
  return out;
}

Json handle_pc_from_rep(Session& s, const Json& task, const RunOptions&) {
  const Representation& rho = find_rep(s, task, "rep");
  PseudoChar pc = from_rep(rho);
  return {{"pseudocharacter", pc_to_json(pc)}, {"ok", true}};
}

Json handle_pc_eq(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& a = find_rep(s, task, "rep");
  const Representation& b = find_rep(s, task, "rep2");
  PseudoChar pa = from_rep(a), pb = from_rep(b);
  bool equal = pc_equals(pa, pb);
  Json out = {{"equal", equal}};
  bool ok = true;
  if (oracle_supported(a) &&
      (a.kind.flavor == Flavor::GL || a.kind.flavor == Flavor::SL ||
       a.kind.flavor == Flavor::Sp || a.kind.flavor == Flavor::O ||
       a.kind.flavor == Flavor::SO)) {
    // reconstruction oracle: fingerprints agree iff the semisimplified
    // representations are conjugate over a small extension
    auto conj = brute_conjugacy(semisimplify(rekind_gl(a), opt.seed),
                                semisimplify(rekind_gl(b), opt.seed), opt.ext_degree,
                                opt.search_cap, opt.jobs);
    out["oracle"] = conj_to_json(conj);
    bool fingerprints_gl_equal =
        pc_equals(from_rep(rekind_gl(a)), from_rep(rekind_gl(b)));
    out["oracle_agrees"] = (fingerprints_gl_equal == conj.found);
    if (a.kind.is_orthogonal()) out["experimental"] = true;
    ok = (fingerprints_gl_equal == conj.found);
  }
  out["ok"] = ok;
  return out;
}

Json handle_conj_test(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& a = find_rep(s, task, "rep");
  const Representation& b = find_rep(s, task, "rep2");
  auto conj = brute_conjugacy(a, b, opt.ext_degree, opt.search_cap, opt.jobs);
  Json out = conj_to_json(conj);
  out["ok"] = true;
  return out;
}

Json handle_ssimplify(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& rho = find_rep(s, task, "rep");
  Representation ss = semisimplify(rekind_gl(rho), opt.seed);
  auto factors = jordan_holder(rekind_gl(rho), opt.seed);
  Json dims = Json::array();
  for (const auto& f : factors) dims.push_back(f.dim());
  bool fingerprint_preserved = pc_equals(from_rep(rekind_gl(rho)), from_rep(ss));
  return {{"factor_dims", dims},
          {"oracle", {{"fingerprint_preserved", fingerprint_preserved}}},
          {"ok", fingerprint_preserved}};
}

Json handle_sympl_decompose(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& rho = find_rep(s, task, "rep");
  auto summands = symplectic_decompose(rho);
  Json parts = Json::array();
  for (const auto& sm : summands)
    parts.push_back({{"type", sm.type == SummandType::IrreducibleSymplectic
                                  ? "irreducible-symplectic"
                                  : "pair-type"},
                     {"n", sm.sp_rep.kind.n}});
  auto conj = brute_conjugacy(reassemble_summands(summands), rho, opt.ext_degree,
                              opt.search_cap, opt.jobs);
  return {{"summands", parts},
          {"oracle", {{"reassembly_conjugate", conj.found}}},
          {"ok", conj.found}};
}

Json handle_kernel(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& rho = find_rep(s, task, "rep");
  PseudoChar pc = from_rep(rho);
  auto kernel = pc_kernel(pc, opt.word_budget);
  Json out = {{"kernel", kernel}};
  bool ok = true;
  if (oracle_supported(rho) &&
      (rho.kind.flavor == Flavor::GL || rho.kind.flavor == Flavor::SL ||
       rho.kind.flavor == Flavor::Sp)) {
    Representation ss = semisimplify(rekind_gl(rho), opt.seed);
    std::vector<int> ss_kernel;
    for (int e = 0; e < rho.group->order(); ++e)
      if (ss.at(e) == mat_identity(ss.ring, ss.dim())) ss_kernel.push_back(e);
    out["oracle"] = {{"semisimplification_kernel", ss_kernel}};
    ok = (ss_kernel == kernel);
    out["oracle_agrees"] = ok;
  }
  out["ok"] = ok;
  return out;
}

Json handle_quotient(Session& s, const Json& task, const RunOptions&) {
  const Representation& rho = find_rep(s, task, "rep");
  std::vector<int> sub = task.at("subgroup").get<std::vector<int>>();
  auto q = quotient_factor(from_rep(rho), sub);
  return {{"quotient_order", q.quotient.group->order()},
          {"pseudocharacter", pc_to_json(q.pc)},
          {"ok", true}};
}

Json handle_ops(Session& s, const Json& task, const RunOptions&) {
  std::string op = task.at("op").get<std::string>();
  const Representation& a = find_rep(s, task, "rep");
  PseudoChar pa = from_rep(a);
  PseudoChar result;
  if (op == "dual") {
    result = pc_dual(pa);
  } else if (op == "sum") {
    result = pc_direct_sum(pa, from_rep(find_rep(s, task, "rep2")));
  } else if (op == "tensor") {
    result = pc_tensor(pa, from_rep(find_rep(s, task, "rep2")));
  } else if (op == "sp-sum") {
    result = pc_sp_direct_sum(pa, from_rep(find_rep(s, task, "rep2")));
  } else if (op == "pair") {
    result = pc_pair_type_embed(pa);
  } else if (op == "pushforward") {
    auto emb = embedding_from_name(task.at("embedding").get<std::string>());
    require(emb.has_value(), Err::UnknownEmbedding,
            "unknown embedding '" + task.value("embedding", std::string()) + "'");
    result = pc_pushforward(pa, *emb);
  } else if (op == "restrict") {
    auto iota = subgroup_inclusion(a.group, task.at("subgroup").get<std::vector<int>>());
    result = pc_restrict(pa, iota);
  } else {
    fail(Err::SchemaError, "unknown op '" + op + "'");
  }
  return {{"op", op}, {"pseudocharacter", pc_to_json(result)}, {"ok", true}};
}

Json handle_emerson(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& rho = find_rep(s, task, "rep");
  PseudoChar pc = from_rep(rho);
  Json out;
  if (task.contains("element") && task.contains("i")) {
    int e = task.at("element").get<int>();
    int32_t i = task.at("i").get<int32_t>();
    out["lambda"] = elem_to_json(emerson_lambda(pc, i, e));
  }
  // Lambda_1 = trace and Lambda_d = det pointwise
  bool edge = true;
  for (int e = 0; e < rho.group->order(); ++e) {
    edge = edge && (emerson_lambda(pc, 1, e) == mat_trace(rho.at(e)));
    edge = edge && (emerson_lambda(pc, rho.dim(), e) == mat_det(rho.at(e)));
  }
  int samples = task.value("samples", 200);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int64_t> dist(0, rho.ring.size() - 1);
  auto random_ga = [&]() {
    GroupAlgebraElem r = ga_zero(rho.group, rho.ring);
    for (auto& c : r.coeffs) c = ring_decode(rho.ring, dist(rng));
    return r;
  };
  int mult_ok = 0, homog_ok = 0;
  for (int t = 0; t < samples; ++t) {
    auto r = random_ga();
    auto q = random_ga();
    if (det_law_eval(pc, ga_mul(r, q)) == rmul(det_law_eval(pc, r), det_law_eval(pc, q)))
      ++mult_ok;
    RingElem c = ring_decode(rho.ring, dist(rng));
    if (det_law_eval(pc, ga_scale(c, r)) ==
        rmul(rpow(c, rho.dim()), det_law_eval(pc, r)))
      ++homog_ok;
  }
  out["lambda_edge_identities"] = edge;
  out["multiplicative_samples"] = {{"pass", mult_ok}, {"total", samples}};
  out["homogeneous_samples"] = {{"pass", homog_ok}, {"total", samples}};
  bool ok = edge && mult_ok == samples && homog_ok == samples;
  out["ok"] = ok;
  return out;
}

Json handle_invariants(Session& s, const Json& task, const RunOptions& opt) {
  std::string action = task.value("action", "list");
  GroupKind kind = task.contains("kind") ? kind_from_json(task.at("kind"))
                                         : GroupKind::make(Flavor::GL, 2);
  if (action == "list") {
    int32_t m = task.value("arity", opt.max_arity);
    int32_t L = task.value("length", std::min(opt.word_budget, 4));
    Json list = Json::array();
    for (const auto& sym : generator_set(kind, m, L)) list.push_back(invariant_to_json(sym));
    return {{"kind", kind_to_json(kind)}, {"invariants", list}, {"ok", true}};
  }
  if (action == "eval") {
    InvariantSymbol sym = invariant_from_json(task.at("invariant"));
    std::vector<Mat> mats;
    for (const auto& rows : task.at("mats")) mats.push_back(mat_from_rows_json(s.ring, rows));
    sym.m = static_cast<int32_t>(mats.size());
    return {{"value", elem_to_json(evaluate(kind, sym, mats))}, {"ok", true}};
  }
  fail(Err::SchemaError, "invariants action must be 'list' or 'eval'");
}

Json handle_cohomology(Session& s, const Json& task, const RunOptions&) {
  if (task.contains("rep")) {
    const Representation& rho = find_rep(s, task, "rep");
    std::string flavor = task.value("flavor", "gl");
    AdFlavor fl = flavor == "sp" ? AdFlavor::sp : (flavor == "sl" ? AdFlavor::sl : AdFlavor::gl);
    GModule mod = ad_module(rho, fl);
    auto dims = cohomology_dims(mod);
    Json out = cohomology_to_json(dims);
    out["flavor"] = flavor;
    if (task.value("dump_module", false)) out["module"] = gmodule_to_json(mod);
    out["ok"] = true;
    return out;
  }
  int64_t p = task.at("p").get<int64_t>();
  int dim = task.value("trivial_dim", 1);
  auto dims = cohomology_dims(trivial_gmodule(s.group, RingSpec::fq(p), dim));
  Json out = cohomology_to_json(dims);
  out["ok"] = true;
  return out;
}

Json handle_tangent(Session& s, const Json& task, const RunOptions&) {
  if (task.contains("gl1_p")) {
    int64_t p = task.at("gl1_p").get<int64_t>();
    int enumerated = gl1_pseudo_tangent(s.group, p);
    int cochain = cohomology_dims(trivial_gmodule(s.group, RingSpec::fq(p), 1)).h1;
    bool agree = enumerated == cochain;
    return {{"gl1_pseudo_tangent", enumerated},
            {"oracle", {{"h1_trivial", cochain}}},
            {"oracle_agrees", agree},
            {"ok", agree}};
  }
  const Representation& rho = find_rep(s, task, "rep");
  std::string flavor = task.value("flavor", "gl");
  AdFlavor fl = flavor == "sp" ? AdFlavor::sp : (flavor == "sl" ? AdFlavor::sl : AdFlavor::gl);
  return {{"tangent_dim", rep_tangent_dim(rho, fl)}, {"flavor", flavor}, {"ok", true}};
}

Json handle_teichmuller(Session&, const Json& task, const RunOptions&) {
  int64_t p = task.at("p").get<int64_t>();
  int32_t r = task.at("r").get<int32_t>();
  int64_t residue = task.at("residue").get<int64_t>();
  RingSpec zs = RingSpec::zmod(p, r);
  RingElem w = teichmueller(zs, ring_from_int(RingSpec::fq(p), residue));
  bool torsion = is_one(rpow(w, p - 1));
  return {{"lift", w.c[0]}, {"torsion_ok", torsion}, {"ok", torsion}};
}

Json handle_axioms_audit(Session& s, const Json& task, const RunOptions& opt) {
  const Representation& rho = find_rep(s, task, "rep");
  int32_t M = std::min<int32_t>(task.value("max_arity", opt.max_arity), 3);
  int32_t L = std::min<int32_t>(task.value("word_budget", opt.word_budget), 4);
  RawTable table = raw_table_from_rep(rho, M, L);
  AxiomReport base = verify_axioms(table);
  Json out = {{"max_arity", M},
              {"word_budget", L},
              {"entries", table.entry_count()},
              {"pass", base.pass}};
  if (!base.pass) out["violation"] = {{"condition", base.condition}, {"detail", base.detail}};
  if (task.value("dump_table", false)) out["table"] = rawtable_to_json(table);
  int mutations = task.value("mutations", 0);
  if (mutations > 0) {
    auto entries = all_entries(table);
    std::mt19937_64 rng(opt.seed);
    int detected = 0;
    for (int t = 0; t < mutations; ++t) {
      const auto& ref = entries[rng() % entries.size()];
      RingElem old = table.at(ref.m, ref.sym, ref.tc);
      table.at(ref.m, ref.sym, ref.tc) = radd(old, ring_one(rho.ring));
      if (!verify_axioms(table).pass) ++detected;
      table.at(ref.m, ref.sym, ref.tc) = old;
    }
    out["mutations"] = {{"detected", detected}, {"total", mutations}};
    out["ok"] = base.pass && detected == mutations;
  } else {
    out["ok"] = base.pass;
  }
  return out;
}

}  // namespace

Session session_from_json(const Json& file) {
  require(file.is_object(), Err::SchemaError, "problem file must be a JSON object");
  require(file.value("schema", 0) == 1, Err::SchemaError, "expected \"schema\": 1");
  Session s;
  s.ring = ring_from_json(file.at("ring"));
  s.group = group_from_json(file.at("group"));
  if (file.contains("representations")) {
    for (const auto& r : file.at("representations")) {
      std::string name = r.at("name").get<std::string>();
      GroupKind kind = kind_from_json(r.at("kind"));
      std::vector<Mat> gen_images;
      for (const auto& rows : r.at("generators"))
        gen_images.push_back(mat_from_rows_json(s.ring, rows));
      s.reps.emplace(name, rep_from_generator_images(s.group, kind, s.ring, gen_images));
      s.rep_names.push_back(name);
    }
  }
  s.tasks = file.value("tasks", Json::array());
  return s;
}

Session load_problem(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return session_from_json(j);
}

Json run_task(Session& session, const Json& task, const RunOptions& opt) {
  require(task.contains("task"), Err::SchemaError, "task record needs a 'task' field");
  std::string name = task.at("task").get<std::string>();
  Json report;
  if (name == "pc-from-rep") report = handle_pc_from_rep(session, task, opt);
  else if (name == "pc-eq") report = handle_pc_eq(session, task, opt);
  else if (name == "conj-test") report = handle_conj_test(session, task, opt);
  else if (name == "ssimplify") report = handle_ssimplify(session, task, opt);
  else if (name == "sympl-decompose") report = handle_sympl_decompose(session, task, opt);
  else if (name == "kernel") report = handle_kernel(session, task, opt);
  else if (name == "quotient") report = handle_quotient(session, task, opt);
  else if (name == "ops") report = handle_ops(session, task, opt);
  else if (name == "emerson") report = handle_emerson(session, task, opt);
  else if (name == "invariants") report = handle_invariants(session, task, opt);
  else if (name == "cohomology") report = handle_cohomology(session, task, opt);
  else if (name == "tangent") report = handle_tangent(session, task, opt);
  else if (name == "teichmuller") report = handle_teichmuller(session, task, opt);
  else if (name == "axioms-audit") report = handle_axioms_audit(session, task, opt);
  else fail(Err::SchemaError, "unknown task '" + name + "'");
  report["task"] = name;
  report["inputs"] = task;
  return report;
}

int run_all(Session& session, const RunOptions& opt, std::vector<Json>* reports) {
  int failures = 0;
  for (const auto& task : session.tasks) {
    Json report;
    try {
      report = run_task(session, task, opt);
      if (!report.value("ok", true)) ++failures;
    } catch (const Error& e) {
      report = {{"task", task.value("task", "?")},
                {"inputs", task},
                {"error", {{"code", err_name(e.code())}, {"message", e.what()}}},
                {"ok", false}};
      ++failures;
    }
    if (reports) reports->push_back(std::move(report));
  }
  return failures;
}

namespace {

void render_value(std::ostream& os, const std::string& key, const Json& v, int depth) {
  std::string pad(static_cast<size_t>(2 * depth), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render_value(os, it.key(), it.value(), depth + 1);
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "== " << report.value("task", std::string("report")) << " ==\n";
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "task" || it.key() == "inputs") continue;
    render_value(os, it.key(), it.value(), 0);
  }
  return os.str();
}

}  // namespace pckit
