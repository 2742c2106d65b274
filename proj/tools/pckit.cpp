// pckit: batch front end for pseudocharacter computations on finite groups.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pckit/problem.hpp"

using namespace pckit;

namespace {

struct CommonArgs {
  std::string input;
  std::string output;
  bool text = false;
  RunOptions opt;
};

void attach_common(CLI::App* cmd, CommonArgs* args) {
  cmd->add_option("--input", args->input, "problem file (JSON)");
  cmd->add_option("--output", args->output, "write the report here instead of stdout");
  cmd->add_flag("--text", args->text, "human-readable output instead of JSON");
  cmd->add_option("--seed", args->opt.seed, "seed for randomized checks");
  cmd->add_option("--ext-degree", args->opt.ext_degree, "conjugacy search extension degree cap");
  cmd->add_option("--word-budget", args->opt.word_budget, "word length budget L");
  cmd->add_option("--max-arity", args->opt.max_arity, "max arity M for tables");
  cmd->add_option("--search-cap", args->opt.search_cap, "enumeration cap for searches");
  cmd->add_option("--jobs", args->opt.jobs, "worker cap for candidate scans");
}

Session make_session(const CommonArgs& args) {
  if (!args.input.empty()) return load_problem(args.input);
  Json minimal = {{"schema", 1},
                  {"ring", {{"kind", "Fq"}, {"p", 2}, {"f", 1}}},
                  {"group", {{"builtin", "Z/1"}}}};
  return session_from_json(minimal);
}

int emit(const std::vector<Json>& reports, const CommonArgs& args, int failures) {
  std::ostringstream os;
  if (args.text) {
    for (const auto& r : reports) os << render_text(r);
  } else if (reports.size() == 1) {
    os << reports[0].dump(2) << "\n";
  } else {
    os << Json(reports).dump(2) << "\n";
  }
  if (args.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(args.output);
    out << os.str();
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudocharacter toolkit for finite groups over finite coefficient rings"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* cmd;
    CommonArgs args;
    Json task;
    std::string rep, rep2, op, embedding, flavor, action = "list", invariant, mats;
    std::vector<int> subgroup;
    int element = -1, sigma_i = -1, samples = -1, mutations = -1, arity = -1, length = -1;
    int64_t p = -1, residue = -1, gl1_p = -1;
    int r = -1, trivial_dim = -1, n = 2;
  };
  std::vector<std::unique_ptr<Sub>> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc) -> Sub* {
    auto sub = std::make_unique<Sub>();
    sub->cmd = app.add_subcommand(name, desc);
    attach_common(sub->cmd, &sub->args);
    sub->task["task"] = name;
    subs.push_back(std::move(sub));
    return subs.back().get();
  };

  Sub* run = add_sub("run", "run every task record in the problem file");

  Sub* pcfrom = add_sub("pc-from-rep", "fingerprint of a representation");
  pcfrom->cmd->add_option("--rep", pcfrom->rep)->required();

  Sub* pceq = add_sub("pc-eq", "compare two pseudocharacters (with reconstruction oracle)");
  pceq->cmd->add_option("--rep", pceq->rep)->required();
  pceq->cmd->add_option("--rep2", pceq->rep2)->required();

  Sub* conj = add_sub("conj-test", "brute-force conjugacy search");
  conj->cmd->add_option("--rep", conj->rep)->required();
  conj->cmd->add_option("--rep2", conj->rep2)->required();

  Sub* ss = add_sub("ssimplify", "Jordan-Hoelder semisimplification");
  ss->cmd->add_option("--rep", ss->rep)->required();

  Sub* sd = add_sub("sympl-decompose", "decompose a semisimple symplectic representation");
  sd->cmd->add_option("--rep", sd->rep)->required();

  Sub* ker = add_sub("kernel", "kernel of a pseudocharacter");
  ker->cmd->add_option("--rep", ker->rep)->required();

  Sub* quot = add_sub("quotient", "factor through a quotient group");
  quot->cmd->add_option("--rep", quot->rep)->required();
  quot->cmd->add_option("--subgroup", quot->subgroup, "normal subgroup element indices")
      ->required();

  Sub* ops = add_sub("ops", "algebraic operations on pseudocharacters");
  ops->cmd->add_option("--op", ops->op, "dual|sum|tensor|sp-sum|pair|pushforward|restrict")
      ->required();
  ops->cmd->add_option("--rep", ops->rep)->required();
  ops->cmd->add_option("--rep2", ops->rep2);
  ops->cmd->add_option("--embedding", ops->embedding, "e.g. 'Sp->GL'");
  ops->cmd->add_option("--subgroup", ops->subgroup);

  Sub* em = add_sub("emerson", "determinant-law bridge checks");
  em->cmd->add_option("--rep", em->rep)->required();
  em->cmd->add_option("--element", em->element);
  em->cmd->add_option("--i", em->sigma_i);
  em->cmd->add_option("--samples", em->samples);

  Sub* inv = add_sub("invariants", "list or evaluate invariant generators");
  inv->cmd->add_option("--action", inv->action, "list|eval");
  inv->cmd->add_option("--flavor", inv->flavor, "GL|SL|Sp|GSp|O|SO|GO");
  inv->cmd->add_option("--n", inv->n, "rank parameter");
  inv->cmd->add_option("--arity", inv->arity);
  inv->cmd->add_option("--length", inv->length);
  inv->cmd->add_option("--invariant", inv->invariant, "symbol as JSON");
  inv->cmd->add_option("--mats", inv->mats, "matrices as JSON rows");

  Sub* coh = add_sub("cohomology", "group cohomology dimensions");
  coh->cmd->add_option("--rep", coh->rep);
  coh->cmd->add_option("--flavor", coh->flavor, "gl|sl|sp");
  coh->cmd->add_option("--p", coh->p);
  coh->cmd->add_option("--trivial-dim", coh->trivial_dim);

  Sub* tan = add_sub("tangent", "deformation tangent dimensions");
  tan->cmd->add_option("--rep", tan->rep);
  tan->cmd->add_option("--flavor", tan->flavor, "gl|sl|sp");
  tan->cmd->add_option("--gl1-p", tan->gl1_p, "rank-1 comparison at this prime");

  Sub* teich = add_sub("teichmuller", "Teichmueller lift in Z/p^r");
  teich->cmd->add_option("--p", teich->p)->required();
  teich->cmd->add_option("--r", teich->r)->required();
  teich->cmd->add_option("--residue", teich->residue)->required();

  Sub* audit = add_sub("axioms-audit", "verify the pseudocharacter axioms on a raw table");
  audit->cmd->add_option("--rep", audit->rep)->required();
  audit->cmd->add_option("--mutations", audit->mutations);

  CLI11_PARSE(app, argc, argv);

  Sub* active = nullptr;
  for (auto& sub : subs)
    if (sub->cmd->parsed()) active = sub.get();
  if (!active) return 1;

  auto set_str = [](Json& t, const char* key, const std::string& v) {
    if (!v.empty()) t[key] = v;
  };
  auto set_int = [](Json& t, const char* key, int64_t v) {
    if (v != -1) t[key] = v;
  };

  Json& t = active->task;
  set_str(t, "rep", active->rep);
  set_str(t, "rep2", active->rep2);
  set_str(t, "op", active->op);
  set_str(t, "embedding", active->embedding);
  if (!active->subgroup.empty()) t["subgroup"] = active->subgroup;
  set_int(t, "element", active->element);
  set_int(t, "i", active->sigma_i);
  set_int(t, "samples", active->samples);
  set_int(t, "mutations", active->mutations);
  set_int(t, "arity", active->arity);
  set_int(t, "length", active->length);
  set_int(t, "p", active->p);
  set_int(t, "residue", active->residue);
  set_int(t, "r", active->r);
  set_int(t, "trivial_dim", active->trivial_dim);
  set_int(t, "gl1_p", active->gl1_p);
  if (t["task"] == "invariants") {
    t["action"] = active->action;
    if (!active->flavor.empty()) {
      auto fl = flavor_from_name(active->flavor);
      if (fl) t["kind"] = kind_to_json(GroupKind::make(*fl, active->n));
    }
    if (!active->invariant.empty()) t["invariant"] = Json::parse(active->invariant);
    if (!active->mats.empty()) t["mats"] = Json::parse(active->mats);
  }
  if ((t["task"] == "cohomology" || t["task"] == "tangent") && !active->flavor.empty())
    t["flavor"] = active->flavor;

  try {
    Session session = make_session(active->args);
    std::vector<Json> reports;
    int failures = 0;
    if (active == run) {
      failures = run_all(session, active->args.opt, &reports);
    } else {
      Json report = run_task(session, t, active->args.opt);
      if (!report.value("ok", true)) ++failures;
      reports.push_back(std::move(report));
    }
    return emit(reports, active->args, failures);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
