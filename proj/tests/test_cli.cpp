#include "doctest.h"
#include "pckit/problem.hpp"

using namespace pckit;

namespace {

Json minimal_file() {
  return Json{
      {"schema", 1},
      {"ring", {{"kind", "Fq"}, {"p", 3}, {"f", 1}}},
      {"group", {{"builtin", "Z/2"}}},
      {"representations",
       Json::array({{{"name", "sign"},
                     {"kind", {{"flavor", "GL"}, {"n", 1}}},
                     {"generators", Json::array({Json::array({Json::array({2})})})}},
                    {{"name", "reg"},
                     {"kind", {{"flavor", "GL"}, {"n", 2}}},
                     {"generators",
                      Json::array({Json::array(
                          {Json::array({0, 1}), Json::array({1, 0})})})}}})}};
}

}  // namespace

TEST_CASE("load_problem builds validated sessions") {
  Session s = session_from_json(minimal_file());
  CHECK(s.group->order() == 2);
  CHECK(s.reps.size() == 2);
  CHECK(s.reps.at("reg").dim() == 2);

  // generator images violating a relation
  Json bad = minimal_file();
  bad["representations"][0]["generators"] = Json::array({Json::array({Json::array({0, 1})})});
  CHECK_THROWS_AS((void)session_from_json(bad), Error);

  // schema violations
  Json noschema = minimal_file();
  noschema.erase("schema");
  CHECK_THROWS_AS((void)session_from_json(noschema), Error);
}

TEST_CASE("permutation generators enumerate the closure") {
  Json file = {{"schema", 1},
               {"ring", {{"kind", "Fq"}, {"p", 7}, {"f", 1}}},
               {"group",
                {{"permutations", Json::array({Json::array({1, 0, 2}), Json::array({1, 2, 0})})},
                 {"name", "S3"}}}};
  Session s = session_from_json(file);
  CHECK(s.group->order() == 6);
}

TEST_CASE("run_task reports match the module results") {
  Session s = session_from_json(minimal_file());
  RunOptions opt;

  Json eq = run_task(s, {{"task", "pc-eq"}, {"rep", "sign"}, {"rep2", "sign"}}, opt);
  CHECK(eq.at("equal") == true);
  CHECK(eq.at("ok") == true);
  CHECK(eq.at("oracle").at("conjugate") == true);

  Json neq = run_task(s, {{"task", "pc-eq"}, {"rep", "reg"}, {"rep2", "reg"}}, opt);
  CHECK(neq.at("equal") == true);

  // unipotent vs trivial: fingerprints agree, the oracle compares the
  // semisimplifications and must concur
  Json uni_file = {{"schema", 1},
                   {"ring", {{"kind", "Fq"}, {"p", 3}, {"f", 1}}},
                   {"group", {{"builtin", "Z/3"}}},
                   {"representations",
                    Json::array(
                        {{{"name", "uni"},
                          {"kind", {{"flavor", "GL"}, {"n", 2}}},
                          {"generators", Json::array({Json::array({Json::array({1, 1}),
                                                                   Json::array({0, 1})})})}},
                         {{"name", "triv2"},
                          {"kind", {{"flavor", "GL"}, {"n", 2}}},
                          {"generators", Json::array({Json::array({Json::array({1, 0}),
                                                                   Json::array({0, 1})})})}}})}};
  Session su = session_from_json(uni_file);
  Json ueq = run_task(su, {{"task", "pc-eq"}, {"rep", "uni"}, {"rep2", "triv2"}}, opt);
  CHECK(ueq.at("equal") == true);
  CHECK(ueq.at("oracle").at("conjugate") == true);
  CHECK(ueq.at("oracle_agrees") == true);
  CHECK(ueq.at("ok") == true);

  Json conj = run_task(s, {{"task", "conj-test"}, {"rep", "sign"}, {"rep2", "sign"}}, opt);
  CHECK(conj.at("conjugate") == true);

  Json ker = run_task(s, {{"task", "kernel"}, {"rep", "reg"}}, opt);
  CHECK(ker.at("kernel") == Json::array({0}));
  CHECK(ker.at("oracle_agrees") == true);

  Json coh = run_task(s, {{"task", "cohomology"}, {"p", 2}}, opt);
  CHECK(coh.at("h0") == 1);
  CHECK(coh.at("h1") == 1);

  Json teich = run_task(s, {{"task", "teichmuller"}, {"p", 5}, {"r", 2}, {"residue", 2}}, opt);
  CHECK(teich.at("lift") == 7);

  Json audit = run_task(
      s, {{"task", "axioms-audit"}, {"rep", "reg"}, {"max_arity", 2}, {"word_budget", 2},
          {"mutations", 10}},
      opt);
  CHECK(audit.at("pass") == true);
  CHECK(audit.at("mutations").at("detected") == 10);

  CHECK_THROWS_AS((void)run_task(s, {{"task", "no-such-task"}}, opt), Error);
}

TEST_CASE("sample problem file runs clean end to end") {
  Session s = load_problem(std::string(PCKIT_SOURCE_DIR) + "/samples/z4_gl2_f5.json");
  RunOptions opt;
  std::vector<Json> reports;
  int failures = run_all(s, opt, &reports);
  CHECK(failures == 0);
  CHECK(reports.size() == s.tasks.size());
  for (const auto& r : reports) {
    CAPTURE(r.dump());
    CHECK(r.value("ok", false));
  }
  // text rendering stays printable
  for (const auto& r : reports) CHECK(!render_text(r).empty());
}
