#pragma once

#include <map>

#include "pckit/jsonio.hpp"
#include "pckit/reconstruct.hpp"

namespace pckit {

struct RunOptions {
  uint64_t seed{1};
  int32_t ext_degree{2};
  int32_t word_budget{4};
  int32_t max_arity{2};
  int64_t search_cap{1000000};
  int32_t jobs{1};
};

struct Session {
  RingSpec ring;
  GroupPtr group;
  std::vector<std::string> rep_names;
  std::map<std::string, Representation> reps;
  Json tasks;  // array from the problem file (possibly empty)
};

Session session_from_json(const Json& file);
Session load_problem(const std::string& path);

// Executes one task record; the report echoes inputs and carries "ok" plus,
// for oracle-backed tasks, the oracle verdict next to the fast-path verdict.
Json run_task(Session& session, const Json& task, const RunOptions& opt);

// All task records from the problem file; returns the number of failures
// (errors or oracle disagreements).
int run_all(Session& session, const RunOptions& opt, std::vector<Json>* reports);

std::string render_text(const Json& report);

}  // namespace pckit
