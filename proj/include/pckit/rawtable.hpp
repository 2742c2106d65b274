#pragma once

#include <unordered_map>

#include "pckit/invariants.hpp"
#include "pckit/pseudochar.hpp"

namespace pckit {

// Exhaustive table of invariant values for auditing the two pseudocharacter
// axioms: every word invariant of length <= L (plus det^{-1} / sim^{+-1}
// where the kind carries them) at every tuple of arity <= M. Values live in
// dense per-arity arrays indexed by (symbol index, tuple code).
struct RawTable {
  GroupPtr group;
  GroupKind kind;
  RingSpec ring;
  int32_t M{2};
  int32_t L{2};
  std::vector<std::vector<InvariantSymbol>> symbols;        // per arity
  std::vector<std::unordered_map<uint64_t, int>> sym_index; // per arity: code -> index
  std::vector<int64_t> tuples;                              // per arity: |Gamma|^m
  std::vector<std::vector<RingElem>> values;                // per arity: sym * tuples + tc

  RingElem& at(int32_t m, int sym, int64_t tc) {
    return values[static_cast<size_t>(m - 1)]
                 [static_cast<size_t>(sym) * static_cast<size_t>(tuples[static_cast<size_t>(m - 1)]) +
                  static_cast<size_t>(tc)];
  }
  const RingElem& at(int32_t m, int sym, int64_t tc) const {
    return values[static_cast<size_t>(m - 1)]
                 [static_cast<size_t>(sym) * static_cast<size_t>(tuples[static_cast<size_t>(m - 1)]) +
                  static_cast<size_t>(tc)];
  }
  int index_of(int32_t m, const InvariantSymbol& sym) const;
  size_t entry_count() const;
};

int64_t tuple_code(const GroupPtr& g, const std::vector<int>& tuple);

RawTable raw_table_from_rep(const Representation& rho, int32_t M, int32_t L);

const RingElem& table_value(const RawTable& t, const InvariantSymbol& sym,
                            const std::vector<int>& tuple);

// deterministic enumeration of (arity, symbol index, tuple code) entries
struct TableEntryRef {
  int32_t m;
  int sym;
  int64_t tc;
};
std::vector<TableEntryRef> all_entries(const RawTable& t);

struct AxiomReport {
  bool pass{true};
  std::string condition;  // "(1)" or "(2)"
  std::string invariant;
  std::vector<int> tuple;
  std::string detail;
};

// Checks condition (1) for all index maps between arities <= M and condition
// (2) for all arities < M, restricted to word invariants staying within
// length L. Reports the first violation found.
AxiomReport verify_axioms(const RawTable& t);

}  // namespace pckit
