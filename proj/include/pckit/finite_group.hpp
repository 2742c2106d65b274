#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pckit/error.hpp"

namespace pckit {

// Finite group with a full multiplication table. Element 0 is the identity;
// indexing is deterministic for a given construction path.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::vector<int>> table,
                                                       std::vector<int> generators,
                                                       std::string name);
  // Permutation generators given as 0-based image arrays; the group is the
  // closure, BFS-enumerated from the identity (cap on the order).
  static std::shared_ptr<const FiniteGroup> from_permutations(
      const std::vector<std::vector<int>>& perm_gens, std::string name, int cap = 10000);

  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  static std::shared_ptr<const FiniteGroup> symmetric3();
  static std::shared_ptr<const FiniteGroup> quaternion8();
  static std::shared_ptr<const FiniteGroup> trivial();

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<size_t>(a)]; }
  int id() const { return 0; }
  const std::vector<int>& generators() const { return generators_; }
  // expression of an element as a product of generators (list of generator
  // positions into generators()); empty for the identity
  const std::vector<int>& gen_word(int e) const { return gen_words_[static_cast<size_t>(e)]; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal(const std::vector<int>& elems) const;
  std::vector<int> conjugacy_class(int e) const;
  // smallest normal subgroup containing the given elements
  std::vector<int> normal_closure(const std::vector<int>& elems) const;

 private:
  FiniteGroup() = default;
  void validate() const;
  void build_derived();

  int order_{0};
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> gen_words_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Group homomorphism src -> dst as an element map, validated on construction.
struct GroupHom {
  GroupPtr src;
  GroupPtr dst;
  std::vector<int> map;
};

GroupHom group_hom(GroupPtr src, GroupPtr dst, std::vector<int> map);

// Quotient by a normal subgroup. Coset indexing: identity coset is 0, the
// rest ordered by their smallest member.
struct QuotientResult {
  GroupPtr group;
  std::vector<int> projection;  // element of src -> element of quotient
};
QuotientResult quotient_group(const GroupPtr& g, const std::vector<int>& normal_subgroup);

// The subgroup on the given closed element set, as its own FiniteGroup,
// together with the inclusion homomorphism.
GroupHom subgroup_inclusion(const GroupPtr& g, const std::vector<int>& elems);

}  // namespace pckit
