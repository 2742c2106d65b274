#include "pckit/finite_group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace pckit {

void FiniteGroup::validate() const {
  int n = order_;
  require(n >= 1, Err::SchemaError, "empty group");
  require(static_cast<int>(table_.size()) == n, Err::SchemaError, "table has wrong row count");
  for (const auto& row : table_) {
    require(static_cast<int>(row.size()) == n, Err::SchemaError, "table row has wrong length");
    for (int v : row) require(v >= 0 && v < n, Err::SchemaError, "table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    require(mul(0, a) == a && mul(a, 0) == a, Err::SchemaError, "element 0 is not the identity");
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) has_inv = true;
    require(has_inv, Err::SchemaError, "element without inverse");
  }
  // cancellation (rows and columns are permutations)
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen_row(static_cast<size_t>(n), false), seen_col(static_cast<size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      require(!seen_row[static_cast<size_t>(mul(a, b))], Err::SchemaError, "row not a permutation");
      require(!seen_col[static_cast<size_t>(mul(b, a))], Err::SchemaError, "column not a permutation");
      seen_row[static_cast<size_t>(mul(a, b))] = true;
      seen_col[static_cast<size_t>(mul(b, a))] = true;
    }
  }
  if (n <= 24) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          require(mul(mul(a, b), c) == mul(a, mul(b, c)), Err::SchemaError,
                  "multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0xa550c1a7e);
    std::uniform_int_distribution<int> dist(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      require(mul(mul(a, b), c) == mul(a, mul(b, c)), Err::SchemaError,
              "multiplication table is not associative");
    }
  }
}

void FiniteGroup::build_derived() {
  int n = order_;
  inverse_.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<size_t>(a)] = b;

  if (generators_.empty()) {
    for (int a = 1; a < n; ++a) generators_.push_back(a);
    if (n == 1) generators_.clear();
  }
  // BFS expressions of every element in the generators
  gen_words_.assign(static_cast<size_t>(n), {});
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[0] = true;
  std::vector<int> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (size_t gi = 0; gi < generators_.size(); ++gi) {
      int t = mul(e, generators_[gi]);
      if (seen[static_cast<size_t>(t)]) continue;
      seen[static_cast<size_t>(t)] = true;
      gen_words_[static_cast<size_t>(t)] = gen_words_[static_cast<size_t>(e)];
      gen_words_[static_cast<size_t>(t)].push_back(static_cast<int>(gi));
      queue.push_back(t);
    }
  }
  for (int e = 0; e < n; ++e)
    require(seen[static_cast<size_t>(e)], Err::SchemaError,
            "declared generators do not generate the group");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                                           std::vector<int> generators,
                                                           std::string name) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = static_cast<int>(table.size());
  g->table_ = std::move(table);
  g->generators_ = std::move(generators);
  g->name_ = std::move(name);
  g->validate();
  g->build_derived();
  return g;
}

namespace {

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(x) = a(b(x))
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
  return c;
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(
    const std::vector<std::vector<int>>& perm_gens, std::string name, int cap) {
  require(!perm_gens.empty(), Err::SchemaError, "need at least one permutation generator");
  size_t deg = perm_gens[0].size();
  for (const auto& p : perm_gens) {
    require(p.size() == deg, Err::SchemaError, "permutations of different degrees");
    std::vector<bool> seen(deg, false);
    for (int v : p) {
      require(v >= 0 && v < static_cast<int>(deg) && !seen[static_cast<size_t>(v)],
              Err::SchemaError, "not a permutation");
      seen[static_cast<size_t>(v)] = true;
    }
  }
  std::vector<int> identity(deg);
  for (size_t i = 0; i < deg; ++i) identity[i] = static_cast<int>(i);

  std::vector<std::vector<int>> elems = {identity};
  std::map<std::vector<int>, int> index = {{identity, 0}};
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : perm_gens) {
      auto t = perm_compose(elems[qi], g);
      if (index.count(t)) continue;
      require(static_cast<int>(elems.size()) < cap, Err::ClosureCapExceeded,
              "closure exceeds cap " + std::to_string(cap));
      index[t] = static_cast<int>(elems.size());
      elems.push_back(t);
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(perm_compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
  std::vector<int> gens;
  for (const auto& g : perm_gens) gens.push_back(index.at(g));
  return from_table(std::move(table), std::move(gens), std::move(name));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  require(n >= 1, Err::SchemaError, "cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return from_table(std::move(table), std::move(gens), "Z/" + std::to_string(n));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric3() {
  return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S_3");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::quaternion8() {
  // {1, i, -1, -i, j, k, -j, -k} encoded via the regular action below
  // i, j act by left multiplication; indices: 0:1 1:i 2:-1 3:-i 4:j 5:k 6:-j 7:-k
  // left mult by i: 1->i, i->-1, -1->-i, -i->1, j->k... i*j = k, i*k = i*i*j = -j,
  // i*-j = j... careful: table from the standard relations.
  // left-multiplication permutations on the 8 element symbols:
  std::vector<int> mi = {1, 2, 3, 0, 5, 6, 7, 4};  // x -> i*x
  std::vector<int> mj = {4, 7, 6, 5, 2, 1, 0, 3};  // x -> j*x
  auto g = from_permutations({mi, mj}, "Q_8");
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::trivial() {
  return from_table({{0}}, {}, "1");
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  for (int a : s)
    if (!s.count(inv(a))) return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
  if (!is_subgroup(elems)) return false;
  std::set<int> s(elems.begin(), elems.end());
  for (int g = 0; g < order_; ++g)
    for (int a : s)
      if (!s.count(mul(mul(g, a), inv(g)))) return false;
  return true;
}

std::vector<int> FiniteGroup::conjugacy_class(int e) const {
  std::set<int> s;
  for (int g = 0; g < order_; ++g) s.insert(mul(mul(g, e), inv(g)));
  return {s.begin(), s.end()};
}

std::vector<int> FiniteGroup::normal_closure(const std::vector<int>& elems) const {
  std::set<int> s = {0};
  std::vector<int> queue;
  auto add = [&](int e) {
    if (s.insert(e).second) queue.push_back(e);
  };
  for (int e : elems)
    for (int c : conjugacy_class(e)) add(c);
  while (!queue.empty()) {
    int e = queue.back();
    queue.pop_back();
    add(inv(e));
    for (int b : std::vector<int>(s.begin(), s.end())) {
      add(mul(e, b));
      add(mul(b, e));
    }
  }
  return {s.begin(), s.end()};
}

GroupHom group_hom(GroupPtr src, GroupPtr dst, std::vector<int> map) {
  require(static_cast<int>(map.size()) == src->order(), Err::SchemaError,
          "homomorphism map must cover the source group");
  for (int v : map)
    require(v >= 0 && v < dst->order(), Err::SchemaError, "homomorphism image out of range");
  for (int a = 0; a < src->order(); ++a)
    for (int b = 0; b < src->order(); ++b)
      require(map[static_cast<size_t>(src->mul(a, b))] ==
                  dst->mul(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]),
              Err::NotAHomomorphism,
              "map violates product of elements " + std::to_string(a) + "," + std::to_string(b));
  return GroupHom{std::move(src), std::move(dst), std::move(map)};
}

GroupHom subgroup_inclusion(const GroupPtr& g, const std::vector<int>& elems) {
  require(g->is_subgroup(elems), Err::SchemaError, "element set is not a subgroup");
  std::vector<int> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // identity (element 0) sorts first
  std::map<int, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(g->mul(sorted[static_cast<size_t>(a)], sorted[static_cast<size_t>(b)]));
  auto sub = FiniteGroup::from_table(std::move(table), {}, g->name() + ".sub");
  return group_hom(sub, g, sorted);
}

QuotientResult quotient_group(const GroupPtr& g, const std::vector<int>& normal_subgroup) {
  require(g->is_normal(normal_subgroup), Err::SchemaError, "subgroup is not normal");
  int n = g->order();
  std::set<int> nset(normal_subgroup.begin(), normal_subgroup.end());
  std::vector<int> coset_rep(static_cast<size_t>(n), -1);  // element -> smallest member of its coset
  for (int a = 0; a < n; ++a) {
    int rep = a;
    for (int h : nset) rep = std::min(rep, g->mul(a, h));
    coset_rep[static_cast<size_t>(a)] = rep;
  }
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (coset_rep[static_cast<size_t>(a)] == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());  // identity coset has rep 0, so it comes first
  std::map<int, int> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);

  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = rep_index.at(
          coset_rep[static_cast<size_t>(g->mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))]);
  std::vector<int> gens;
  for (int ggen : g->generators()) {
    int img = rep_index.at(coset_rep[static_cast<size_t>(ggen)]);
    if (img != 0) gens.push_back(img);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto quot = FiniteGroup::from_table(std::move(table), std::move(gens),
                                      g->name() + "/N" + std::to_string(nset.size()));
  std::vector<int> proj(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) proj[static_cast<size_t>(a)] = rep_index.at(coset_rep[static_cast<size_t>(a)]);
  return {quot, proj};
}

}  // namespace pckit
