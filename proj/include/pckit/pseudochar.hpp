#pragma once

#include <memory>
#include <optional>

#include "pckit/invariants.hpp"
#include "pckit/representation.hpp"

namespace pckit {

// A pseudocharacter of a finite group, stored as the characteristic
// polynomial fingerprint of the standard embedding on every element, plus the
// similitude table for GSp/GO. A witnessing representation is carried along
// when one is known; operations that the invariant data alone cannot express
// (tensor, symplectic sum, pair-type embedding, determinant law values)
// require it.
struct PseudoChar {
  GroupPtr group;
  GroupKind kind;
  RingSpec ring;
  std::vector<std::vector<RingElem>> fingerprint;  // element -> (sigma_1..sigma_d)
  std::optional<std::vector<RingElem>> simtable;
  std::shared_ptr<const Representation> witness;
};

PseudoChar from_rep(const Representation& rho);

bool pc_equals(const PseudoChar& a, const PseudoChar& b);

// Elements whose right-insertions (with all conjugates interleaved) leave the
// fingerprint and similitude table unchanged. For a finite group the budget L
// is exhausted at any L >= 1; the parameter is kept for interface parity.
std::vector<int> pc_kernel(const PseudoChar& pc, int word_budget = 4);

struct QuotientPC {
  PseudoChar pc;
  QuotientResult quotient;
};
QuotientPC quotient_factor(const PseudoChar& pc, const std::vector<int>& delta);

PseudoChar pc_dual(const PseudoChar& pc);
PseudoChar pc_direct_sum(const PseudoChar& a, const PseudoChar& b);
PseudoChar pc_tensor(const PseudoChar& a, const PseudoChar& b);
PseudoChar pc_sp_direct_sum(const PseudoChar& a, const PseudoChar& b);
PseudoChar pc_pair_type_embed(const PseudoChar& pc);

enum class StdEmbedding { SLtoGL, SptoGL, SptoGSp, GSptoGL, SOtoO, OtoGL, SOtoGL, GLtoSpPair };
const char* embedding_name(StdEmbedding e);
std::optional<StdEmbedding> embedding_from_name(const std::string& s);
PseudoChar pc_pushforward(const PseudoChar& pc, StdEmbedding emb);

PseudoChar pc_restrict(const PseudoChar& pc, const GroupHom& iota);

// Lambda_i(gamma) = Theta_1(sigma_i)(gamma); Lambda_0 = 1.
RingElem emerson_lambda(const PseudoChar& pc, int32_t i, int elem);

// Elements of the group algebra A[Gamma].
struct GroupAlgebraElem {
  GroupPtr group;
  RingSpec ring;
  std::vector<RingElem> coeffs;  // indexed by group element
};
GroupAlgebraElem ga_zero(GroupPtr group, const RingSpec& ring);
GroupAlgebraElem ga_basis(GroupPtr group, const RingSpec& ring, int elem);
GroupAlgebraElem ga_add(const GroupAlgebraElem& a, const GroupAlgebraElem& b);
GroupAlgebraElem ga_mul(const GroupAlgebraElem& a, const GroupAlgebraElem& b);
GroupAlgebraElem ga_scale(const RingElem& c, const GroupAlgebraElem& a);

// D(sum a_g g) = det(sum a_g rho(g)); multiplicative and homogeneous of
// degree d. Needs the witnessing representation.
RingElem det_law_eval(const PseudoChar& pc, const GroupAlgebraElem& r);

// stable key for grouping pseudocharacters by fingerprint
std::vector<int64_t> fingerprint_key(const PseudoChar& pc);

}  // namespace pckit
