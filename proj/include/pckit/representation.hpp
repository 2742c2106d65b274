#pragma once

#include "pckit/finite_group.hpp"
#include "pckit/groupkind.hpp"
#include "pckit/word.hpp"

namespace pckit {

// A homomorphism Gamma -> G(A), cached on every element and validated as a
// homomorphism with all images passing membership.
struct Representation {
  GroupPtr group;
  GroupKind kind;
  RingSpec ring;
  std::vector<Mat> images;  // indexed by group element

  const Mat& at(int e) const { return images[static_cast<size_t>(e)]; }
  int dim() const { return kind.d(); }
};

Representation rep_from_images(GroupPtr group, const GroupKind& kind, const RingSpec& ring,
                               std::vector<Mat> images);

// Builds the full image table from generator images via the group's
// generator words, then validates. Throws NotAHomomorphism naming the first
// failing product when the images do not satisfy the relations.
Representation rep_from_generator_images(GroupPtr group, const GroupKind& kind,
                                         const RingSpec& ring,
                                         const std::vector<Mat>& gen_images);

Representation trivial_rep(GroupPtr group, const GroupKind& kind, const RingSpec& ring);

// rho'(g) = c rho(g) c^{-1}
Representation conjugate_rep(const Representation& rho, const Mat& c);

Representation direct_sum_rep(const Representation& a, const Representation& b);
Representation tensor_rep(const Representation& a, const Representation& b);
// transpose-inverse composed with rho; kind stays GL
Representation dual_rep(const Representation& rho);
// entrywise field extension of scalars
Representation extend_scalars(const Representation& rho, int32_t k);
// precompose with a group homomorphism delta -> gamma
Representation restrict_rep(const Representation& rho, const GroupHom& iota);
// push a representation through the quotient projection (images must be
// constant on cosets)
Representation quotient_rep(const Representation& rho, const QuotientResult& q);

// Interleaved block embedding Sp_2a x Sp_2b -> Sp_{2(a+b)} preserving the
// global J: basis order (e_1..e_a, e'_1..e'_b, f_1..f_a, f'_1..f'_b).
Mat sp_interleave(const Mat& a, const Mat& b, int32_t na, int32_t nb);
Representation sp_direct_sum_rep(const Representation& a, const Representation& b);

// gamma |-> blockdiag(rho(gamma), rho(gamma)^-T), landing in Sp_2n.
Representation pair_type_rep(const Representation& rho);

// the same matrices tagged with the ambient GL kind
Representation rekind_gl(const Representation& rho);

// wrapper making a FiniteGroup usable with the word calculus
class FiniteGroupOps final : public GroupOps<int> {
 public:
  explicit FiniteGroupOps(GroupPtr g) : g_(std::move(g)) {}
  int mul(const int& a, const int& b) const override { return g_->mul(a, b); }
  int inv(const int& a) const override { return g_->inv(a); }
  int id() const override { return g_->id(); }

 private:
  GroupPtr g_;
};

class MatOps final : public GroupOps<Mat> {
 public:
  MatOps(const RingSpec& ring, int d) : ring_(ring), d_(d) {}
  Mat mul(const Mat& a, const Mat& b) const override { return mat_mul(a, b); }
  Mat inv(const Mat& a) const override { return mat_inverse(a); }
  Mat id() const override { return mat_identity(ring_, d_); }

 private:
  RingSpec ring_;
  int d_;
};

}  // namespace pckit
