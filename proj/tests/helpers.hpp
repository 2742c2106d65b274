#pragma once

// Shared builders for representation-level tests.

#include "pckit/cohomology.hpp"
#include "pckit/pseudochar.hpp"
#include "pckit/reconstruct.hpp"

namespace pckit::testing {

inline Representation gl1_character(GroupPtr g, const RingSpec& ring, int64_t gen_value) {
  GroupKind kind = GroupKind::make(Flavor::GL, 1);
  std::vector<Mat> gens;
  for (size_t i = 0; i < g->generators().size(); ++i)
    gens.push_back(mat_from_ints(ring, {{gen_value}}));
  return rep_from_generator_images(std::move(g), kind, ring, gens);
}

// Z/2 -> GL_1(F_3), s -> -1
inline Representation sign_rep_z2_f3() {
  return gl1_character(FiniteGroup::cyclic(2), RingSpec::fq(3), 2);
}

// Z/2 -> GL_2(F_3), s -> swap matrix
inline Representation regular_rep_z2_f3() {
  auto g = FiniteGroup::cyclic(2);
  auto ring = RingSpec::fq(3);
  return rep_from_generator_images(g, GroupKind::make(Flavor::GL, 2), ring,
                                   {mat_from_ints(ring, {{0, 1}, {1, 0}})});
}

// Z/3 -> GL_2(F_3), gamma -> [[1,1],[0,1]]
inline Representation unipotent_z3_f3() {
  auto g = FiniteGroup::cyclic(3);
  auto ring = RingSpec::fq(3);
  return rep_from_generator_images(g, GroupKind::make(Flavor::GL, 2), ring,
                                   {mat_from_ints(ring, {{1, 1}, {0, 1}})});
}

// standard 2-dimensional representation of S_3 over F_q, in the basis
// (e1-e2, e2-e3) of the sum-zero plane
inline Representation standard2_s3(const RingSpec& ring) {
  auto g = FiniteGroup::symmetric3();
  // generators of symmetric3(): (0 1) and (0 1 2) as permutation arrays
  Mat s = mat_from_ints(ring, {{-1, 1}, {0, 1}});
  Mat t = mat_from_ints(ring, {{0, -1}, {1, -1}});
  return rep_from_generator_images(g, GroupKind::make(Flavor::GL, 2), ring, {s, t});
}

// sign character of S_3
inline Representation sign_rep_s3(const RingSpec& ring) {
  auto g = FiniteGroup::symmetric3();
  Mat s = mat_from_ints(ring, {{-1}});
  Mat t = mat_from_ints(ring, {{1}});
  return rep_from_generator_images(g, GroupKind::make(Flavor::GL, 1), ring, {s, t});
}

// the faithful 2-dimensional representation of Q_8 over F_3, inside Sp_2
inline Representation q8_sp2_f3() {
  auto g = FiniteGroup::quaternion8();
  auto ring = RingSpec::fq(3);
  Mat i = mat_from_ints(ring, {{0, 2}, {1, 0}});
  Mat j = mat_from_ints(ring, {{1, 1}, {1, 2}});
  return rep_from_generator_images(g, GroupKind::make(Flavor::Sp, 1), ring, {i, j});
}

// diag(chi, chi^-1) into Sp_2(F_7) for chi of order 3 (chi(gen) = 2)
inline Representation pair_diag_sp2_f7() {
  auto g = FiniteGroup::cyclic(3);
  auto ring = RingSpec::fq(7);
  Mat m = mat_from_ints(ring, {{2, 0}, {0, 4}});
  return rep_from_generator_images(g, GroupKind::make(Flavor::Sp, 1), ring, {m});
}

}  // namespace pckit::testing
