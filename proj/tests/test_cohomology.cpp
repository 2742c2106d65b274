#include "doctest.h"
#include "helpers.hpp"
#include "pckit/cohomology.hpp"

using namespace pckit;
using namespace pckit::testing;

namespace {

// closed forms for cyclic groups acting trivially: h^1 = h^2 = [p | n]
int cyclic_trivial_expected(int n, int64_t p) { return n % p == 0 ? 1 : 0; }

}  // namespace

TEST_CASE("sp projection worked examples") {
  auto f5 = RingSpec::fq(5);
  CHECK(sp_project(mat_identity(f5, 2), 1) == Mat(f5, 2));  // pi(I) = 0
  Mat h = mat_from_ints(f5, {{1, 0}, {0, -1}});
  CHECK(sp_project(h, 1) == h);  // fixes sp_2
  CHECK(lie_basis(f5, 2, AdFlavor::sp).size() == 3);
  CHECK(lie_basis(f5, 4, AdFlavor::sp).size() == 10);
  CHECK(lie_basis(f5, 2, AdFlavor::gl).size() == 4);
  CHECK(lie_basis(f5, 2, AdFlavor::sl).size() == 3);
}

TEST_CASE("sp projection is idempotent, equivariant, identity on sp") {
  auto f3 = RingSpec::fq(3);
  auto sp2 = enumerate_group_points(GroupKind::make(Flavor::Sp, 1), f3);
  // all of gl_2(F_3)
  for (int64_t code = 0; code < 81; ++code) {
    Mat m(f3, 2);
    int64_t c = code;
    for (auto& x : m.e) {
      x = ring_from_int(f3, c % 3);
      c /= 3;
    }
    Mat p = sp_project(m, 1);
    CHECK(sp_project(p, 1) == p);
    for (const Mat& a : sp2) {
      Mat conj = mat_mul(mat_mul(a, m), mat_inverse(a));
      CHECK(sp_project(conj, 1) == mat_mul(mat_mul(a, p), mat_inverse(a)));
    }
  }
  for (const Mat& b : lie_basis(f3, 2, AdFlavor::sp)) CHECK(sp_project(b, 1) == b);
}

TEST_CASE("cohomology oracle values") {
  auto f3 = RingSpec::fq(3);
  auto triv_group = FiniteGroup::trivial();
  auto d0 = cohomology_dims(trivial_gmodule(triv_group, f3, 3));
  CHECK(d0.h0 == 3);
  CHECK(d0.h1 == 0);
  CHECK(d0.h2 == 0);

  auto z3 = cohomology_dims(trivial_gmodule(FiniteGroup::cyclic(3), f3, 1));
  CHECK(z3.h0 == 1);
  CHECK(z3.h1 == 1);
  CHECK(z3.h2 == 1);

  auto z2 = cohomology_dims(trivial_gmodule(FiniteGroup::cyclic(2), f3, 1));
  CHECK(z2.h0 == 1);
  CHECK(z2.h1 == 0);
  CHECK(z2.h2 == 0);
}

TEST_CASE("cyclic groups against the norm/augmentation closed form") {
  for (int n = 1; n <= 12; ++n)
    for (int64_t p : {2, 3, 5}) {
      auto dims = cohomology_dims(trivial_gmodule(FiniteGroup::cyclic(n), RingSpec::fq(p), 1));
      CAPTURE(n);
      CAPTURE(p);
      CHECK(dims.h0 == 1);
      CHECK(dims.h1 == cyclic_trivial_expected(n, p));
      CHECK(dims.h2 == cyclic_trivial_expected(n, p));
    }
}

TEST_CASE("rep tangent dimensions") {
  CHECK(rep_tangent_dim(standard2_s3(RingSpec::fq(5)), AdFlavor::gl) == 0);
  auto triv = trivial_rep(FiniteGroup::cyclic(3), GroupKind::make(Flavor::GL, 1),
                          RingSpec::fq(3));
  CHECK(rep_tangent_dim(triv, AdFlavor::gl) == 1);
  // Maschke vanishing when gcd(|Gamma|, p) = 1
  CHECK(rep_tangent_dim(regular_rep_z2_f3(), AdFlavor::gl) == 0);
  CHECK(rep_tangent_dim(q8_sp2_f3(), AdFlavor::sp) == 0);
  CHECK(rep_tangent_dim(pair_diag_sp2_f7(), AdFlavor::sp) == 0);
}

TEST_CASE("h0 equals the centralizer algebra dimension") {
  for (const auto& rho : {regular_rep_z2_f3(), standard2_s3(RingSpec::fq(3)),
                          unipotent_z3_f3(), rekind_gl(q8_sp2_f3())}) {
    int d = rho.dim();
    // solve rho(g) M = M rho(g) directly
    DenseMat sys(rho.ring, static_cast<int>(rho.group->generators().size()) * d * d, d * d);
    int row = 0;
    for (int gen : rho.group->generators()) {
      const Mat& a = rho.at(gen);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          for (int l = 0; l < d; ++l) {
            sys.at(row, l * d + j) = radd(sys.at(row, l * d + j), a.at(i, l));
            sys.at(row, i * d + l) = rsub(sys.at(row, i * d + l), a.at(l, j));
          }
          ++row;
        }
    }
    int centralizer_dim = static_cast<int>(kernel_basis(sys).size());
    CHECK(invariants_dim(ad_module(rho, AdFlavor::gl)) == centralizer_dim);
  }
  // the full complex reports the same h0 on a small case
  auto reg = regular_rep_z2_f3();
  CHECK(cohomology_dims(ad_module(reg, AdFlavor::gl)).h0 ==
        invariants_dim(ad_module(reg, AdFlavor::gl)));
}

TEST_CASE("centralizer points worked examples") {
  auto triv = trivial_rep(FiniteGroup::cyclic(2), GroupKind::make(Flavor::GL, 2),
                          RingSpec::fq(3));
  auto c1 = centralizer_points(triv);
  CHECK(c1.elements.size() == 48);  // all of GL_2(F_3)
  CHECK_FALSE(c1.adjoint_image_trivial);

  auto c2 = centralizer_points(rekind_gl(q8_sp2_f3()));
  CHECK(c2.elements.size() == 2);  // the scalars +-I
  CHECK(c2.adjoint_image_trivial);

  auto c3 = centralizer_points(q8_sp2_f3());
  CHECK(c3.elements.size() == 2);
  CHECK(c3.adjoint_image_trivial);
}

TEST_CASE("gl1 pseudo tangent by enumeration") {
  CHECK(gl1_pseudo_tangent(FiniteGroup::trivial(), 3) == 0);
  CHECK(gl1_pseudo_tangent(FiniteGroup::cyclic(3), 3) == 1);
  CHECK(gl1_pseudo_tangent(FiniteGroup::cyclic(2), 3) == 0);
  CHECK(gl1_pseudo_tangent(FiniteGroup::cyclic(4), 2) == 1);
  CHECK(gl1_pseudo_tangent(FiniteGroup::quaternion8(), 2) == 2);  // Q_8^ab = (Z/2)^2
  CHECK(gl1_pseudo_tangent(FiniteGroup::symmetric3(), 2) == 1);
  CHECK(gl1_pseudo_tangent(FiniteGroup::symmetric3(), 3) == 0);
}

TEST_CASE("rank-1 comparison: enumeration equals cochain linear algebra") {
  for (int64_t p : {2, 3, 5})
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::symmetric3(), FiniteGroup::quaternion8()}) {
      CAPTURE(p);
      CAPTURE(g->name());
      CHECK(gl1_pseudo_tangent(g, p) ==
            cohomology_dims(trivial_gmodule(g, RingSpec::fq(p), 1)).h1);
    }
}

TEST_CASE("budget violation raises") {
  CHECK_THROWS_AS((void)cohomology_dims(trivial_gmodule(FiniteGroup::cyclic(12),
                                                        RingSpec::fq(2), 1), 100),
                  Error);
}
