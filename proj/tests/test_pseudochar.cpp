#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pckit/rawtable.hpp"

using namespace pckit;
using namespace pckit::testing;

namespace {

std::vector<RingElem> sig(const RingSpec& ring, std::initializer_list<int64_t> vals) {
  std::vector<RingElem> out;
  for (int64_t v : vals) out.push_back(ring_from_int(ring, v));
  return out;
}

}  // namespace

TEST_CASE("from_rep worked examples") {
  auto ring = RingSpec::fq(3);
  auto triv = trivial_rep(FiniteGroup::cyclic(2), GroupKind::make(Flavor::GL, 1), ring);
  PseudoChar pt = from_rep(triv);
  CHECK(pt.fingerprint[0] == sig(ring, {1}));
  CHECK(pt.fingerprint[1] == sig(ring, {1}));

  PseudoChar ps = from_rep(sign_rep_z2_f3());
  CHECK(ps.fingerprint[0] == sig(ring, {1}));
  CHECK(ps.fingerprint[1] == sig(ring, {2}));

  PseudoChar pr = from_rep(regular_rep_z2_f3());
  CHECK(pr.fingerprint[0] == sig(ring, {2, 1}));
  CHECK(pr.fingerprint[1] == sig(ring, {0, 2}));
}

TEST_CASE("from_rep is conjugation invariant, exhaustively for small groups") {
  auto sp = q8_sp2_f3();
  for (const Mat& g : enumerate_group_points(sp.kind, sp.ring))
    CHECK(pc_equals(from_rep(sp), from_rep(conjugate_rep(sp, g))));
  auto rho = standard2_s3(RingSpec::fq(2));
  for (const Mat& g : enumerate_group_points(rho.kind, rho.ring))
    CHECK(pc_equals(from_rep(rho), from_rep(conjugate_rep(rho, g))));
}

TEST_CASE("equals: unipotent matches trivial, sign does not") {
  auto uni = from_rep(unipotent_z3_f3());
  auto triv2 = from_rep(
      trivial_rep(FiniteGroup::cyclic(3), GroupKind::make(Flavor::GL, 2), RingSpec::fq(3)));
  CHECK(pc_equals(uni, triv2));

  auto sign = from_rep(sign_rep_z2_f3());
  auto triv1 = from_rep(
      trivial_rep(FiniteGroup::cyclic(2), GroupKind::make(Flavor::GL, 1), RingSpec::fq(3)));
  CHECK_FALSE(pc_equals(sign, triv1));

  CHECK_THROWS_AS((void)pc_equals(uni, sign), Error);  // different groups
}

TEST_CASE("kernel worked examples") {
  CHECK(pc_kernel(from_rep(unipotent_z3_f3())) == std::vector<int>{0, 1, 2});
  CHECK(pc_kernel(from_rep(regular_rep_z2_f3())) == std::vector<int>{0});
  // sign character of S_3 over F_7 has kernel A_3
  auto sgn = sign_rep_s3(RingSpec::fq(7));
  auto ker = pc_kernel(from_rep(sgn));
  CHECK(ker.size() == 3);
  for (int e : ker) CHECK(sgn.at(e) == mat_identity(sgn.ring, 1));
}

TEST_CASE("quotient_factor and restriction round trip") {
  auto sgn = sign_rep_s3(RingSpec::fq(7));
  PseudoChar pc = from_rep(sgn);
  auto ker = pc_kernel(pc);
  auto q = quotient_factor(pc, ker);
  CHECK(q.pc.group->order() == 2);
  // nontrivial character of the quotient
  CHECK(q.pc.fingerprint[1] == sig(RingSpec::fq(7), {6}));

  // restricting back along the projection recovers the original
  auto proj = group_hom(pc.group, q.pc.group, q.quotient.projection);
  CHECK(pc_equals(pc_restrict(q.pc, proj), pc));

  // trivial subgroup quotient is the identity
  auto q0 = quotient_factor(pc, {0});
  CHECK(q0.pc.group->order() == 6);

  // quotient of the trivial pseudocharacter by the whole group
  auto triv = from_rep(trivial_rep(sgn.group, GroupKind::make(Flavor::GL, 1), sgn.ring));
  std::vector<int> whole;
  for (int e = 0; e < 6; ++e) whole.push_back(e);
  auto qall = quotient_factor(triv, whole);
  CHECK(qall.pc.group->order() == 1);
  CHECK(is_one(qall.pc.fingerprint[0][0]));

  // delta not inside the kernel
  PseudoChar faithful = from_rep(standard2_s3(RingSpec::fq(7)));
  CHECK_THROWS_AS((void)quotient_factor(faithful, ker), Error);
}

TEST_CASE("dual worked examples") {
  auto chi = gl1_character(FiniteGroup::cyclic(3), RingSpec::fq(7), 2);
  PseudoChar pc = from_rep(chi);
  PseudoChar dpc = pc_dual(pc);
  CHECK(dpc.fingerprint[1] == sig(RingSpec::fq(7), {4}));  // 2^-1 = 4
  CHECK(pc_equals(pc_dual(dpc), pc));

  PseudoChar reg = from_rep(regular_rep_z2_f3());
  CHECK(pc_equals(pc_dual(reg), reg));
}

TEST_CASE("direct sum is sigma convolution") {
  // characters with values 1 and 2 at the generator of Z/4 over F_5:
  // (t-1)(t-2) = t^2 - 3t + 2
  auto z4 = FiniteGroup::cyclic(4);
  auto f5 = RingSpec::fq(5);
  auto chi1 = gl1_character(z4, f5, 1);
  auto chi2 = gl1_character(z4, f5, 2);
  PseudoChar sum = pc_direct_sum(from_rep(chi1), from_rep(chi2));
  CHECK(sum.fingerprint[1] == sig(f5, {3, 2}));

  auto f3 = RingSpec::fq(3);
  PseudoChar mixed = pc_direct_sum(from_rep(sign_rep_z2_f3()),
                                   from_rep(trivial_rep(FiniteGroup::cyclic(2),
                                                        GroupKind::make(Flavor::GL, 1), f3)));
  CHECK(mixed.fingerprint[1] == sig(f3, {0, 2}));

  // sum commutes with from_rep
  auto a = regular_rep_z2_f3();
  auto b = sign_rep_z2_f3();
  CHECK(pc_equals(pc_direct_sum(from_rep(a), from_rep(b)), from_rep(direct_sum_rep(a, b))));
}

TEST_CASE("tensor product") {
  auto f3 = RingSpec::fq(3);
  auto reg = regular_rep_z2_f3();
  auto sgn = sign_rep_z2_f3();
  PseudoChar t = pc_tensor(from_rep(reg), from_rep(sgn));
  CHECK(t.fingerprint[1] == sig(f3, {0, 2}));
  CHECK(pc_equals(t, from_rep(tensor_rep(reg, sgn))));

  // GL_1 times GL_1 without witnesses: pointwise product
  PseudoChar c1 = from_rep(sgn);
  c1.witness = nullptr;
  PseudoChar c2 = from_rep(sgn);
  c2.witness = nullptr;
  PseudoChar prod = pc_tensor(c1, c2);
  CHECK(prod.fingerprint[1] == sig(f3, {1}));

  // tensor with the trivial character is the identity
  auto triv1 = trivial_rep(FiniteGroup::cyclic(2), GroupKind::make(Flavor::GL, 1), f3);
  CHECK(pc_equals(pc_tensor(from_rep(reg), from_rep(triv1)), from_rep(reg)));

  // no witness and not GL_1: unsupported
  PseudoChar now = from_rep(reg);
  now.witness = nullptr;
  CHECK_THROWS_AS((void)pc_tensor(now, now), Error);
}

TEST_CASE("symplectic direct sum and pair type") {
  auto f7 = RingSpec::fq(7);
  auto chi = gl1_character(FiniteGroup::cyclic(3), f7, 2);
  PseudoChar pair = pc_pair_type_embed(from_rep(chi));
  CHECK(pair.kind == GroupKind::make(Flavor::Sp, 1));
  CHECK(pair.fingerprint[1] == sig(f7, {6, 1}));
  CHECK_FALSE(pair.simtable.has_value());

  // pair-type equals the symplectic image of chi + chi^*
  PseudoChar viasum = pc_direct_sum(from_rep(chi), pc_dual(from_rep(chi)));
  CHECK(pair.fingerprint == viasum.fingerprint);

  auto q8 = q8_sp2_f3();
  auto triv = trivial_rep(FiniteGroup::quaternion8(), GroupKind::make(Flavor::Sp, 1),
                          RingSpec::fq(3));
  PseudoChar sum = pc_sp_direct_sum(from_rep(q8), from_rep(triv));
  CHECK(sum.kind == GroupKind::make(Flavor::Sp, 2));
  for (const Mat& m : sum.witness->images) CHECK(membership(sum.kind, m));

  // trivial + trivial is the trivial pseudocharacter of Sp_4
  PseudoChar tt = pc_sp_direct_sum(from_rep(triv), from_rep(triv));
  CHECK(pc_equals(tt, from_rep(trivial_rep(FiniteGroup::quaternion8(),
                                           GroupKind::make(Flavor::Sp, 2), RingSpec::fq(3)))));
}

TEST_CASE("pushforward") {
  auto f5 = RingSpec::fq(5);
  // Sp_2 -> GL_2 leaves the fingerprint alone
  auto q8 = q8_sp2_f3();
  PseudoChar sp = from_rep(q8);
  PseudoChar gl = pc_pushforward(sp, StdEmbedding::SptoGL);
  CHECK(gl.kind == GroupKind::make(Flavor::GL, 2));
  CHECK(gl.fingerprint == sp.fingerprint);

  // Sp -> GSp acquires the constant similitude table
  PseudoChar gsp = pc_pushforward(sp, StdEmbedding::SptoGSp);
  REQUIRE(gsp.simtable.has_value());
  for (const auto& v : *gsp.simtable) CHECK(is_one(v));

  // GSp -> GL: det = nu^n after pushforward
  auto z2 = FiniteGroup::cyclic(2);
  auto gsprep = rep_from_generator_images(z2, GroupKind::make(Flavor::GSp, 1), f5,
                                          {mat_from_ints(f5, {{0, 1}, {1, 0}})});
  PseudoChar pgsp = from_rep(gsprep);
  PseudoChar pgl = pc_pushforward(pgsp, StdEmbedding::GSptoGL);
  for (int e = 0; e < 2; ++e)
    CHECK(pgl.fingerprint[static_cast<size_t>(e)].back() ==
          (*pgsp.simtable)[static_cast<size_t>(e)]);

  // SL -> GL then det^{-1} is constantly 1
  auto slrep = rep_from_generator_images(FiniteGroup::cyclic(4), GroupKind::make(Flavor::SL, 2),
                                         RingSpec::fq(3),
                                         {mat_from_ints(RingSpec::fq(3), {{0, 1}, {2, 0}})});
  PseudoChar psl = from_rep(slrep);
  PseudoChar pslgl = pc_pushforward(psl, StdEmbedding::SLtoGL);
  for (const auto& s : pslgl.fingerprint) CHECK(is_one(s.back()));

  // functoriality on the composable built-ins SO -> O -> GL
  auto f3 = RingSpec::fq(3);
  auto so_rep = rep_from_generator_images(FiniteGroup::cyclic(4), GroupKind::make(Flavor::SO, 2),
                                          f3, {mat_from_ints(f3, {{0, 2}, {1, 0}})});
  PseudoChar pso = from_rep(so_rep);
  CHECK(pc_equals(pc_pushforward(pc_pushforward(pso, StdEmbedding::SOtoO), StdEmbedding::OtoGL),
                  pc_pushforward(pso, StdEmbedding::SOtoGL)));

  CHECK_THROWS_AS((void)pc_pushforward(sp, StdEmbedding::SLtoGL), Error);
}

TEST_CASE("restrict") {
  auto f3 = RingSpec::fq(3);
  auto reg = standard2_s3(f3);
  PseudoChar pc = from_rep(reg);
  auto s3 = reg.group;
  // restrict to A_3
  std::vector<int> a3;
  for (int e = 0; e < 6; ++e) {
    int x = e, ord = 1;
    while (x != 0) {
      x = s3->mul(x, e);
      ++ord;
    }
    if (ord != 2) a3.push_back(e);
  }
  auto iota = subgroup_inclusion(s3, a3);
  PseudoChar res = pc_restrict(pc, iota);
  CHECK(pc_equals(res, from_rep(restrict_rep(reg, iota))));

  // restriction to the trivial subgroup is constant
  auto triv_iota = subgroup_inclusion(s3, {0});
  PseudoChar rt = pc_restrict(pc, triv_iota);
  CHECK(rt.fingerprint[0] == sig(f3, {2, 1}));
}

TEST_CASE("emerson lambda and the determinant law") {
  auto f3 = RingSpec::fq(3);
  auto reg = regular_rep_z2_f3();
  PseudoChar pc = from_rep(reg);
  CHECK(emerson_lambda(pc, 0, 1) == ring_one(f3));
  CHECK(emerson_lambda(pc, 1, 1) == ring_zero(f3));
  CHECK(emerson_lambda(pc, 2, 1) == ring_from_int(f3, 2));

  // D(t - s) = t^2 - 1: the sigma expansion of the swap matrix
  CHECK(pc.fingerprint[1] == sig(f3, {0, 2}));

  // multiplicativity and homogeneity on random group algebra elements
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int64_t> dist(0, 2);
  for (int t = 0; t < 200; ++t) {
    GroupAlgebraElem r = ga_zero(pc.group, f3), s = ga_zero(pc.group, f3);
    for (auto& c : r.coeffs) c = ring_from_int(f3, dist(rng));
    for (auto& c : s.coeffs) c = ring_from_int(f3, dist(rng));
    CHECK(det_law_eval(pc, ga_mul(r, s)) == rmul(det_law_eval(pc, r), det_law_eval(pc, s)));
    RingElem c = ring_from_int(f3, dist(rng));
    CHECK(det_law_eval(pc, ga_scale(c, r)) == rmul(rmul(c, c), det_law_eval(pc, r)));
  }

  PseudoChar noww = pc;
  noww.witness = nullptr;
  CHECK_THROWS_AS((void)det_law_eval(noww, ga_basis(pc.group, f3, 1)), Error);
}

TEST_CASE("raw table passes the axioms and locates perturbations") {
  // regular representation of Z/3 inside GL_3(F_2)
  auto z3 = FiniteGroup::cyclic(3);
  auto f2 = RingSpec::fq(2);
  Mat cycle = mat_from_ints(f2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  auto reg = rep_from_generator_images(z3, GroupKind::make(Flavor::GL, 3), f2, {cycle});
  RawTable t = raw_table_from_rep(reg, 3, 3);
  CHECK(verify_axioms(t).pass);

  // single-entry perturbations break the audit
  auto entries = all_entries(t);
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 25; ++trial) {
    const auto& ref = entries[rng() % entries.size()];
    RingElem old = t.at(ref.m, ref.sym, ref.tc);
    t.at(ref.m, ref.sym, ref.tc) = radd(old, ring_one(f2));
    auto report = verify_axioms(t);
    CHECK_FALSE(report.pass);
    CHECK((report.condition == "(1)" || report.condition == "(2)"));
    t.at(ref.m, ref.sym, ref.tc) = old;
  }
  CHECK(verify_axioms(t).pass);
}

TEST_CASE("raw table condition (2) catches inconsistent product values") {
  auto reg = regular_rep_z2_f3();
  RawTable t = raw_table_from_rep(reg, 2, 2);
  CHECK(verify_axioms(t).pass);
  // corrupt sigma_1(X_1 X_2) at (s, s) so it disagrees with sigma_1 at s*s = e
  InvariantSymbol sym;
  sym.kind = InvKind::SigmaOfWord;
  sym.m = 2;
  sym.i = 1;
  sym.word = {{1, Decoration::Plain}, {2, Decoration::Plain}};
  int si = t.index_of(2, sym);
  int64_t tc = tuple_code(t.group, {1, 1});
  t.at(2, si, tc) = radd(t.at(2, si, tc), ring_one(t.ring));
  auto report = verify_axioms(t);
  CHECK_FALSE(report.pass);
}

TEST_CASE("sp-kind raw tables audit decorated words") {
  auto q8 = q8_sp2_f3();
  RawTable t = raw_table_from_rep(q8, 2, 2);
  CHECK(verify_axioms(t).pass);
  auto entries = all_entries(t);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& ref = entries[rng() % entries.size()];
    RingElem old = t.at(ref.m, ref.sym, ref.tc);
    t.at(ref.m, ref.sym, ref.tc) = radd(old, ring_one(t.ring));
    CHECK_FALSE(verify_axioms(t).pass);
    t.at(ref.m, ref.sym, ref.tc) = old;
  }
}
