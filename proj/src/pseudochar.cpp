#include "pckit/pseudochar.hpp"

#include <algorithm>
#include <set>

namespace pckit {

namespace {

int64_t binomial(int n, int k) {
  int64_t v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

void check_fingerprint_integrity(const PseudoChar& pc) {
  int d = pc.kind.d();
  // identity element carries sigma_i(I_d) = C(d, i)
  for (int i = 1; i <= d; ++i)
    require(pc.fingerprint[0][static_cast<size_t>(i - 1)] ==
                ring_from_int(pc.ring, binomial(d, i)),
            Err::Internal, "identity fingerprint is not the sigma-vector of I");
  // sigma_i(g^-1) = sigma_{d-i}(g) / sigma_d(g)
  for (int e = 0; e < pc.group->order(); ++e) {
    const auto& s = pc.fingerprint[static_cast<size_t>(e)];
    require(is_unit(s.back()), Err::Internal, "fingerprint determinant entry is not a unit");
    require(sigmas_of_inverse(s) == pc.fingerprint[static_cast<size_t>(pc.group->inv(e))],
            Err::Internal, "fingerprints of inverse elements are inconsistent");
  }
  if (pc.simtable) {
    const auto& sims = *pc.simtable;
    for (int a = 0; a < pc.group->order(); ++a) {
      require(is_unit(sims[static_cast<size_t>(a)]), Err::Internal, "similitude is not a unit");
      for (int b = 0; b < pc.group->order(); ++b)
        require(sims[static_cast<size_t>(pc.group->mul(a, b))] ==
                    rmul(sims[static_cast<size_t>(a)], sims[static_cast<size_t>(b)]),
                Err::Internal, "similitude table is not a homomorphism");
    }
  }
}

void check_same_context(const PseudoChar& a, const PseudoChar& b) {
  require(a.group->same_table(*b.group), Err::IncompatibleContexts,
          "pseudocharacters over different groups");
  require(a.ring == b.ring, Err::IncompatibleContexts, "pseudocharacters over different rings");
}

// convolution of sigma vectors with sigma_0 = 1 on both sides
std::vector<RingElem> sigma_convolution(const std::vector<RingElem>& a,
                                        const std::vector<RingElem>& b, const RingSpec& ring) {
  int da = static_cast<int>(a.size()), db = static_cast<int>(b.size());
  std::vector<RingElem> out(static_cast<size_t>(da + db), ring_zero(ring));
  auto get = [&](const std::vector<RingElem>& v, int i) {
    return i == 0 ? ring_one(ring) : v[static_cast<size_t>(i - 1)];
  };
  for (int k = 1; k <= da + db; ++k) {
    RingElem acc = ring_zero(ring);
    for (int i = std::max(0, k - db); i <= std::min(k, da); ++i)
      acc = radd(acc, rmul(get(a, i), get(b, k - i)));
    out[static_cast<size_t>(k - 1)] = acc;
  }
  return out;
}

PseudoChar with_kind(const PseudoChar& pc, const GroupKind& kind, bool keep_sims,
                     std::shared_ptr<const Representation> witness) {
  PseudoChar out;
  out.group = pc.group;
  out.kind = kind;
  out.ring = pc.ring;
  out.fingerprint = pc.fingerprint;
  if (keep_sims) out.simtable = pc.simtable;
  out.witness = std::move(witness);
  return out;
}

std::shared_ptr<const Representation> rekind_witness(const PseudoChar& pc,
                                                     const GroupKind& kind) {
  if (!pc.witness) return nullptr;
  return std::make_shared<Representation>(
      rep_from_images(pc.witness->group, kind, pc.witness->ring, pc.witness->images));
}

}  // namespace

PseudoChar from_rep(const Representation& rho) {
  PseudoChar pc;
  pc.group = rho.group;
  pc.kind = rho.kind;
  pc.ring = rho.ring;
  pc.fingerprint.reserve(rho.images.size());
  for (const Mat& m : rho.images) pc.fingerprint.push_back(char_poly_sigmas(m));
  if (rho.kind.has_similitude()) {
    std::vector<RingElem> sims;
    sims.reserve(rho.images.size());
    for (const Mat& m : rho.images) sims.push_back(similitude(rho.kind, m));
    pc.simtable = std::move(sims);
  }
  pc.witness = std::make_shared<Representation>(rho);
  check_fingerprint_integrity(pc);
  return pc;
}

bool pc_equals(const PseudoChar& a, const PseudoChar& b) {
  check_same_context(a, b);
  require(a.kind == b.kind, Err::IncompatibleContexts, "pseudocharacters of different kinds");
  return a.fingerprint == b.fingerprint && a.simtable == b.simtable;
}

std::vector<int> pc_kernel(const PseudoChar& pc, int word_budget) {
  require(word_budget >= 1, Err::SchemaError, "word budget must be >= 1");
  const auto& g = *pc.group;
  std::vector<int> kernel;
  for (int delta = 0; delta < g.order(); ++delta) {
    bool in_kernel = true;
    for (int conj : g.conjugacy_class(delta)) {
      for (int gamma = 0; gamma < g.order() && in_kernel; ++gamma) {
        int t = g.mul(gamma, conj);
        if (pc.fingerprint[static_cast<size_t>(t)] != pc.fingerprint[static_cast<size_t>(gamma)])
          in_kernel = false;
        if (pc.simtable && (*pc.simtable)[static_cast<size_t>(t)] !=
                               (*pc.simtable)[static_cast<size_t>(gamma)])
          in_kernel = false;
      }
      if (!in_kernel) break;
    }
    if (in_kernel) kernel.push_back(delta);
  }
  require(g.is_normal(kernel), Err::Internal, "kernel is not a normal subgroup");
  return kernel;
}

QuotientPC quotient_factor(const PseudoChar& pc, const std::vector<int>& delta) {
  auto ker = pc_kernel(pc);
  std::set<int> kset(ker.begin(), ker.end());
  for (int e : delta)
    require(kset.count(e), Err::NotInKernel,
            "element " + std::to_string(e) + " is outside the kernel");
  require(pc.group->is_normal(delta), Err::NotInKernel, "subgroup is not normal");
  QuotientResult q = quotient_group(pc.group, delta);
  PseudoChar out;
  out.group = q.group;
  out.kind = pc.kind;
  out.ring = pc.ring;
  out.fingerprint.assign(static_cast<size_t>(q.group->order()), {});
  std::optional<std::vector<RingElem>> sims;
  if (pc.simtable) sims.emplace(static_cast<size_t>(q.group->order()), ring_zero(pc.ring));
  for (int e = 0; e < pc.group->order(); ++e) {
    int c = q.projection[static_cast<size_t>(e)];
    auto& slot = out.fingerprint[static_cast<size_t>(c)];
    if (slot.empty())
      slot = pc.fingerprint[static_cast<size_t>(e)];
    else
      require(slot == pc.fingerprint[static_cast<size_t>(e)], Err::NotInKernel,
              "fingerprint is not constant on cosets");
    if (sims) (*sims)[static_cast<size_t>(c)] = (*pc.simtable)[static_cast<size_t>(e)];
  }
  out.simtable = std::move(sims);
  if (pc.witness) {
    bool constant = true;
    for (int e = 0; e < pc.group->order() && constant; ++e)
      for (int h : delta)
        if (!(pc.witness->at(pc.group->mul(e, h)) == pc.witness->at(e))) {
          constant = false;
          break;
        }
    if (constant)
      out.witness = std::make_shared<Representation>(quotient_rep(*pc.witness, q));
  }
  check_fingerprint_integrity(out);
  return {std::move(out), std::move(q)};
}

PseudoChar pc_dual(const PseudoChar& pc) {
  require(pc.kind.flavor == Flavor::GL, Err::WrongKind, "dual is defined over GL");
  PseudoChar out;
  out.group = pc.group;
  out.kind = pc.kind;
  out.ring = pc.ring;
  out.fingerprint.reserve(pc.fingerprint.size());
  // sigma-vector of g^-T equals that of g^-1
  for (const auto& s : pc.fingerprint) out.fingerprint.push_back(sigmas_of_inverse(s));
  if (pc.witness) out.witness = std::make_shared<Representation>(dual_rep(*pc.witness));
  check_fingerprint_integrity(out);
  return out;
}

PseudoChar pc_direct_sum(const PseudoChar& a, const PseudoChar& b) {
  check_same_context(a, b);
  require(a.kind.flavor == Flavor::GL && b.kind.flavor == Flavor::GL, Err::WrongKind,
          "direct sum is defined over GL factors");
  PseudoChar out;
  out.group = a.group;
  out.kind = GroupKind::make(Flavor::GL, a.kind.n + b.kind.n);
  out.ring = a.ring;
  for (int e = 0; e < a.group->order(); ++e)
    out.fingerprint.push_back(sigma_convolution(a.fingerprint[static_cast<size_t>(e)],
                                                b.fingerprint[static_cast<size_t>(e)], a.ring));
  if (a.witness && b.witness)
    out.witness = std::make_shared<Representation>(direct_sum_rep(*a.witness, *b.witness));
  check_fingerprint_integrity(out);
  return out;
}

PseudoChar pc_tensor(const PseudoChar& a, const PseudoChar& b) {
  check_same_context(a, b);
  if (a.witness && b.witness &&
      a.kind.flavor == Flavor::GL && b.kind.flavor == Flavor::GL)
    return from_rep(tensor_rep(*a.witness, *b.witness));
  if (a.kind == GroupKind::make(Flavor::GL, 1) && b.kind == a.kind) {
    PseudoChar out;
    out.group = a.group;
    out.kind = a.kind;
    out.ring = a.ring;
    for (int e = 0; e < a.group->order(); ++e)
      out.fingerprint.push_back(
          {rmul(a.fingerprint[static_cast<size_t>(e)][0], b.fingerprint[static_cast<size_t>(e)][0])});
    check_fingerprint_integrity(out);
    return out;
  }
  fail(Err::UnsupportedOperands,
       "tensor product needs witnessing representations or two GL_1 operands");
}

PseudoChar pc_sp_direct_sum(const PseudoChar& a, const PseudoChar& b) {
  check_same_context(a, b);
  require(a.kind.flavor == Flavor::Sp && b.kind.flavor == Flavor::Sp, Err::WrongKind,
          "symplectic direct sum is defined over Sp factors");
  require(a.witness != nullptr && b.witness != nullptr, Err::NoWitness,
          "symplectic direct sum needs witnessing representations");
  PseudoChar out = from_rep(sp_direct_sum_rep(*a.witness, *b.witness));
  // block-determinant identity: the fingerprint is the sigma convolution
  for (int e = 0; e < a.group->order(); ++e)
    require(out.fingerprint[static_cast<size_t>(e)] ==
                sigma_convolution(a.fingerprint[static_cast<size_t>(e)],
                                  b.fingerprint[static_cast<size_t>(e)], a.ring),
            Err::Internal, "interleaved sum fingerprint disagrees with convolution");
  return out;
}

PseudoChar pc_pair_type_embed(const PseudoChar& pc) {
  require(pc.kind.flavor == Flavor::GL, Err::WrongKind, "pair-type embedding starts from GL");
  require(pc.witness != nullptr, Err::NoWitness, "pair-type embedding needs a witnessing representation");
  return from_rep(pair_type_rep(*pc.witness));
}

const char* embedding_name(StdEmbedding e) {
  switch (e) {
    case StdEmbedding::SLtoGL: return "SL->GL";
    case StdEmbedding::SptoGL: return "Sp->GL";
    case StdEmbedding::SptoGSp: return "Sp->GSp";
    case StdEmbedding::GSptoGL: return "GSp->GL";
    case StdEmbedding::SOtoO: return "SO->O";
    case StdEmbedding::OtoGL: return "O->GL";
    case StdEmbedding::SOtoGL: return "SO->GL";
    case StdEmbedding::GLtoSpPair: return "GL->Sp(pair)";
  }
  return "?";
}

std::optional<StdEmbedding> embedding_from_name(const std::string& s) {
  for (StdEmbedding e : {StdEmbedding::SLtoGL, StdEmbedding::SptoGL, StdEmbedding::SptoGSp,
                         StdEmbedding::GSptoGL, StdEmbedding::SOtoO, StdEmbedding::OtoGL,
                         StdEmbedding::SOtoGL, StdEmbedding::GLtoSpPair})
    if (s == embedding_name(e)) return e;
  return std::nullopt;
}

PseudoChar pc_pushforward(const PseudoChar& pc, StdEmbedding emb) {
  auto expect = [&](Flavor fl) {
    require(pc.kind.flavor == fl, Err::WrongKind,
            std::string("pushforward ") + embedding_name(emb) + " does not start at " +
                pc.kind.to_string());
  };
  switch (emb) {
    case StdEmbedding::SLtoGL: {
      expect(Flavor::SL);
      GroupKind k = GroupKind::make(Flavor::GL, pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::SptoGL: {
      expect(Flavor::Sp);
      GroupKind k = GroupKind::make(Flavor::GL, 2 * pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::SptoGSp: {
      expect(Flavor::Sp);
      GroupKind k = GroupKind::make(Flavor::GSp, pc.kind.n);
      PseudoChar out = with_kind(pc, k, false, rekind_witness(pc, k));
      out.simtable.emplace(static_cast<size_t>(pc.group->order()), ring_one(pc.ring));
      return out;
    }
    case StdEmbedding::GSptoGL: {
      expect(Flavor::GSp);
      GroupKind k = GroupKind::make(Flavor::GL, 2 * pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::SOtoO: {
      expect(Flavor::SO);
      GroupKind k = GroupKind::make(Flavor::O, pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::OtoGL: {
      expect(Flavor::O);
      GroupKind k = GroupKind::make(Flavor::GL, pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::SOtoGL: {
      expect(Flavor::SO);
      GroupKind k = GroupKind::make(Flavor::GL, pc.kind.n);
      return with_kind(pc, k, false, rekind_witness(pc, k));
    }
    case StdEmbedding::GLtoSpPair:
      expect(Flavor::GL);
      return pc_pair_type_embed(pc);
  }
  fail(Err::UnknownEmbedding, "unhandled embedding");
}

PseudoChar pc_restrict(const PseudoChar& pc, const GroupHom& iota) {
  require(iota.dst->same_table(*pc.group), Err::IncompatibleContexts,
          "homomorphism target must match the pseudocharacter's group");
  PseudoChar out;
  out.group = iota.src;
  out.kind = pc.kind;
  out.ring = pc.ring;
  for (int e = 0; e < iota.src->order(); ++e)
    out.fingerprint.push_back(pc.fingerprint[static_cast<size_t>(iota.map[static_cast<size_t>(e)])]);
  if (pc.simtable) {
    std::vector<RingElem> sims;
    for (int e = 0; e < iota.src->order(); ++e)
      sims.push_back((*pc.simtable)[static_cast<size_t>(iota.map[static_cast<size_t>(e)])]);
    out.simtable = std::move(sims);
  }
  if (pc.witness) out.witness = std::make_shared<Representation>(restrict_rep(*pc.witness, iota));
  check_fingerprint_integrity(out);
  return out;
}

RingElem emerson_lambda(const PseudoChar& pc, int32_t i, int elem) {
  require(i >= 0 && i <= pc.kind.d(), Err::SchemaError, "lambda index out of range");
  require(elem >= 0 && elem < pc.group->order(), Err::SchemaError, "element out of range");
  if (i == 0) return ring_one(pc.ring);
  return pc.fingerprint[static_cast<size_t>(elem)][static_cast<size_t>(i - 1)];
}

GroupAlgebraElem ga_zero(GroupPtr group, const RingSpec& ring) {
  GroupAlgebraElem a;
  a.ring = ring;
  a.coeffs.assign(static_cast<size_t>(group->order()), ring_zero(ring));
  a.group = std::move(group);
  return a;
}

GroupAlgebraElem ga_basis(GroupPtr group, const RingSpec& ring, int elem) {
  GroupAlgebraElem a = ga_zero(std::move(group), ring);
  a.coeffs[static_cast<size_t>(elem)] = ring_one(ring);
  return a;
}

GroupAlgebraElem ga_add(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  require(a.group->same_table(*b.group) && a.ring == b.ring, Err::IncompatibleContexts,
          "group algebra operands disagree");
  GroupAlgebraElem c = a;
  for (size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = radd(c.coeffs[i], b.coeffs[i]);
  return c;
}

GroupAlgebraElem ga_mul(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  require(a.group->same_table(*b.group) && a.ring == b.ring, Err::IncompatibleContexts,
          "group algebra operands disagree");
  GroupAlgebraElem c = ga_zero(a.group, a.ring);
  for (int x = 0; x < a.group->order(); ++x) {
    if (is_zero(a.coeffs[static_cast<size_t>(x)])) continue;
    for (int y = 0; y < a.group->order(); ++y) {
      if (is_zero(b.coeffs[static_cast<size_t>(y)])) continue;
      int z = a.group->mul(x, y);
      c.coeffs[static_cast<size_t>(z)] =
          radd(c.coeffs[static_cast<size_t>(z)],
               rmul(a.coeffs[static_cast<size_t>(x)], b.coeffs[static_cast<size_t>(y)]));
    }
  }
  return c;
}

GroupAlgebraElem ga_scale(const RingElem& c, const GroupAlgebraElem& a) {
  GroupAlgebraElem out = a;
  for (auto& x : out.coeffs) x = rmul(c, x);
  return out;
}

RingElem det_law_eval(const PseudoChar& pc, const GroupAlgebraElem& r) {
  require(pc.witness != nullptr, Err::NoWitness, "determinant law evaluation needs a representation");
  require(r.group->same_table(*pc.group) && r.ring == pc.ring, Err::IncompatibleContexts,
          "group algebra element over a different context");
  Mat acc(pc.ring, pc.kind.d());
  for (int e = 0; e < pc.group->order(); ++e) {
    if (is_zero(r.coeffs[static_cast<size_t>(e)])) continue;
    acc = mat_add(acc, mat_scale(r.coeffs[static_cast<size_t>(e)], pc.witness->at(e)));
  }
  return mat_det(acc);
}

std::vector<int64_t> fingerprint_key(const PseudoChar& pc) {
  std::vector<int64_t> key;
  key.push_back(static_cast<int64_t>(pc.kind.flavor));
  key.push_back(pc.kind.n);
  for (const auto& s : pc.fingerprint)
    for (const auto& x : s) key.push_back(ring_encode(x));
  if (pc.simtable)
    for (const auto& x : *pc.simtable) key.push_back(ring_encode(x));
  return key;
}

}  // namespace pckit
