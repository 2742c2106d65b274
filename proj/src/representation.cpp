#include "pckit/representation.hpp"

namespace pckit {

namespace {

void validate_rep(const Representation& rho) {
  const auto& g = *rho.group;
  int n = g.order();
  require(static_cast<int>(rho.images.size()) == n, Err::SchemaError,
          "image table must cover the group");
  require(rho.images[0] == mat_identity(rho.ring, rho.kind.d()), Err::NotAHomomorphism,
          "identity must map to the identity matrix");
  for (const Mat& m : rho.images)
    require(membership(rho.kind, m), Err::MembershipViolation,
            "an image fails membership in " + rho.kind.to_string());
  auto check_pair = [&](int a, int b) {
    require(rho.at(g.mul(a, b)) == mat_mul(rho.at(a), rho.at(b)), Err::NotAHomomorphism,
            "images violate the product of elements " + std::to_string(a) + " and " +
                std::to_string(b));
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) check_pair(a, b);
  } else {
    for (int a = 0; a < n; ++a)
      for (int ggen : g.generators()) check_pair(a, ggen);
  }
}

}  // namespace

Representation rep_from_images(GroupPtr group, const GroupKind& kind, const RingSpec& ring,
                               std::vector<Mat> images) {
  Representation rho;
  rho.group = std::move(group);
  rho.kind = kind;
  rho.ring = ring;
  rho.images = std::move(images);
  validate_rep(rho);
  return rho;
}

Representation rep_from_generator_images(GroupPtr group, const GroupKind& kind,
                                         const RingSpec& ring,
                                         const std::vector<Mat>& gen_images) {
  require(gen_images.size() == group->generators().size(), Err::SchemaError,
          "need one image per declared generator");
  int n = group->order();
  std::vector<Mat> images;
  images.reserve(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) {
    Mat m = mat_identity(ring, kind.d());
    for (int gi : group->gen_word(e)) m = mat_mul(m, gen_images[static_cast<size_t>(gi)]);
    images.push_back(std::move(m));
  }
  return rep_from_images(std::move(group), kind, ring, std::move(images));
}

Representation trivial_rep(GroupPtr group, const GroupKind& kind, const RingSpec& ring) {
  std::vector<Mat> images(static_cast<size_t>(group->order()), mat_identity(ring, kind.d()));
  return rep_from_images(std::move(group), kind, ring, std::move(images));
}

Representation conjugate_rep(const Representation& rho, const Mat& c) {
  Mat cinv = mat_inverse(c);
  std::vector<Mat> images;
  images.reserve(rho.images.size());
  for (const Mat& m : rho.images) images.push_back(mat_mul(mat_mul(c, m), cinv));
  return rep_from_images(rho.group, rho.kind, rho.ring, std::move(images));
}

Representation direct_sum_rep(const Representation& a, const Representation& b) {
  require(a.group->same_table(*b.group) && a.ring == b.ring, Err::IncompatibleContexts,
          "direct sum needs a common group and ring");
  require(a.kind.flavor == Flavor::GL && b.kind.flavor == Flavor::GL, Err::WrongKind,
          "direct sum of representations is built for GL kinds");
  std::vector<Mat> images;
  for (int e = 0; e < a.group->order(); ++e) images.push_back(block_diag(a.at(e), b.at(e)));
  return rep_from_images(a.group, GroupKind::make(Flavor::GL, a.kind.n + b.kind.n), a.ring,
                         std::move(images));
}

Representation tensor_rep(const Representation& a, const Representation& b) {
  require(a.group->same_table(*b.group) && a.ring == b.ring, Err::IncompatibleContexts,
          "tensor product needs a common group and ring");
  require(a.kind.flavor == Flavor::GL && b.kind.flavor == Flavor::GL, Err::WrongKind,
          "tensor product of representations is built for GL kinds");
  std::vector<Mat> images;
  for (int e = 0; e < a.group->order(); ++e) images.push_back(kron(a.at(e), b.at(e)));
  return rep_from_images(a.group, GroupKind::make(Flavor::GL, a.kind.n * b.kind.n), a.ring,
                         std::move(images));
}

Representation dual_rep(const Representation& rho) {
  require(rho.kind.flavor == Flavor::GL, Err::WrongKind, "dual is defined on GL");
  std::vector<Mat> images;
  for (const Mat& m : rho.images) images.push_back(mat_transpose(mat_inverse(m)));
  return rep_from_images(rho.group, rho.kind, rho.ring, std::move(images));
}

Representation extend_scalars(const Representation& rho, int32_t k) {
  std::vector<Mat> images;
  for (const Mat& m : rho.images) images.push_back(mat_embed_extension(m, k));
  return rep_from_images(rho.group, rho.kind, RingSpec::fq(rho.ring.p, rho.ring.f * k),
                         std::move(images));
}

Representation restrict_rep(const Representation& rho, const GroupHom& iota) {
  require(iota.dst->same_table(*rho.group), Err::IncompatibleContexts,
          "homomorphism target must be the representation's group");
  std::vector<Mat> images;
  for (int e = 0; e < iota.src->order(); ++e)
    images.push_back(rho.at(iota.map[static_cast<size_t>(e)]));
  return rep_from_images(iota.src, rho.kind, rho.ring, std::move(images));
}

Representation quotient_rep(const Representation& rho, const QuotientResult& q) {
  std::vector<Mat> images(static_cast<size_t>(q.group->order()), Mat(rho.ring, rho.kind.d()));
  std::vector<bool> set(static_cast<size_t>(q.group->order()), false);
  for (int e = 0; e < rho.group->order(); ++e) {
    int c = q.projection[static_cast<size_t>(e)];
    if (set[static_cast<size_t>(c)])
      require(images[static_cast<size_t>(c)] == rho.at(e), Err::NotInKernel,
              "images are not constant on cosets");
    images[static_cast<size_t>(c)] = rho.at(e);
    set[static_cast<size_t>(c)] = true;
  }
  return rep_from_images(q.group, rho.kind, rho.ring, std::move(images));
}

Mat sp_interleave(const Mat& a, const Mat& b, int32_t na, int32_t nb) {
  require(a.d == 2 * na && b.d == 2 * nb, Err::IncompatibleContexts, "block sizes mismatch");
  require(a.ring == b.ring, Err::IncompatibleContexts, "blocks over different rings");
  int32_t n = na + nb;
  Mat c(a.ring, 2 * n);
  // a acts on (e_1..e_na | f_1..f_na) placed at positions (0..na-1 | n..n+na-1)
  auto place = [&](const Mat& m, int32_t nm, int32_t offset) {
    for (int32_t i = 0; i < 2 * nm; ++i)
      for (int32_t j = 0; j < 2 * nm; ++j) {
        int32_t gi = (i < nm) ? offset + i : n + offset + (i - nm);
        int32_t gj = (j < nm) ? offset + j : n + offset + (j - nm);
        c.at(gi, gj) = m.at(i, j);
      }
  };
  place(a, na, 0);
  place(b, nb, na);
  return c;
}

Representation sp_direct_sum_rep(const Representation& a, const Representation& b) {
  require(a.group->same_table(*b.group) && a.ring == b.ring, Err::IncompatibleContexts,
          "symplectic direct sum needs a common group and ring");
  require(a.kind.flavor == Flavor::Sp && b.kind.flavor == Flavor::Sp, Err::WrongKind,
          "symplectic direct sum is defined on Sp factors");
  std::vector<Mat> images;
  for (int e = 0; e < a.group->order(); ++e)
    images.push_back(sp_interleave(a.at(e), b.at(e), a.kind.n, b.kind.n));
  return rep_from_images(a.group, GroupKind::make(Flavor::Sp, a.kind.n + b.kind.n), a.ring,
                         std::move(images));
}

Representation rekind_gl(const Representation& rho) {
  if (rho.kind.flavor == Flavor::GL) return rho;
  return rep_from_images(rho.group, GroupKind::make(Flavor::GL, rho.dim()), rho.ring,
                         rho.images);
}

Representation pair_type_rep(const Representation& rho) {
  require(rho.kind.flavor == Flavor::GL, Err::WrongKind, "pair-type embedding starts from GL");
  std::vector<Mat> images;
  for (const Mat& m : rho.images)
    images.push_back(block_diag(m, mat_transpose(mat_inverse(m))));
  return rep_from_images(rho.group, GroupKind::make(Flavor::Sp, rho.kind.n), rho.ring,
                         std::move(images));
}

}  // namespace pckit
