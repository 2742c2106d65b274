#include "pckit/groupkind.hpp"

namespace pckit {

GroupKind GroupKind::make(Flavor fl, int32_t n) {
  require(n >= 1, Err::SchemaError, "rank must be >= 1");
  GroupKind k;
  k.flavor = fl;
  k.n = n;
  return k;
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::GL: return "GL";
    case Flavor::SL: return "SL";
    case Flavor::Sp: return "Sp";
    case Flavor::GSp: return "GSp";
    case Flavor::O: return "O";
    case Flavor::SO: return "SO";
    case Flavor::GO: return "GO";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(const std::string& s) {
  for (Flavor f : {Flavor::GL, Flavor::SL, Flavor::Sp, Flavor::GSp, Flavor::O, Flavor::SO,
                   Flavor::GO})
    if (s == flavor_name(f)) return f;
  return std::nullopt;
}

std::string GroupKind::to_string() const {
  return std::string(flavor_name(flavor)) + "_" + std::to_string(d());
}

Mat symplectic_J(const RingSpec& ring, int32_t n) {
  Mat j(ring, 2 * n);
  for (int32_t i = 0; i < n; ++i) {
    j.at(i, n + i) = ring_one(ring);
    j.at(n + i, i) = rneg(ring_one(ring));
  }
  return j;
}

namespace {

// B == nu * ref for some scalar nu; returns nu via the first nonzero ref entry
std::optional<RingElem> scalar_multiple_of(const Mat& b, const Mat& ref) {
  std::optional<RingElem> nu;
  for (size_t i = 0; i < ref.e.size(); ++i) {
    if (!is_zero(ref.e[i])) {
      if (!is_unit(ref.e[i])) return std::nullopt;
      nu = rmul(b.e[i], rinv(ref.e[i]));
      break;
    }
  }
  if (!nu) return std::nullopt;
  for (size_t i = 0; i < ref.e.size(); ++i)
    if (!(b.e[i] == rmul(*nu, ref.e[i]))) return std::nullopt;
  return nu;
}

}  // namespace

bool membership(const GroupKind& kind, const Mat& m, RingElem* nu_out) {
  require(m.d == kind.d(), Err::IncompatibleContexts,
          "matrix size " + std::to_string(m.d) + " does not match " + kind.to_string());
  if (kind.is_orthogonal())
    require(m.ring.p > 2, Err::CharTwoOrthogonal,
            "orthogonal flavors need odd characteristic");
  RingElem det = mat_det(m);
  require(is_unit(det), Err::NonInvertible, "matrix determinant is not a unit");
  switch (kind.flavor) {
    case Flavor::GL:
      return true;
    case Flavor::SL:
      return is_one(det);
    case Flavor::Sp: {
      Mat j = symplectic_J(m.ring, kind.n);
      return mat_mul(mat_mul(mat_transpose(m), j), m) == j;
    }
    case Flavor::GSp: {
      Mat j = symplectic_J(m.ring, kind.n);
      Mat b = mat_mul(mat_mul(mat_transpose(m), j), m);
      auto nu = scalar_multiple_of(b, j);
      if (!nu || !is_unit(*nu)) return false;
      if (nu_out) *nu_out = *nu;
      return true;
    }
    case Flavor::O:
      return mat_mul(mat_transpose(m), m) == mat_identity(m.ring, m.d);
    case Flavor::SO:
      return mat_mul(mat_transpose(m), m) == mat_identity(m.ring, m.d) && is_one(det);
    case Flavor::GO: {
      Mat b = mat_mul(mat_transpose(m), m);
      auto nu = scalar_multiple_of(b, mat_identity(m.ring, m.d));
      if (!nu || !is_unit(*nu)) return false;
      if (nu_out) *nu_out = *nu;
      return true;
    }
  }
  return false;
}

RingElem similitude(const GroupKind& kind, const Mat& m) {
  require(kind.has_similitude(), Err::NotSimilitudeGroup,
          kind.to_string() + " has no similitude character");
  RingElem nu = ring_zero(m.ring);
  require(membership(kind, m, &nu), Err::MembershipViolation,
          "matrix is not a member of " + kind.to_string());
  return nu;
}

Mat symplectic_transpose(const Mat& m, int32_t n) {
  require(m.d == 2 * n, Err::IncompatibleContexts, "size must be 2n");
  Mat j = symplectic_J(m.ring, n);
  // J^{-1} = -J
  return mat_mul(mat_mul(j, mat_transpose(m)), mat_neg(j));
}

bool identity_component_member(const GroupKind& kind, const Mat& m) {
  if (kind.flavor == Flavor::O || kind.flavor == Flavor::GO) {
    GroupKind so = GroupKind::make(Flavor::SO, kind.n);
    return membership(so, m);
  }
  return membership(kind, m);
}

std::vector<Mat> enumerate_group_points(const GroupKind& kind, const RingSpec& ring,
                                        int64_t cap) {
  int d = kind.d();
  double total = 1;
  for (int i = 0; i < d * d; ++i) total *= static_cast<double>(ring.size());
  require(total <= static_cast<double>(cap), Err::SearchSpaceTooLarge,
          "matrix space larger than cap " + std::to_string(cap));
  int64_t count = static_cast<int64_t>(total);
  std::vector<Mat> out;
  for (int64_t code = 0; code < count; ++code) {
    Mat m(ring, d);
    int64_t c = code;
    for (auto& x : m.e) {
      x = ring_decode(ring, c % ring.size());
      c /= ring.size();
    }
    if (!is_unit(mat_det(m))) continue;
    if (membership(kind, m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace pckit
