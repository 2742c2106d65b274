#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pckit/mat.hpp"

namespace pckit {

// Classical group flavors over a coefficient ring. The ambient size is n for
// GL/SL/O/SO/GO and 2n for Sp/GSp. The symplectic form is fixed globally as
// J = (0, I_n; -I_n, 0); the orthogonal form is the identity Gram matrix.
enum class Flavor { GL, SL, Sp, GSp, O, SO, GO };

struct GroupKind {
  Flavor flavor{Flavor::GL};
  int32_t n{1};

  static GroupKind make(Flavor fl, int32_t n);
  int32_t d() const { return (flavor == Flavor::Sp || flavor == Flavor::GSp) ? 2 * n : n; }
  bool is_symplectic() const { return flavor == Flavor::Sp || flavor == Flavor::GSp; }
  bool is_orthogonal() const {
    return flavor == Flavor::O || flavor == Flavor::SO || flavor == Flavor::GO;
  }
  bool has_similitude() const { return flavor == Flavor::GSp || flavor == Flavor::GO; }
  std::string to_string() const;

  bool operator==(const GroupKind&) const = default;
};

const char* flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(const std::string& s);

Mat symplectic_J(const RingSpec& ring, int32_t n);

// True iff M satisfies the defining equations of the flavor. Requires an
// invertible M (NonInvertible otherwise); orthogonal flavors require p > 2
// (CharTwoOrthogonal). For GSp/GO the similitude witness is stored in *nu.
bool membership(const GroupKind& kind, const Mat& m, RingElem* nu = nullptr);

// The unit nu with M^T J M = nu J (GSp) or M^T M = nu I (GO).
RingElem similitude(const GroupKind& kind, const Mat& m);

// M* = J M^T J^{-1}; equals M^{-1} on Sp.
Mat symplectic_transpose(const Mat& m, int32_t n);

// Membership in the identity component G0: SO-members for O/GO flavors, all
// members otherwise.
bool identity_component_member(const GroupKind& kind, const Mat& m);

// All points of G(R), by scanning the d*d matrix space. Throws
// SearchSpaceTooLarge when |R|^(d^2) exceeds the cap.
std::vector<Mat> enumerate_group_points(const GroupKind& kind, const RingSpec& ring,
                                        int64_t cap = 1000000);

}  // namespace pckit
