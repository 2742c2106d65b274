#pragma once

#include "pckit/linalg.hpp"
#include "pckit/representation.hpp"

namespace pckit {

// A finite-dimensional module over a finite group with field coefficients,
// given by the action matrix of every element.
struct GModule {
  GroupPtr group;
  RingSpec ring;
  int dim{0};
  std::vector<Mat> action;  // per element, invertible dim x dim
};

GModule gmodule(GroupPtr group, const RingSpec& ring, std::vector<Mat> action);
GModule trivial_gmodule(GroupPtr group, const RingSpec& ring, int dim);

enum class AdFlavor { gl, sl, sp };
const char* ad_flavor_name(AdFlavor f);

// pi(M) = a(MJ) J^{-1} with a(X) = (X + X^T)/2: the equivariant projection
// of gl_2n onto sp_2n. Needs 2 invertible.
Mat sp_project(const Mat& m, int32_t n);

// basis of the flavor subalgebra inside gl_d
std::vector<Mat> lie_basis(const RingSpec& ring, int d, AdFlavor flavor);

// Conjugation action of rho on its Lie algebra flavor.
GModule ad_module(const Representation& rho, AdFlavor flavor);

struct CohomologyDims {
  int h0{0}, h1{0}, h2{0};
  std::vector<int> cochain_dims;  // dim C^0..C^3 for auditability
};

// Dimensions of H^0, H^1, H^2 from the inhomogeneous cochain complex
// C^0 -> C^1 -> C^2 -> C^3 over the coefficient field.
CohomologyDims cohomology_dims(const GModule& m, int64_t budget_cols = 200000);

// h^0 alone (kernel of C^0 -> C^1), without touching the higher differentials.
int invariants_dim(const GModule& m);

// h^1(Gamma, ad rho): the tangent dimension of the deformation functor of
// rho at finite-group scale.
int rep_tangent_dim(const Representation& rho, AdFlavor flavor, int64_t budget_cols = 200000);

struct CentralizerReport {
  std::vector<Mat> elements;
  bool adjoint_image_trivial{false};  // centralizer contained in the scalars
};

CentralizerReport centralizer_points(const Representation& rho, int64_t cap = 1000000);

// Number of deformations of the trivial GL_1(F_p) pseudocharacter to
// F_p[eps], as log_p of the count of characters Gamma -> 1 + eps F_p.
int gl1_pseudo_tangent(const GroupPtr& gamma, int64_t p);

}  // namespace pckit
