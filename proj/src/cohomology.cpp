#include "pckit/cohomology.hpp"

#include "pckit/groupkind.hpp"

namespace pckit {

GModule gmodule(GroupPtr group, const RingSpec& ring, std::vector<Mat> action) {
  require(ring.is_field(), Err::WrongKind, "module coefficients must be a field");
  GModule m;
  m.ring = ring;
  m.dim = action.empty() ? 0 : action[0].d;
  require(static_cast<int>(action.size()) == group->order(), Err::SchemaError,
          "need one action matrix per element");
  for (const Mat& a : action)
    require(a.ring == ring && a.d == m.dim && mat_invertible(a), Err::SchemaError,
            "action matrices must be invertible and uniform");
  for (int x = 0; x < group->order(); ++x)
    for (int y = 0; y < group->order(); ++y)
      require(action[static_cast<size_t>(group->mul(x, y))] ==
                  mat_mul(action[static_cast<size_t>(x)], action[static_cast<size_t>(y)]),
              Err::NotAHomomorphism, "action is not a homomorphism");
  m.action = std::move(action);
  m.group = std::move(group);
  return m;
}

GModule trivial_gmodule(GroupPtr group, const RingSpec& ring, int dim) {
  std::vector<Mat> action(static_cast<size_t>(group->order()), mat_identity(ring, dim));
  return gmodule(std::move(group), ring, std::move(action));
}

const char* ad_flavor_name(AdFlavor f) {
  switch (f) {
    case AdFlavor::gl: return "gl";
    case AdFlavor::sl: return "sl";
    case AdFlavor::sp: return "sp";
  }
  return "?";
}

Mat sp_project(const Mat& m, int32_t n) {
  require(m.d == 2 * n, Err::IncompatibleContexts, "matrix size must be 2n");
  require(m.ring.p > 2, Err::CharTwo, "the symmetrizer needs 2 invertible");
  Mat j = symplectic_J(m.ring, n);
  Mat mj = mat_mul(m, j);
  Mat sym = mat_add(mj, mat_transpose(mj));
  RingElem half = rinv(ring_from_int(m.ring, 2));
  return mat_mul(mat_scale(half, sym), mat_inverse(j));
}

std::vector<Mat> lie_basis(const RingSpec& ring, int d, AdFlavor flavor) {
  std::vector<Mat> basis;
  switch (flavor) {
    case AdFlavor::gl: {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Mat e(ring, d);
          e.at(i, j) = ring_one(ring);
          basis.push_back(std::move(e));
        }
      break;
    }
    case AdFlavor::sl: {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j) continue;
          Mat e(ring, d);
          e.at(i, j) = ring_one(ring);
          basis.push_back(std::move(e));
        }
      for (int i = 0; i + 1 < d; ++i) {
        Mat e(ring, d);
        e.at(i, i) = ring_one(ring);
        e.at(i + 1, i + 1) = rneg(ring_one(ring));
        basis.push_back(std::move(e));
      }
      break;
    }
    case AdFlavor::sp: {
      require(d % 2 == 0, Err::WrongKind, "sp needs even size");
      int32_t n = d / 2;
      // independent projections of the elementary matrices
      DenseMat span(ring, 0, d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Mat e(ring, d);
          e.at(i, j) = ring_one(ring);
          Mat p = sp_project(e, n);
          DenseMat test(ring, span.rows + 1, d * d);
          for (int r = 0; r < span.rows; ++r)
            for (int c = 0; c < d * d; ++c) test.at(r, c) = span.at(r, c);
          for (int c = 0; c < d * d; ++c) test.at(span.rows, c) = p.e[static_cast<size_t>(c)];
          if (rank(test) == span.rows + 1) {
            basis.push_back(p);
            span = DenseMat(ring, static_cast<int>(basis.size()), d * d);
            for (size_t r = 0; r < basis.size(); ++r)
              for (int c = 0; c < d * d; ++c) span.at(static_cast<int>(r), c) = basis[r].e[static_cast<size_t>(c)];
            rref_in_place(span);
          }
        }
      break;
    }
  }
  return basis;
}

GModule ad_module(const Representation& rho, AdFlavor flavor) {
  require(rho.ring.is_field(), Err::WrongKind, "adjoint modules need field coefficients");
  if (flavor == AdFlavor::sp) {
    require(rho.kind.is_symplectic(), Err::WrongKind, "sp flavor needs a symplectic kind");
    require(rho.ring.p > 2, Err::CharTwo, "sp flavor needs p > 2");
  }
  int d = rho.dim();
  auto basis = lie_basis(rho.ring, d, flavor);
  int dim = static_cast<int>(basis.size());
  DenseMat bmat(rho.ring, d * d, dim);
  for (int j = 0; j < dim; ++j)
    for (int c = 0; c < d * d; ++c) bmat.at(c, j) = basis[static_cast<size_t>(j)].e[static_cast<size_t>(c)];

  std::vector<Mat> action;
  for (int e = 0; e < rho.group->order(); ++e) {
    Mat ge(rho.ring, dim);
    Mat inv = rho.at(rho.group->inv(e));
    for (int j = 0; j < dim; ++j) {
      Mat img = mat_mul(mat_mul(rho.at(e), basis[static_cast<size_t>(j)]), inv);
      std::vector<RingElem> vec(img.e.begin(), img.e.end());
      auto coords = solve_linear(bmat, vec);
      require(coords.has_value(), Err::Internal, "adjoint action leaves the flavor subalgebra");
      for (int i = 0; i < dim; ++i) ge.at(i, j) = (*coords)[static_cast<size_t>(i)];
    }
    action.push_back(std::move(ge));
  }
  return gmodule(rho.group, rho.ring, std::move(action));
}

namespace {

// differential C^k -> C^{k+1} of the inhomogeneous cochain complex, as a
// matrix acting on coordinates (tuple-major, module coordinate minor)
DenseMat cochain_differential(const GModule& m, int k) {
  int N = m.group->order();
  int64_t from_tuples = 1, to_tuples = 1;
  for (int i = 0; i < k; ++i) from_tuples *= N;
  to_tuples = from_tuples * N;
  int rows = static_cast<int>(to_tuples) * m.dim;
  int cols = static_cast<int>(from_tuples) * m.dim;
  DenseMat d(m.ring, rows, cols);
  std::vector<int> g(static_cast<size_t>(k + 1));
  for (int64_t tc = 0; tc < to_tuples; ++tc) {
    int64_t c = tc;
    for (int i = 0; i <= k; ++i) {
      g[static_cast<size_t>(i)] = static_cast<int>(c % N);
      c /= N;
    }
    int row0 = static_cast<int>(tc) * m.dim;
    // g_1 . phi(g_2, ..., g_{k+1})
    {
      int64_t rest = 0;
      for (int i = k; i >= 1; --i) rest = rest * N + g[static_cast<size_t>(i)];
      const Mat& act = m.action[static_cast<size_t>(g[0])];
      int col0 = static_cast<int>(rest) * m.dim;
      for (int r = 0; r < m.dim; ++r)
        for (int cc = 0; cc < m.dim; ++cc)
          d.at(row0 + r, col0 + cc) = radd(d.at(row0 + r, col0 + cc), act.at(r, cc));
    }
    // alternating inner face maps phi(g_1, ..., g_i g_{i+1}, ..., g_{k+1})
    for (int i = 1; i <= k; ++i) {
      int64_t code = 0;
      for (int t = k; t >= 0; --t) {
        if (t == i - 1) continue;
        int val = (t == i) ? m.group->mul(g[static_cast<size_t>(i - 1)], g[static_cast<size_t>(i)])
                           : g[static_cast<size_t>(t)];
        code = code * N + val;
      }
      RingElem sign = (i % 2 == 1) ? rneg(ring_one(m.ring)) : ring_one(m.ring);
      int col0 = static_cast<int>(code) * m.dim;
      for (int r = 0; r < m.dim; ++r)
        d.at(row0 + r, col0 + r) = radd(d.at(row0 + r, col0 + r), sign);
    }
    // (-1)^{k+1} phi(g_1, ..., g_k)
    {
      int64_t code = 0;
      for (int t = k - 1; t >= 0; --t) code = code * N + g[static_cast<size_t>(t)];
      RingElem sign = ((k + 1) % 2 == 1) ? rneg(ring_one(m.ring)) : ring_one(m.ring);
      int col0 = static_cast<int>(code) * m.dim;
      for (int r = 0; r < m.dim; ++r)
        d.at(row0 + r, col0 + r) = radd(d.at(row0 + r, col0 + r), sign);
    }
  }
  return d;
}

}  // namespace

CohomologyDims cohomology_dims(const GModule& m, int64_t budget_cols) {
  int N = m.group->order();
  require(static_cast<int64_t>(N) * N * m.dim <= budget_cols, Err::BudgetExceeded,
          "cochain space exceeds the linear-algebra budget");
  CohomologyDims out;
  int64_t c0 = m.dim, c1 = static_cast<int64_t>(N) * m.dim, c2 = static_cast<int64_t>(N) * N * m.dim,
          c3 = static_cast<int64_t>(N) * N * N * m.dim;
  out.cochain_dims = {static_cast<int>(c0), static_cast<int>(c1), static_cast<int>(c2),
                      static_cast<int>(c3)};
  int r0 = rank(cochain_differential(m, 0));
  int r1 = rank(cochain_differential(m, 1));
  int r2 = rank(cochain_differential(m, 2));
  out.h0 = static_cast<int>(c0) - r0;
  out.h1 = static_cast<int>(c1) - r1 - r0;
  out.h2 = static_cast<int>(c2) - r2 - r1;
  require(out.h1 >= 0 && out.h2 >= 0, Err::Internal, "cochain complex ranks are inconsistent");
  return out;
}

int invariants_dim(const GModule& m) { return m.dim - rank(cochain_differential(m, 0)); }

int rep_tangent_dim(const Representation& rho, AdFlavor flavor, int64_t budget_cols) {
  return cohomology_dims(ad_module(rho, flavor), budget_cols).h1;
}

CentralizerReport centralizer_points(const Representation& rho, int64_t cap) {
  auto points = enumerate_group_points(rho.kind, rho.ring, cap);
  CentralizerReport rep;
  rep.adjoint_image_trivial = true;
  for (const Mat& g : points) {
    bool commutes = true;
    for (int gen : rho.group->generators())
      if (!(mat_mul(g, rho.at(gen)) == mat_mul(rho.at(gen), g))) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    bool scalar = true;
    for (int i = 0; i < g.d && scalar; ++i)
      for (int j = 0; j < g.d; ++j)
        if (i != j ? !is_zero(g.at(i, j)) : !(g.at(i, j) == g.at(0, 0))) {
          scalar = false;
          break;
        }
    if (!scalar) rep.adjoint_image_trivial = false;
    rep.elements.push_back(g);
  }
  return rep;
}

int gl1_pseudo_tangent(const GroupPtr& gamma, int64_t p) {
  RingSpec dual = RingSpec::dual(p);
  RingSpec fp = RingSpec::fq(p);
  // the units 1 + eps*c, c in F_p
  std::vector<RingElem> targets;
  for (int64_t c = 0; c < p; ++c)
    targets.push_back(dual_make(ring_one(fp), ring_from_int(fp, c)));

  const auto& gens = gamma->generators();
  int64_t assignments = 1;
  for (size_t i = 0; i < gens.size(); ++i) assignments *= p;
  int64_t count = 0;
  for (int64_t code = 0; code < assignments; ++code) {
    std::vector<RingElem> gen_vals;
    int64_t c = code;
    for (size_t i = 0; i < gens.size(); ++i) {
      gen_vals.push_back(targets[static_cast<size_t>(c % p)]);
      c /= p;
    }
    // extend along generator words, then check the full table
    std::vector<RingElem> chi(static_cast<size_t>(gamma->order()), ring_one(dual));
    for (int e = 0; e < gamma->order(); ++e)
      for (int gi : gamma->gen_word(e))
        chi[static_cast<size_t>(e)] = rmul(chi[static_cast<size_t>(e)], gen_vals[static_cast<size_t>(gi)]);
    bool hom = true;
    for (int a = 0; a < gamma->order() && hom; ++a)
      for (int b = 0; b < gamma->order(); ++b)
        if (!(chi[static_cast<size_t>(gamma->mul(a, b))] ==
              rmul(chi[static_cast<size_t>(a)], chi[static_cast<size_t>(b)]))) {
          hom = false;
          break;
        }
    if (hom) ++count;
  }
  int log = 0;
  int64_t v = count;
  while (v > 1) {
    require(v % p == 0, Err::Internal, "deformation count is not a power of p");
    v /= p;
    ++log;
  }
  require(count >= 1, Err::Internal, "the trivial deformation is missing");
  return log;
}

}  // namespace pckit
