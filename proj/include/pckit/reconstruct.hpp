#pragma once

#include <optional>

#include "pckit/linalg.hpp"
#include "pckit/pseudochar.hpp"
#include "pckit/representation.hpp"

namespace pckit {

struct ConjugacyResult {
  bool found{false};
  Mat conjugator;          // entries in F_{q^k}
  int32_t ext_degree{1};   // k of the successful (or last searched) extension
};

// Searches g in G0(F_{q^k}) with g rho g^{-1} = rho' for k = 1..ext_degree.
// The candidates are the invertible points of the generator-intertwiner
// space {g : g rho(gen) = rho'(gen) g}, enumerated exhaustively; an absent
// verdict means that space holds no G0 member up to the requested degree.
ConjugacyResult brute_conjugacy(const Representation& a, const Representation& b,
                                int32_t ext_degree = 2, int64_t search_cap = 1000000,
                                int32_t jobs = 1);

// All invariant subspaces of the column space F^d of the given dimension,
// as lists of basis vectors (RREF representatives, each subspace once).
std::vector<std::vector<std::vector<RingElem>>> invariant_subspaces(const Representation& rho,
                                                                    int dim);

bool is_irreducible(const Representation& rho);

// Jordan-Hoelder factors with multiplicity, by exhaustive invariant-subspace
// search (budget: d <= 4, q <= 9). The optional seed shuffles the subspace
// visit order; the resulting multiset does not depend on it.
std::vector<Representation> jordan_holder(const Representation& rho, uint64_t seed = 0);

// Block-diagonal sum of the Jordan-Hoelder factors, as a GL_d representation,
// in a deterministic factor order.
Representation semisimplify(const Representation& rho, uint64_t seed = 0);

bool is_completely_reducible(const Representation& rho);

enum class SummandType { IrreducibleSymplectic, PairType };

struct SymplecticSummand {
  SummandType type;
  Representation sp_rep;                  // into Sp_{2k}, standard J
  std::optional<Representation> pair_w;   // the GL_k constituent W (pair type)
};

// Orthogonal decomposition of a semisimple symplectic representation into
// form-nondegenerate invariant summands: GL-irreducible pieces with
// nondegenerate restricted form, and W + W* pairs of totally isotropic
// irreducibles.
std::vector<SymplecticSummand> symplectic_decompose(const Representation& rho);

// Interleaves the summands back into one Sp representation.
Representation reassemble_summands(const std::vector<SymplecticSummand>& summands);

}  // namespace pckit
