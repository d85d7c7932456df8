#pragma once

#include <vector>

#include "affq/matrix.hpp"
#include "affq/quiver.hpp"
#include "affq/rng.hpp"

namespace affq {

/* Finite-dimensional representation: a space per vertex, a matrix per arrow.
   maps[w] has shape dims[head] x dims[tail], acting on column vectors. */
struct Representation {
  Quiver quiver;
  Field field = Field::prime(2);
  DimVec dims;
  std::vector<Matrix> maps;

  void validate() const;
  std::int64_t total_dim() const { return dim_height(dims); }
  bool is_zero() const { return total_dim() == 0; }
};

Representation zero_rep(const Quiver& q, const Field& f);
Representation make_rep(const Quiver& q, const Field& f, DimVec dims, std::vector<Matrix> maps);
Representation random_rep(const Quiver& q, const Field& f, const DimVec& dims, Rng& rng);

const DimVec& dim_vector(const Representation& m);

/* All path composites vanish eventually.  Always true on acyclic quivers; on
   quivers with oriented cycles, tested via powers of the total arrow map,
   which is exact whenever each vertex has at most one outgoing arrow (the
   cyclic orientation, the only cyclic case in scope). */
bool is_nilpotent(const Representation& m);

/* A morphism f: M -> N, one matrix per vertex, f[i]: M_i -> N_i. */
using RepMorphism = std::vector<Matrix>;

bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& f);

/* Basis of Hom(M,N): kernel of the intertwiner system
   (f_i) -> (f_{h(w)} x_w - y_w f_{t(w)})_w. */
std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

/* dim coker of the same two-term system; with hom_dim this realizes
   dim Hom - dim Ext1 = <dim M, dim N> as a checkable identity. */
int ext1_dim(const Representation& m, const Representation& n);

Representation direct_sum(const Representation& a, const Representation& b);

/* Basis representatives of Ext1(m, n) as per-arrow cocycles e_w: M_t(w) -> N_h(w),
   pinned by the deterministic echelon basis of the two-term-system cokernel. */
std::vector<std::vector<Matrix>> ext1_cocycles(const Representation& m, const Representation& n);

/* Middle term of 0 -> n -> E -> m -> 0 for a cocycle: E_i = n_i + m_i with
   maps [[y_w, e_w], [0, x_w]].  The zero cocycle gives the split extension. */
Representation extension_rep(const Representation& n, const Representation& m,
                             const std::vector<Matrix>& cocycle);

/* Graded subspace given by independent columns per vertex. */
using GradedSubspace = std::vector<Matrix>;

bool is_stable_subspace(const Representation& m, const GradedSubspace& s);
Representation restrict_to(const Representation& m, const GradedSubspace& s);
Representation quotient_by(const Representation& m, const GradedSubspace& s);
/* Smallest stable subspace containing a few random vectors. */
GradedSubspace random_stable_subspace(const Representation& m, Rng& rng);

/* Deterministic given the seed: up to 64 random Hom-combinations, then
   exhaustive search if |F_p|^(dim Hom) <= 2^16; otherwise NeedsLargerField.
   Over Q the exhaustive fallback does not exist, so undecided searches also
   raise NeedsLargerField rather than guess. */
bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed);

/* Krull-Schmidt factors (with repetition), via Fitting splittings along
   kernels/images of endomorphism polynomials.  Deterministic given seed. */
std::vector<Representation> indecompose(const Representation& m, std::uint64_t seed);

/* dim G_V - dim End(m) = sum_i dims_i^2 - dim End(m). */
std::int64_t orbit_dim(const Representation& m);

/* Conjugate by random invertible basis changes; isomorphic to m. */
Representation random_conjugate(const Representation& m, Rng& rng);

Scalar random_scalar(const Field& f, Rng& rng);
Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng);
Matrix random_invertible(const Field& f, int n, Rng& rng);

}  // namespace affq
