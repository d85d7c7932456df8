#pragma once

#include <map>

#include "affq/tubes.hpp"

namespace affq {

enum class ItemKind { preprojective, preinjective, regular };

/* One indecomposable in the inventory.  Coordinates depend on the kind:
   preprojective items are (coxeter_minus)^power of projective_rep(chain),
   preinjective items are (coxeter_plus)^power of injective_rep(chain), and
   regular items are hall_apply(tubes[tube], s_{z,len}). */
struct InventoryItem {
  std::string label;
  ItemKind kind = ItemKind::preprojective;
  int chain = 0;
  int power = 0;
  int tube = 0;
  int z = 0;
  int len = 0;
  DimVec dims;
  ClassifiedModule cls;
  Representation rep;
};

/* Every indecomposable of dimension <= bound that is preprojective,
   preinjective, or a module of an inhomogeneous tube, each exactly once,
   sorted by label.  Homogeneous regulars are deliberately absent: the
   multiplicity function sigma always vanishes on them. */
struct IndecomposableInventory {
  Quiver quiver;
  Field field = Field::prime(2);
  DimVec bound;
  std::vector<InventoryItem> items;
  std::vector<Tube> tubes;

  const InventoryItem* find(const std::string& label) const;
};

/* Chains of Coxeter shifts of projectives and injectives plus all tube
   modules fitting under the bound.  Completeness is certified against the
   real-root list: roots of nonzero defect match the preprojective and
   preinjective items one-to-one, defect-zero real roots match the tube
   modules of length not divisible by the period.  A failed cross-check
   raises InternalError. */
IndecomposableInventory build_inventory(const Quiver& q, const Field& f,
                                        const DimVec& bound, std::uint64_t seed);

/* A point of the parameter set Delta_nu: finitely supported multiplicities
   on inventory labels plus a weakly decreasing partition whose weight
   counts homogeneous simple summands.  The empty partition prints as
   "(0)". */
struct CanonicalParam {
  std::map<std::string, int> sigma;
  std::vector<int> lambda;

  std::string to_string() const;
  bool operator==(const CanonicalParam& o) const {
    return sigma == o.sigma && lambda == o.lambda;
  }
};

/* All (sigma, lambda) with sum sigma(M)|M| + |lambda| delta = nu such that
   no tube orbit at any fixed length is fully charged by sigma.  Ordered by
   partition weight ascending, then lambda lexicographically, then sigma
   lexicographically in label order.  Requires bound >= nu. */
std::vector<CanonicalParam> enumerate_delta(const IndecomposableInventory& inv,
                                            const DimVec& nu);

/* Independent count the enumeration must match: the coefficient of x^nu in
   prod_{alpha real > 0} (1 - x^alpha)^{-1} * prod_{n>=1} (1 - x^{n delta})^{-(|I|-1)},
   computed by a bounded box DP.  Depends only on the underlying graph. */
std::int64_t weight_dim_oracle(const Quiver& q, const DimVec& nu);

/* Multisets of serial modules s_{z,l} of the cyclic quiver with total
   graded dimension nu such that for each length l some class z is unused.
   Pure combinatorics; no representations are built. */
std::int64_t count_aperiodic_cyclic(int p, const DimVec& nu);

/* Dimension of the stratum cut out by param: orbit dimension of a generic
   point plus one modulus per homogeneous simple.  The generic point's
   endomorphism count is exact: hom_basis on the sigma part, plus 1 per
   homogeneous simple, plus |defect(M)| for each (sigma copy of M,
   homogeneous simple) pair; those cross terms follow from the Euler form
   since the relevant Ext groups vanish. */
std::int64_t stratum_dim(const IndecomposableInventory& inv,
                         const CanonicalParam& param);

/* A representation whose Krull-Schmidt decomposition realizes param:
   inventory reps with multiplicities sigma plus |lambda| pairwise
   nonisomorphic certified homogeneous simples.  Certification is exact
   (End = K, dimension delta, no Hom from any tube simple); sampling
   failure raises NeedsLargerField. */
Representation generic_rep_of_stratum(const IndecomposableInventory& inv,
                                      const CanonicalParam& param,
                                      std::uint64_t seed);

}  // namespace affq
