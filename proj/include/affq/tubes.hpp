#pragma once

#include <utility>

#include "affq/functors.hpp"

namespace affq {

/* A Coxeter orbit of inhomogeneous regular simples plus chosen extension
   data.  Indexing: Ext1(simples[z], simples[z-1]) = K, indices mod period.
   ext_maps[z][w] is the map R_{z,t(w)} -> R_{z-1,h(w)} read off a fixed
   nonsplit extension of simples[z] by simples[z-1]; empty until
   extension_maps has run. */
struct Tube {
  Quiver quiver;
  Field field = Field::prime(2);
  int period = 0;
  std::vector<Representation> simples;
  std::vector<std::vector<Matrix>> ext_maps;

  bool has_ext_maps() const { return !ext_maps.empty(); }
};

/* All inhomogeneous tubes of an affine acyclic quiver: defect-zero real
   roots below delta are grouped into Coxeter orbits; the orbits whose dims
   sum to delta are the tubes.  One generic sample per orbit is certified
   exactly (End = K, Ext1(m,m) = 0); the remaining simples come from the
   Coxeter functor, so randomness affects completion only, never output
   correctness.  Sampling budget exhausted raises NeedsLargerField. */
std::vector<Tube> find_tubes(const Quiver& q, const Field& f, std::uint64_t seed);

/* Fill ext_maps: for each z take the first echelon basis vector of the
   Ext1(R_z, R_{z-1}) cokernel (dimension 1, checked) as the nonsplit class. */
Tube extension_maps(Tube t);

/* Middle term of the fixed nonsplit extension 0 -> R_{z-1} -> E_z -> R_z -> 0. */
Representation tube_extension_middle(const Tube& t, int z);

/* Representation of the cyclic quiver with p vertices; rep.maps[z] acts
   along the arrow z -> z-1. */
struct CyclicRep {
  int p = 0;
  Representation rep;
};

CyclicRep cyclic_zero(int p, const Field& f);
CyclicRep make_cyclic_rep(int p, Representation rep);
/* Simple with K at vertex z. */
CyclicRep cyclic_simple(int p, int z, const Field& f);
/* All spaces K, identity maps except lambda (nonzero) on the arrow 0 -> p-1. */
CyclicRep cyclic_t_lambda(int p, const Scalar& lambda, const Field& f);
/* Serial nilpotent indecomposable of length l >= 1 with socle at z. */
CyclicRep cyclic_indec(int p, int z, int l, const Field& f);
CyclicRep cyclic_direct_sum(const CyclicRep& a, const CyclicRep& b);

/* The functor into the tube: F(V)_i = +_z V_z (x) R_{z,i}, and each arrow w
   acts by sum_z (I_z (x) r_{z,w} + theta_z (x) l_{z,w}).  Needs ext_maps. */
Representation hall_apply(const Tube& t, const CyclicRep& m);

/* Image of a cyclic morphism under the functor: F(f)_i = +_z f_z (x) I_{z,i}. */
RepMorphism hall_apply_morphism(const Tube& t, const CyclicRep& m1, const CyclicRep& m2,
                                const RepMorphism& f);

/* Multiset of (socle class, length) for the serial summands of a nilpotent
   cyclic rep, sorted. */
std::vector<std::pair<int, int>> cyclic_summands(const CyclicRep& m, std::uint64_t seed);

/* For every length present among the summands, some socle class is missing. */
bool is_aperiodic_cyclic(const CyclicRep& m, std::uint64_t seed);

/* Same condition for a direct sum of modules in the tube t: no full Coxeter
   orbit at any length.  Summands outside the tube raise ParseError. */
bool is_aperiodic_tube(const Tube& t, const Representation& m, std::uint64_t seed);

/* dim Hom agrees across the functor; the testable shadow of equivalence. */
bool hom_transport_check(const Tube& t, const CyclicRep& m1, const CyclicRep& m2);

}  // namespace affq
