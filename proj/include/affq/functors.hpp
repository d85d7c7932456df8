#pragma once

#include "affq/rep.hpp"

namespace affq {

enum class ModuleClass { preprojective, regular_homogeneous, regular_inhomogeneous, preinjective };

std::string module_class_name(ModuleClass c);

struct ClassifiedModule {
  ModuleClass cls;
  std::int64_t defect_value = 0;
  int period = 0;  // Coxeter period for regulars, 0 otherwise
};

Representation simple_rep(const Quiver& q, const Field& f, int i);

/* Reflection at a sink i: new space ker(+_{h(w)=i} V_{t(w)} -> V_i), new
   maps the kernel's block rows.  Quiver becomes reflect_quiver(q, i). */
Representation reflection_plus(const Representation& m, int i);

/* Reflection at a source i: new space coker(V_i -> +_{t(w)=i} V_{h(w)}),
   new maps the projection's block columns. */
Representation reflection_minus(const Representation& m, int i);

/* Composite of sink reflections along the admissible sink sequence; lands on
   the same quiver.  coxeter_minus composes the source reflections in the
   reverse order and is inverse to coxeter_plus away from projectives and
   injectives. */
Representation coxeter_plus(const Representation& m);
Representation coxeter_minus(const Representation& m);

/* Indecomposable projective/injective at vertex v, built by reflecting the
   simple through the admissible sequence. */
Representation projective_rep(const Quiver& q, const Field& f, int v);
Representation injective_rep(const Quiver& q, const Field& f, int v);

/* Four-class decision for an indecomposable over an affine non-cyclic
   quiver.  Defect decides; Coxeter iteration verifies (kill-check for
   nonzero defect, period search for defect zero). */
ClassifiedModule classify(const Representation& m, std::uint64_t seed);

}  // namespace affq
