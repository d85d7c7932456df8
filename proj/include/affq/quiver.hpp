#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affq/errors.hpp"

namespace affq {

/* Dimension vector, indexed like Quiver::vertices. */
using DimVec = std::vector<std::int64_t>;

std::int64_t dim_height(const DimVec& a);
bool dim_leq(const DimVec& a, const DimVec& b);  // coordinatewise
bool dim_is_zero(const DimVec& a);
DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_sub(const DimVec& a, const DimVec& b);
DimVec dim_scale(const DimVec& a, std::int64_t c);
std::string dim_to_string(const DimVec& a);

struct Arrow {
  std::string id;
  int tail = 0;
  int head = 0;
};

/* Finite quiver without loops.  Vertices carry external string ids; all
   internal indexing is positional in declaration order. */
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int n() const { return static_cast<int>(vertices.size()); }
  int vertex_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  void validate() const;  // unique ids, indices in range, no loops

  bool is_sink(int i) const;
  bool is_source(int i) const;
  bool is_acyclic() const;
  bool is_connected() const;  // underlying graph

  bool operator==(const Quiver& o) const;
  bool operator!=(const Quiver& o) const { return !(*this == o); }
};

struct AffineClass {
  enum class Family { A, D, E6, E7, E8, cyclic };
  Family family;
  /* A~n / D~n index, 6|7|8 for E, period p for cyclic. */
  int n = 0;
  DimVec delta;  // primitive positive radical generator, the affineness witness
  std::string to_string() const;
};

/* Decides which extended Dynkin shape (or cyclic orientation) q has.
   Throws NotAffine otherwise. */
AffineClass classify_graph(const Quiver& q);

/* <a,b> = sum_i a_i b_i - sum_w a_{t(w)} b_{h(w)}. */
std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b);
/* (a,b) = <a,b> + <b,a>; orientation independent. */
std::int64_t symmetric_euler_form(const Quiver& q, const DimVec& a, const DimVec& b);

/* c_ii = 2, c_ij = -#edges between i and j. */
std::vector<std::vector<std::int64_t>> cartan_matrix(const Quiver& q);

/* delta: the primitive positive generator of the radical of (.,.). */
DimVec minimal_imaginary_root(const Quiver& q);

/* <delta, a>; requires affine non-cyclic q. */
std::int64_t defect(const Quiver& q, const DimVec& a);

/* Reverses all arrows at i; i must be a sink or a source. */
Quiver reflect_quiver(const Quiver& q, int i);

/* s_i(a) = a - (sum_j c_ij a_j) e_i. */
DimVec weyl_reflect(const Quiver& q, const DimVec& a, int i);

/* Ordering i_1..i_n, each vertex once, i_r a sink after reflecting at
   i_1..i_{r-1}; exists iff q is acyclic.  Ties: lowest vertex index. */
std::vector<int> admissible_sink_sequence(const Quiver& q);

/* All positive real roots a with a <= bound coordinatewise, sorted by
   (height, lex).  Closure of the simple roots under simple reflections with
   coordinatewise pruning; complete because any positive real root descends
   to a simple root through positive roots of strictly smaller height. */
std::vector<DimVec> positive_real_roots_below(const Quiver& q, const DimVec& bound);

/* Convenience builders used across tests. */
Quiver make_kronecker();
Quiver make_cyclic_quiver(int p);

}  // namespace affq
