#include "affq/tubes.hpp"

#include <algorithm>
#include <set>

namespace affq {

namespace {

constexpr int kSampleBudget = 400;

DimVec coxeter_transform(const Quiver& q, const std::vector<int>& seq, DimVec d) {
  for (int i : seq) d = weyl_reflect(q, d, i);
  return d;
}

/* Generic representation of a real-root dimension: End = K forces
   indecomposable, and with <d,d> = 1 it is the unique rigid one. */
Representation sample_rigid(const Quiver& q, const Field& f, const DimVec& d, Rng& rng) {
  for (int attempt = 0; attempt < kSampleBudget; ++attempt) {
    Representation m = random_rep(q, f, d, rng);
    if (hom_dim(m, m) == 1 && ext1_dim(m, m) == 0) return m;
  }
  throw NeedsLargerField("no rigid representation of dimension " + dim_to_string(d) +
                         " found within the sampling budget");
}

}  // namespace

std::vector<Tube> find_tubes(const Quiver& q, const Field& f, std::uint64_t seed) {
  if (!q.is_acyclic()) throw ParseError("tube discovery needs an acyclic quiver");
  const DimVec delta = minimal_imaginary_root(q);
  const auto seq = admissible_sink_sequence(q);
  std::vector<DimVec> regular;
  for (auto& r : positive_real_roots_below(q, delta))
    if (defect(q, r) == 0) regular.push_back(std::move(r));

  const Rng base(seed);
  std::vector<Tube> tubes;
  std::vector<bool> used(regular.size(), false);
  for (std::size_t s = 0; s < regular.size(); ++s) {
    if (used[s]) continue;
    // walk the Coxeter orbit of regular[s]; it permutes this root set
    std::vector<std::size_t> orbit;
    DimVec cur = regular[s];
    for (;;) {
      const auto it = std::find(regular.begin(), regular.end(), cur);
      if (it == regular.end()) throw InternalError("Coxeter transform left the regular root set");
      const auto idx = static_cast<std::size_t>(it - regular.begin());
      if (used[idx]) {
        if (idx != s) throw InternalError("Coxeter orbit is not a cycle");
        break;
      }
      used[idx] = true;
      orbit.push_back(idx);
      cur = coxeter_transform(q, seq, cur);
    }
    DimVec total(q.n(), 0);
    for (auto idx : orbit) total = dim_add(total, regular[idx]);
    if (total != delta) continue;  // orbit of longer tube modules, not of simples

    Tube t;
    t.quiver = q;
    t.field = f;
    t.period = static_cast<int>(orbit.size());
    Rng rng = base.fork(static_cast<std::uint64_t>(tubes.size()) + 1);
    t.simples.push_back(sample_rigid(q, f, regular[orbit[0]], rng));
    for (int k = 1; k < t.period; ++k) t.simples.push_back(coxeter_plus(t.simples[k - 1]));
    // index so that Ext1(R_z, R_{z-1}) = K; at period 2 both directions agree
    if (t.period >= 3 && ext1_dim(t.simples[1], t.simples[0]) != 1)
      std::reverse(t.simples.begin() + 1, t.simples.end());
    for (int z = 0; z < t.period; ++z)
      for (int w = 0; w < t.period; ++w) {
        const int want_hom = z == w ? 1 : 0;
        const int want_ext = w == (z - 1 + t.period) % t.period ? 1 : 0;
        if (hom_dim(t.simples[z], t.simples[w]) != want_hom ||
            ext1_dim(t.simples[z], t.simples[w]) != want_ext)
          throw InternalError("tube simples fail the Hom/Ext pattern");
      }
    tubes.push_back(std::move(t));
  }
  return tubes;
}

Tube extension_maps(Tube t) {
  t.ext_maps.clear();
  for (int z = 0; z < t.period; ++z) {
    const auto& top = t.simples[z];
    const auto& soc = t.simples[(z - 1 + t.period) % t.period];
    auto classes = ext1_cocycles(top, soc);
    if (classes.size() != 1) throw InternalError("tube extension space is not one dimensional");
    t.ext_maps.push_back(std::move(classes[0]));
  }
  return t;
}

Representation tube_extension_middle(const Tube& t, int z) {
  if (!t.has_ext_maps()) throw ParseError("extension maps not computed");
  z = (z % t.period + t.period) % t.period;
  return extension_rep(t.simples[(z - 1 + t.period) % t.period], t.simples[z], t.ext_maps[z]);
}

CyclicRep cyclic_zero(int p, const Field& f) { return {p, zero_rep(make_cyclic_quiver(p), f)}; }

CyclicRep make_cyclic_rep(int p, Representation rep) {
  if (rep.quiver != make_cyclic_quiver(p)) throw ParseError("not a cyclic-quiver representation");
  return {p, std::move(rep)};
}

CyclicRep cyclic_simple(int p, int z, const Field& f) {
  const Quiver q = make_cyclic_quiver(p);
  z = (z % p + p) % p;
  DimVec d(p, 0);
  d[z] = 1;
  std::vector<Matrix> maps;
  for (const auto& a : q.arrows)
    maps.emplace_back(f, static_cast<int>(d[a.head]), static_cast<int>(d[a.tail]));
  return {p, make_rep(q, f, std::move(d), std::move(maps))};
}

CyclicRep cyclic_t_lambda(int p, const Scalar& lambda, const Field& f) {
  if (s_is_zero(f, lambda)) throw ParseError("t_lambda needs a nonzero scalar");
  const Quiver q = make_cyclic_quiver(p);
  std::vector<Matrix> maps;
  for (int z = 0; z < p; ++z) {
    Matrix m(f, 1, 1);
    m.set(0, 0, z == 0 ? lambda : s_one(f));
    maps.push_back(std::move(m));
  }
  return {p, make_rep(q, f, DimVec(p, 1), std::move(maps))};
}

CyclicRep cyclic_indec(int p, int z, int l, const Field& f) {
  if (l < 1) throw ParseError("serial length must be at least 1");
  const Quiver q = make_cyclic_quiver(p);
  z = (z % p + p) % p;
  // basis b_0 (socle, vertex z) .. b_{l-1} (top); pos = slot inside its vertex
  DimVec d(p, 0);
  std::vector<int> pos(l);
  for (int j = 0; j < l; ++j) pos[j] = static_cast<int>(d[(z + j) % p]++);
  std::vector<Matrix> maps;
  for (int w = 0; w < p; ++w)
    maps.emplace_back(f, static_cast<int>(d[(w + p - 1) % p]), static_cast<int>(d[w]));
  for (int j = 1; j < l; ++j) maps[(z + j) % p].set_int(pos[j - 1], pos[j], 1);
  return {p, make_rep(q, f, std::move(d), std::move(maps))};
}

CyclicRep cyclic_direct_sum(const CyclicRep& a, const CyclicRep& b) {
  if (a.p != b.p) throw ParseError("cyclic period mismatch");
  return {a.p, direct_sum(a.rep, b.rep)};
}

Representation hall_apply(const Tube& t, const CyclicRep& m) {
  if (!t.has_ext_maps()) throw ParseError("extension maps not computed");
  if (m.p != t.period) throw ParseError("cyclic period does not match the tube");
  if (!(m.rep.field == t.field)) throw ParseError("field mismatch");
  const Quiver& q = t.quiver;
  const Field& f = t.field;
  const int p = t.period;
  Representation out;
  out.quiver = q;
  out.field = f;
  out.dims.assign(q.n(), 0);
  for (int i = 0; i < q.n(); ++i)
    for (int z = 0; z < p; ++z) out.dims[i] += m.rep.dims[z] * t.simples[z].dims[i];
  for (std::size_t w = 0; w < q.arrows.size(); ++w) {
    const auto& a = q.arrows[w];
    std::vector<int> roff(p + 1, 0), coff(p + 1, 0);
    for (int z = 0; z < p; ++z) {
      roff[z + 1] = roff[z] + static_cast<int>(m.rep.dims[z] * t.simples[z].dims[a.head]);
      coff[z + 1] = coff[z] + static_cast<int>(m.rep.dims[z] * t.simples[z].dims[a.tail]);
    }
    Matrix big(f, roff[p], coff[p]);
    const auto add_block = [&](int r0, int c0, const Matrix& blk) {
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c)
          big.set(r0 + r, c0 + c, s_add(f, big.get(r0 + r, c0 + c), blk.get(r, c)));
    };
    for (int z = 0; z < p; ++z) {
      const Matrix ident = Matrix::identity(f, static_cast<int>(m.rep.dims[z]));
      add_block(roff[z], coff[z], Matrix::kron(ident, t.simples[z].maps[w]));
      add_block(roff[(z - 1 + p) % p], coff[z], Matrix::kron(m.rep.maps[z], t.ext_maps[z][w]));
    }
    out.maps.push_back(std::move(big));
  }
  out.validate();
  return out;
}

RepMorphism hall_apply_morphism(const Tube& t, const CyclicRep& m1, const CyclicRep& m2,
                                const RepMorphism& f) {
  if (!t.has_ext_maps()) throw ParseError("extension maps not computed");
  if (m1.p != t.period || m2.p != t.period) throw ParseError("cyclic period does not match");
  const int p = t.period;
  RepMorphism out;
  for (int i = 0; i < t.quiver.n(); ++i) {
    int rows = 0, cols = 0;
    for (int z = 0; z < p; ++z) {
      rows += static_cast<int>(m2.rep.dims[z] * t.simples[z].dims[i]);
      cols += static_cast<int>(m1.rep.dims[z] * t.simples[z].dims[i]);
    }
    Matrix big(t.field, rows, cols);
    int r0 = 0, c0 = 0;
    for (int z = 0; z < p; ++z) {
      const Matrix blk =
          Matrix::kron(f[z], Matrix::identity(t.field, static_cast<int>(t.simples[z].dims[i])));
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) big.set(r0 + r, c0 + c, blk.get(r, c));
      r0 += blk.rows();
      c0 += blk.cols();
    }
    out.push_back(std::move(big));
  }
  return out;
}

std::vector<std::pair<int, int>> cyclic_summands(const CyclicRep& m, std::uint64_t seed) {
  if (!is_nilpotent(m.rep)) throw ParseError("nilpotent input required");
  std::vector<std::pair<int, int>> out;
  for (const auto& s : indecompose(m.rep, seed)) {
    const int l = static_cast<int>(s.total_dim());
    bool found = false;
    for (int z = 0; z < m.p && !found; ++z) {
      const CyclicRep cand = cyclic_indec(m.p, z, l, m.rep.field);
      if (cand.rep.dims != s.dims) continue;
      if (is_isomorphic(cand.rep, s, seed ^ 0x5e71a1)) {
        out.emplace_back(z, l);
        found = true;
      }
    }
    if (!found) throw InternalError("nilpotent indecomposable summand is not serial");
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/* No length has its full set of classes present. */
bool aperiodic_pattern(int p, const std::vector<std::pair<int, int>>& parts) {
  std::set<int> lengths;
  for (const auto& zl : parts) lengths.insert(zl.second);
  for (int l : lengths) {
    std::set<int> classes;
    for (const auto& zl : parts)
      if (zl.second == l) classes.insert(zl.first);
    if (static_cast<int>(classes.size()) == p) return false;
  }
  return true;
}

}  // namespace

bool is_aperiodic_cyclic(const CyclicRep& m, std::uint64_t seed) {
  return aperiodic_pattern(m.p, cyclic_summands(m, seed));
}

bool is_aperiodic_tube(const Tube& t, const Representation& m, std::uint64_t seed) {
  const Tube tt = t.has_ext_maps() ? t : extension_maps(t);
  const int p = tt.period;
  std::vector<std::pair<int, int>> parts;
  for (const auto& s : indecompose(m, seed)) {
    const int top = static_cast<int>(s.total_dim());
    bool found = false;
    for (int l = 1; l <= top && !found; ++l)
      for (int z = 0; z < p && !found; ++z) {
        const Representation cand = hall_apply(tt, cyclic_indec(p, z, l, tt.field));
        if (cand.dims != s.dims) continue;
        if (is_isomorphic(cand, s, seed ^ 0x70b3)) {
          parts.emplace_back(z, l);
          found = true;
        }
      }
    if (!found) throw ParseError("summand outside the tube");
  }
  return aperiodic_pattern(p, parts);
}

bool hom_transport_check(const Tube& t, const CyclicRep& m1, const CyclicRep& m2) {
  const Tube tt = t.has_ext_maps() ? t : extension_maps(t);
  return hom_dim(m1.rep, m2.rep) == hom_dim(hall_apply(tt, m1), hall_apply(tt, m2));
}

/* Lives here rather than with the other functor code because the defect-zero
   branch consults the tube simples.  The Coxeter composite is only the AR
   translate up to a holonomy sign on cycle graphs of odd length (observed:
   it negates the homogeneous modulus on the three-vertex cycle), so a
   Coxeter period of 2 can mean either an inhomogeneous pair or a twisted
   homogeneous module; a nonzero Hom from an inhomogeneous simple separates
   the two exactly, since regular maps do not cross tubes. */
ClassifiedModule classify(const Representation& m, std::uint64_t seed) {
  const AffineClass ac = classify_graph(m.quiver);
  if (ac.family == AffineClass::Family::cyclic)
    throw ParseError("classification by defect needs a non-cyclic affine orientation");
  ClassifiedModule out;
  out.defect_value = euler_form(m.quiver, ac.delta, m.dims);
  const int cap = static_cast<int>(m.total_dim()) + m.quiver.n() + 2;
  if (out.defect_value < 0) {
    out.cls = ModuleClass::preprojective;
    Representation cur = m;
    for (int k = 0; k < cap && !cur.is_zero(); ++k) cur = coxeter_plus(cur);
    if (!cur.is_zero()) throw InternalError("negative defect but Coxeter iteration does not vanish");
    return out;
  }
  if (out.defect_value > 0) {
    out.cls = ModuleClass::preinjective;
    Representation cur = m;
    for (int k = 0; k < cap && !cur.is_zero(); ++k) cur = coxeter_minus(cur);
    if (!cur.is_zero()) throw InternalError("positive defect but Coxeter iteration does not vanish");
    return out;
  }
  int coxeter_period = 0;
  Representation cur = m;
  for (int k = 1; k <= m.quiver.n() + 2; ++k) {
    cur = coxeter_plus(cur);
    if (cur.dims == m.dims && is_isomorphic(cur, m, seed)) {
      coxeter_period = k;
      break;
    }
  }
  if (coxeter_period == 0) throw InternalError("defect zero but no Coxeter period within bound");
  if (coxeter_period == 1) {
    out.period = 1;
    out.cls = ModuleClass::regular_homogeneous;
    return out;
  }
  for (const auto& t : find_tubes(m.quiver, m.field, seed ^ 0xc1a55)) {
    for (const auto& r : t.simples) {
      if (hom_dim(r, m) == 0) continue;
      if (coxeter_period != t.period)
        throw InternalError("tube module whose Coxeter period differs from its tube");
      out.period = t.period;
      out.cls = ModuleClass::regular_inhomogeneous;
      return out;
    }
  }
  // no inhomogeneous socle: homogeneous despite the twisted Coxeter orbit
  DimVec rem = m.dims;
  while (!dim_is_zero(rem) && dim_leq(ac.delta, rem)) rem = dim_sub(rem, ac.delta);
  if (!dim_is_zero(rem))
    throw InternalError("homogeneous candidate whose dimension is not a delta multiple");
  out.period = 1;
  out.cls = ModuleClass::regular_homogeneous;
  return out;
}

}  // namespace affq
