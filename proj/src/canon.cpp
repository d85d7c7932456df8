#include "affq/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

namespace affq {

namespace {

std::string pad3(int v) {
  char b[16];
  std::snprintf(b, sizeof b, "%03d", v);
  return b;
}

std::string chain_label(const char* kind, const std::string& vertex, int power) {
  return std::string(kind) + "." + vertex + "." + pad3(power);
}

std::string tube_label(int tube, int z, int len) {
  return "t" + std::to_string(tube) + ".z" + pad3(z) + ".l" + pad3(len);
}

/* dim (Phi^+)^k M = c^k (dim M) on modules without projective summands,
   and dually for Phi^-; both chains here stay clear of the degenerate
   cases, and the root cross-check would catch any drift. */
DimVec apply_seq(const Quiver& q, const std::vector<int>& seq, DimVec d) {
  for (int i : seq) d = weyl_reflect(q, d, i);
  return d;
}

/* Walk one Coxeter chain on dimension vectors and return the powers whose
   dims fit under the bound.  kmax is far beyond the last possible hit; the
   multiset cross-check against the root list certifies completeness. */
std::vector<int> chain_hits(const Quiver& q, const std::vector<int>& seq,
                            DimVec d, const DimVec& bound) {
  std::vector<int> hits;
  const int kmax = static_cast<int>(32 * (dim_height(bound) + 8));
  for (int k = 0; k <= kmax; ++k) {
    if (dim_leq(d, bound)) hits.push_back(k);
    d = apply_seq(q, seq, d);
  }
  return hits;
}

void take_root(std::map<DimVec, int>& want, const DimVec& d, const char* what) {
  auto it = want.find(d);
  if (it == want.end() || it->second == 0)
    throw InternalError(std::string("inventory ") + what +
                        " item does not match the root list at " + dim_to_string(d));
  --it->second;
}

void expect_empty(const std::map<DimVec, int>& want, const char* what) {
  for (const auto& [d, c] : want)
    if (c != 0)
      throw InternalError(std::string("inventory misses a ") + what + " root " +
                          dim_to_string(d));
}

DimVec tube_module_dims(const Tube& t, int z, int len) {
  DimVec d(t.quiver.n(), 0);
  for (int j = 0; j < len; ++j)
    d = dim_add(d, dim_vector(t.simples[(z + j) % t.period]));
  return d;
}

struct ParamCheck {
  DimVec nu;
  std::int64_t q = 0;
};

/* Shared validation: labels must exist, multiplicities and partition parts
   must be positive, lambda weakly decreasing, and no tube orbit may be
   fully charged at any length. */
ParamCheck validate_param(const IndecomposableInventory& inv,
                          const CanonicalParam& param) {
  ParamCheck out;
  out.nu.assign(inv.quiver.n(), 0);
  std::map<std::pair<int, int>, int> orbit_use;  // (tube, len) -> classes hit
  for (const auto& [label, mult] : param.sigma) {
    const InventoryItem* item = inv.find(label);
    if (item == nullptr) throw ParseError("unknown inventory label " + label);
    if (mult <= 0) throw ParseError("sigma multiplicities must be positive");
    for (int c = 0; c < mult; ++c) out.nu = dim_add(out.nu, item->dims);
    if (item->kind == ItemKind::regular) ++orbit_use[{item->tube, item->len}];
  }
  for (const auto& [key, classes] : orbit_use)
    if (classes == inv.tubes[key.first].period)
      throw ParseError("sigma charges a full tube orbit at length " +
                       std::to_string(key.second));
  int prev = 0;
  for (std::size_t i = 0; i < param.lambda.size(); ++i) {
    const int part = param.lambda[i];
    if (part <= 0) throw ParseError("lambda parts must be positive");
    if (i > 0 && part > prev) throw ParseError("lambda must be weakly decreasing");
    prev = part;
    out.q += part;
  }
  const DimVec delta = minimal_imaginary_root(inv.quiver);
  out.nu = dim_add(out.nu, dim_scale(delta, out.q));
  return out;
}

/* Partitions of n as weakly decreasing tuples, emitted in lexicographic
   order of the tuples themselves. */
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= std::min(n, maxpart); ++first) {
    cur.push_back(first);
    partitions_rec(n - first, first, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;  // n = 0 yields exactly the empty partition
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/* Emits every multiplicity vector with sum mult * dims = target, in
   lexicographic order over the label-sorted items, keeping only aperiodic
   ones. */
struct SigmaSearch {
  const IndecomposableInventory& inv;
  DimVec target;
  std::vector<int> mult;
  std::vector<CanonicalParam> out;

  bool aperiodic() const {
    std::map<std::pair<int, int>, int> orbit_use;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] == 0) continue;
      const InventoryItem& item = inv.items[i];
      if (item.kind == ItemKind::regular) ++orbit_use[{item.tube, item.len}];
    }
    for (const auto& [key, classes] : orbit_use)
      if (classes == inv.tubes[key.first].period) return false;
    return true;
  }

  void run(std::size_t idx) {
    if (idx == inv.items.size()) {
      if (dim_is_zero(target) && aperiodic()) {
        CanonicalParam p;
        for (std::size_t i = 0; i < mult.size(); ++i)
          if (mult[i] > 0) p.sigma[inv.items[i].label] = mult[i];
        out.push_back(std::move(p));
      }
      return;
    }
    const DimVec& d = inv.items[idx].dims;
    DimVec saved = target;
    int m = 0;
    for (;; ++m) {
      mult[idx] = m;
      run(idx + 1);
      if (!dim_leq(d, target)) break;
      target = dim_sub(target, d);
    }
    mult[idx] = 0;
    target = std::move(saved);
  }
};

}  // namespace

const InventoryItem* IndecomposableInventory::find(const std::string& label) const {
  for (const auto& item : items)
    if (item.label == label) return &item;
  return nullptr;
}

IndecomposableInventory build_inventory(const Quiver& q, const Field& f,
                                        const DimVec& bound, std::uint64_t seed) {
  if (!q.is_acyclic()) throw ParseError("inventory needs an acyclic quiver");
  if (static_cast<int>(bound.size()) != q.n())
    throw ParseError("bound length does not match the quiver");
  for (auto v : bound)
    if (v < 0) throw ParseError("bound entries must be nonnegative");

  IndecomposableInventory inv;
  inv.quiver = q;
  inv.field = f;
  inv.bound = bound;

  std::map<DimVec, int> want_pp, want_pi, want_reg;
  for (const auto& r : positive_real_roots_below(q, bound)) {
    const std::int64_t def = defect(q, r);
    if (def < 0)
      ++want_pp[r];
    else if (def > 0)
      ++want_pi[r];
    else
      ++want_reg[r];
  }

  const auto sink_seq = admissible_sink_sequence(q);
  auto source_seq = sink_seq;
  std::reverse(source_seq.begin(), source_seq.end());

  for (int v = 0; v < q.n(); ++v) {
    Representation proj = projective_rep(q, f, v);
    const auto hits = chain_hits(q, source_seq, dim_vector(proj), bound);
    Representation cur = std::move(proj);
    int at = 0;
    for (int k : hits) {
      for (; at < k; ++at) cur = coxeter_minus(cur);
      InventoryItem item;
      item.label = chain_label("pp", q.vertices[v], k);
      item.kind = ItemKind::preprojective;
      item.chain = v;
      item.power = k;
      item.dims = dim_vector(cur);
      item.cls = {ModuleClass::preprojective, defect(q, item.dims), 0};
      item.rep = cur;
      take_root(want_pp, item.dims, "preprojective");
      inv.items.push_back(std::move(item));
    }

    Representation inj = injective_rep(q, f, v);
    const auto ihits = chain_hits(q, sink_seq, dim_vector(inj), bound);
    Representation icur = std::move(inj);
    int iat = 0;
    for (int k : ihits) {
      for (; iat < k; ++iat) icur = coxeter_plus(icur);
      InventoryItem item;
      item.label = chain_label("pi", q.vertices[v], k);
      item.kind = ItemKind::preinjective;
      item.chain = v;
      item.power = k;
      item.dims = dim_vector(icur);
      item.cls = {ModuleClass::preinjective, defect(q, item.dims), 0};
      item.rep = icur;
      take_root(want_pi, item.dims, "preinjective");
      inv.items.push_back(std::move(item));
    }
  }
  expect_empty(want_pp, "preprojective");
  expect_empty(want_pi, "preinjective");

  Rng base(seed);
  inv.tubes = find_tubes(q, f, base.fork(0x1c0de).next());
  for (auto& t : inv.tubes) t = extension_maps(std::move(t));
  for (std::size_t ti = 0; ti < inv.tubes.size(); ++ti) {
    const Tube& t = inv.tubes[ti];
    for (int z = 0; z < t.period; ++z) {
      for (int len = 1;; ++len) {
        const DimVec d = tube_module_dims(t, z, len);
        if (!dim_leq(d, bound)) break;
        InventoryItem item;
        item.label = tube_label(static_cast<int>(ti), z, len);
        item.kind = ItemKind::regular;
        item.tube = static_cast<int>(ti);
        item.z = z;
        item.len = len;
        item.dims = d;
        item.cls = {ModuleClass::regular_inhomogeneous, 0, t.period};
        item.rep = hall_apply(t, cyclic_indec(t.period, z, len, f));
        if (dim_vector(item.rep) != d)
          throw InternalError("tube module dims disagree with the simple sum");
        if (len % t.period != 0) take_root(want_reg, d, "regular");
        inv.items.push_back(std::move(item));
      }
    }
  }
  expect_empty(want_reg, "regular");

  std::sort(inv.items.begin(), inv.items.end(),
            [](const InventoryItem& a, const InventoryItem& b) { return a.label < b.label; });
  return inv;
}

std::string CanonicalParam::to_string() const {
  std::ostringstream os;
  os << "sigma{";
  bool first = true;
  for (const auto& [label, mult] : sigma) {
    if (!first) os << ",";
    first = false;
    os << label << ":" << mult;
  }
  os << "} lambda(";
  if (lambda.empty()) {
    os << "0";
  } else {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (i) os << ",";
      os << lambda[i];
    }
  }
  os << ")";
  return os.str();
}

std::vector<CanonicalParam> enumerate_delta(const IndecomposableInventory& inv,
                                            const DimVec& nu) {
  if (static_cast<int>(nu.size()) != inv.quiver.n())
    throw ParseError("nu length does not match the quiver");
  for (auto v : nu)
    if (v < 0) throw ParseError("nu entries must be nonnegative");
  if (!dim_leq(nu, inv.bound))
    throw ParseError("inventory bound is too small for nu");

  const DimVec delta = minimal_imaginary_root(inv.quiver);
  std::vector<CanonicalParam> out;
  DimVec target = nu;
  for (int qq = 0;; ++qq) {
    if (qq > 0) {
      if (!dim_leq(delta, target)) break;
      target = dim_sub(target, delta);
    }
    SigmaSearch search{inv, target, std::vector<int>(inv.items.size(), 0), {}};
    search.run(0);
    for (const auto& lambda : partitions_of(qq))
      for (const auto& sigma : search.out) {
        CanonicalParam p = sigma;
        p.lambda = lambda;
        out.push_back(std::move(p));
      }
  }
  return out;
}

std::int64_t weight_dim_oracle(const Quiver& q, const DimVec& nu) {
  if (static_cast<int>(nu.size()) != q.n())
    throw ParseError("nu length does not match the quiver");
  for (auto v : nu)
    if (v < 0) throw ParseError("nu entries must be nonnegative");
  const DimVec delta = minimal_imaginary_root(q);  // NotAffine otherwise

  std::vector<DimVec> items = positive_real_roots_below(q, nu);
  for (DimVec lev = delta; dim_leq(lev, nu); lev = dim_add(lev, delta))
    for (int copy = 0; copy < q.n() - 1; ++copy) items.push_back(lev);

  std::vector<std::int64_t> stride(q.n(), 1);
  std::int64_t states = 1;
  for (int i = 0; i < q.n(); ++i) {
    stride[i] = states;
    states *= nu[i] + 1;
  }
  std::vector<std::int64_t> dp(states, 0);
  dp[0] = 1;
  std::vector<std::int64_t> digit(q.n(), 0);
  for (const auto& a : items) {
    std::int64_t off = 0;
    for (int i = 0; i < q.n(); ++i) off += a[i] * stride[i];
    std::fill(digit.begin(), digit.end(), 0);
    for (std::int64_t s = 0; s < states; ++s) {
      bool fits = true;
      for (int i = 0; i < q.n() && fits; ++i) fits = digit[i] >= a[i];
      if (fits) dp[s] += dp[s - off];
      for (int i = 0; i < q.n(); ++i) {
        if (++digit[i] <= nu[i]) break;
        digit[i] = 0;
      }
    }
  }
  return dp[states - 1];
}

std::int64_t count_aperiodic_cyclic(int p, const DimVec& nu) {
  if (p <= 0) throw ParseError("the cyclic quiver needs at least one vertex");
  if (static_cast<int>(nu.size()) != p)
    throw ParseError("nu length does not match the cyclic quiver");
  for (auto v : nu)
    if (v < 0) throw ParseError("nu entries must be nonnegative");

  const std::int64_t height = dim_height(nu);
  struct Seg {
    int z, l;
    DimVec d;
  };
  std::vector<Seg> segs;
  for (int l = 1; l <= height; ++l)
    for (int z = 0; z < p; ++z) {
      DimVec d(p, l / p);
      for (int j = 0; j < l % p; ++j) ++d[(z + j) % p];
      if (dim_leq(d, nu)) segs.push_back({z, l, std::move(d)});
    }

  std::int64_t count = 0;
  std::vector<int> mult(segs.size(), 0);
  DimVec target = nu;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == segs.size()) {
      if (!dim_is_zero(target)) return;
      std::map<int, int> classes_at_len;
      for (std::size_t i = 0; i < segs.size(); ++i)
        if (mult[i] > 0) ++classes_at_len[segs[i].l];
      for (const auto& [l, classes] : classes_at_len)
        if (classes == p) return;
      ++count;
      return;
    }
    DimVec saved = target;
    for (int m = 0;; ++m) {
      mult[idx] = m;
      self(self, idx + 1);
      if (!dim_leq(segs[idx].d, target)) break;
      target = dim_sub(target, segs[idx].d);
    }
    mult[idx] = 0;
    target = std::move(saved);
  };
  rec(rec, 0);
  return count;
}

std::int64_t stratum_dim(const IndecomposableInventory& inv,
                         const CanonicalParam& param) {
  const ParamCheck pc = validate_param(inv, param);
  std::int64_t dim_g = 0;
  for (auto v : pc.nu) dim_g += v * v;

  std::vector<std::pair<const InventoryItem*, int>> support;
  for (const auto& [label, mult] : param.sigma) support.push_back({inv.find(label), mult});

  std::int64_t end_sigma = 0;
  for (const auto& [a, ma] : support)
    for (const auto& [b, mb] : support)
      end_sigma += static_cast<std::int64_t>(ma) * mb * hom_dim(a->rep, b->rep);

  std::int64_t cross = 0;
  for (const auto& [a, ma] : support) cross += ma * std::abs(a->cls.defect_value);

  return dim_g - end_sigma - pc.q * cross;
}

Representation generic_rep_of_stratum(const IndecomposableInventory& inv,
                                      const CanonicalParam& param,
                                      std::uint64_t seed) {
  const ParamCheck pc = validate_param(inv, param);
  const DimVec delta = minimal_imaginary_root(inv.quiver);

  Representation out = zero_rep(inv.quiver, inv.field);
  for (const auto& [label, mult] : param.sigma) {
    const InventoryItem* item = inv.find(label);
    for (int c = 0; c < mult; ++c) out = direct_sum(out, item->rep);
  }

  Rng rng(seed);
  std::vector<Representation> homs;
  const int budget = 64 * static_cast<int>(pc.q + 1);
  for (int attempt = 0; attempt < budget && static_cast<std::int64_t>(homs.size()) < pc.q;
       ++attempt) {
    Representation cand = random_rep(inv.quiver, inv.field, delta, rng);
    if (hom_dim(cand, cand) != 1) continue;
    bool tube_socle = false;
    for (const auto& t : inv.tubes)
      for (const auto& s : t.simples)
        if (hom_dim(s, cand) != 0) tube_socle = true;
    if (tube_socle) continue;
    bool fresh = true;
    for (const auto& prev : homs)
      if (is_isomorphic(cand, prev, rng.fork(0xd15c + homs.size()).next())) fresh = false;
    if (!fresh) continue;
    homs.push_back(std::move(cand));
  }
  if (static_cast<std::int64_t>(homs.size()) < pc.q)
    throw NeedsLargerField("field too small to host " + std::to_string(pc.q) +
                           " distinct homogeneous simples");
  for (const auto& r : homs) out = direct_sum(out, r);
  return out;
}

}  // namespace affq
