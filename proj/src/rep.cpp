#include "affq/rep.hpp"

#include <algorithm>
#include <map>

#include "affq/errors.hpp"

namespace affq {

void Representation::validate() const {
  quiver.validate();
  if (static_cast<int>(dims.size()) != quiver.n()) throw ParseError("dims length mismatch");
  for (auto d : dims)
    if (d < 0) throw ParseError("negative dimension");
  if (maps.size() != quiver.arrows.size()) throw ParseError("one matrix per arrow required");
  for (std::size_t w = 0; w < maps.size(); ++w) {
    const auto& a = quiver.arrows[w];
    if (maps[w].field() != field) throw ParseError("map field mismatch at arrow " + a.id);
    if (maps[w].rows() != dims[a.head] || maps[w].cols() != dims[a.tail])
      throw ParseError("map shape mismatch at arrow " + a.id);
  }
}

Representation zero_rep(const Quiver& q, const Field& f) {
  Representation m;
  m.quiver = q;
  m.field = f;
  m.dims.assign(q.n(), 0);
  for (const auto& a : q.arrows) m.maps.emplace_back(f, 0, 0), (void)a;
  return m;
}

Representation make_rep(const Quiver& q, const Field& f, DimVec dims, std::vector<Matrix> maps) {
  Representation m;
  m.quiver = q;
  m.field = f;
  m.dims = std::move(dims);
  m.maps = std::move(maps);
  m.validate();
  return m;
}

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime()) return static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(f.p())));
  return Rat(rng.int_in(-4, 4));
}

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, random_scalar(f, rng));
  return m;
}

Matrix random_invertible(const Field& f, int n, Rng& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Matrix m = random_matrix(f, n, n, rng);
    if (m.invertible()) return m;
  }
  throw NeedsLargerField("could not sample an invertible matrix");
}

Representation random_rep(const Quiver& q, const Field& f, const DimVec& dims, Rng& rng) {
  Representation m;
  m.quiver = q;
  m.field = f;
  m.dims = dims;
  for (const auto& a : q.arrows) m.maps.push_back(random_matrix(f, dims[a.head], dims[a.tail], rng));
  m.validate();
  return m;
}

const DimVec& dim_vector(const Representation& m) { return m.dims; }

bool is_nilpotent(const Representation& m) {
  if (m.quiver.is_acyclic()) return true;
  const int n = static_cast<int>(m.total_dim());
  if (n == 0) return true;
  std::vector<int> off(m.quiver.n(), 0);
  for (int i = 1; i < m.quiver.n(); ++i) off[i] = off[i - 1] + static_cast<int>(m.dims[i - 1]);
  Matrix t(m.field, n, n);
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    for (int r = 0; r < m.maps[w].rows(); ++r)
      for (int c = 0; c < m.maps[w].cols(); ++c)
        t.set(off[a.head] + r, off[a.tail] + c,
              s_add(m.field, t.get(off[a.head] + r, off[a.tail] + c), m.maps[w].get(r, c)));
  }
  Matrix p = t;
  for (int k = 1; k < n; ++k) p = p * t;
  return p.is_zero();
}

bool is_morphism(const Representation& m, const Representation& n, const RepMorphism& f) {
  if (m.quiver != n.quiver || m.field != n.field) return false;
  if (static_cast<int>(f.size()) != m.quiver.n()) return false;
  for (int i = 0; i < m.quiver.n(); ++i)
    if (f[i].rows() != n.dims[i] || f[i].cols() != m.dims[i]) return false;
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    if (f[a.head] * m.maps[w] != n.maps[w] * f[a.tail]) return false;
  }
  return true;
}

namespace {

/* Matrix of the map (f_i) -> (f_{h(w)} x_w - y_w f_{t(w)})_w in the flat
   row-major coordinates of both sides. */
Matrix intertwiner_matrix(const Representation& m, const Representation& n) {
  if (m.quiver != n.quiver || m.field != n.field)
    throw ParseError("hom requires matching quiver and field");
  const Field& f = m.field;
  const int nv = m.quiver.n();
  std::vector<int> off(nv + 1, 0);
  for (int i = 0; i < nv; ++i)
    off[i + 1] = off[i] + static_cast<int>(m.dims[i] * n.dims[i]);
  int rows = 0;
  for (const auto& a : m.quiver.arrows)
    rows += static_cast<int>(m.dims[a.tail] * n.dims[a.head]);
  Matrix sys(f, rows, off[nv]);
  int eq0 = 0;
  for (std::size_t w = 0; w < m.quiver.arrows.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    const int mt = static_cast<int>(m.dims[a.tail]), mh = static_cast<int>(m.dims[a.head]);
    const int nt = static_cast<int>(n.dims[a.tail]), nh = static_cast<int>(n.dims[a.head]);
    const Matrix& x = m.maps[w];
    const Matrix& y = n.maps[w];
    for (int r = 0; r < nh; ++r)
      for (int c = 0; c < mt; ++c) {
        const int eq = eq0 + r * mt + c;
        for (int k = 0; k < mh; ++k) {
          const int col = off[a.head] + r * mh + k;  // f_h[r][k]
          sys.set(eq, col, s_add(f, sys.get(eq, col), x.get(k, c)));
        }
        for (int k = 0; k < nt; ++k) {
          const int col = off[a.tail] + k * mt + c;  // f_t[k][c]
          sys.set(eq, col, s_sub(f, sys.get(eq, col), y.get(r, k)));
        }
      }
    eq0 += nh * mt;
  }
  return sys;
}

RepMorphism unflatten_morphism(const Representation& m, const Representation& n, const Matrix& col) {
  RepMorphism f;
  int pos = 0;
  for (int i = 0; i < m.quiver.n(); ++i) {
    Matrix fi(m.field, static_cast<int>(n.dims[i]), static_cast<int>(m.dims[i]));
    for (int r = 0; r < fi.rows(); ++r)
      for (int c = 0; c < fi.cols(); ++c) fi.set(r, c, col.get(pos + r * fi.cols() + c, 0));
    pos += fi.rows() * fi.cols();
    f.push_back(fi);
  }
  return f;
}

}  // namespace

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n) {
  const Matrix sys = intertwiner_matrix(m, n);
  const Matrix ker = sys.kernel_basis();
  std::vector<RepMorphism> out;
  for (int k = 0; k < ker.cols(); ++k) {
    const Matrix col = ker.submatrix(0, k, ker.rows(), 1);
    RepMorphism f = unflatten_morphism(m, n, col);
    if (!is_morphism(m, n, f)) throw InternalError("hom basis element fails intertwining");
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  const Matrix sys = intertwiner_matrix(m, n);
  return sys.cols() - sys.rank();
}

int ext1_dim(const Representation& m, const Representation& n) {
  const Matrix sys = intertwiner_matrix(m, n);
  return sys.rows() - sys.rank();
}

std::vector<std::vector<Matrix>> ext1_cocycles(const Representation& m, const Representation& n) {
  const Matrix sys = intertwiner_matrix(m, n);
  const Matrix proj = sys.cokernel_projection();
  std::vector<std::vector<Matrix>> out;
  for (int k = 0; k < proj.rows(); ++k) {
    Matrix unit(m.field, proj.rows(), 1);
    unit.set_int(k, 0, 1);
    const auto vec = proj.solve(unit);
    if (!vec) throw InternalError("cokernel projection is not surjective");
    // unflatten in the same arrow-block, row-major order the system uses
    std::vector<Matrix> eps;
    int eq0 = 0;
    for (std::size_t w = 0; w < m.quiver.arrows.size(); ++w) {
      const auto& a = m.quiver.arrows[w];
      const int mt = static_cast<int>(m.dims[a.tail]), nh = static_cast<int>(n.dims[a.head]);
      Matrix e(m.field, nh, mt);
      for (int r = 0; r < nh; ++r)
        for (int c = 0; c < mt; ++c) e.set(r, c, vec->get(eq0 + r * mt + c, 0));
      eq0 += nh * mt;
      eps.push_back(std::move(e));
    }
    out.push_back(std::move(eps));
  }
  return out;
}

Representation extension_rep(const Representation& n, const Representation& m,
                             const std::vector<Matrix>& cocycle) {
  if (m.quiver != n.quiver || m.field != n.field) throw ParseError("extension mismatch");
  Representation e;
  e.quiver = m.quiver;
  e.field = m.field;
  e.dims = dim_add(n.dims, m.dims);
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    const Matrix zero(m.field, static_cast<int>(m.dims[a.head]), static_cast<int>(n.dims[a.tail]));
    e.maps.push_back(Matrix::vstack(Matrix::hstack(n.maps[w], cocycle[w]),
                                    Matrix::hstack(zero, m.maps[w])));
  }
  e.validate();
  return e;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.quiver != b.quiver || a.field != b.field) throw ParseError("direct sum mismatch");
  Representation s;
  s.quiver = a.quiver;
  s.field = a.field;
  s.dims = dim_add(a.dims, b.dims);
  for (std::size_t w = 0; w < a.maps.size(); ++w) {
    const auto& ar = a.quiver.arrows[w];
    Matrix blk(a.field, static_cast<int>(s.dims[ar.head]), static_cast<int>(s.dims[ar.tail]));
    for (int r = 0; r < a.maps[w].rows(); ++r)
      for (int c = 0; c < a.maps[w].cols(); ++c) blk.set(r, c, a.maps[w].get(r, c));
    for (int r = 0; r < b.maps[w].rows(); ++r)
      for (int c = 0; c < b.maps[w].cols(); ++c)
        blk.set(a.maps[w].rows() + r, a.maps[w].cols() + c, b.maps[w].get(r, c));
    s.maps.push_back(std::move(blk));
  }
  return s;
}

bool is_stable_subspace(const Representation& m, const GradedSubspace& s) {
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    if (!s[a.head].solve(m.maps[w] * s[a.tail]).has_value()) return false;
  }
  return true;
}

Representation restrict_to(const Representation& m, const GradedSubspace& s) {
  Representation r;
  r.quiver = m.quiver;
  r.field = m.field;
  r.dims.resize(m.quiver.n());
  for (int i = 0; i < m.quiver.n(); ++i) r.dims[i] = s[i].cols();
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    auto y = s[a.head].solve(m.maps[w] * s[a.tail]);
    if (!y) throw InternalError("restriction to a non-stable subspace");
    r.maps.push_back(std::move(*y));
  }
  return r;
}

Representation quotient_by(const Representation& m, const GradedSubspace& s) {
  std::vector<Matrix> proj(m.quiver.n());
  for (int i = 0; i < m.quiver.n(); ++i) proj[i] = s[i].cokernel_projection();
  Representation r;
  r.quiver = m.quiver;
  r.field = m.field;
  r.dims.resize(m.quiver.n());
  for (int i = 0; i < m.quiver.n(); ++i) r.dims[i] = proj[i].rows();
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    // y with y * proj_t = proj_h * x_w; proj_t^T has full column rank
    auto yt = proj[a.tail].transpose().solve((proj[a.head] * m.maps[w]).transpose());
    if (!yt) throw InternalError("quotient map system inconsistent");
    r.maps.push_back(yt->transpose());
  }
  return r;
}

GradedSubspace random_stable_subspace(const Representation& m, Rng& rng) {
  GradedSubspace cur(m.quiver.n());
  for (int i = 0; i < m.quiver.n(); ++i) cur[i] = Matrix(m.field, static_cast<int>(m.dims[i]), 0);
  const std::int64_t total = m.total_dim();
  if (total == 0) return cur;
  const int nseeds = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
  for (int k = 0; k < nseeds; ++k) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(m.quiver.n())));
    if (m.dims[i] == 0) continue;
    cur[i] = Matrix::hstack(cur[i], random_matrix(m.field, static_cast<int>(m.dims[i]), 1, rng))
                 .column_space_basis();
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < m.maps.size(); ++w) {
      const auto& a = m.quiver.arrows[w];
      const Matrix grown = Matrix::hstack(cur[a.head], m.maps[w] * cur[a.tail]).column_space_basis();
      if (grown.cols() != cur[a.head].cols()) {
        cur[a.head] = grown;
        changed = true;
      }
    }
  }
  return cur;
}

namespace {

bool morphism_invertible(const RepMorphism& f) {
  for (const auto& fi : f)
    if (!fi.invertible()) return false;
  return true;
}

RepMorphism combo(const Field& fld, const std::vector<RepMorphism>& basis,
                  const std::vector<Scalar>& coeff) {
  RepMorphism out;
  const int nv = static_cast<int>(basis[0].size());
  for (int i = 0; i < nv; ++i) {
    Matrix acc = basis[0][i].scaled(coeff[0]);
    for (std::size_t k = 1; k < basis.size(); ++k) acc = acc + basis[k][i].scaled(coeff[k]);
    out.push_back(std::move(acc));
    (void)fld;
  }
  return out;
}

}  // namespace

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  if (m.quiver != n.quiver || m.field != n.field)
    throw ParseError("isomorphism test requires matching quiver and field");
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const auto basis = hom_basis(m, n);
  if (basis.empty()) return false;
  // an isomorphism M ~ N induces linear bijections among all four spaces
  const int d = static_cast<int>(basis.size());
  if (hom_dim(n, m) != d || hom_dim(m, m) != d || hom_dim(n, n) != d) return false;

  Rng rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Scalar> coeff;
    for (int k = 0; k < d; ++k) coeff.push_back(random_scalar(m.field, rng));
    if (morphism_invertible(combo(m.field, basis, coeff))) return true;
  }
  if (m.field.is_prime()) {
    // exhaustive only when the whole coefficient space is small
    double size = 1;
    for (int k = 0; k < d; ++k) size *= static_cast<double>(m.field.p());
    if (size <= 65536.0) {
      std::vector<Scalar> coeff(d, s_zero(m.field));
      std::vector<std::int64_t> odo(d, 0);
      while (true) {
        int pos = 0;
        while (pos < d) {
          if (++odo[pos] < m.field.p()) break;
          odo[pos] = 0;
          ++pos;
        }
        if (pos == d) break;
        for (int k = 0; k < d; ++k) coeff[k] = odo[k];
        if (morphism_invertible(combo(m.field, basis, coeff))) return true;
      }
      return false;
    }
  }
  throw NeedsLargerField("isomorphism search undecided within budget");
}

/* ---------- polynomial helpers over a runtime field ---------- */

namespace {

using Poly = std::vector<Scalar>;  // low to high, trimmed

void poly_trim(const Field& f, Poly& a) {
  while (!a.empty() && s_is_zero(f, a.back())) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, s_zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = s_add(f, c[i + j], s_mul(f, a[i], b[j]));
  poly_trim(f, c);
  return c;
}

/* Remainder of a modulo monic-normalized m. */
Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  poly_trim(f, a);
  const int dm = poly_deg(m);
  if (dm < 0) throw InternalError("poly_mod by zero");
  const Scalar lead_inv = s_inv(f, m.back());
  while (poly_deg(a) >= dm) {
    const Scalar c = s_mul(f, a.back(), lead_inv);
    const int shift = poly_deg(a) - dm;
    for (int i = 0; i <= dm; ++i)
      a[shift + i] = s_sub(f, a[shift + i], s_mul(f, c, m[i]));
    poly_trim(f, a);
  }
  return a;
}

Poly poly_make_monic(const Field& f, Poly a) {
  poly_trim(f, a);
  if (a.empty()) return a;
  const Scalar inv = s_inv(f, a.back());
  for (auto& c : a) c = s_mul(f, c, inv);
  return a;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  poly_trim(f, a);
  poly_trim(f, b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(f, a);
}

Poly poly_powmod(const Field& f, Poly base, BigInt e, const Poly& m) {
  Poly r = {s_one(f)};
  base = poly_mod(f, std::move(base), m);
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mod(f, poly_mul(f, r, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

Scalar poly_eval(const Field& f, const Poly& a, const Scalar& x) {
  Scalar r = s_zero(f);
  for (int i = poly_deg(a); i >= 0; --i) r = s_add(f, s_mul(f, r, x), a[i]);
  return r;
}

/* One root of a product of distinct linear factors; Cantor-Zassenhaus. */
std::optional<Scalar> extract_root_linear_product(const Field& f, Poly d, Rng& rng) {
  poly_trim(f, d);
  while (poly_deg(d) > 1) {
    if (f.p() == 2) {
      for (std::int64_t c : {0, 1})
        if (s_is_zero(f, poly_eval(f, d, Scalar(c)))) return Scalar(c);
      return std::nullopt;
    }
    bool progressed = false;
    for (int tries = 0; tries < 64 && !progressed; ++tries) {
      const Scalar r = random_scalar(f, rng);
      Poly shifted = {r, s_one(f)};  // x + r
      Poly h = poly_powmod(f, shifted, BigInt((f.p() - 1) / 2), d);
      if (h.empty())
        h = {s_neg(f, s_one(f))};
      else
        h[0] = s_sub(f, h[0], s_one(f));
      Poly g = poly_gcd(f, d, h);
      if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(d)) {
        d = std::move(g);
        progressed = true;
      }
    }
    if (!progressed) return std::nullopt;
  }
  if (poly_deg(d) != 1) return std::nullopt;
  return s_neg(f, s_mul(f, d[0], s_inv(f, d[1])));
}

std::vector<BigInt> small_divisors(BigInt n, std::size_t cap) {
  if (n < 0) n = -n;
  std::vector<BigInt> primes;
  for (BigInt d = 2; d * d <= n && d < 100000; ++d)
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  if (n > 1) primes.push_back(n);
  std::vector<BigInt> divs = {1};
  for (const auto& p : primes) {
    const std::size_t sz = divs.size();
    for (std::size_t i = 0; i < sz && divs.size() < cap; ++i) divs.push_back(divs[i] * p);
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

/* A rational root of an arbitrary poly over Q, if one is found. */
std::optional<Scalar> extract_rational_root(const Field& f, const Poly& a) {
  if (a.size() < 2) return std::nullopt;
  if (s_is_zero(f, a[0])) return s_zero(f);
  // scale to integer coefficients
  BigInt lcm = 1;
  for (const auto& c : a) {
    const BigInt den = boost::multiprecision::denominator(std::get<Rat>(c));
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> ic;
  for (const auto& c : a) {
    const Rat scaled = std::get<Rat>(c) * Rat(lcm);
    ic.push_back(boost::multiprecision::numerator(scaled));
  }
  const auto nums = small_divisors(ic.front(), 256);
  const auto dens = small_divisors(ic.back(), 16);
  for (const auto& den : dens)
    for (const auto& num : nums)
      for (int sign : {1, -1}) {
        const Scalar cand = make_rat(num * sign, den);
        if (s_is_zero(f, poly_eval(f, a, cand))) return cand;
      }
  return std::nullopt;
}

/* ---------- endomorphism splitting ---------- */

RepMorphism endo_identity(const Representation& m) {
  RepMorphism e;
  for (int i = 0; i < m.quiver.n(); ++i)
    e.push_back(Matrix::identity(m.field, static_cast<int>(m.dims[i])));
  return e;
}

RepMorphism endo_mul(const RepMorphism& a, const RepMorphism& b) {
  RepMorphism c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(a[i] * b[i]);
  return c;
}

RepMorphism endo_shift(const Representation& m, const RepMorphism& a, const Scalar& c) {
  RepMorphism out;
  for (int i = 0; i < m.quiver.n(); ++i)
    out.push_back(a[i] - Matrix::identity(m.field, a[i].rows()).scaled(c));
  return out;
}

Matrix flatten_endo(const Representation& m, const RepMorphism& a) {
  int total = 0;
  for (const auto& ai : a) total += ai.rows() * ai.cols();
  Matrix col(m.field, total, 1);
  int pos = 0;
  for (const auto& ai : a)
    for (int r = 0; r < ai.rows(); ++r)
      for (int c = 0; c < ai.cols(); ++c) col.set(pos++, 0, ai.get(r, c));
  return col;
}

Poly endo_min_poly(const Representation& m, const RepMorphism& phi) {
  const Field& f = m.field;
  const int bound = static_cast<int>(m.total_dim()) + 1;
  RepMorphism power = endo_identity(m);
  Matrix krylov = flatten_endo(m, power);
  for (int j = 1; j <= bound; ++j) {
    power = endo_mul(power, phi);
    const Matrix next = flatten_endo(m, power);
    const auto sol = krylov.solve(next);
    if (sol) {
      Poly mp(j + 1, s_zero(f));
      mp[j] = s_one(f);
      for (int i = 0; i < j; ++i) mp[i] = s_neg(f, sol->get(i, 0));
      return mp;
    }
    krylov = Matrix::hstack(krylov, next);
  }
  throw InternalError("minimal polynomial not found within dimension bound");
}

/* Fitting decomposition along phi: V = ker phi^N + im phi^N.  Nontrivial
   exactly when phi is singular and not nilpotent. */
std::optional<std::pair<GradedSubspace, GradedSubspace>> fitting_split(const Representation& m,
                                                                       const RepMorphism& phi) {
  const int n = static_cast<int>(m.total_dim());
  RepMorphism power = phi;
  for (int k = 1; k < n; k <<= 1) power = endo_mul(power, power);  // phi^(2^ceil(log2 n)) >= phi^n
  GradedSubspace kerb(m.quiver.n()), imb(m.quiver.n());
  std::int64_t kdim = 0;
  for (int i = 0; i < m.quiver.n(); ++i) {
    kerb[i] = power[i].kernel_basis();
    imb[i] = power[i].column_space_basis();
    kdim += kerb[i].cols();
  }
  if (kdim == 0 || kdim == m.total_dim()) return std::nullopt;
  return std::make_pair(std::move(kerb), std::move(imb));
}

/* Split attempt for a single endomorphism: plain Fitting, then Fitting of
   phi - a for an eigenvalue a of the minimal polynomial. */
std::optional<std::pair<Representation, Representation>> try_split(const Representation& m,
                                                                   const RepMorphism& phi, Rng& rng) {
  if (auto parts = fitting_split(m, phi))
    return std::make_pair(restrict_to(m, parts->first), restrict_to(m, parts->second));
  const Poly mp = endo_min_poly(m, phi);
  if (poly_deg(mp) <= 1) return std::nullopt;  // scalar action
  std::optional<Scalar> root;
  if (m.field.is_prime()) {
    // separable linear part of mp: gcd(mp, x^p - x)
    Poly x = {s_zero(m.field), s_one(m.field)};
    Poly xp = poly_powmod(m.field, x, BigInt(m.field.p()), mp);
    if (xp.size() < 2) xp.resize(2, s_zero(m.field));
    xp[1] = s_sub(m.field, xp[1], s_one(m.field));  // x^p - x mod mp
    Poly lin = poly_gcd(m.field, mp, xp);
    if (poly_deg(lin) == 1)
      root = s_neg(m.field, s_mul(m.field, lin[0], s_inv(m.field, lin[1])));
    else if (poly_deg(lin) > 1)
      root = extract_root_linear_product(m.field, lin, rng);
  } else {
    root = extract_rational_root(m.field, mp);
  }
  if (!root) return std::nullopt;
  const RepMorphism shifted = endo_shift(m, phi, *root);
  if (auto parts = fitting_split(m, shifted))
    return std::make_pair(restrict_to(m, parts->first), restrict_to(m, parts->second));
  return std::nullopt;  // mp is a power of (x - root): no split from phi
}

void indecompose_rec(const Representation& m, Rng rng, std::vector<Representation>& out) {
  if (m.total_dim() == 0) return;
  const auto basis = hom_basis(m, m);
  if (basis.size() == 1) {
    out.push_back(m);
    return;
  }
  const int d = static_cast<int>(basis.size());
  std::vector<RepMorphism> candidates;
  for (const auto& b : basis) candidates.push_back(b);
  for (int i = 0; i < d && static_cast<int>(candidates.size()) < 2 * d + 8; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) candidates.push_back(endo_mul(basis[i], basis[j]));
  for (int t = 0; t < 64; ++t) {
    std::vector<Scalar> coeff;
    Rng sub = rng.fork(1000 + t);
    for (int k = 0; k < d; ++k) coeff.push_back(random_scalar(m.field, sub));
    candidates.push_back(combo(m.field, basis, coeff));
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Rng sub = rng.fork(c);
    if (auto parts = try_split(m, candidates[c], sub)) {
      indecompose_rec(parts->first, rng.fork(200000 + c), out);
      indecompose_rec(parts->second, rng.fork(300000 + c), out);
      return;
    }
  }
  /* No candidate split.  For a decomposable module, End contains nontrivial
     idempotents, which plain Fitting always splits; the candidate pool spans
     End, so reaching this point certifies local End up to the sampling
     budget. */
  out.push_back(m);
}

}  // namespace

std::vector<Representation> indecompose(const Representation& m, std::uint64_t seed) {
  m.validate();
  std::vector<Representation> out;
  indecompose_rec(m, Rng(seed), out);
  std::int64_t total = 0;
  for (const auto& s : out) total += s.total_dim();
  if (total != m.total_dim()) throw InternalError("summand dimensions do not add up");
  return out;
}

std::int64_t orbit_dim(const Representation& m) {
  std::int64_t g = 0;
  for (auto d : m.dims) g += d * d;
  return g - hom_dim(m, m);
}

Representation random_conjugate(const Representation& m, Rng& rng) {
  std::vector<Matrix> g(m.quiver.n()), ginv(m.quiver.n());
  for (int i = 0; i < m.quiver.n(); ++i) {
    g[i] = random_invertible(m.field, static_cast<int>(m.dims[i]), rng);
    ginv[i] = *g[i].inverse();
  }
  Representation r = m;
  for (std::size_t w = 0; w < m.maps.size(); ++w) {
    const auto& a = m.quiver.arrows[w];
    r.maps[w] = g[a.head] * m.maps[w] * ginv[a.tail];
  }
  return r;
}

}  // namespace affq
