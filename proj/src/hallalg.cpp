#include "affq/hallalg.hpp"

#include <algorithm>
#include <sstream>

#include "affq/functors.hpp"

namespace affq {

namespace {

/* All k-dimensional subspaces of F_p^n as n x k column-basis matrices, one
   per reduced echelon form: choose pivot rows, then run an odometer over
   the free entries.  Deterministic order. */
std::vector<Matrix> all_subspaces(const Field& f, int n, int k) {
  std::vector<Matrix> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back(f, n, 0);
    return out;
  }
  const std::int64_t p = f.p();
  std::vector<int> piv(k);
  for (int r = 0; r < k; ++r) piv[r] = r;
  for (;;) {
    std::vector<std::pair<int, int>> free_cells;  // (basis vector, coordinate)
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
          free_cells.push_back({r, c});
    std::vector<std::int64_t> odo(free_cells.size(), 0);
    for (;;) {
      Matrix b(f, n, k);
      for (int r = 0; r < k; ++r) b.set_int(piv[r], r, 1);
      for (std::size_t t = 0; t < free_cells.size(); ++t)
        b.set_int(free_cells[t].second, free_cells[t].first, odo[t]);
      out.push_back(std::move(b));
      std::size_t t = 0;
      for (; t < odo.size(); ++t) {
        if (++odo[t] < p) break;
        odo[t] = 0;
      }
      if (t == odo.size()) break;
    }
    int r = k - 1;
    while (r >= 0 && piv[r] == n - k + r) --r;
    if (r < 0) break;
    ++piv[r];
    for (int s = r + 1; s < k; ++s) piv[s] = piv[s - 1] + 1;
  }
  return out;
}

Rat int_pow(std::int64_t base, std::int64_t e) {
  Rat r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require_same_algebra(const HallElement& x, const HallElement& y) {
  if (x.quiver != y.quiver || x.field != y.field)
    throw ParseError("Hall elements live over different quivers or fields");
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

void LaurentPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second == 0 ? c_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.c_[e] += c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.c_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : c_)
    if (coeff(-e) != c) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t a = c > 0 ? c : -c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly q_integer(int n) {
  if (n < 0) throw ParseError("q-integer of a negative number");
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p = p + LaurentPoly::monomial(1, n - 1 - 2 * j);
  return p;
}

LaurentPoly gaussian(int n, int m) {
  if (m < 0 || m > n) throw ParseError("Gaussian binomial needs 0 <= m <= n");
  if (m == 0 || m == n) return LaurentPoly::one();
  // balanced q-Pascal: [n m] = v^{n-m} [n-1 m-1] + v^{-m} [n-1 m]
  return LaurentPoly::monomial(1, n - m) * gaussian(n - 1, m - 1) +
         LaurentPoly::monomial(1, -m) * gaussian(n - 1, m);
}

QuadraticScalar QuadraticScalar::from_int(std::int64_t v, std::int64_t q) {
  return {Rat(v), Rat(0), q};
}

QuadraticScalar QuadraticScalar::sqrt_pow(std::int64_t q, std::int64_t k) {
  if (q <= 0) throw ParseError("sqrt base must be positive");
  QuadraticScalar r{Rat(0), Rat(0), q};
  if (k >= 0) {
    if (k % 2 == 0)
      r.a = int_pow(q, k / 2);
    else
      r.b = int_pow(q, (k - 1) / 2);
  } else {
    const std::int64_t m = -k;
    if (m % 2 == 0)
      r.a = Rat(1) / int_pow(q, m / 2);
    else
      r.b = Rat(1) / int_pow(q, (m + 1) / 2);  // 1/sqrt(q)^m = sqrt(q)/q^{(m+1)/2}
  }
  return r;
}

QuadraticScalar QuadraticScalar::operator+(const QuadraticScalar& o) const {
  if (q != o.q) throw ParseError("mixed sqrt bases");
  return {a + o.a, b + o.b, q};
}

QuadraticScalar QuadraticScalar::operator-(const QuadraticScalar& o) const {
  if (q != o.q) throw ParseError("mixed sqrt bases");
  return {a - o.a, b - o.b, q};
}

QuadraticScalar QuadraticScalar::operator*(const QuadraticScalar& o) const {
  if (q != o.q) throw ParseError("mixed sqrt bases");
  return {a * o.a + b * o.b * q, a * o.b + b * o.a, q};
}

QuadraticScalar QuadraticScalar::operator-() const { return {-a, -b, q}; }

bool QuadraticScalar::operator==(const QuadraticScalar& o) const {
  return q == o.q && a == o.a && b == o.b;
}

std::string QuadraticScalar::to_string() const {
  std::ostringstream os;
  os << rat_to_string(a);
  if (b != 0) os << (b > 0 ? "+" : "") << rat_to_string(b) << "*sqrt(" << q << ")";
  return os.str();
}

QuadraticScalar eval_at_sqrt(const LaurentPoly& p, std::int64_t q) {
  QuadraticScalar r = QuadraticScalar::from_int(0, q);
  for (const auto& [e, c] : p.terms())
    r = r + QuadraticScalar::from_int(c, q) * QuadraticScalar::sqrt_pow(q, e);
  return r;
}

std::int64_t twist_exponent(const Quiver& q, const DimVec& a, const DimVec& b) {
  if (static_cast<int>(a.size()) != q.n() || static_cast<int>(b.size()) != q.n())
    throw ParseError("dimension vector length does not match the quiver");
  std::int64_t m = 0;
  for (int i = 0; i < q.n(); ++i) m += a[i] * b[i];
  for (const auto& w : q.arrows) m += a[w.tail] * b[w.head];
  return m;
}

std::int64_t hall_number(const Representation& top, const Representation& sub,
                         const Representation& total, std::int64_t cap,
                         std::uint64_t seed) {
  if (top.quiver != total.quiver || sub.quiver != total.quiver)
    throw ParseError("Hall number needs all three modules on one quiver");
  if (top.field != total.field || sub.field != total.field)
    throw ParseError("Hall number needs a single coefficient field");
  if (!total.field.is_prime())
    throw ParseError("Hall numbers count over a finite field");
  if (dim_add(dim_vector(top), dim_vector(sub)) != dim_vector(total)) return 0;

  const Quiver& q = total.quiver;
  std::vector<std::vector<Matrix>> cells;
  double combos = 1;
  for (int i = 0; i < q.n(); ++i) {
    cells.push_back(all_subspaces(total.field, static_cast<int>(total.dims[i]),
                                  static_cast<int>(sub.dims[i])));
    combos *= static_cast<double>(cells.back().size());
    if (combos > static_cast<double>(cap))
      throw CombinatorialExplosion("graded subspace count exceeds the cap");
    if (cells.back().empty()) return 0;
  }

  std::int64_t count = 0;
  std::vector<std::size_t> odo(q.n(), 0);
  for (;;) {
    GradedSubspace s;
    for (int i = 0; i < q.n(); ++i) s.push_back(cells[i][odo[i]]);
    if (is_stable_subspace(total, s) &&
        is_isomorphic(restrict_to(total, s), sub, seed ^ 0x5b1) &&
        is_isomorphic(quotient_by(total, s), top, seed ^ 0x70b))
      ++count;
    int i = 0;
    for (; i < q.n(); ++i) {
      if (++odo[i] < cells[i].size()) break;
      odo[i] = 0;
    }
    if (i == q.n()) break;
  }
  return count;
}

HallElement hall_zero(const Quiver& q, const Field& f) { return {q, f, {}}; }

HallElement hall_unit(const Quiver& q, const Field& f) {
  HallElement x{q, f, {}};
  x.terms.push_back({zero_rep(q, f), QuadraticScalar::from_int(1, f.p())});
  return x;
}

HallElement hall_generator(const Quiver& q, const Field& f, int vertex) {
  if (vertex < 0 || vertex >= q.n()) throw ParseError("vertex index out of range");
  HallElement x{q, f, {}};
  x.terms.push_back({simple_rep(q, f, vertex), QuadraticScalar::from_int(1, f.p())});
  return x;
}

void hall_accumulate(HallElement& x, const Representation& rep,
                     const QuadraticScalar& coeff, std::uint64_t seed) {
  if (coeff.is_zero()) return;
  for (std::size_t i = 0; i < x.terms.size(); ++i)
    if (is_isomorphic(x.terms[i].rep, rep, seed ^ (0xacc0 + i))) {
      x.terms[i].coeff = x.terms[i].coeff + coeff;
      if (x.terms[i].coeff.is_zero()) x.terms.erase(x.terms.begin() + i);
      return;
    }
  x.terms.push_back({rep, coeff});
}

HallElement hall_add(HallElement x, const HallElement& y, std::uint64_t seed) {
  require_same_algebra(x, y);
  for (const auto& t : y.terms) hall_accumulate(x, t.rep, t.coeff, seed);
  return x;
}

HallElement hall_scale(const QuadraticScalar& c, HallElement x) {
  if (c.is_zero()) return hall_zero(x.quiver, x.field);
  for (auto& t : x.terms) t.coeff = t.coeff * c;
  return x;
}

bool hall_is_zero(const HallElement& x) {
  for (const auto& t : x.terms)
    if (!t.coeff.is_zero()) return false;
  return true;
}

bool hall_equal(const HallElement& x, const HallElement& y, std::uint64_t seed) {
  require_same_algebra(x, y);
  HallElement d = x;
  for (const auto& t : y.terms) hall_accumulate(d, t.rep, -t.coeff, seed);
  return hall_is_zero(d);
}

HallElement hall_product(const HallElement& x, const HallElement& y,
                         std::uint64_t seed, std::int64_t cap) {
  require_same_algebra(x, y);
  if (!x.field.is_prime()) throw ParseError("Hall products need a finite field");
  const Quiver& q = x.quiver;
  const std::int64_t p = x.field.p();
  HallElement out = hall_zero(q, x.field);

  for (const auto& xt : x.terms)
    for (const auto& yt : y.terms) {
      const Representation& top = xt.rep;
      const Representation& sub = yt.rep;
      // Twist order is (sub, top): this is the unique choice for which the
      // generators u_{S_i} satisfy the quantum Serre relations at v = sqrt(q).
      const std::int64_t m = twist_exponent(q, dim_vector(sub), dim_vector(top));
      const QuadraticScalar base =
          QuadraticScalar::sqrt_pow(p, m) * xt.coeff * yt.coeff;

      const int e = ext1_dim(top, sub);
      double classes_count = 1;
      for (int k = 0; k < e; ++k) {
        classes_count *= static_cast<double>(p);
        if (classes_count > static_cast<double>(cap))
          throw CombinatorialExplosion("extension class count exceeds the cap");
      }
      const auto basis = ext1_cocycles(top, sub);

      std::vector<Representation> middles;
      std::vector<std::int64_t> odo(e, 0);
      for (;;) {
        std::vector<Matrix> cocycle;
        for (std::size_t w = 0; w < q.arrows.size(); ++w) {
          Matrix c(x.field, static_cast<int>(sub.dims[q.arrows[w].head]),
                   static_cast<int>(top.dims[q.arrows[w].tail]));
          for (int k = 0; k < e; ++k)
            if (odo[k] != 0) c = c + basis[k][w].scaled_int(odo[k]);
          cocycle.push_back(std::move(c));
        }
        Representation mid = extension_rep(sub, top, cocycle);
        bool fresh = true;
        for (std::size_t i = 0; i < middles.size() && fresh; ++i)
          if (is_isomorphic(middles[i], mid, seed ^ (0x3a7 + i))) fresh = false;
        if (fresh) middles.push_back(std::move(mid));
        int k = 0;
        for (; k < e; ++k) {
          if (++odo[k] < p) break;
          odo[k] = 0;
        }
        if (k == e) break;
      }

      for (const auto& mid : middles) {
        const std::int64_t g = hall_number(top, sub, mid, cap, seed);
        if (g != 0)
          hall_accumulate(out, mid, base * QuadraticScalar::from_int(g, p), seed);
      }
    }
  return out;
}

bool serre_check(const Quiver& q, int i, int j, std::int64_t prime,
                 std::uint64_t seed, std::int64_t cap) {
  if (i < 0 || i >= q.n() || j < 0 || j >= q.n())
    throw ParseError("vertex index out of range");
  if (i == j) throw ParseError("the Serre relation needs two distinct vertices");
  const Field f = Field::prime(prime);
  const std::int64_t c_ij = cartan_matrix(q)[i][j];
  const int nrel = static_cast<int>(1 - c_ij);

  const HallElement fi = hall_generator(q, f, i);
  const HallElement fj = hall_generator(q, f, j);
  std::vector<HallElement> fi_pow = {hall_unit(q, f)};
  for (int k = 1; k <= nrel; ++k)
    fi_pow.push_back(hall_product(fi_pow.back(), fi, seed, cap));

  HallElement acc = hall_zero(q, f);
  for (int p_ = 0; p_ <= nrel; ++p_) {
    QuadraticScalar c = eval_at_sqrt(gaussian(nrel, p_), prime);
    if (p_ % 2 == 1) c = -c;
    HallElement term =
        hall_product(hall_product(fi_pow[p_], fj, seed, cap), fi_pow[nrel - p_], seed, cap);
    acc = hall_add(std::move(acc), hall_scale(c, std::move(term)), seed);
  }
  return hall_is_zero(acc);
}

}  // namespace affq
