#include "affq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "affq/matrix.hpp"

namespace affq {

std::int64_t dim_height(const DimVec& a) { return std::accumulate(a.begin(), a.end(), std::int64_t(0)); }

bool dim_leq(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) throw ParseError("dim vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dim_is_zero(const DimVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

DimVec dim_add(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) throw ParseError("dim vector length mismatch");
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVec dim_sub(const DimVec& a, const DimVec& b) {
  if (a.size() != b.size()) throw ParseError("dim vector length mismatch");
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DimVec dim_scale(const DimVec& a, std::int64_t c) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

std::string dim_to_string(const DimVec& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

int Quiver::vertex_index(const std::string& id) const {
  for (int i = 0; i < n(); ++i)
    if (vertices[i] == id) return i;
  throw ParseError("unknown vertex id: " + id);
}

int Quiver::arrow_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    if (arrows[i].id == id) return i;
  throw ParseError("unknown arrow id: " + id);
}

void Quiver::validate() const {
  std::set<std::string> vid(vertices.begin(), vertices.end());
  if (static_cast<int>(vid.size()) != n()) throw ParseError("duplicate vertex id");
  std::set<std::string> aid;
  for (const auto& a : arrows) {
    if (!aid.insert(a.id).second) throw ParseError("duplicate arrow id: " + a.id);
    if (a.tail < 0 || a.tail >= n() || a.head < 0 || a.head >= n())
      throw ParseError("arrow endpoint out of range: " + a.id);
    if (a.tail == a.head) throw ParseError("loop at vertex " + vertices[a.tail]);
  }
}

bool Quiver::is_sink(int i) const {
  for (const auto& a : arrows)
    if (a.tail == i) return false;
  return true;
}

bool Quiver::is_source(int i) const {
  for (const auto& a : arrows)
    if (a.head == i) return false;
  return true;
}

bool Quiver::is_acyclic() const {
  // Kahn peeling by sinks
  std::vector<int> out(n(), 0);
  for (const auto& a : arrows) ++out[a.tail];
  std::vector<char> removed(n(), 0);
  for (int step = 0; step < n(); ++step) {
    int pick = -1;
    for (int i = 0; i < n(); ++i)
      if (!removed[i] && out[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) return false;
    removed[pick] = 1;
    for (const auto& a : arrows)
      if (a.head == pick && !removed[a.tail]) --out[a.tail];
  }
  return true;
}

bool Quiver::is_connected() const {
  if (n() == 0) return false;
  std::vector<char> seen(n(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& a : arrows) {
      int other = -1;
      if (a.tail == v) other = a.head;
      if (a.head == v) other = a.tail;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices != o.vertices || arrows.size() != o.arrows.size()) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id != o.arrows[i].id || arrows[i].tail != o.arrows[i].tail ||
        arrows[i].head != o.arrows[i].head)
      return false;
  return true;
}

std::string AffineClass::to_string() const {
  switch (family) {
    case Family::A: return "A~" + std::to_string(n);
    case Family::D: return "D~" + std::to_string(n);
    case Family::E6: return "E~6";
    case Family::E7: return "E~7";
    case Family::E8: return "E~8";
    case Family::cyclic: return "cyclic(" + std::to_string(n) + ")";
  }
  return "?";
}

std::vector<std::vector<std::int64_t>> cartan_matrix(const Quiver& q) {
  std::vector<std::vector<std::int64_t>> c(q.n(), std::vector<std::int64_t>(q.n(), 0));
  for (int i = 0; i < q.n(); ++i) c[i][i] = 2;
  for (const auto& a : q.arrows) {
    --c[a.tail][a.head];
    --c[a.head][a.tail];
  }
  return c;
}

namespace {

/* Primitive positive radical generator of the symmetric form, or empty. */
DimVec radical_generator(const Quiver& q) {
  const auto c = cartan_matrix(q);
  Matrix m(Field::rational(), q.n(), q.n());
  for (int i = 0; i < q.n(); ++i)
    for (int j = 0; j < q.n(); ++j) m.set_int(i, j, c[i][j]);
  const Matrix k = m.kernel_basis();
  if (k.cols() != 1) return {};
  // clear denominators, divide by gcd, normalize the sign
  std::vector<Rat> v(q.n());
  BigInt lcm = 1;
  for (int i = 0; i < q.n(); ++i) {
    v[i] = std::get<Rat>(k.get(i, 0));
    const BigInt d = boost::multiprecision::denominator(v[i]);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> w(q.n());
  BigInt g = 0;
  for (int i = 0; i < q.n(); ++i) {
    const Rat scaled = v[i] * Rat(lcm);
    w[i] = boost::multiprecision::numerator(scaled);
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return {};
  int sign = 0;
  for (const auto& x : w)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  DimVec delta(q.n());
  for (int i = 0; i < q.n(); ++i) {
    const BigInt e = w[i] / g * sign;
    if (e <= 0) return {};  // radical generator not positive: not affine
    delta[i] = e.convert_to<std::int64_t>();
  }
  return delta;
}

}  // namespace

AffineClass classify_graph(const Quiver& q) {
  q.validate();
  if (q.n() < 2) throw NotAffine("fewer than two vertices");
  if (!q.is_connected()) throw NotAffine("underlying graph not connected");
  DimVec delta = radical_generator(q);
  if (delta.empty()) throw NotAffine("symmetric form has no positive one-dimensional radical");

  // Shape analysis on the underlying graph; the radical certificate already
  // guarantees the graph is one of the extended Dynkin diagrams.
  std::vector<int> deg(q.n(), 0);
  std::vector<int> outdeg(q.n(), 0), indeg(q.n(), 0);
  for (const auto& a : q.arrows) {
    ++deg[a.tail];
    ++deg[a.head];
    ++outdeg[a.tail];
    ++indeg[a.head];
  }

  AffineClass ac;
  ac.delta = delta;
  const bool all_deg2 = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  if (all_deg2) {
    // cycle (the n=1 case is the double edge on two vertices)
    bool cyclic_orientation = true;
    for (int i = 0; i < q.n(); ++i)
      if (outdeg[i] != 1 || indeg[i] != 1) cyclic_orientation = false;
    if (cyclic_orientation) {
      ac.family = AffineClass::Family::cyclic;
      ac.n = q.n();
    } else {
      ac.family = AffineClass::Family::A;
      ac.n = q.n() - 1;
    }
    return ac;
  }

  const int deg4 = static_cast<int>(std::count(deg.begin(), deg.end(), 4));
  const int deg3 = static_cast<int>(std::count(deg.begin(), deg.end(), 3));
  if (deg4 == 1 && deg3 == 0 && q.n() == 5) {
    ac.family = AffineClass::Family::D;
    ac.n = 4;
    return ac;
  }
  if (deg3 == 2) {
    ac.family = AffineClass::Family::D;
    ac.n = q.n() - 1;
    return ac;
  }
  if (deg3 == 1) {
    // single branch vertex: arm lengths decide E~6/7/8
    const int b = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::multiset<int> arms;
    std::vector<std::vector<int>> adj(q.n());
    for (const auto& a : q.arrows) {
      adj[a.tail].push_back(a.head);
      adj[a.head].push_back(a.tail);
    }
    for (int start : adj[b]) {
      int prev = b, cur = start, len = 1;
      while (deg[cur] == 2) {
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      arms.insert(len);
    }
    if (arms == std::multiset<int>{2, 2, 2}) {
      ac.family = AffineClass::Family::E6;
      ac.n = 6;
      return ac;
    }
    if (arms == std::multiset<int>{1, 3, 3}) {
      ac.family = AffineClass::Family::E7;
      ac.n = 7;
      return ac;
    }
    if (arms == std::multiset<int>{1, 2, 5}) {
      ac.family = AffineClass::Family::E8;
      ac.n = 8;
      return ac;
    }
  }
  throw NotAffine("radical certificate present but shape unrecognized");
}

std::int64_t euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
  if (static_cast<int>(a.size()) != q.n() || static_cast<int>(b.size()) != q.n())
    throw ParseError("dim vector length mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < q.n(); ++i) s += a[i] * b[i];
  for (const auto& w : q.arrows) s -= a[w.tail] * b[w.head];
  return s;
}

std::int64_t symmetric_euler_form(const Quiver& q, const DimVec& a, const DimVec& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVec minimal_imaginary_root(const Quiver& q) { return classify_graph(q).delta; }

std::int64_t defect(const Quiver& q, const DimVec& a) {
  const AffineClass ac = classify_graph(q);
  if (ac.family == AffineClass::Family::cyclic)
    throw ParseError("defect undefined for the cyclic orientation");
  return euler_form(q, ac.delta, a);
}

Quiver reflect_quiver(const Quiver& q, int i) {
  if (i < 0 || i >= q.n()) throw ParseError("vertex index out of range");
  if (!q.is_sink(i) && !q.is_source(i)) throw ParseError("reflection vertex is neither sink nor source");
  Quiver r = q;
  for (auto& a : r.arrows)
    if (a.tail == i || a.head == i) std::swap(a.tail, a.head);
  return r;
}

DimVec weyl_reflect(const Quiver& q, const DimVec& a, int i) {
  if (i < 0 || i >= q.n()) throw ParseError("vertex index out of range");
  const auto c = cartan_matrix(q);
  std::int64_t pairing = 0;
  for (int j = 0; j < q.n(); ++j) pairing += c[i][j] * a[j];
  DimVec r = a;
  r[i] -= pairing;
  return r;
}

std::vector<int> admissible_sink_sequence(const Quiver& q) {
  if (!q.is_acyclic()) throw ParseError("admissible sink sequence needs an acyclic quiver");
  Quiver cur = q;
  std::vector<char> used(q.n(), 0);
  std::vector<int> seq;
  for (int step = 0; step < q.n(); ++step) {
    int pick = -1;
    for (int i = 0; i < q.n(); ++i)
      if (!used[i] && cur.is_sink(i)) {
        pick = i;
        break;
      }
    if (pick < 0) throw InternalError("no available sink in acyclic quiver");
    seq.push_back(pick);
    used[pick] = 1;
    cur = reflect_quiver(cur, pick);
  }
  return seq;
}

std::vector<DimVec> positive_real_roots_below(const Quiver& q, const DimVec& bound) {
  if (static_cast<int>(bound.size()) != q.n()) throw ParseError("dim vector length mismatch");
  std::set<DimVec> seen;
  std::vector<DimVec> frontier;
  for (int i = 0; i < q.n(); ++i) {
    DimVec e(q.n(), 0);
    e[i] = 1;
    if (dim_leq(e, bound) && seen.insert(e).second) frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<DimVec> next;
    for (const auto& a : frontier)
      for (int i = 0; i < q.n(); ++i) {
        DimVec r = weyl_reflect(q, a, i);
        if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v < 0; })) continue;
        if (!dim_leq(r, bound)) continue;
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<DimVec> out(seen.begin(), seen.end());
  for (const auto& a : out)
    if (symmetric_euler_form(q, a, a) != 2) throw InternalError("reflection orbit left the real roots");
  std::sort(out.begin(), out.end(), [](const DimVec& a, const DimVec& b) {
    const auto ha = dim_height(a), hb = dim_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

Quiver make_kronecker() {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  return q;
}

Quiver make_cyclic_quiver(int p) {
  if (p < 2) throw ParseError("cyclic quiver needs p >= 2");
  Quiver q;
  for (int z = 0; z < p; ++z) q.vertices.push_back(std::to_string(z));
  // arrow w_z : z -> z-1 (mod p)
  for (int z = 0; z < p; ++z) q.arrows.push_back({"w" + std::to_string(z), z, (z + p - 1) % p});
  return q;
}

}  // namespace affq
