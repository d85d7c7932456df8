#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "affq/canon.hpp"

using namespace affq;

namespace {

Quiver make_a2() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}};
  return q;
}

Quiver make_d4() {
  Quiver q;
  q.vertices = {"1", "2", "3", "4", "c"};
  q.arrows = {{"a1", 0, 4}, {"a2", 1, 4}, {"a3", 2, 4}, {"a4", 3, 4}};
  return q;
}

const Field kF = Field::prime(17);

const IndecomposableInventory& kron_inv() {
  static const IndecomposableInventory inv =
      build_inventory(make_kronecker(), kF, {5, 5}, kDefaultSeed);
  return inv;
}

const IndecomposableInventory& d4_inv() {
  static const IndecomposableInventory inv = build_inventory(
      make_d4(), kF, minimal_imaginary_root(make_d4()), kDefaultSeed);
  return inv;
}

/* Every dimension vector below the box bound, odometer order. */
std::vector<DimVec> box(const DimVec& bound) {
  std::vector<DimVec> out;
  DimVec v(bound.size(), 0);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    for (; i < v.size(); ++i) {
      if (++v[i] <= bound[i]) break;
      v[i] = 0;
    }
    if (i == v.size()) return out;
  }
}

int count_kind(const IndecomposableInventory& inv, ItemKind k) {
  int c = 0;
  for (const auto& item : inv.items) c += item.kind == k ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("Kronecker inventory under (2,2) lists the four rigid roots") {
  const auto inv = build_inventory(make_kronecker(), kF, {2, 2}, kDefaultSeed);
  REQUIRE(inv.items.size() == 4);
  CHECK(inv.tubes.empty());
  std::multiset<DimVec> dims;
  for (const auto& item : inv.items) dims.insert(item.dims);
  CHECK(dims == std::multiset<DimVec>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  for (const auto& item : inv.items) {
    CHECK(dim_vector(item.rep) == item.dims);
    const bool pp = item.kind == ItemKind::preprojective;
    CHECK(item.cls.defect_value == (pp ? -1 : 1));
  }
  CHECK(std::is_sorted(inv.items.begin(), inv.items.end(),
                       [](const InventoryItem& a, const InventoryItem& b) {
                         return a.label < b.label;
                       }));
}

TEST_CASE("zero bound gives an empty inventory") {
  CHECK(build_inventory(make_kronecker(), kF, {0, 0}, kDefaultSeed).items.empty());
  CHECK(build_inventory(make_a2(), kF, {0, 0, 0}, kDefaultSeed).items.empty());
}

TEST_CASE("star inventory at delta: 18 chain items plus 6 + 6 tube modules") {
  const auto& inv = d4_inv();
  const DimVec delta = minimal_imaginary_root(make_d4());

  int chain_roots = 0;
  for (const auto& r : positive_real_roots_below(make_d4(), delta))
    chain_roots += defect(make_d4(), r) != 0 ? 1 : 0;
  CHECK(chain_roots == 18);

  CHECK(count_kind(inv, ItemKind::preprojective) +
            count_kind(inv, ItemKind::preinjective) ==
        chain_roots);
  int len1 = 0, len2 = 0;
  for (const auto& item : inv.items)
    if (item.kind == ItemKind::regular) {
      if (item.len == 1) ++len1;
      if (item.len == 2) ++len2;
    }
  CHECK(len1 == 6);
  CHECK(len2 == 6);
  CHECK(inv.items.size() == 30);
  for (const auto& item : inv.items) CHECK(dim_leq(item.dims, delta));

  // same dims delta, different tubes / classes: still distinct modules
  std::vector<const InventoryItem*> at_delta;
  for (const auto& item : inv.items)
    if (item.dims == delta) at_delta.push_back(&item);
  REQUIRE(at_delta.size() == 6);
  CHECK(!is_isomorphic(at_delta[0]->rep, at_delta[1]->rep, kDefaultSeed));
}

TEST_CASE("triangle inventory survives its own cross-check at 2 delta") {
  const DimVec bound = {2, 2, 2};
  const auto inv = build_inventory(make_a2(), kF, bound, kDefaultSeed);
  REQUIRE(inv.tubes.size() == 1);
  CHECK(inv.tubes[0].period == 2);
  int reg = 0;
  for (const auto& item : inv.items) reg += item.kind == ItemKind::regular ? 1 : 0;
  CHECK(reg == 8);  // two classes, lengths 1..4
}

TEST_CASE("enumerating (1,1) on the Kronecker quiver gives the two strata") {
  const auto out = enumerate_delta(kron_inv(), {1, 1});
  REQUIRE(out.size() == 2);
  CHECK(out[0].lambda.empty());
  CHECK(out[0].sigma ==
        std::map<std::string, int>{{"pi.1.000", 1}, {"pp.2.000", 1}});
  CHECK(out[1].lambda == std::vector<int>{1});
  CHECK(out[1].sigma.empty());
  CHECK(out[1].to_string() == "sigma{} lambda(1)");
}

TEST_CASE("enumerating (2,2) on the Kronecker quiver gives six strata") {
  const auto out = enumerate_delta(kron_inv(), {2, 2});
  REQUIRE(out.size() == 6);
  int empty_lambda = 0, l1 = 0, l11 = 0, l2 = 0;
  for (const auto& p : out) {
    if (p.lambda.empty()) ++empty_lambda;
    if (p.lambda == std::vector<int>{1}) ++l1;
    if (p.lambda == std::vector<int>{1, 1}) ++l11;
    if (p.lambda == std::vector<int>{2}) ++l2;
  }
  CHECK(empty_lambda == 3);
  CHECK(l1 == 1);
  CHECK(l11 == 1);
  CHECK(l2 == 1);
}

TEST_CASE("a unit vector admits only the simple") {
  const auto out1 = enumerate_delta(kron_inv(), {0, 1});
  REQUIRE(out1.size() == 1);
  CHECK(out1[0].sigma == std::map<std::string, int>{{"pp.2.000", 1}});
  const auto out2 = enumerate_delta(kron_inv(), {1, 0});
  REQUIRE(out2.size() == 1);
  CHECK(out2[0].sigma == std::map<std::string, int>{{"pi.1.000", 1}});
}

TEST_CASE("oracle frozen values") {
  const Quiver k = make_kronecker();
  CHECK(weight_dim_oracle(k, {1, 1}) == 2);
  CHECK(weight_dim_oracle(k, {2, 2}) == 6);
  CHECK(weight_dim_oracle(k, {0, 1}) == 1);
  CHECK(weight_dim_oracle(k, {1, 0}) == 1);
  CHECK(weight_dim_oracle(k, {0, 0}) == 1);
  Quiver a2_finite;
  a2_finite.vertices = {"1", "2"};
  a2_finite.arrows = {{"a", 0, 1}};
  CHECK_THROWS_AS(weight_dim_oracle(a2_finite, {1, 1}), NotAffine);
}

TEST_CASE("counts match the oracle across the Kronecker box") {
  for (const auto& nu : box({4, 4}))
    CHECK(static_cast<std::int64_t>(enumerate_delta(kron_inv(), nu).size()) ==
          weight_dim_oracle(make_kronecker(), nu));
}

TEST_CASE("counts match the oracle across the triangle box") {
  const auto inv = build_inventory(make_a2(), kF, {3, 3, 3}, kDefaultSeed);
  for (const auto& nu : box({3, 3, 3})) {
    if (dim_height(nu) > 6) continue;
    CHECK(static_cast<std::int64_t>(enumerate_delta(inv, nu).size()) ==
          weight_dim_oracle(make_a2(), nu));
  }
}

TEST_CASE("counts match the oracle across the star box") {
  for (const auto& nu : box(minimal_imaginary_root(make_d4())))
    CHECK(static_cast<std::int64_t>(enumerate_delta(d4_inv(), nu).size()) ==
          weight_dim_oracle(make_d4(), nu));
}

TEST_CASE("aperiodic cyclic counts match the oracle") {
  CHECK(count_aperiodic_cyclic(2, {1, 0}) == 1);
  CHECK(count_aperiodic_cyclic(2, {1, 1}) == 2);
  for (const auto& nu : box({4, 4}))
    CHECK(count_aperiodic_cyclic(2, nu) ==
          weight_dim_oracle(make_cyclic_quiver(2), nu));
  for (const auto& nu : box({2, 2, 2}))
    CHECK(count_aperiodic_cyclic(3, nu) ==
          weight_dim_oracle(make_cyclic_quiver(3), nu));
}

TEST_CASE("counts do not depend on the orientation") {
  Quiver o2;  // 1 -> 2, 3 -> 2, 1 -> 3
  o2.vertices = {"1", "2", "3"};
  o2.arrows = {{"a", 0, 1}, {"b", 2, 1}, {"c", 0, 2}};
  Quiver o3;  // 2 -> 1, 2 -> 3, 3 -> 1
  o3.vertices = {"1", "2", "3"};
  o3.arrows = {{"a", 1, 0}, {"b", 1, 2}, {"c", 2, 0}};
  const auto i1 = build_inventory(make_a2(), kF, {2, 2, 2}, kDefaultSeed);
  const auto i2 = build_inventory(o2, kF, {2, 2, 2}, kDefaultSeed);
  const auto i3 = build_inventory(o3, kF, {2, 2, 2}, kDefaultSeed);
  for (const auto& nu : box({2, 2, 2})) {
    const auto c1 = enumerate_delta(i1, nu).size();
    CHECK(c1 == enumerate_delta(i2, nu).size());
    CHECK(c1 == enumerate_delta(i3, nu).size());
  }

  Quiver d4_source = make_d4();  // arrows reversed: center -> leaves
  for (auto& a : d4_source.arrows) std::swap(a.tail, a.head);
  const DimVec delta = minimal_imaginary_root(make_d4());
  const auto id4 = build_inventory(d4_source, kF, delta, kDefaultSeed);
  for (const auto& nu : box(delta))
    CHECK(enumerate_delta(d4_inv(), nu).size() == enumerate_delta(id4, nu).size());
}

TEST_CASE("enlarging the bound never changes the enumeration") {
  const auto small = build_inventory(make_kronecker(), kF, {2, 2}, kDefaultSeed);
  for (const auto& nu : box({2, 2})) {
    const auto a = enumerate_delta(small, nu);
    const auto b = enumerate_delta(kron_inv(), nu);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(a[i].to_string() == b[i].to_string());
  }
}

TEST_CASE("dense stratum dimensions on the Kronecker quiver") {
  CanonicalParam p;
  p.lambda = {1};
  CHECK(stratum_dim(kron_inv(), p) == 2);
  p.lambda = {1, 1};
  CHECK(stratum_dim(kron_inv(), p) == 8);
  p.lambda = {2};
  CHECK(stratum_dim(kron_inv(), p) == 8);  // same locus, other local system
  p.lambda = {1, 1, 1};
  CHECK(stratum_dim(kron_inv(), p) == 18);
}

TEST_CASE("a pure sigma stratum is the orbit of its module") {
  for (const char* label : {"pp.1.000", "pp.2.000", "pi.2.000"}) {
    CanonicalParam p;
    p.sigma[label] = 1;
    const InventoryItem* item = kron_inv().find(label);
    REQUIRE(item != nullptr);
    CHECK(stratum_dim(kron_inv(), p) == orbit_dim(item->rep));
  }
}

TEST_CASE("chain modules see the homogeneous moduli through cross maps") {
  // S_2 + one homogeneous simple inside nu = (1,2): the pencil of lines
  // through a fixed point has dimension 3, not 4.
  CanonicalParam p;
  p.sigma["pp.2.000"] = 1;
  p.lambda = {1};
  CHECK(stratum_dim(kron_inv(), p) == 3);
}

TEST_CASE("generic representative realizes sigma") {
  CanonicalParam p;
  p.sigma["pp.2.000"] = 1;
  const Representation r = generic_rep_of_stratum(kron_inv(), p, kDefaultSeed);
  CHECK(is_isomorphic(r, simple_rep(make_kronecker(), kF, 1), kDefaultSeed));
}

TEST_CASE("generic representative of the open stratum is homogeneous") {
  const auto inv = build_inventory(make_kronecker(), Field::prime(5), {3, 3},
                                   kDefaultSeed);
  CanonicalParam p;
  p.lambda = {1};
  const Representation r = generic_rep_of_stratum(inv, p, kDefaultSeed);
  CHECK(dim_vector(r) == DimVec{1, 1});
  CHECK(hom_dim(r, r) == 1);

  p.lambda = {1, 1, 1};
  const Representation r3 = generic_rep_of_stratum(inv, p, kDefaultSeed);
  CHECK(dim_vector(r3) == DimVec{3, 3});
  const auto parts = indecompose(r3, kDefaultSeed);
  REQUIRE(parts.size() == 3);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(dim_vector(parts[i]) == DimVec{1, 1});
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      CHECK(!is_isomorphic(parts[i], parts[j], kDefaultSeed));
  }
}

TEST_CASE("generic representative round-trips through decomposition") {
  CanonicalParam p;
  p.sigma["pp.c.000"] = 1;       // the center projective, a simple
  p.sigma["t0.z000.l001"] = 1;   // one tube simple
  p.lambda = {1};
  const auto& inv = d4_inv();
  const Representation r = generic_rep_of_stratum(inv, p, kDefaultSeed);
  const auto parts = indecompose(r, kDefaultSeed);
  REQUIRE(parts.size() == 3);

  int matched_pp = 0, matched_tube = 0, matched_hom = 0;
  const DimVec delta = minimal_imaginary_root(make_d4());
  for (const auto& part : parts) {
    if (is_isomorphic(part, inv.find("pp.c.000")->rep, kDefaultSeed)) {
      ++matched_pp;
    } else if (is_isomorphic(part, inv.find("t0.z000.l001")->rep, kDefaultSeed)) {
      ++matched_tube;
    } else {
      CHECK(dim_vector(part) == delta);
      CHECK(hom_dim(part, part) == 1);
      bool tube_socle = false;
      for (const auto& t : inv.tubes)
        for (const auto& s : t.simples)
          if (hom_dim(s, part) != 0) tube_socle = true;
      CHECK(!tube_socle);
      ++matched_hom;
    }
  }
  CHECK(matched_pp == 1);
  CHECK(matched_tube == 1);
  CHECK(matched_hom == 1);
}

TEST_CASE("too many homogeneous simples for a tiny field") {
  const auto inv = build_inventory(make_kronecker(), Field::prime(2), {4, 4},
                                   kDefaultSeed);
  CanonicalParam p;
  p.lambda = {1, 1, 1, 1};  // only three classes exist over F2
  CHECK_THROWS_AS(generic_rep_of_stratum(inv, p, kDefaultSeed), NeedsLargerField);
}

TEST_CASE("parameter and input validation") {
  CHECK_THROWS_AS(enumerate_delta(kron_inv(), {6, 6}), ParseError);
  CanonicalParam p;
  p.sigma["no.such.label"] = 1;
  CHECK_THROWS_AS(stratum_dim(kron_inv(), p), ParseError);
  p.sigma.clear();
  p.lambda = {1, 2};
  CHECK_THROWS_AS(stratum_dim(kron_inv(), p), ParseError);
  p.lambda = {0};
  CHECK_THROWS_AS(stratum_dim(kron_inv(), p), ParseError);
  p.lambda.clear();
  p.sigma["pp.2.000"] = 0;
  CHECK_THROWS_AS(stratum_dim(kron_inv(), p), ParseError);

  CanonicalParam periodic;
  periodic.sigma["t0.z000.l001"] = 1;
  periodic.sigma["t0.z001.l001"] = 1;
  CHECK_THROWS_AS(stratum_dim(d4_inv(), periodic), ParseError);
}

TEST_CASE("inventories and enumerations are deterministic") {
  const auto a = build_inventory(make_a2(), kF, {2, 2, 2}, kDefaultSeed);
  const auto b = build_inventory(make_a2(), kF, {2, 2, 2}, kDefaultSeed);
  REQUIRE(a.items.size() == b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    CHECK(a.items[i].label == b.items[i].label);
    CHECK(a.items[i].dims == b.items[i].dims);
    REQUIRE(a.items[i].rep.maps.size() == b.items[i].rep.maps.size());
    for (std::size_t w = 0; w < a.items[i].rep.maps.size(); ++w)
      CHECK(a.items[i].rep.maps[w].to_string() == b.items[i].rep.maps[w].to_string());
  }
  const auto e1 = enumerate_delta(a, {1, 1, 1});
  const auto e2 = enumerate_delta(b, {1, 1, 1});
  REQUIRE(e1.size() == e2.size());
  for (std::size_t i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
}

TEST_CASE("random points land in exactly one stratum pattern") {
  const auto& inv = kron_inv();
  const DimVec nu = {2, 2};
  const DimVec delta = {1, 1};
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 12; ++trial) {
    const Representation m = random_rep(make_kronecker(), kF, nu, rng);
    const auto parts = indecompose(m, rng.fork(trial).next());
    std::map<std::string, int> sigma;
    std::vector<Representation> homs;
    bool boundary = false;
    for (const auto& part : parts) {
      if (defect(make_kronecker(), dim_vector(part)) != 0) {
        bool hit = false;
        for (const auto& item : inv.items)
          if (item.dims == dim_vector(part) &&
              is_isomorphic(item.rep, part, kDefaultSeed)) {
            ++sigma[item.label];
            hit = true;
            break;
          }
        CHECK(hit);
      } else if (dim_vector(part) == delta) {
        for (const auto& prev : homs)
          if (is_isomorphic(prev, part, kDefaultSeed)) boundary = true;
        homs.push_back(part);
      } else {
        boundary = true;  // a homogeneous module that is not simple
      }
    }
    if (boundary) continue;
    DimVec total(2, 0);
    for (const auto& [label, mult] : sigma)
      for (int c = 0; c < mult; ++c)
        total = dim_add(total, inv.find(label)->dims);
    for (std::size_t j = 0; j < homs.size(); ++j) total = dim_add(total, delta);
    CHECK(total == nu);
  }
}
