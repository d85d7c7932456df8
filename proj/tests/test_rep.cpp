#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affq/rep.hpp"

using namespace affq;

namespace {

Quiver make_a2_path() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}};
  return q;
}

/* Kronecker regular of slope lambda: dims (1,1), maps (1, lambda). */
Representation kron_regular(const Field& f, std::int64_t lambda) {
  const Quiver q = make_kronecker();
  Matrix a(f, 1, 1), b(f, 1, 1);
  a.set_int(0, 0, 1);
  b.set_int(0, 0, lambda);
  return make_rep(q, f, {1, 1}, {a, b});
}

Representation kron_simple(const Field& f, int which) {
  const Quiver q = make_kronecker();
  DimVec d = which == 0 ? DimVec{1, 0} : DimVec{0, 1};
  const Matrix z(f, d[1], d[0]);
  return make_rep(q, f, d, {z, z});
}

/* Preprojective of dims (1,2): maps are the two coordinate inclusions. */
Representation kron_p1(const Field& f) {
  Matrix a(f, 2, 1), b(f, 2, 1);
  a.set_int(0, 0, 1);
  b.set_int(1, 0, 1);
  return make_rep(make_kronecker(), f, {1, 2}, {a, b});
}

}  // namespace

TEST_CASE("hom and ext between Kronecker simples") {
  const Field f = Field::prime(5);
  const auto s1 = kron_simple(f, 0), s2 = kron_simple(f, 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(ext1_dim(s1, s2) == 2);
  CHECK(hom_dim(s2, s1) == 0);
  CHECK(ext1_dim(s2, s1) == 0);
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(ext1_dim(s1, s1) == 0);
}

TEST_CASE("regular modules of distinct slopes do not interact") {
  const Field f = Field::prime(7);
  const auto r1 = kron_regular(f, 1), r2 = kron_regular(f, 2);
  CHECK(hom_dim(r1, r1) == 1);
  CHECK(ext1_dim(r1, r1) == 1);  // <delta,delta> = 0
  CHECK(hom_dim(r1, r2) == 0);
  CHECK(ext1_dim(r1, r2) == 0);
  CHECK(hom_dim(kron_p1(f), kron_p1(f)) == 1);
  CHECK(ext1_dim(kron_p1(f), kron_p1(f)) == 0);
}

TEST_CASE("euler identity hom - ext = <dim,dim> on random pairs") {
  const Quiver quivers[] = {make_kronecker(), make_a2_path(), make_cyclic_quiver(3)};
  for (const auto& q : quivers) {
    for (const Field& f : {Field::prime(5), Field::rational()}) {
      Rng rng(kDefaultSeed ^ 0x11);
      for (int iter = 0; iter < 25; ++iter) {
        DimVec dm(q.n()), dn(q.n());
        for (int i = 0; i < q.n(); ++i) {
          dm[i] = static_cast<std::int64_t>(rng.below(3));
          dn[i] = static_cast<std::int64_t>(rng.below(3));
        }
        const auto m = random_rep(q, f, dm, rng);
        const auto n = random_rep(q, f, dn, rng);
        CHECK(hom_dim(m, n) - ext1_dim(m, n) == euler_form(q, dm, dn));
      }
    }
  }
}

TEST_CASE("hom basis elements intertwine and have the right count") {
  Rng rng(kDefaultSeed ^ 0x12);
  const Quiver q = make_a2_path();
  const Field f = Field::prime(3);
  const auto m = random_rep(q, f, {2, 1, 2}, rng);
  const auto n = random_rep(q, f, {1, 2, 2}, rng);
  const auto basis = hom_basis(m, n);
  CHECK(static_cast<int>(basis.size()) == hom_dim(m, n));
  for (const auto& el : basis) CHECK(is_morphism(m, n, el));
}

TEST_CASE("direct sum is additive for dims and hom") {
  const Field f = Field::prime(5);
  const auto r1 = kron_regular(f, 1), r2 = kron_regular(f, 2), p = kron_p1(f);
  const auto s = direct_sum(r1, r2);
  CHECK(s.dims == DimVec{2, 2});
  CHECK(hom_dim(s, p) == hom_dim(r1, p) + hom_dim(r2, p));
  CHECK(hom_dim(p, s) == hom_dim(p, r1) + hom_dim(p, r2));
  CHECK(hom_dim(s, s) == 2);
}

TEST_CASE("isomorphism: conjugates yes, distinct slopes no, dims mismatch no") {
  const Field f = Field::prime(5);
  Rng rng(kDefaultSeed ^ 0x13);
  const auto r1 = kron_regular(f, 1);
  CHECK(is_isomorphic(r1, random_conjugate(r1, rng), 7));
  CHECK(!is_isomorphic(r1, kron_regular(f, 2), 7));
  CHECK(!is_isomorphic(r1, kron_p1(f), 7));

  const auto m = direct_sum(kron_simple(f, 0), kron_simple(f, 1));
  // same dims as r1 but decomposable
  CHECK(!is_isomorphic(m, r1, 7));
  CHECK(!is_isomorphic(r1, m, 7));
}

TEST_CASE("isomorphism survives conjugation of larger random reps, both fields") {
  for (const Field& f : {Field::prime(2), Field::rational()}) {
    Rng rng(kDefaultSeed ^ 0x14);
    const auto m = random_rep(make_a2_path(), f, {2, 2, 1}, rng);
    const auto c = random_conjugate(m, rng);
    CHECK(is_isomorphic(m, c, 3));
  }
}

TEST_CASE("indecompose splits a conjugated sum of nonisomorphic regulars") {
  const Field f = Field::prime(5);
  Rng rng(kDefaultSeed ^ 0x15);
  const auto r1 = kron_regular(f, 1), r2 = kron_regular(f, 2);
  const auto m = random_conjugate(direct_sum(r1, r2), rng);
  const auto parts = indecompose(m, 11);
  REQUIRE(parts.size() == 2);
  const bool straight = is_isomorphic(parts[0], r1, 7) && is_isomorphic(parts[1], r2, 7);
  const bool crossed = is_isomorphic(parts[0], r2, 7) && is_isomorphic(parts[1], r1, 7);
  CHECK((straight || crossed));
}

TEST_CASE("indecompose splits an isotypic pile of simples") {
  const Field f = Field::prime(3);
  const auto s = kron_simple(f, 0);
  auto m = direct_sum(direct_sum(s, s), s);
  const auto parts = indecompose(m, 5);
  REQUIRE(parts.size() == 3);
  for (const auto& p : parts) CHECK(p.dims == DimVec{1, 0});
}

TEST_CASE("indecompose keeps indecomposables whole") {
  const Field f = Field::prime(5);
  CHECK(indecompose(kron_p1(f), 3).size() == 1);

  // Jordan-type regular: End has dimension 2 but the module is indecomposable
  Matrix a(f, 2, 2), b(f, 2, 2);
  a.set_int(0, 0, 1);
  a.set_int(1, 1, 1);
  b.set_int(0, 0, 2);
  b.set_int(1, 1, 2);
  b.set_int(0, 1, 1);
  const auto j = make_rep(make_kronecker(), f, {2, 2}, {a, b});
  CHECK(hom_dim(j, j) == 2);
  const auto parts = indecompose(j, 3);
  CHECK(parts.size() == 1);
}

TEST_CASE("indecompose over Q splits a pencil with rational eigenvalues") {
  const Field f = Field::rational();
  Rng rng(kDefaultSeed ^ 0x16);
  const auto m = random_conjugate(direct_sum(kron_regular(f, 2), kron_regular(f, 5)), rng);
  const auto parts = indecompose(m, 9);
  REQUIRE(parts.size() == 2);
  for (const auto& p : parts) CHECK(p.dims == DimVec{1, 1});
}

TEST_CASE("indecompose recombination matches the original") {
  const Field f = Field::prime(17);
  Rng rng(kDefaultSeed ^ 0x17);
  for (int iter = 0; iter < 6; ++iter) {
    const auto m = random_rep(make_a2_path(), f, {2, 1, 2}, rng);
    const auto parts = indecompose(m, 100 + iter);
    Representation acc = zero_rep(m.quiver, f);
    for (const auto& p : parts) acc = direct_sum(acc, p);
    CHECK(is_isomorphic(m, acc, 5));
  }
}

TEST_CASE("orbit dimension examples") {
  const Field f = Field::prime(5);
  CHECK(orbit_dim(kron_regular(f, 1)) == 1);       // dim G = 2, End = 1
  CHECK(orbit_dim(kron_simple(f, 0)) == 0);        // point orbit
  const auto m = direct_sum(kron_simple(f, 0), kron_simple(f, 1));
  CHECK(orbit_dim(m) == 0);                        // zero maps: dim G = 2, End = 2
  CHECK(orbit_dim(kron_p1(f)) == 4);               // dim G = 5, End = 1
}

TEST_CASE("nilpotency: acyclic always, cyclic depends on the cycle product") {
  const Field f = Field::prime(5);
  CHECK(is_nilpotent(kron_p1(f)));
  const Quiver c2 = make_cyclic_quiver(2);
  Matrix one(f, 1, 1), zero(f, 1, 1);
  one.set_int(0, 0, 1);
  CHECK(is_nilpotent(make_rep(c2, f, {1, 1}, {zero, one})));
  CHECK(!is_nilpotent(make_rep(c2, f, {1, 1}, {one, one})));
}

TEST_CASE("stable subspaces restrict and quotient with additive dims") {
  Rng rng(kDefaultSeed ^ 0x18);
  const Field f = Field::prime(3);
  for (int iter = 0; iter < 10; ++iter) {
    const auto m = random_rep(make_a2_path(), f, {2, 2, 2}, rng);
    const auto s = random_stable_subspace(m, rng);
    REQUIRE(is_stable_subspace(m, s));
    const auto sub = restrict_to(m, s);
    const auto quot = quotient_by(m, s);
    CHECK(dim_add(sub.dims, quot.dims) == m.dims);
    if (!sub.is_zero()) CHECK(hom_dim(sub, sub) >= 1);
    sub.validate();
    quot.validate();
  }
}
