#pragma once

#include <map>

#include "affq/rep.hpp"

namespace affq {

inline constexpr std::int64_t kDefaultHallCap = 10'000'000;

/* Integer Laurent polynomials in one variable v. */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exp);
  static LaurentPoly one() { return monomial(1, 0); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  std::int64_t coeff(int exp) const;
  std::int64_t eval_at_one() const;
  bool is_zero() const { return c_.empty(); }
  /* invariant under v <-> v^{-1} */
  bool is_symmetric() const;
  const std::map<int, std::int64_t>& terms() const { return c_; }
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> c_;  // exponent -> nonzero coefficient
  void trim();
};

/* [n] = (v^n - v^{-n}) / (v - v^{-1}) = v^{n-1} + v^{n-3} + ... + v^{1-n}. */
LaurentPoly q_integer(int n);
/* Balanced Gaussian binomial [n choose m]; specializes at v = 1 to the
   ordinary binomial.  Requires 0 <= m <= n. */
LaurentPoly gaussian(int n, int m);

/* a + b sqrt(q), exact.  Mixed-q arithmetic is an error. */
struct QuadraticScalar {
  Rat a;
  Rat b;
  std::int64_t q = 2;

  static QuadraticScalar from_int(std::int64_t v, std::int64_t q);
  /* sqrt(q)^k for any integer k, negative allowed. */
  static QuadraticScalar sqrt_pow(std::int64_t q, std::int64_t k);

  QuadraticScalar operator+(const QuadraticScalar& o) const;
  QuadraticScalar operator-(const QuadraticScalar& o) const;
  QuadraticScalar operator*(const QuadraticScalar& o) const;
  QuadraticScalar operator-() const;
  bool operator==(const QuadraticScalar& o) const;
  bool is_zero() const { return a == 0 && b == 0; }
  std::string to_string() const;
};

QuadraticScalar eval_at_sqrt(const LaurentPoly& p, std::int64_t q);

/* m(a, b) = sum_i a_i b_i + sum_w a_{t(w)} b_{h(w)}. */
std::int64_t twist_exponent(const Quiver& q, const DimVec& a, const DimVec& b);

/* Number of subrepresentations W' of total with W' isomorphic to sub and
   total/W' isomorphic to top, counted by enumerating all maps-stable graded
   subspaces.  Requires a prime field; throws CombinatorialExplosion when
   the graded subspace count exceeds cap. */
std::int64_t hall_number(const Representation& top, const Representation& sub,
                         const Representation& total,
                         std::int64_t cap = kDefaultHallCap,
                         std::uint64_t seed = kDefaultSeed);

struct HallTerm {
  Representation rep;
  QuadraticScalar coeff;
};

/* Finite linear combination of isomorphism classes with coefficients in
   Q(sqrt q); representatives are pairwise nonisomorphic and terms with zero
   coefficient are dropped eagerly. */
struct HallElement {
  Quiver quiver;
  Field field = Field::prime(2);
  std::vector<HallTerm> terms;
};

HallElement hall_zero(const Quiver& q, const Field& f);
/* The class of the zero module; the unit of the product. */
HallElement hall_unit(const Quiver& q, const Field& f);
/* u_{S_i}, the generator attached to a vertex. */
HallElement hall_generator(const Quiver& q, const Field& f, int vertex);

void hall_accumulate(HallElement& x, const Representation& rep,
                     const QuadraticScalar& coeff, std::uint64_t seed);
HallElement hall_add(HallElement x, const HallElement& y, std::uint64_t seed);
HallElement hall_scale(const QuadraticScalar& c, HallElement x);
bool hall_is_zero(const HallElement& x);
bool hall_equal(const HallElement& x, const HallElement& y, std::uint64_t seed);

/* u_T o u_W = sqrt(q)^{m(|W|,|T|)} sum_M g^M_{T,W} u_M, extended
   bilinearly.  Candidate middle terms come from enumerating all extension
   cocycles of Ext1(T, W), deduplicated up to isomorphism.  The twist order
   (sub, quotient) is forced by the quantum Serre relations. */
HallElement hall_product(const HallElement& x, const HallElement& y,
                         std::uint64_t seed = kDefaultSeed,
                         std::int64_t cap = kDefaultHallCap);

/* Evaluates sum_{p=0}^{1-c_ij} (-1)^p [1-c_ij choose p] F_i^p F_j F_i^{1-c_ij-p}
   in the twisted Hall algebra over F_prime and reports whether it vanishes
   exactly. */
bool serre_check(const Quiver& q, int i, int j, std::int64_t prime,
                 std::uint64_t seed = kDefaultSeed,
                 std::int64_t cap = kDefaultHallCap);

}  // namespace affq
