#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "affq/errors.hpp"

namespace affq {

/* Arbitrary-precision rational, always lowest terms, positive denominator. */
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  return Rat(num) / Rat(den);
}

/* "a/b" with positive b, "a" when b == 1. */
std::string rat_to_string(const Rat& r);

/* Accepts "a", "a/b", optional leading '-'. */
Rat rat_from_string(const std::string& s);

/* Coefficient field: F_p for a prime p < 2^31, or the rationals. */
class Field {
 public:
  enum class Kind { prime, rational };

  static Field prime(std::int64_t p);
  static Field rational() { return Field(Kind::rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  std::int64_t p() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/* A field element: int64 in [0,p) for F_p, Rat for the rationals.  Matrices
   store elements natively; this variant is the exchange type at the API
   boundary (JSON, element access). */
using Scalar = std::variant<std::int64_t, Rat>;

std::int64_t mod_reduce(std::int64_t v, std::int64_t p);
std::int64_t mod_inv(std::int64_t a, std::int64_t p);

std::string scalar_to_string(const Field& f, const Scalar& s);

/* Runtime-dispatched scalar arithmetic; inputs must belong to f. */
Scalar s_zero(const Field& f);
Scalar s_one(const Field& f);
Scalar s_from_int(const Field& f, std::int64_t v);
bool s_is_zero(const Field& f, const Scalar& a);
bool s_eq(const Field& f, const Scalar& a, const Scalar& b);
Scalar s_add(const Field& f, const Scalar& a, const Scalar& b);
Scalar s_sub(const Field& f, const Scalar& a, const Scalar& b);
Scalar s_mul(const Field& f, const Scalar& a, const Scalar& b);
Scalar s_neg(const Field& f, const Scalar& a);
Scalar s_inv(const Field& f, const Scalar& a);

}  // namespace affq
