#include "affq/field.hpp"

namespace affq {

namespace {

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2 || p > (1ll << 31)) throw ParseError("field characteristic out of range: " + std::to_string(p));
  if (!is_prime_i64(p)) throw ParseError("field characteristic not prime: " + std::to_string(p));
  return Field(Kind::prime, p);
}

std::string Field::to_string() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid; a nonzero mod p
  std::int64_t t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw InternalError("mod_inv of non-unit");
  return mod_reduce(t, p);
}

std::string rat_to_string(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string scalar_to_string(const Field& f, const Scalar& s) {
  if (f.is_prime()) return std::to_string(std::get<std::int64_t>(s));
  return rat_to_string(std::get<Rat>(s));
}

Scalar s_zero(const Field& f) { return s_from_int(f, 0); }
Scalar s_one(const Field& f) { return s_from_int(f, 1); }

Scalar s_from_int(const Field& f, std::int64_t v) {
  if (f.is_prime()) return mod_reduce(v, f.p());
  return Rat(v);
}

bool s_is_zero(const Field& f, const Scalar& a) {
  if (f.is_prime()) return std::get<std::int64_t>(a) == 0;
  return std::get<Rat>(a) == 0;
}

bool s_eq(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_prime()) return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
  return std::get<Rat>(a) == std::get<Rat>(b);
}

Scalar s_add(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_prime()) {
    std::int64_t s = std::get<std::int64_t>(a) + std::get<std::int64_t>(b);
    return s >= f.p() ? s - f.p() : s;
  }
  return std::get<Rat>(a) + std::get<Rat>(b);
}

Scalar s_sub(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_prime()) {
    std::int64_t s = std::get<std::int64_t>(a) - std::get<std::int64_t>(b);
    return s < 0 ? s + f.p() : s;
  }
  return std::get<Rat>(a) - std::get<Rat>(b);
}

Scalar s_mul(const Field& f, const Scalar& a, const Scalar& b) {
  if (f.is_prime()) return std::get<std::int64_t>(a) * std::get<std::int64_t>(b) % f.p();
  return std::get<Rat>(a) * std::get<Rat>(b);
}

Scalar s_neg(const Field& f, const Scalar& a) {
  if (f.is_prime()) {
    const std::int64_t v = std::get<std::int64_t>(a);
    return v == 0 ? v : f.p() - v;
  }
  return -std::get<Rat>(a);
}

Scalar s_inv(const Field& f, const Scalar& a) {
  if (f.is_prime()) return mod_inv(std::get<std::int64_t>(a), f.p());
  const Rat& r = std::get<Rat>(a);
  if (r == 0) throw InternalError("inverse of zero");
  return Rat(1) / r;
}

}  // namespace affq
