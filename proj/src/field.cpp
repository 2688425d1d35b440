#include "field.hpp"

namespace comptri {

namespace {

bool is_odd_prime(uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::fp(uint32_t p) {
  if (!is_odd_prime(p))
    throw Error::usage("field characteristic must be an odd prime, got " +
                       std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return fp(static_cast<uint32_t>(std::stoul(s.substr(3))));
    } catch (const std::logic_error&) {
      throw Error::usage("bad field spec '" + s + "'");
    }
  }
  throw Error::usage("bad field spec '" + s + "' (expected fp:<p> or q)");
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.p_ = f.p();
  return s;
}

Scalar Scalar::one(const Field& f) {
  Scalar s;
  s.p_ = f.p();
  if (f.is_fp())
    s.r_ = 1;
  else
    s.q_ = 1;
  return s;
}

Scalar Scalar::of_int(const Field& f, long v) {
  Scalar s;
  s.p_ = f.p();
  if (f.is_fp()) {
    long m = v % static_cast<long>(f.p());
    if (m < 0) m += f.p();
    s.r_ = static_cast<uint32_t>(m);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Scalar::of_fp(uint32_t p, uint64_t residue) {
  Scalar s;
  s.p_ = Field::fp(p).p();
  s.r_ = static_cast<uint32_t>(residue % p);
  return s;
}

Scalar Scalar::of_mpq(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& in) {
  if (in.empty()) throw Error::usage("empty scalar");
  std::string num = in, den = "1";
  if (auto slash = in.find('/'); slash != std::string::npos) {
    num = in.substr(0, slash);
    den = in.substr(slash + 1);
  }
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0 || d == 0)
    throw Error::usage("bad scalar '" + in + "'");
  if (f.is_fp()) {
    mpz_class p(f.p());
    mpz_class nr = n % p;
    if (nr < 0) nr += p;
    mpz_class dr = d % p;
    if (dr < 0) dr += p;
    Scalar dn = of_fp(f.p(), dr.get_ui());
    if (dn.is_zero()) throw Error::usage("denominator vanishes in " + f.str());
    return of_fp(f.p(), nr.get_ui()) / dn;
  }
  return of_mpq(mpq_class(n, d));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = static_cast<uint32_t>((static_cast<uint64_t>(r_) + o.r_) % p_);
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = static_cast<uint32_t>((static_cast<uint64_t>(r_) + p_ - o.r_) % p_);
  else
    s.q_ = q_ - o.q_;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = static_cast<uint32_t>(static_cast<uint64_t>(r_) * o.r_ % p_);
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error::math("DivisionByZero", "inverting zero");
  Scalar s;
  s.p_ = p_;
  if (p_)
    s.r_ = static_cast<uint32_t>(mod_pow(r_, p_ - 2, p_));
  else
    s.q_ = 1 / q_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return p_ ? r_ == o.r_ : q_ == o.q_;
}

bool Scalar::is_square() const {
  if (is_zero()) return true;
  if (p_) return mod_pow(r_, (p_ - 1) / 2, p_) == 1;
  return q_ > 0 && mpz_perfect_square_p(q_.get_num_mpz_t()) &&
         mpz_perfect_square_p(q_.get_den_mpz_t());
}

std::optional<Scalar> Scalar::sqrt() const {
  if (is_zero()) return zero(field());
  if (p_) {
    // Desk-scale primes: a direct scan keeps the root deterministic.
    for (uint64_t t = 1; t <= (p_ - 1) / 2 + 1; ++t)
      if (t * t % p_ == r_) return of_fp(p_, t);
    return std::nullopt;
  }
  if (!is_square()) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), q_.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q_.get_den_mpz_t());
  return of_mpq(mpq_class(rn, rd));
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace comptri
