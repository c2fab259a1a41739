#include "lieprop/arith/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "lieprop/errors.hpp"

namespace lieprop {

namespace {

std::uint32_t mod_p(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool is_canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  return true;
}

}  // namespace

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

Scalar::Scalar(long value, FieldSpec field) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    v_ = Residue{mod_p(mpz_class(value), field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const mpz_class& value, FieldSpec field) {
  if (field.is_rational()) {
    v_ = mpq_class(value);
  } else {
    v_ = Residue{mod_p(value, field.characteristic()), field.characteristic()};
  }
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

FieldSpec Scalar::field() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return FieldSpec(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(v_);
}

std::uint32_t Scalar::residue() const {
  if (is_rational()) throw FieldMismatch("scalar is not a residue");
  return std::get<Residue>(v_).value;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index() ||
      (!is_rational() && std::get<Residue>(v_).p != std::get<Residue>(o.v_).p)) {
    throw FieldMismatch("scalars from different fields: " + field().name() + " vs " +
                        o.field().name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{inv_mod(r->value, r->p), r->p});
  mpq_class q = 1 / std::get<mpq_class>(v_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s >= r->p ? s - r->p : s);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint32_t b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->p - b);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * std::get<Residue>(o.v_).value % r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* r = std::get_if<Residue>(&out.v_)) {
    if (r->value != 0) r->value = r->p - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.v_);
    q = -q;
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) {
    const auto& s = std::get<Scalar::Residue>(b.v_);
    return r->p == s.p && r->value == s.value;
  }
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) return r->value < std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
}

std::string Scalar::str() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
  if (text.empty()) throw BadScalar("empty scalar");
  if (!field.is_rational()) {
    if (!is_canonical_digits(text)) {
      if (text[0] == '-' || text[0] == '+') throw NonCanonicalScalar("residue must be unsigned: " + std::string(text));
      throw BadScalar("malformed residue: " + std::string(text));
    }
    if (text.size() > 1 && text[0] == '0') throw NonCanonicalScalar("leading zero: " + std::string(text));
    mpz_class v(std::string(text), 10);
    if (v >= field.characteristic()) throw NonCanonicalScalar("residue out of range: " + std::string(text));
    return Scalar(v, field);
  }
  std::string_view body = text;
  bool negative = false;
  if (body[0] == '+') throw NonCanonicalScalar("explicit plus sign: " + std::string(text));
  if (body[0] == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_canonical_digits(num) || !is_canonical_digits(den)) throw BadScalar("malformed rational: " + std::string(text));
  if ((num.size() > 1 && num[0] == '0') || (den.size() > 1 && den[0] == '0'))
    throw NonCanonicalScalar("leading zero: " + std::string(text));
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw BadScalar("zero denominator: " + std::string(text));
  if (slash != std::string_view::npos && d == 1) throw NonCanonicalScalar("denominator 1: " + std::string(text));
  if (negative && n == 0) throw NonCanonicalScalar("negative zero: " + std::string(text));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw NonCanonicalScalar("not in lowest terms: " + std::string(text));
  if (negative) n = -n;
  return Scalar(mpq_class(n, d));
}

mpz_class Scalar::height() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return mpz_class(r->value);
  const auto& q = std::get<mpq_class>(v_);
  mpz_class n = abs(q.get_num());
  return n > q.get_den() ? n : q.get_den();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Vec zero_vec(std::size_t n, FieldSpec field) { return Vec(n, Scalar::zero(field)); }

Vec unit_vec(std::size_t n, std::size_t i, FieldSpec field) {
  Vec v = zero_vec(n, field);
  v.at(i) = Scalar::one(field);
  return v;
}

Vec int_vec(const std::vector<long>& values, FieldSpec field) {
  Vec v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x, field);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

mpz_class height(const Vec& v) {
  mpz_class h = 0;
  for (const auto& x : v) {
    mpz_class hx = x.height();
    if (hx > h) h = hx;
  }
  return h;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Scalar reduce_mod(const Scalar& q, FieldSpec target) {
  if (target.is_rational()) {
    if (!q.is_rational()) throw FieldMismatch("cannot lift a residue to Q");
    return q;
  }
  if (!q.is_rational()) {
    if (q.field() != target) throw FieldMismatch("residue field differs");
    return q;
  }
  const mpq_class& r = q.rational();
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), target.characteristic())) {
    throw BadDenominator(target.characteristic());
  }
  return Scalar(r.get_num(), target) / Scalar(r.get_den(), target);
}

}  // namespace lieprop
