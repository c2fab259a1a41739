#include "lieprop/arith/upoly.hpp"

#include <algorithm>

#include "lieprop/errors.hpp"

namespace lieprop {

UPoly::UPoly(Vec coeffs, FieldSpec field) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw FieldMismatch("polynomial coefficient from another field");
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_ints(const std::vector<long>& coeffs, FieldSpec field) {
  return UPoly(int_vec(coeffs, field), field);
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(Vec{c}, c.field()); }

UPoly UPoly::monomial(const Scalar& c, std::size_t degree) {
  Vec v = zero_vec(degree + 1, c.field());
  v[degree] = c;
  return UPoly(std::move(v), c.field());
}

UPoly UPoly::x(FieldSpec field) { return monomial(Scalar::one(field), 1); }

UPoly UPoly::linear_root(const Scalar& r) {
  return UPoly(Vec{-r, Scalar::one(r.field())}, r.field());
}

Scalar UPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

const Scalar& UPoly::lead() const {
  if (c_.empty()) throw DivisionByZero();
  return c_.back();
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = c_.back().inverse();
  return inv * *this;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_);
  Vec d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(static_cast<long>(i), field_) * c_[i]);
  return UPoly(std::move(d), field_);
}

Scalar UPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Mat UPoly::eval(const Mat& m) const {
  if (!m.is_square()) throw NotSquare();
  Mat acc(m.rows(), m.cols(), field_);
  Mat id = Mat::identity(m.rows(), field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

std::size_t UPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return c_.size();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.field_ != field_) throw FieldMismatch("polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.field_ != field_) throw FieldMismatch("polynomials over different fields");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
  Vec c = zero_vec(a.c_.size() + b.c_.size() - 1, a.field_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c), a.field_);
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  Vec c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c), a.field_);
}

UPoly UPoly::operator-() const {
  Vec c = c_;
  for (auto& x : c) x = -x;
  return UPoly(std::move(c), field_);
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string coef = c.str();
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) coef = coef.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = coef == "1";
    if (k == 0) {
      out += coef;
    } else {
      if (!unit) out += coef;
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.field() != b.field()) throw FieldMismatch("polynomials over different fields");
  const FieldSpec f = a.field();
  if (a.degree() < b.degree()) return {UPoly(f), a};
  Vec r = a.coeffs();
  const Vec& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  Vec q = zero_vec(r.size() - db, f);
  Scalar inv_lead = d.back().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    Scalar factor = r[k] * inv_lead;
    q[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j)
      if (!d[j].is_zero()) r[k - db + j] -= factor * d[j];
  }
  r.resize(db);
  return {UPoly(std::move(q), f), UPoly(std::move(r), f)};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

bool divides(const UPoly& d, const UPoly& a) { return (a % d).is_zero(); }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const UPoly& a, const UPoly& b) {
  const FieldSpec f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Scalar::one(f)), s1(f);
  UPoly t0(f), t1 = UPoly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.lead().inverse();
  return {inv * r0, inv * s0, inv * t0};
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& m) {
  UPoly result = UPoly::constant(Scalar::one(base.field())) % m;
  UPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).is_constant();
}

bool canonical_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const Scalar& x = a.coeffs()[i];
    const Scalar& y = b.coeffs()[i];
    if (x != y) return canonical_less(x, y);
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

}  // namespace lieprop
