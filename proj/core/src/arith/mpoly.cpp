#include "lieprop/arith/mpoly.hpp"

#include <algorithm>
#include <tuple>

#include "lieprop/errors.hpp"

namespace lieprop {

namespace {

constexpr unsigned kBits = 4;
constexpr std::uint64_t kNibble = 0xF;
// Bit 4k set for k = 1..15: a carry into any of these means a nibble overflowed.
constexpr std::uint64_t kCarryMask = 0x1111111111111110ULL;

unsigned exponent(std::uint64_t key, std::size_t i) {
  return static_cast<unsigned>((key >> (kBits * i)) & kNibble);
}

std::uint64_t multiply_keys(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a || ((a ^ b ^ s) & kCarryMask) != 0) {
    throw DimensionMismatch("monomial exponent exceeds packed range");
  }
  return s;
}

}  // namespace

MPoly::MPoly(std::size_t nvars, FieldSpec field) : nvars_(nvars), field_(field) {
  if (nvars > kMaxVars) throw DimensionMismatch("too many polynomial variables");
}

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars, c.field());
  if (!c.is_zero()) p.terms_.emplace_back(0, c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i, FieldSpec field) {
  if (i >= nvars) throw IndexOutOfRange("variable index out of range");
  MPoly p(nvars, field);
  p.terms_.emplace_back(std::uint64_t{1} << (kBits * i), Scalar::one(field));
  return p;
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [key, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += exponent(key, i);
    best = std::max(best, d);
  }
  return best;
}

std::vector<std::pair<std::vector<unsigned>, Scalar>> MPoly::terms() const {
  std::vector<std::pair<std::vector<unsigned>, Scalar>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    std::vector<unsigned> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = exponent(key, i);
    out.emplace_back(std::move(e), c);
  }
  return out;
}

Scalar MPoly::coefficient(const std::vector<unsigned>& exponents) const {
  if (exponents.size() != nvars_) throw DimensionMismatch("exponent vector length");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exponents[i] > kMaxExponent) return Scalar::zero(field_);
    key |= std::uint64_t{exponents[i]} << (kBits * i);
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  return (it != terms_.end() && it->first == key) ? it->second : Scalar::zero(field_);
}

Scalar MPoly::eval(const Vec& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point length");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [key, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = exponent(key, i); e > 0; --e) t *= point[i];
    acc += t;
  }
  return acc;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_ || field_ != o.field_) throw FieldMismatch("incompatible polynomial rings");
}

MPoly& MPoly::merge(const MPoly& o, bool subtract) {
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, subtract ? -b->second : b->second);
      ++b;
    } else {
      Scalar c = subtract ? a->second - b->second : a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator+=(const MPoly& o) { return merge(o, false); }
MPoly& MPoly::operator-=(const MPoly& o) { return merge(o, true); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.nvars_, a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) prod.emplace_back(multiply_keys(ka, kb), ca * cb);
  std::sort(prod.begin(), prod.end(),
            [](const MPoly::Term& x, const MPoly::Term& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < prod.size();) {
    std::size_t j = i + 1;
    Scalar c = std::move(prod[i].second);
    while (j < prod.size() && prod[j].first == prod[i].first) c += prod[j++].second;
    if (!c.is_zero()) out.terms_.emplace_back(prod[i].first, std::move(c));
    i = j;
  }
  return out;
}

MPoly operator*(const Scalar& c, const MPoly& a) {
  MPoly out(a.nvars_, a.field_);
  if (c.is_zero()) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  auto ts = terms();
  // Graded reverse lexicographic order, largest first.
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (unsigned e : x.first) dx += e;
    for (unsigned e : y.first) dy += e;
    if (dx != dy) return dx > dy;
    for (std::size_t i = x.first.size(); i-- > 0;)
      if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
    return false;
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    std::string coef = c.str();
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) coef = coef.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace lieprop
