#include "lieprop/quat/quaternion.hpp"

#include <algorithm>

#include "lieprop/arith/linalg.hpp"
#include "lieprop/arith/number_theory.hpp"
#include "lieprop/errors.hpp"

namespace lieprop {

namespace {

void require_nonzero(const mpq_class& a, const mpq_class& b) {
  if (a == 0 || b == 0) throw BadScalar("quaternion parameters must be nonzero");
}

// Integer in the same square class as q: num * den.
mpz_class square_class(const mpq_class& q) { return q.get_num() * q.get_den(); }

// n = p^v * u with p ∤ u.
unsigned split_valuation(mpz_class& n, const mpz_class& p) {
  unsigned v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(const mpz_class& u, const mpz_class& p) { return mpz_legendre(u.get_mpz_t(), p.get_mpz_t()); }

unsigned mod8(const mpz_class& u) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return static_cast<unsigned>(r.get_ui());
}

unsigned epsilon(const mpz_class& u) { return (mod8(u) % 4 == 1) ? 0 : 1; }
unsigned omega(const mpz_class& u) {
  const unsigned r = mod8(u);
  return (r == 1 || r == 7) ? 0 : 1;
}

bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

}  // namespace

Place Place::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) throw InvalidPlace("not a prime place: " + p.get_str());
  return Place{p};
}

std::string Place::str() const { return is_infinite() ? "inf" : p.get_str(); }

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
  return a.p < b.p;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
  require_nonzero(a, b);
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  if (v.p < 2 || mpz_probab_prime_p(v.p.get_mpz_t(), 40) == 0) throw InvalidPlace("not a prime place: " + v.p.get_str());
  mpz_class u = square_class(a), w = square_class(b);
  const unsigned alpha = split_valuation(u, v.p);
  const unsigned beta = split_valuation(w, v.p);
  if (v.p == 2) {
    const unsigned e = epsilon(u) * epsilon(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  const mpz_class half = (v.p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t())) s = -s;
  if (beta % 2 == 1) s *= legendre(u, v.p);
  if (alpha % 2 == 1) s *= legendre(w, v.p);
  return s;
}

std::vector<Place> relevant_places(const mpq_class& a, const mpq_class& b) {
  require_nonzero(a, b);
  std::vector<mpz_class> primes{2};
  for (const mpz_class& n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
    if (abs(n) == 1) continue;
    for (const auto& [p, e] : factor_integer(n)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  for (const auto& p : primes) out.push_back(Place{p});
  out.push_back(Place::infinity());
  return out;
}

std::string DivisionCertificate::ramified_str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < ramified.size(); ++i) s += (i ? "," : "") + ramified[i].str();
  return s + "}";
}

DivisionCertificate is_division(const mpq_class& a, const mpq_class& b) {
  DivisionCertificate cert;
  cert.checked = relevant_places(a, b);
  for (const auto& v : cert.checked)
    if (hilbert_symbol(a, b, v) == -1) cert.ramified.push_back(v);
  cert.division = !cert.ramified.empty();
  return cert;
}

DivisionCertificate ternary_certificate(const mpq_class& d0, const mpq_class& d1, const mpq_class& d2) {
  // <d0, d1, d2> ~ d0 <1, d0 d1, d0 d2> = d0 <1, -a, -b>, isotropic iff (a, b) splits.
  return is_division(-d0 * d1, -d0 * d2);
}

LieAlgebra pure_lie_algebra(const mpq_class& a, const mpq_class& b) {
  require_nonzero(a, b);
  const FieldSpec Q = FieldSpec::rationals();
  auto vec = [&](const mpq_class& x, const mpq_class& y, const mpq_class& z) {
    return Vec{Scalar(x), Scalar(y), Scalar(z)};
  };
  std::vector<BracketEntry> entries{
      {0, 1, vec(0, 0, 2)},
      {0, 2, vec(0, 2 * a, 0)},
      {1, 2, vec(-2 * b, 0, 0)},
  };
  return LieAlgebra::validate(3, Q, std::move(entries), {"i", "j", "k"});
}

Vec quat_multiply(const mpq_class& a, const mpq_class& b, const Vec& x, const Vec& y) {
  if (x.size() != 4 || y.size() != 4) throw DimensionMismatch("quaternions have four coordinates");
  const Scalar A(a), B(b), AB(a * b);
  // Products of basis elements (1, i, j, k) as (coefficient, index).
  // i² = a, j² = b, k² = -ab, ij = k, ji = -k, ik = a j, ki = -a j, jk = -b i, kj = b i.
  struct Term {
    Scalar c;
    std::size_t idx;
  };
  const FieldSpec Q = FieldSpec::rationals();
  const Scalar one = Scalar::one(Q);
  const Term table[4][4] = {
      {{one, 0}, {one, 1}, {one, 2}, {one, 3}},
      {{one, 1}, {A, 0}, {one, 3}, {A, 2}},
      {{one, 2}, {-one, 3}, {B, 0}, {-B, 1}},
      {{one, 3}, {-A, 2}, {B, 1}, {-AB, 0}},
  };
  Vec out = zero_vec(4, Q);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) {
      if (x[r].is_zero() || y[s].is_zero()) continue;
      out[table[r][s].idx] += x[r] * y[s] * table[r][s].c;
    }
  return out;
}

Subspace quat_centralizer(const mpq_class& a, const mpq_class& b, const Vec& x) {
  require_nonzero(a, b);
  if (x.size() != 4) throw DimensionMismatch("quaternions have four coordinates");
  if (x[1].is_zero() && x[2].is_zero() && x[3].is_zero()) throw CentralInput();
  const FieldSpec Q = FieldSpec::rationals();
  Mat sys(4, 4, Q);
  for (std::size_t s = 0; s < 4; ++s) {
    Vec e = unit_vec(4, s, Q);
    sys.set_col(s, quat_multiply(a, b, x, e) - quat_multiply(a, b, e, x));
  }
  return Subspace::row_space(kernel(sys));
}

std::optional<std::vector<mpz_class>> isotropic_vector(const mpq_class& d0, const mpq_class& d1,
                                                       const mpq_class& d2, long bound) {
  // d0 x² = -(d1 y² + d2 z²): x² must be a rational square.
  for (long h = 1; h <= bound; ++h) {
    for (long y = -h; y <= h; ++y) {
      for (long z = -h; z <= h; ++z) {
        if (std::max(std::labs(y), std::labs(z)) != h) continue;
        mpq_class rhs = -(d1 * y * y + d2 * z * z) / d0;
        if (!is_rational_square(rhs)) continue;
        mpz_class xn, xd;
        mpz_sqrt(xn.get_mpz_t(), rhs.get_num_mpz_t());
        mpz_sqrt(xd.get_mpz_t(), rhs.get_den_mpz_t());
        std::vector<mpz_class> v{xn, xd * y, xd * z};
        mpz_class g = 0;
        for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        for (auto& c : v) c /= g;
        const mpz_class& lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (lead < 0)
          for (auto& c : v) c = -c;
        return v;
      }
    }
  }
  return std::nullopt;
}

QuaternionReport certified_report(const mpq_class& a, const mpq_class& b) {
  QuaternionReport rep;
  rep.a = a;
  rep.b = b;
  rep.certificate = is_division(a, b);
  rep.algebra = pure_lie_algebra(a, b);
  if (rep.certificate.division) {
    rep.anisotropic = Verdict::True;
    rep.regular = Verdict::True;
    rep.minimal_nonabelian = Verdict::True;
    rep.depth = 1;
    return rep;
  }
  rep.isomorphic_to_sl2 = true;
  rep.anisotropic = Verdict::False;
  rep.regular = Verdict::False;
  rep.minimal_nonabelian = Verdict::False;
  rep.depth = 2;
  // The Killing form is diag(8a, 8b, -8ab); its isotropic vectors are the
  // nilpotent elements.
  if (auto v = isotropic_vector(8 * a, 8 * b, -8 * a * b)) {
    for (const auto& c : *v) rep.nilpotent_witness.emplace_back(mpq_class(c));
  }
  return rep;
}

}  // namespace lieprop
