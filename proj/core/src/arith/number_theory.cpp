#include "lieprop/arith/number_theory.hpp"

#include <algorithm>
#include <tuple>

#include "lieprop/errors.hpp"

namespace lieprop {

namespace {

bool probably_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const mpz_class& x) -> mpz_class { return (x * x + c) % n; };
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& primes) {
  if (n == 1) return;
  if (probably_prime(n)) {
    primes.push_back(n);
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  if (n == 0) throw DivisionByZero();
  mpz_class m = abs(n);
  std::vector<mpz_class> primes;
  for (unsigned long p = 2; p < 1000 && p * p <= m; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> primitive_integer_coeffs(const UPoly& p) {
  if (!p.field().is_rational()) throw FieldMismatch("integer coefficients need a rational polynomial");
  mpz_class den = 1;
  for (const Scalar& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const Scalar& c : p.coeffs()) {
    mpz_class v = c.rational().get_num() * (den / c.rational().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content == 0) return out;
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

std::vector<mpq_class> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw DivisionByZero();
  std::vector<mpq_class> roots;
  std::size_t low = p.low_order();
  if (low > 0) roots.emplace_back(0);
  std::vector<mpz_class> c = primitive_integer_coeffs(p);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return roots;

  std::vector<mpq_class> candidates;
  const auto nums = divisors(c.front());
  const auto dens = divisors(c.back());
  for (const auto& u : nums) {
    for (const auto& v : dens) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      candidates.emplace_back(u, v);
      candidates.emplace_back(-u, v);
    }
  }
  auto key = [](const mpq_class& q) {
    mpz_class h = std::max<mpz_class>(abs(q.get_num()), q.get_den());
    return std::make_tuple(h, mpq_class(abs(q)), q < 0);
  };
  std::sort(candidates.begin(), candidates.end(),
            [&](const mpq_class& a, const mpq_class& b) { return key(a) < key(b); });
  for (const auto& q : candidates) {
    // Horner over the integer coefficients.
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + c[i];
    if (acc == 0) roots.push_back(q);
  }
  std::stable_sort(roots.begin(), roots.end(),
                   [&](const mpq_class& a, const mpq_class& b) { return key(a) < key(b); });
  return roots;
}

}  // namespace lieprop
