#include "lieprop/arith/factor.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lieprop/arith/number_theory.hpp"
#include "lieprop/errors.hpp"

namespace lieprop {

namespace {

UPoly one_poly(FieldSpec f) { return UPoly::constant(Scalar::one(f)); }

// Root of a monic linear polynomial x + c over F_p.
std::uint32_t linear_root(const UPoly& g) {
  const std::uint32_t c = g.coeffs()[0].residue();
  return c == 0 ? 0 : g.field().characteristic() - c;
}

bool factor_order(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  if (a.poly.degree() == 1 && !a.poly.field().is_rational()) {
    return linear_root(a.poly) < linear_root(b.poly);
  }
  if (a.poly != b.poly) return canonical_less(a.poly, b.poly);
  return a.multiplicity < b.multiplicity;
}

// Squarefree decomposition over F_p: pairs (squarefree monic, multiplicity).
std::vector<Factor> squarefree_fp(const UPoly& f) {
  const FieldSpec field = f.field();
  const std::uint32_t p = field.characteristic();
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power; over F_p the p-th root just thins the exponents.
    Vec root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& [g, e] : squarefree_fp(UPoly(root, field))) out.push_back({g, e * p});
  }
  return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<UPoly, unsigned>> distinct_degree(UPoly f) {
  const FieldSpec field = f.field();
  const mpz_class p = field.characteristic();
  std::vector<std::pair<UPoly, unsigned>> out;
  const UPoly x = UPoly::x(field);
  UPoly h = x % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = powmod(h, p, f);
    UPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Splits a product of distinct irreducibles of degree d (Cantor-Zassenhaus).
void equal_degree(const UPoly& g, unsigned d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const FieldSpec field = g.field();
  const std::uint32_t p = field.characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  mpz_class exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
  exponent = (exponent - 1) / 2;
  for (;;) {
    Vec r;
    for (int i = 0; i < g.degree(); ++i) r.emplace_back(static_cast<long>(coeff(rng)), field);
    UPoly a(r, field);
    if (a.degree() < 1) continue;
    UPoly b(field);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      UPoly t = a % g;
      b = t;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % g;
        b += t;
      }
    } else {
      b = powmod(a, exponent, g) - one_poly(field);
    }
    UPoly s = gcd(b, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(g / s, d, rng, out);
      return;
    }
  }
}

// Possible degrees of proper factors given a modular factor-degree list.
std::set<unsigned> subset_degrees(const std::vector<unsigned>& degrees, unsigned n) {
  std::set<unsigned> sums{0};
  for (unsigned d : degrees) {
    std::set<unsigned> next = sums;
    for (unsigned s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<unsigned> out;
  for (unsigned s : sums)
    if (s > 0 && s < n) out.insert(s);
  return out;
}

UPoly from_integers(const std::vector<mpz_class>& c, FieldSpec field) {
  Vec v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x, field);
  return UPoly(v, field);
}

// Smallest-degree proper factor over Q by the big-prime subset method, or
// nullopt when none exists. Returns false in `decided` if no usable prime fits.
std::optional<UPoly> lift_search(const std::vector<mpz_class>& c, bool& decided, std::uint32_t& prime) {
  decided = false;
  const unsigned n = static_cast<unsigned>(c.size() - 1);
  mpz_class norm2 = 0;
  for (const auto& x : c) norm2 += x * x;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, n / 2);
  const mpz_class lc = abs(c.back());
  const mpz_class bound = 2 * lc * binom * norm;
  if (bound >= mpz_class(1UL << 31)) return std::nullopt;

  mpz_class q = bound;
  for (;;) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (q >= mpz_class(1UL << 31)) return std::nullopt;
    if (mpz_divisible_p(lc.get_mpz_t(), q.get_mpz_t())) continue;
    FieldSpec fp = FieldSpec::prime(q.get_ui());
    UPoly red = from_integers(c, fp);
    if (is_squarefree(red)) break;
  }
  prime = static_cast<std::uint32_t>(q.get_ui());
  const FieldSpec fp = FieldSpec::prime(prime);
  std::vector<Factor> mod = factor_fp(from_integers(c, fp));
  decided = true;
  const std::size_t r = mod.size();
  if (r <= 1) return std::nullopt;

  const UPoly f = from_integers(c, FieldSpec::rationals());
  struct Candidate {
    unsigned degree;
    unsigned long mask;
  };
  std::vector<Candidate> subsets;
  for (unsigned long mask = 1; mask + 1 < (1UL << r); ++mask) {
    unsigned deg = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) deg += static_cast<unsigned>(mod[i].poly.degree());
    if (2 * deg <= n) subsets.push_back({deg, mask});
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  const mpz_class half = q / 2;
  for (const auto& cand : subsets) {
    UPoly prod = UPoly::constant(Scalar(c.back(), fp));
    for (std::size_t i = 0; i < r; ++i)
      if (cand.mask >> i & 1) prod = prod * mod[i].poly;
    std::vector<mpz_class> lifted;
    for (const Scalar& s : prod.coeffs()) {
      mpz_class v = s.residue();
      if (v > half) v -= q;
      lifted.push_back(v);
    }
    UPoly h = from_integers(lifted, FieldSpec::rationals());
    if (h.degree() < 1) continue;
    if (divides(h, f)) return h.monic();
  }
  return std::nullopt;
}

Irreducibility irreducibility_fp(const UPoly& f) {
  std::vector<Factor> fs = factor_fp(f);
  Irreducibility out;
  out.method = "finite-field";
  out.prime = f.field().characteristic();
  if (fs.size() == 1 && fs[0].multiplicity == 1) {
    out.verdict = Verdict::True;
  } else {
    out.verdict = Verdict::False;
    out.factor = fs.front().poly;
  }
  return out;
}

Irreducibility irreducibility_q(const UPoly& f, const IrreducibilityOptions& opts) {
  Irreducibility out;
  const unsigned n = static_cast<unsigned>(f.degree());
  if (n == 1) {
    out.verdict = Verdict::True;
    out.method = "degree-one";
    return out;
  }
  UPoly g = gcd(f, f.derivative());
  if (g.degree() > 0) {
    out.verdict = Verdict::False;
    out.method = "repeated-factor";
    out.factor = g;
    return out;
  }
  auto roots = rational_roots(f);
  if (!roots.empty()) {
    out.verdict = Verdict::False;
    out.method = "rational-root";
    out.factor = UPoly::linear_root(Scalar(roots.front()));
    return out;
  }

  const std::vector<mpz_class> c = primitive_integer_coeffs(f);
  std::set<unsigned> possible;
  for (unsigned d = 1; d < n; ++d) possible.insert(d);
  mpz_class q = 1;
  for (unsigned tried = 0; tried < opts.max_primes;) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (mpz_divisible_p(c.back().get_mpz_t(), q.get_mpz_t())) continue;
    const auto p = static_cast<std::uint32_t>(q.get_ui());
    const FieldSpec fp = FieldSpec::prime(p);
    UPoly red = from_integers(c, fp);
    if (!is_squarefree(red)) continue;
    ++tried;
    std::vector<Factor> fs = factor_fp(red);
    if (fs.size() == 1) {
      out.verdict = Verdict::True;
      out.method = "good-prime";
      out.prime = p;
      return out;
    }
    std::vector<unsigned> degrees;
    for (const auto& fa : fs) degrees.push_back(static_cast<unsigned>(fa.poly.degree()));
    std::set<unsigned> allowed = subset_degrees(degrees, n);
    std::set<unsigned> meet;
    std::set_intersection(possible.begin(), possible.end(), allowed.begin(), allowed.end(),
                          std::inserter(meet, meet.begin()));
    if (meet.size() < possible.size()) out.primes.push_back(p);
    possible = std::move(meet);
    if (possible.empty()) {
      out.verdict = Verdict::True;
      out.method = "degree-pattern";
      return out;
    }
  }
  out.primes.clear();
  if (n <= 3) {
    out.verdict = Verdict::True;
    out.method = "low-degree";
    return out;
  }
  bool decided = false;
  std::uint32_t big = 0;
  std::optional<UPoly> h = lift_search(c, decided, big);
  if (h) {
    out.verdict = Verdict::False;
    out.method = "factor-search";
    out.factor = *h;
  } else if (decided) {
    out.verdict = Verdict::True;
    out.method = "exhaustive-lift";
    out.prime = big;
  } else {
    out.verdict = Verdict::Unknown;
    out.method = "exhausted";
  }
  return out;
}

// Splits a squarefree monic rational polynomial into irreducibles.
void split_q(const UPoly& s, const IrreducibilityOptions& opts, std::vector<UPoly>& out, bool& complete) {
  if (s.degree() < 1) return;
  Irreducibility r = irreducibility(s, opts);
  if (r.verdict == Verdict::True) {
    out.push_back(s);
  } else if (r.verdict == Verdict::False) {
    split_q(*r.factor, opts, out, complete);
    split_q((s / *r.factor).monic(), opts, out, complete);
  } else {
    out.push_back(s);
    complete = false;
  }
}

}  // namespace

UPoly reduce_mod(const UPoly& f, FieldSpec target) {
  Vec v;
  v.reserve(f.coeffs().size());
  for (const Scalar& c : f.coeffs()) v.push_back(reduce_mod(c, target));
  return UPoly(v, target);
}

std::vector<Factor> factor_fp(const UPoly& f) {
  if (f.field().is_rational()) throw FieldMismatch("factor_fp needs a prime field");
  if (f.is_zero()) throw DivisionByZero();
  std::mt19937_64 rng(0x6c696570726f70ULL);
  std::vector<Factor> out;
  for (const auto& [sq, mult] : squarefree_fp(f.monic())) {
    for (const auto& [g, d] : distinct_degree(sq)) {
      std::vector<UPoly> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({piece.monic(), mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_order);
  return out;
}

Irreducibility irreducibility(const UPoly& f, const IrreducibilityOptions& opts) {
  if (f.degree() < 1) throw ConstantPolynomial();
  return f.field().is_rational() ? irreducibility_q(f.monic(), opts) : irreducibility_fp(f);
}

unsigned Factorization::length() const {
  unsigned n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

Factorization factor(const UPoly& f, const IrreducibilityOptions& opts) {
  if (f.is_zero()) throw DivisionByZero();
  Factorization out;
  out.unit = f.lead();
  if (!f.field().is_rational()) {
    out.factors = factor_fp(f);
    return out;
  }
  // Yun's squarefree decomposition.
  UPoly monic = f.monic();
  if (monic.degree() < 1) return out;
  UPoly a = gcd(monic, monic.derivative());
  UPoly b = monic / a;
  UPoly c = monic.derivative() / a;
  UPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly ai = gcd(b, d);
    std::vector<UPoly> parts;
    split_q(ai, opts, parts, out.complete);
    for (auto& part : parts) out.factors.push_back({part, i});
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_order);
  return out;
}

}  // namespace lieprop
