#include "lieprop/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/spectral/spectral.hpp"

namespace lieprop {

namespace {

using Row = std::vector<std::uint32_t>;
using Rows = std::vector<Row>;

void require_prime_field(FieldSpec f) {
  if (f.is_rational()) throw FieldMismatch("the oracle works over F_p only");
}

Row to_row(const Vec& v) {
  Row r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].residue();
  return r;
}

Vec to_vec(const Row& r, FieldSpec f) {
  Vec v;
  v.reserve(r.size());
  for (auto x : r) v.emplace_back(static_cast<long>(x), f);
  return v;
}

// Reduces v against RREF rows with the given pivots; true if the remainder is zero.
bool in_span(Row v, const Rows& rows, const std::vector<std::size_t>& pivots, std::uint32_t p) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::uint64_t c = v[pivots[r]];
    if (c == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = static_cast<std::uint32_t>((v[k] + (p - c) * rows[r][k]) % p);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// Visits every subspace of F_p^n as an RREF basis, by dimension, pivot set
// and free entries in lexicographic order.
void for_each_subspace(std::size_t n, std::uint32_t p,
                       const std::function<void(const Rows&, const std::vector<std::size_t>&)>& visit) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < n; ++c)
        if (choose[c]) pivots.push_back(c);
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!choose[c]) free.emplace_back(r, c);
      Rows rows(k, Row(n, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
      std::vector<std::uint32_t> digits(free.size(), 0);
      for (;;) {
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
        visit(rows, pivots);
        std::size_t f = free.size();
        while (f > 0) {
          if (++digits[f - 1] < p) break;
          digits[--f] = 0;
        }
        if (f == 0) break;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
}

// Dense structure constants mod p: table[i][j] = [e_i, e_j].
struct FastAlgebra {
  std::size_t n;
  std::uint32_t p;
  std::vector<Row> table;

  explicit FastAlgebra(const LieAlgebra& L) : n(L.dim()), p(L.field().characteristic()), table(n * n, Row(n, 0)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = to_row(L.basis_bracket(i, j));
  }

  Row bracket(const Row& x, const Row& y) const {
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        const std::uint64_t c = std::uint64_t(x[i]) * y[j] % p;
        const Row& t = table[i * n + j];
        for (std::size_t k = 0; k < n; ++k) acc[k] += c * t[k];
      }
    }
    Row out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>(acc[k] % p);
    return out;
  }
};

std::string key_of(const Subspace& s) {
  std::string key = std::to_string(s.dim()) + ":";
  for (const Vec& v : s.vectors()) key += to_string(v) + ";";
  return key;
}

}  // namespace

LieAlgebra reduce_mod_p(const LieAlgebra& L, std::uint32_t p) {
  if (!L.field().is_rational()) throw FieldMismatch("reduce_mod_p expects a rational algebra");
  const FieldSpec target = FieldSpec::prime(p);
  std::vector<BracketEntry> brackets;
  for (const BracketEntry& b : L.brackets()) {
    Vec v;
    for (const Scalar& s : b.value) v.push_back(reduce_mod(s, target));
    brackets.push_back({b.i, b.j, std::move(v)});
  }
  return LieAlgebra::validate(L.dim(), target, std::move(brackets),
                              L.has_custom_labels() ? L.labels() : std::vector<std::string>{});
}

double subspace_count(std::size_t n, std::uint32_t p) {
  // [n k]_p via the recurrence on k.
  double total = 0, binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binom;
    if (k < n) binom = binom * (std::pow(double(p), double(n - k)) - 1) / (std::pow(double(p), double(k + 1)) - 1);
  }
  return total;
}

SubalgebraEnumeration enumerate_subalgebras(const LieAlgebra& L, const OracleOptions& opts) {
  require_prime_field(L.field());
  const std::uint32_t p = L.field().characteristic();
  const std::size_t n = L.dim();
  SubalgebraEnumeration out;
  out.algebra = L;
  out.estimate = subspace_count(n, p);
  if (out.estimate > opts.subspace_guard) throw BudgetGuardExceeded(out.estimate);
  const FastAlgebra fa(L);
  out.counts_by_dim.assign(n + 1, 0);
  for_each_subspace(n, p, [&](const Rows& rows, const std::vector<std::size_t>& pivots) {
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        if (!in_span(fa.bracket(rows[a], rows[b]), rows, pivots, p)) return;
    std::vector<Vec> vs;
    for (const Row& r : rows) vs.push_back(to_vec(r, L.field()));
    out.subalgebras.push_back(Subspace::span(vs, n, L.field()));
    ++out.counts_by_dim[rows.size()];
  });
  std::stable_sort(out.subalgebras.begin(), out.subalgebras.end(),
                   [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

std::vector<std::size_t> depth_table(const SubalgebraEnumeration& e, const std::vector<std::size_t>& order) {
  const LieAlgebra& L = e.algebra;
  const std::size_t count = e.subalgebras.size();
  std::map<std::string, std::size_t> memo;
  std::function<std::size_t(std::size_t)> depth = [&](std::size_t idx) -> std::size_t {
    const Subspace& s = e.subalgebras[idx];
    const std::string key = key_of(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t d = 0;
    if (!is_abelian(L, s)) {
      std::size_t best = 0;
      for (std::size_t j = 0; j < count; ++j) {
        const Subspace& t = e.subalgebras[j];
        if (t.dim() < s.dim() && s.contains(t)) best = std::max(best, depth(j));
      }
      d = best + 1;
    }
    memo.emplace(key, d);
    return d;
  };
  std::vector<std::size_t> visit = order;
  if (visit.empty())
    for (std::size_t k = 0; k < count; ++k) visit.push_back(k);
  for (std::size_t idx : visit) depth(idx);
  std::vector<std::size_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = memo.at(key_of(e.subalgebras[k]));
  return out;
}

std::size_t depth_bruteforce(const LieAlgebra& L, const OracleOptions& opts) {
  SubalgebraEnumeration e = enumerate_subalgebras(L, opts);
  return depth_table(e).back();
}

BruteforceResult property_bruteforce(const LieAlgebra& L, Property which, const OracleOptions& opts) {
  require_prime_field(L.field());
  const std::uint32_t p = L.field().characteristic();
  const std::size_t n = L.dim();
  BruteforceResult out;
  if (which == Property::MNA) {
    SubalgebraEnumeration e = enumerate_subalgebras(L, opts);
    out.examined = e.subalgebras.size();
    if (L.is_abelian()) return out;
    for (const Subspace& s : e.subalgebras) {
      if (s.dim() < n && !is_abelian(L, s)) {
        out.witness = s.vectors();
        return out;
      }
    }
    out.holds = true;
    return out;
  }
  const double elements = std::pow(double(p), double(n));
  if (elements > opts.element_guard) throw BudgetGuardExceeded(elements);
  const std::size_t rk = which == Property::Regular ? rank(L, MPoly::kMaxVars - 1).rank : 0;
  // Projective points: the last nonzero digit position varies slowest, the
  // first nonzero entry is 1.
  Row digits(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(digits.begin(), digits.end(), 0);
    digits[lead] = 1;
    for (;;) {
      ++out.examined;
      const Vec x = to_vec(digits, L.field());
      const bool bad = which == Property::Regular ? fitting0_dim(L, x) > rk : !minpoly(L.ad(x)).squarefree;
      if (bad) {
        out.witness = {x};
        return out;
      }
      std::size_t k = lead + 1;
      while (k < n) {
        if (++digits[k] < p) break;
        digits[k++] = 0;
      }
      if (k == n) break;
    }
  }
  out.holds = true;
  return out;
}

std::size_t invariant_chain_bruteforce(const Mat& a, const OracleOptions& opts) {
  if (!a.is_square()) throw NotSquare();
  require_prime_field(a.field());
  const std::size_t m = a.rows();
  const std::uint32_t p = a.field().characteristic();
  if (subspace_count(m, p) > opts.subspace_guard) throw BudgetGuardExceeded(subspace_count(m, p));
  std::vector<Row> cols(m);
  for (std::size_t c = 0; c < m; ++c) cols[c] = to_row(a.col(c));
  auto apply = [&](const Row& v) {
    Row out(m, 0);
    for (std::size_t c = 0; c < m; ++c)
      if (v[c])
        for (std::size_t r = 0; r < m; ++r) out[r] = static_cast<std::uint32_t>((out[r] + std::uint64_t(v[c]) * cols[c][r]) % p);
    return out;
  };
  struct Inv {
    Rows rows;
    std::vector<std::size_t> pivots;
    std::size_t chain;
  };
  std::vector<Inv> invariant;
  for_each_subspace(m, p, [&](const Rows& rows, const std::vector<std::size_t>& pivots) {
    for (const Row& r : rows)
      if (!in_span(apply(r), rows, pivots, p)) return;
    std::size_t best = 0;
    bool any = rows.empty();
    for (const Inv& u : invariant) {
      if (u.rows.size() >= rows.size()) continue;
      bool inside = true;
      for (const Row& r : u.rows) inside = inside && in_span(r, rows, pivots, p);
      if (inside) {
        best = std::max(best, u.chain + 1);
        any = true;
      }
    }
    invariant.push_back({rows, pivots, any ? best : 0});
  });
  return invariant.back().chain;
}

std::vector<std::array<std::size_t, 3>> jacobi_bruteforce(std::size_t n, FieldSpec f,
                                                          const std::vector<BracketEntry>& entries) {
  std::vector<Scalar> c(n * n * n, Scalar::zero(f));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return c[(i * n + j) * n + k]; };
  for (const auto& e : entries)
    for (std::size_t k = 0; k < n; ++k) {
      at(e.i, e.j, k) = e.value[k];
      at(e.j, e.i, k) = -e.value[k];
    }
  std::vector<std::array<std::size_t, 3>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Scalar s = Scalar::zero(f);
          for (std::size_t l = 0; l < n; ++l)
            s += at(j, k, l) * at(i, l, m) + at(k, i, l) * at(j, l, m) + at(i, j, l) * at(k, l, m);
          if (!s.is_zero()) {
            bad.push_back({i, j, k});
            break;
          }
        }
  return bad;
}

}  // namespace lieprop
