#include "lieprop/lie/structure.hpp"

#include <algorithm>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/arith/factor.hpp"
#include "lieprop/arith/height_order.hpp"
#include "lieprop/arith/linalg.hpp"

namespace lieprop {

namespace {

Subspace zero_space(const LieAlgebra& L) { return Subspace(L.dim(), L.field()); }

// Kernel of the vertically stacked matrices, as a subspace of the source.
Subspace common_kernel(const std::vector<Mat>& blocks, std::size_t cols, FieldSpec field) {
  if (blocks.empty()) return Subspace::whole(cols, field);
  Mat all = blocks.front();
  for (std::size_t b = 1; b < blocks.size(); ++b) all = stack(all, blocks[b]);
  return Subspace::row_space(kernel(all));
}

std::vector<std::size_t> derived_dims_of(const std::vector<Subspace>& terms) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

}  // namespace

Subspace bracket_space(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    Mat ad = L.ad(a.vector(r));
    for (std::size_t s = 0; s < b.dim(); ++s) {
      Vec v = ad.apply(b.vector(s));
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  }
  return Subspace::span(out, L.dim(), L.field());
}

Subspace derived_algebra(const LieAlgebra& L) {
  std::vector<Vec> out;
  for (const auto& b : L.brackets()) out.push_back(b.value);
  return Subspace::span(out, L.dim(), L.field());
}

Subspace closure(const LieAlgebra& L, const std::vector<Vec>& generators, ClosureMode mode) {
  Subspace s = Subspace::span(generators, L.dim(), L.field());
  const Subspace whole = Subspace::whole(L.dim(), L.field());
  for (;;) {
    Subspace next = s + bracket_space(L, mode == ClosureMode::Ideal ? whole : s, s);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
  // [v, s_k] = -ad(s_k) v = 0 for each basis vector s_k.
  std::vector<Mat> blocks;
  for (std::size_t r = 0; r < s.dim(); ++r) blocks.push_back(L.ad(s.vector(r)));
  return common_kernel(blocks, L.dim(), L.field());
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::whole(L.dim(), L.field())); }

Subspace normalizer(const LieAlgebra& L, const Subspace& s) {
  // [v, s_k] ∈ S  ⇔  A · ad(s_k) v = 0 where the rows of A annihilate S.
  if (s.is_zero() || s.is_whole()) return Subspace::whole(L.dim(), L.field());
  const Mat annihilator = kernel(s.basis());
  std::vector<Mat> blocks;
  for (std::size_t r = 0; r < s.dim(); ++r) blocks.push_back(annihilator * L.ad(s.vector(r)));
  return common_kernel(blocks, L.dim(), L.field());
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) { return s.contains(bracket_space(L, s, s)); }

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  return s.contains(bracket_space(L, Subspace::whole(L.dim(), L.field()), s));
}

bool is_abelian(const LieAlgebra& L, const Subspace& s) { return bracket_space(L, s, s).is_zero(); }

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& s) {
  if (!is_subalgebra(L, s)) throw DimensionMismatch("subspace is not a subalgebra");
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < s.dim(); ++a) {
    Mat ad = L.ad(s.vector(a));
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec v = ad.apply(s.vector(b));
      if (!is_zero(v)) entries.push_back({a, b, s.coordinates(v)});
    }
  }
  std::vector<std::string> labels;
  if (L.has_custom_labels()) {
    for (std::size_t a = 0; a < s.dim(); ++a) {
      Vec v = s.vector(a);
      const std::size_t nonzero = static_cast<std::size_t>(
          std::count_if(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); }));
      if (nonzero != 1) {
        labels.clear();
        break;
      }
      labels.push_back(L.labels()[s.pivots()[a]]);
    }
  }
  return LieAlgebra::validate(s.dim(), L.field(), std::move(entries), std::move(labels));
}

SeriesReport series(const LieAlgebra& L, const Subspace& s) {
  SeriesReport rep;
  // Derived series.
  rep.derived.push_back(s);
  while (true) {
    const Subspace& last = rep.derived.back();
    if (last.is_zero()) break;
    Subspace next = bracket_space(L, last, last);
    const bool repeat = next.dim() == last.dim();
    rep.derived.push_back(std::move(next));
    if (repeat) break;
  }
  rep.derived_dims = derived_dims_of(rep.derived);
  // Lower central series.
  Subspace term = s;
  rep.lower_central_dims.push_back(term.dim());
  while (!term.is_zero()) {
    Subspace next = bracket_space(L, s, term);
    const bool repeat = next.dim() == term.dim();
    rep.lower_central_dims.push_back(next.dim());
    term = std::move(next);
    if (repeat) break;
  }
  rep.solvable = rep.derived.back().is_zero();
  rep.nilpotent = term.is_zero();
  rep.last_nonzero_derived = zero_space(L);
  for (auto it = rep.derived.rbegin(); it != rep.derived.rend(); ++it) {
    if (!it->is_zero()) {
      rep.last_nonzero_derived = *it;
      break;
    }
  }
  return rep;
}

SeriesReport series(const LieAlgebra& L) { return series(L, Subspace::whole(L.dim(), L.field())); }

Mat killing_gram(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Mat g(n, n, L.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = (L.ad_basis(i) * L.ad_basis(j)).trace();
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

Subspace radical(const LieAlgebra& L) {
  if (!L.field().is_rational()) throw RadicalUnavailableInPositiveCharacteristic();
  const Subspace d = derived_algebra(L);
  if (d.is_zero()) return Subspace::whole(L.dim(), L.field());
  return Subspace::row_space(kernel(d.basis() * killing_gram(L)));
}

KillingReport killing(const LieAlgebra& L) {
  if (!L.field().is_rational()) throw RadicalUnavailableInPositiveCharacteristic();
  KillingReport rep;
  rep.gram = killing_gram(L);
  rep.rank = rank(rep.gram);
  rep.radical = radical(L);
  rep.center = center(L);
  rep.semisimple = rep.rank == L.dim();
  rep.reductive = rep.radical == rep.center;
  return rep;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatch("direct sum of algebras over different fields");
  const std::size_t n = a.dim() + b.dim();
  std::vector<BracketEntry> entries;
  auto embed = [&](const Vec& v, std::size_t offset) {
    Vec out = zero_vec(n, a.field());
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (const auto& e : a.brackets()) entries.push_back({e.i, e.j, embed(e.value, 0)});
  for (const auto& e : b.brackets())
    entries.push_back({e.i + a.dim(), e.j + a.dim(), embed(e.value, a.dim())});
  std::vector<std::string> labels;
  if (a.has_custom_labels() || b.has_custom_labels()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  return LieAlgebra::validate(n, a.field(), std::move(entries), std::move(labels));
}

LieAlgebra semidirect_sum(const LieAlgebra& s, const std::vector<Mat>& rho) {
  if (rho.size() != s.dim()) throw DimensionMismatch("one action matrix per basis element expected");
  const FieldSpec f = s.field();
  const std::size_t m = rho.empty() ? 0 : rho.front().rows();
  for (const auto& r : rho) {
    if (!r.is_square() || r.rows() != m) throw DimensionMismatch("action matrices must be m×m");
    if (r.field() != f) throw FieldMismatch("action matrix over another field");
  }
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      Vec c = s.basis_bracket(i, j);
      Mat image(m, m, f);
      for (std::size_t k = 0; k < s.dim(); ++k)
        if (!c[k].is_zero()) image = image + c[k] * rho[k];
      if (image != commutator(rho[i], rho[j])) bad.emplace_back(i, j);
    }
  if (!bad.empty()) throw NotARepresentation(std::move(bad));

  const std::size_t k = s.dim();
  const std::size_t n = k + m;
  std::vector<BracketEntry> entries;
  for (const auto& e : s.brackets()) {
    Vec v = zero_vec(n, f);
    for (std::size_t t = 0; t < k; ++t) v[t] = e.value[t];
    entries.push_back({e.i, e.j, std::move(v)});
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      Vec v = zero_vec(n, f);
      for (std::size_t b = 0; b < m; ++b) v[k + b] = rho[i](b, a);
      if (!is_zero(v)) entries.push_back({i, k + a, std::move(v)});
    }
  std::vector<std::string> labels = s.labels();
  for (std::size_t a = 0; a < m; ++a) labels.push_back("v" + std::to_string(a));
  return LieAlgebra::validate(n, f, std::move(entries), std::move(labels));
}

LieAlgebra quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (ideal.ambient_dim() != L.dim()) throw DimensionMismatch("ideal lives in another space");
  if (!is_ideal(L, ideal)) throw NotAnIdeal();
  const std::vector<std::size_t> cols = ideal.free_columns();
  const std::size_t q = cols.size();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vec r = ideal.reduce(L.basis_bracket(cols[a], cols[b]));
      Vec v;
      for (std::size_t c : cols) v.push_back(r[c]);
      if (!is_zero(v)) entries.push_back({a, b, std::move(v)});
    }
  std::vector<std::string> labels;
  if (L.has_custom_labels())
    for (std::size_t c : cols) labels.push_back(L.labels()[c]);
  return LieAlgebra::validate(q, L.field(), std::move(entries), std::move(labels));
}

std::vector<Mat> centroid(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  // Unknown φ flattened row-major; equation (φ A - A φ)_{rc} = 0 for each ad A.
  Mat sys(n * n * n, n * n, f);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Mat& A = L.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!A(k, c).is_zero()) sys(row, r * n + k) += A(k, c);
          if (!A(r, k).is_zero()) sys(row, k * n + c) -= A(r, k);
        }
      }
  }
  Mat ker = kernel(sys);
  std::vector<Mat> out;
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    Mat phi(n, n, f);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) phi(r, c) = ker(b, r * n + c);
    out.push_back(std::move(phi));
  }
  return out;
}

TriState simplicity_status(const LieAlgebra& L) {
  if (!L.field().is_rational()) {
    return TriState::unknown("positive-characteristic", 0);
  }
  if (L.dim() == 0 || L.is_abelian()) {
    TriState t = TriState::no("abelian", Subspace::whole(L.dim(), L.field()).vectors());
    return t;
  }
  const Subspace rad = radical(L);
  if (!rad.is_zero()) {
    return TriState::no("radical", rad.vectors()).with("radical_dim", std::to_string(rad.dim()));
  }
  const std::vector<Mat> cent = centroid(L);
  const std::size_t k = cent.size();
  if (k == 1) return TriState::yes("central-simple").with("centroid_dim", "1");

  // L is semisimple, so its centroid is a product of fields; an element with
  // a split minimal polynomial exposes an ideal, a primitive element of a
  // single field proves simplicity.
  const FieldSpec f = L.field();
  HeightOrder order(k, 3);
  std::vector<long> coeffs;
  std::size_t examined = 0;
  bool inconclusive = false;
  while (examined < 400 && order.next(coeffs)) {
    ++examined;
    Mat phi(L.dim(), L.dim(), f);
    for (std::size_t b = 0; b < k; ++b)
      if (coeffs[b] != 0) phi = phi + Scalar(coeffs[b], f) * cent[b];
    MinimalPolynomial mp = minpoly(phi);
    Factorization fac = factor(mp.poly);
    if (!fac.complete) {
      inconclusive = true;
      continue;
    }
    if (fac.factors.size() == 1) {
      if (static_cast<std::size_t>(mp.poly.degree()) == k && fac.factors[0].multiplicity == 1) {
        return TriState::yes("centroid-field")
            .with("centroid_dim", std::to_string(k))
            .with("primitive_minpoly", mp.poly.str());
      }
      continue;
    }
    std::vector<Subspace> ideals;
    for (const auto& [g, mult] : fac.factors) {
      UPoly power = UPoly::constant(Scalar::one(f));
      for (unsigned e = 0; e < mult; ++e) power = power * g;
      ideals.push_back(Subspace::row_space(kernel(power.eval(phi))));
    }
    auto pivot_less = [](const Subspace& a, const Subspace& b) {
      if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
      return canonical_less(a, b);
    };
    std::sort(ideals.begin(), ideals.end(), pivot_less);
    return TriState::no("centroid-idempotent", ideals.front().vectors())
        .with("centroid_dim", std::to_string(k))
        .with("split_minpoly", mp.poly.str());
  }
  return TriState::unknown(inconclusive ? "factorization-inconclusive" : "centroid-search", examined)
      .with("centroid_dim", std::to_string(k));
}

}  // namespace lieprop
