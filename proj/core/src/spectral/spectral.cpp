#include "lieprop/spectral/spectral.hpp"

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/arith/height_order.hpp"
#include "lieprop/arith/linalg.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/quat/quaternion.hpp"

namespace lieprop {

namespace {

void require_rationals(const LieAlgebra& L) {
  if (!L.field().is_rational()) throw PositiveCharacteristic();
}

// Column space of m.
Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

// Coordinates w.r.t. the basis of s, pushed back into the ambient space.
Vec lift(const Subspace& s, const Vec& coords) {
  Vec out = zero_vec(s.ambient_dim(), s.field());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out = out + coords[k] * s.vector(k);
  return out;
}

TriState lifted(TriState t, const Subspace& s) {
  for (auto& w : t.witness) w = lift(s, w);
  return t;
}

bool non_semisimple(const LieAlgebra& L, const Vec& x) { return !minpoly(L.ad(x)).squarefree; }

TriState search_non_semisimple(const LieAlgebra& L, const SearchBudget& budget) {
  SearchResult r = search_elements(L, budget, [&](const Vec& x) { return non_semisimple(L, x); });
  if (r.found) {
    TriState t = TriState::no("search", {*r.found});
    t.examined = r.examined;
    return t.with("minpoly", minpoly(L.ad(*r.found)).poly.str());
  }
  return TriState::unknown("search", r.examined).with("max_height", std::to_string(budget.max_height));
}

std::string scalar_str(const mpq_class& q) { return Scalar(q).str(); }

// Anisotropy of a semisimple algebra, witnesses in its own coordinates.
TriState semisimple_anisotropy(const LieAlgebra& A, const SearchBudget& budget) {
  TriState simple = simplicity_status(A);
  if (simple.is_false()) {
    const Subspace ideal = Subspace::span(simple.witness, A.dim(), A.field());
    const Subspace other = centralizer(A, ideal);
    TriState first = lifted(semisimple_anisotropy(restrict_to(A, ideal), budget), ideal);
    if (first.is_false()) return first.with("summand", "1");
    TriState second = lifted(semisimple_anisotropy(restrict_to(A, other), budget), other);
    if (second.is_false()) return second.with("summand", "2");
    TriState t;
    t.verdict = conjunction(first.verdict, second.verdict);
    t.method = "direct-sum";
    t.examined = first.examined + second.examined;
    t.with("summand_dims", std::to_string(ideal.dim()) + "+" + std::to_string(other.dim()));
    t.with("summand_1", std::string(to_string(first.verdict)) + " by " + first.method);
    t.with("summand_2", std::string(to_string(second.verdict)) + " by " + second.method);
    return t;
  }
  if (simple.is_true() && A.dim() == 3) {
    Diagonalization diag = diagonalize_symmetric(killing_gram(A));
    const mpq_class d0 = diag.diagonal[0].rational(), d1 = diag.diagonal[1].rational(),
                    d2 = diag.diagonal[2].rational();
    DivisionCertificate cert = ternary_certificate(d0, d1, d2);
    auto annotate = [&](TriState t) {
      t.with("killing_diagonal", scalar_str(d0) + "," + scalar_str(d1) + "," + scalar_str(d2));
      t.with("hilbert_pair", scalar_str(-d0 * d1) + "," + scalar_str(-d0 * d2));
      t.with("ramified", cert.ramified_str());
      return t;
    };
    if (cert.division) return annotate(TriState::yes("hilbert"));
    TriState found = search_non_semisimple(A, budget);
    if (found.is_false()) return annotate(found);
    if (auto v = isotropic_vector(d0, d1, d2)) {
      Vec w = zero_vec(3, A.field());
      for (std::size_t k = 0; k < 3; ++k) w = w + Scalar(mpq_class((*v)[k])) * diag.basis.row(k);
      return annotate(TriState::no("conic", {w}));
    }
    return annotate(TriState::no("hilbert", {}));
  }
  return search_non_semisimple(A, budget);
}

}  // namespace

std::size_t fitting0_dim(const LieAlgebra& L, const Vec& x) { return charpoly(L.ad(x)).low_order(); }

ElementReport element_report(const LieAlgebra& L, const Vec& x, std::size_t algebra_rank) {
  ElementReport rep;
  const Mat ad = L.ad(x);
  rep.charpoly = charpoly(ad);
  MinimalPolynomial mp = minpoly(ad);
  rep.minpoly = mp.poly;
  rep.semisimple = mp.squarefree;
  rep.fitting0_dim = rep.charpoly.low_order();
  rep.nilpotent = rep.fitting0_dim == L.dim();
  rep.rank = algebra_rank;
  rep.regular = rep.fitting0_dim == algebra_rank;
  return rep;
}

ElementReport element_report(const LieAlgebra& L, const Vec& x) {
  return element_report(L, x, rank(L).rank);
}

FittingComponents fitting(const LieAlgebra& L, const std::vector<Vec>& generators) {
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  if (generators.empty()) return {Subspace::whole(n, f), Subspace(n, f)};
  std::vector<Mat> ads, powers;
  for (const auto& g : generators) {
    ads.push_back(L.ad(g));
    powers.push_back(ads.back().pow(n));
  }
  if (generators.size() == 1) {
    return {Subspace::row_space(kernel(powers[0])), image(powers[0])};
  }
  Subspace w = Subspace::whole(n, f);
  Subspace one(n, f);
  for (const auto& p : powers) {
    w = intersect(w, Subspace::row_space(kernel(p)));
    one = one + image(p);
  }
  // Shrink to the largest subspace stable under every ad g.
  for (;;) {
    if (w.is_zero()) break;
    const Mat basis_t = w.basis().transpose();
    const Mat ann = kernel(w.basis());
    if (ann.rows() == 0) break;
    Mat sys = ann * ads[0] * basis_t;
    for (std::size_t k = 1; k < ads.size(); ++k) sys = stack(sys, ann * ads[k] * basis_t);
    Mat coeffs = kernel(sys);
    if (coeffs.rows() == w.dim()) break;
    std::vector<Vec> kept;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) kept.push_back(basis_t.apply(coeffs.row(r)));
    w = Subspace::span(kept, n, f);
  }
  return {w, one};
}

RankCertificate rank(const LieAlgebra& L, std::size_t bound) {
  const std::size_t n = L.dim();
  const std::size_t limit = std::min<std::size_t>(bound, MPoly::kMaxVars - 1);
  if (n > limit) throw DimensionBudgetExceeded(n, limit);
  const FieldSpec f = L.field();
  RankCertificate cert;
  if (n == 0) {
    cert.coefficient = MPoly::constant(0, Scalar::one(f));
    cert.coefficients = {cert.coefficient};
    cert.vanished_below = true;
    return cert;
  }
  std::vector<MPoly> entries(n * n, MPoly(n, f));
  for (std::size_t i = 0; i < n; ++i) {
    const MPoly t = MPoly::variable(n, i, f);
    const Mat& ad = L.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!ad(r, c).is_zero()) entries[r * n + c] += ad(r, c) * t;
  }
  cert.coefficients = charpoly(entries, n);
  while (cert.coefficients[cert.rank].is_zero()) ++cert.rank;
  cert.coefficient = cert.coefficients[cert.rank];
  cert.vanished_below = true;
  HeightOrder order(n, 10);
  std::vector<long> point;
  for (std::size_t tries = 0; tries < 10000 && order.next(point); ++tries) {
    Vec p = int_vec(point, f);
    if (!cert.coefficient.eval(p).is_zero()) {
      cert.witness_point = std::move(p);
      break;
    }
  }
  return cert;
}

Subspace cartan_from_regular(const LieAlgebra& L, const Vec& x) {
  ElementReport rep = element_report(L, x);
  if (!rep.regular) throw NotRegular();
  Subspace h = fitting(L, {x}).null;
  if (!is_subalgebra(L, h) || !series(L, h).nilpotent || fitting(L, h.vectors()).null != h) {
    throw Error("Fitting null component of a regular element failed the Cartan check");
  }
  return h;
}

SearchResult search_elements(const LieAlgebra& L, const SearchBudget& budget,
                             const std::function<bool(const Vec&)>& pred) {
  SearchResult out;
  HeightOrder order(L.dim(), budget.max_height);
  std::vector<long> raw;
  while (out.examined < budget.max_candidates && order.next(raw)) {
    ++out.examined;
    Vec x = int_vec(raw, L.field());
    if (pred(x)) {
      out.found = std::move(x);
      break;
    }
  }
  return out;
}

TriState anisotropy_status(const LieAlgebra& L, const SearchBudget& budget) {
  require_rationals(L);
  if (L.is_abelian()) return TriState::yes("abelian");
  KillingReport k = killing(L);
  if (!k.reductive) {
    const Subspace d = series(L, k.radical).last_nonzero_derived;
    for (const Vec& x : d.vectors()) {
      if (!k.center.contains(x)) {
        return TriState::no("radical", {x})
            .with("reason", "noncentral element of an abelian ideal, (ad x)^2 = 0")
            .with("radical_dim", std::to_string(k.radical.dim()));
      }
    }
    return search_non_semisimple(L, budget);
  }
  // Reductive: L = center ⊕ [L,L] and ad x only sees the semisimple part.
  const Subspace s = derived_algebra(L);
  TriState t = lifted(semisimple_anisotropy(restrict_to(L, s), budget), s);
  if (k.center.dim() > 0) t.with("center_dim", std::to_string(k.center.dim()));
  return t;
}

TriState regularity_status(const LieAlgebra& L, const SearchBudget& budget) {
  require_rationals(L);
  const SeriesReport ser = series(L);
  if (ser.nilpotent) return TriState::yes("nilpotent");
  const Subspace rad = radical(L);
  if (!rad.is_zero()) {
    // Any nonzero x in an abelian ideal has (ad x)² = 0, hence fitting0 = n,
    // while rk L < n for a non-nilpotent L.
    const Subspace d = series(L, rad).last_nonzero_derived;
    return TriState::no("radical", {d.vector(0)})
        .with("reason", "element of an abelian ideal, (ad x)^2 = 0")
        .with("fitting0_dim", std::to_string(L.dim()));
  }
  TriState simple = simplicity_status(L);
  if (simple.is_false()) {
    return TriState::no("ideal", {simple.witness.front()})
        .with("reason", "element of a proper ideal of a semisimple algebra")
        .with("ideal_dim", std::to_string(simple.witness.size()));
  }
  if (simple.is_true() && L.dim() == 3) {
    TriState t = anisotropy_status(L, budget);
    t.method = "dim3-" + t.method;
    return t;
  }
  if (L.dim() <= kDefaultRankBound) {
    const std::size_t r = rank(L).rank;
    SearchResult found = search_elements(L, budget, [&](const Vec& x) { return fitting0_dim(L, x) > r; });
    if (found.found) {
      TriState t = TriState::no("search", {*found.found});
      t.examined = found.examined;
      return t.with("rank", std::to_string(r)).with("fitting0_dim", std::to_string(fitting0_dim(L, *found.found)));
    }
    return TriState::unknown("search", found.examined).with("rank", std::to_string(r));
  }
  // No symbolic rank: x is non-regular as soon as some sampled y has a
  // smaller Fitting null component, because rk L ≤ fitting0(y).
  std::vector<std::pair<Vec, std::size_t>> seen;
  std::size_t least = L.dim() + 1;
  SearchResult scan = search_elements(L, budget, [&](const Vec& x) {
    std::size_t d = fitting0_dim(L, x);
    seen.emplace_back(x, d);
    least = std::min(least, d);
    return false;
  });
  for (const auto& [x, d] : seen) {
    if (d > least) {
      TriState t = TriState::no("sample-minimum", {x});
      t.examined = scan.examined;
      return t.with("fitting0_dim", std::to_string(d)).with("sample_minimum", std::to_string(least));
    }
  }
  return TriState::unknown("sample-minimum", scan.examined);
}

}  // namespace lieprop
