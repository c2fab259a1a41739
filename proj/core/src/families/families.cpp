#include "lieprop/families/families.hpp"

#include <algorithm>
#include <cmath>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/arith/height_order.hpp"
#include "lieprop/arith/linalg.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/quat/quaternion.hpp"

namespace lieprop {

namespace {

BracketEntry entry(std::size_t i, std::size_t j, const std::vector<long>& v, FieldSpec f) {
  return {i, j, int_vec(v, f)};
}

void require_rationals(const LieAlgebra& L) {
  if (!L.field().is_rational()) throw PositiveCharacteristic();
}

// Matrix of T restricted to the T-invariant subspace W, in W's coordinates.
Mat restrict_operator(const Mat& t, const Subspace& w) {
  Mat out(w.dim(), w.dim(), w.field());
  for (std::size_t c = 0; c < w.dim(); ++c) out.set_col(c, w.coordinates(t.apply(w.vector(c))));
  return out;
}

std::vector<Vec> to_ambient(const Subspace& w, const std::vector<Vec>& coords) {
  std::vector<Vec> out;
  for (const auto& c : coords) {
    Vec v = zero_vec(w.ambient_dim(), w.field());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) v = v + c[k] * w.vector(k);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_heisenberg3(const LieAlgebra& L) {
  if (L.dim() != 3 || !series(L).nilpotent) return false;
  const Subspace d = derived_algebra(L);
  return d.dim() == 1 && d == center(L);
}

bool proper_nonabelian(const LieAlgebra& L, const Subspace& s) {
  return !s.is_zero() && s.dim() < L.dim() && !is_abelian(L, s);
}

TriState subalgebra_witness(const std::string& method, const Subspace& s) {
  return TriState::no(method, s.vectors()).with("witness_dim", std::to_string(s.dim()));
}

Vec pad(const Vec& v, std::size_t n) {
  Vec out = v;
  out.resize(n, Scalar::zero(v.empty() ? FieldSpec() : v.front().field()));
  return out;
}

Mat combine(const std::vector<Mat>& mats, const Vec& coeffs) {
  Mat out(mats.front().rows(), mats.front().cols(), mats.front().field());
  for (std::size_t k = 0; k < mats.size(); ++k)
    if (!coeffs[k].is_zero()) out = out + coeffs[k] * mats[k];
  return out;
}

// Basis vectors first, then height order, without repeats.
std::vector<Vec> sample_elements(std::size_t dim, FieldSpec f, std::size_t count) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim && out.size() < count; ++i) out.push_back(unit_vec(dim, i, f));
  HeightOrder order(dim, 3);
  std::vector<long> raw;
  while (out.size() < count && order.next(raw)) {
    // Primitive vectors with one nonzero entry are the unit vectors already listed.
    if (std::count(raw.begin(), raw.end(), 0L) + 1 == static_cast<long>(raw.size())) continue;
    out.push_back(int_vec(raw, f));
  }
  return out;
}

// First vectors of the height order, as many as keep the number of pairs
// within max_candidates.
std::vector<Vec> pair_pool(const LieAlgebra& L, const SearchBudget& budget) {
  const auto cap = static_cast<std::size_t>((1 + std::sqrt(1.0 + 8.0 * double(budget.max_candidates))) / 2);
  std::vector<Vec> pool;
  HeightOrder order(L.dim(), budget.max_height);
  std::vector<long> raw;
  while (pool.size() < cap && order.next(raw)) pool.push_back(int_vec(raw, L.field()));
  return pool;
}

struct PairSearch {
  std::optional<Subspace> found;
  std::size_t examined = 0;
};

// Closes pairs of pool vectors in order and returns the first proper closure
// that `accept` takes.
PairSearch pair_search(const LieAlgebra& L, const SearchBudget& budget,
                       const std::function<bool(const Subspace&)>& accept) {
  PairSearch out;
  const std::vector<Vec> pool = pair_pool(L, budget);
  std::vector<Subspace> seen;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (out.examined >= budget.max_candidates) return out;
      ++out.examined;
      Subspace s = closure(L, {pool[a], pool[b]}, ClosureMode::Subalgebra);
      if (s.dim() == L.dim() || s.dim() < 2) continue;
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
      seen.push_back(s);
      if (accept(s)) {
        out.found = std::move(s);
        return out;
      }
    }
  return out;
}


DivisionCertificate dim3_certificate(const LieAlgebra& L) {
  Diagonalization d = diagonalize_symmetric(killing_gram(L));
  return ternary_certificate(d.diagonal[0].rational(), d.diagonal[1].rational(), d.diagonal[2].rational());
}

// Proper, nonabelian and certified not minimal nonabelian.
bool bad_subalgebra(const LieAlgebra& L, const Subspace& s, const SearchBudget& budget) {
  if (!proper_nonabelian(L, s)) return false;
  return mna_status(restrict_to(L, s), budget).is_false();
}

TriState bad_subalgebra_search(const LieAlgebra& L, const SearchBudget& budget, const std::string& fallback) {
  PairSearch r = pair_search(L, budget, [&](const Subspace& s) { return bad_subalgebra(L, s, budget); });
  if (r.found) {
    TriState t = subalgebra_witness("search", *r.found);
    t.examined = r.examined;
    return t;
  }
  return TriState::unknown(fallback, r.examined);
}

// Levi factor when the radical R is abelian: the graph of φ: C → R over the
// unit-vector complement C that closes under the bracket.
std::optional<Subspace> levi_factor(const LieAlgebra& L, const Subspace& rad) {
  const FieldSpec f = L.field();
  const std::size_t n = L.dim(), r = rad.dim();
  std::vector<Vec> comp;
  for (std::size_t c : rad.free_columns()) comp.push_back(unit_vec(n, c, f));
  const std::size_t k = comp.size();
  std::vector<Vec> rows = comp;
  for (const Vec& v : rad.vectors()) rows.push_back(v);
  const Mat basis_t = Mat::from_rows(rows, n, f).transpose();
  std::vector<Mat> rho;
  for (const Vec& c : comp) rho.push_back(restrict_operator(L.ad(c), rad));

  const std::size_t vars = r * k;
  std::vector<Vec> eqs;
  Vec rhs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec coords = *solve(basis_t, L.bracket(comp[i], comp[j]));
      for (std::size_t l = 0; l < r; ++l) {
        Vec row = zero_vec(vars, f);
        for (std::size_t lp = 0; lp < r; ++lp) {
          row[lp * k + j] += rho[i](l, lp);
          row[lp * k + i] -= rho[j](l, lp);
        }
        for (std::size_t m = 0; m < k; ++m) row[l * k + m] -= coords[m];
        eqs.push_back(std::move(row));
        rhs.push_back(-coords[k + l]);
      }
    }
  Vec phi = zero_vec(vars, f);
  if (!eqs.empty()) {
    auto sol = solve(Mat::from_rows(eqs, vars, f), rhs);
    if (!sol) return std::nullopt;
    phi = *sol;
  }
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Vec g = comp[i];
    for (std::size_t l = 0; l < r; ++l)
      if (!phi[l * k + i].is_zero()) g = g + phi[l * k + i] * rad.vector(l);
    gens.push_back(std::move(g));
  }
  Subspace s = Subspace::span(gens, n, f);
  if (!is_subalgebra(L, s)) return std::nullopt;
  return s;
}

// Sums of the levels ker g(T)^j of the primary components of T.
std::vector<Subspace> primary_invariant_subspaces(const Mat& t, const Factorization& fac) {
  std::vector<Subspace> out;
  std::vector<std::vector<Subspace>> levels;
  for (const Factor& fc : fac.factors) {
    std::vector<Subspace> lv;
    const Mat g = fc.poly.eval(t);
    Mat power = Mat::identity(t.rows(), t.field());
    for (unsigned j = 0; j <= fc.multiplicity; ++j) {
      lv.push_back(Subspace::row_space(kernel(power)));
      power = power * g;
    }
    levels.push_back(std::move(lv));
  }
  std::vector<std::size_t> idx(levels.size(), 0);
  for (std::size_t guard = 0; guard < 512; ++guard) {
    Subspace s(t.rows(), t.field());
    for (std::size_t k = 0; k < levels.size(); ++k) s = s + levels[k][idx[k]];
    if (!s.is_zero() && !s.is_whole() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::size_t k = 0;
    while (k < levels.size() && ++idx[k] == levels[k].size()) idx[k++] = 0;
    if (k == levels.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

TriState depth2_solvable(const LieAlgebra& L, const SearchBudget& budget) {
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  const Subspace d = derived_algebra(L);
  std::vector<Vec> comp;
  for (std::size_t c : d.free_columns()) comp.push_back(unit_vec(n, c, f));
  // Hyperplane A ⊇ [L,L] spanned with all complement vectors but t; an
  // abelian choice is preferred.
  std::size_t pick = comp.size() - 1;
  for (std::size_t j = 0; j < comp.size(); ++j) {
    std::vector<Vec> rest = comp;
    rest.erase(rest.begin() + static_cast<long>(j));
    if (is_abelian(L, d + Subspace::span(rest, n, f))) {
      pick = j;
      break;
    }
  }
  const Vec t = comp[pick];
  comp.erase(comp.begin() + static_cast<long>(pick));
  const Subspace a = d + Subspace::span(comp, n, f);

  if (is_abelian(L, a)) {
    // L = Kt ⋉ A. Proper subalgebras outside A are Kt ⋉ W for invariant
    // W ⊊ A, so depth 2 means each such T|W is zero, irreducible, or a 2-dim
    // nilpotent block. That holds iff T has composition length 2, or T is
    // nilpotent on a 3-dim A.
    const Mat op = restrict_operator(L.ad(t), a);
    ChainBound cb = invariant_chain_bound(op);
    const bool nilpotent_op = op.pow(op.rows()).is_zero();
    if (cb.exact && cb.value == 2) {
      return TriState::yes("case-v").with("chain_bound", "2").with("charpoly", charpoly(op).str());
    }
    if (nilpotent_op && a.dim() == 3) {
      return TriState::yes("nilpotent-action").with("chain_bound", "3").with("reason", "every proper invariant subspace has dimension at most 2");
    }
    std::vector<Subspace> candidates;
    if (cb.factorization.complete) candidates = primary_invariant_subspaces(op, cb.factorization);
    if (nilpotent_op) {
      // im T, or a 2-dim cyclic block plus a kernel vector.
      candidates.push_back(Subspace::row_space(op.transpose()));
      const Mat ker = kernel(op);
      for (std::size_t c = 0; c < op.cols(); ++c) {
        const Vec v = op.col(c);
        if (is_zero(v)) continue;
        Vec e = zero_vec(op.cols(), f);
        e[c] = Scalar::one(f);
        Subspace block = Subspace::span({e, v}, op.rows(), f);
        for (const Vec& u : ker.row_list())
          if (!block.contains(u)) {
            candidates.push_back(block + Subspace::span({u}, op.rows(), f));
            break;
          }
      }
    }
    for (const Subspace& v : candidates) {
      if (v.is_zero() || v.is_whole()) continue;
      std::vector<Vec> gens = to_ambient(a, v.vectors());
      gens.push_back(t);
      Subspace s = Subspace::span(gens, n, f);
      if (bad_subalgebra(L, s, budget))
        return subalgebra_witness("invariant-subspace", s).with("chain_bound", std::to_string(cb.value));
    }
    return bad_subalgebra_search(L, budget, "case-v-unmatched").with("chain_bound", std::to_string(cb.value));
  }

  TriState am = solvable_mna_status(restrict_to(L, a));
  if (am.is_false()) return subalgebra_witness("ideal", a).with("reason", "codimension-one ideal is not minimal nonabelian");
  if (am.is_unknown()) return bad_subalgebra_search(L, budget, "search");

  const LieAlgebra heis = restrict_to(L, a);
  if (is_heisenberg3(heis)) {
    // Induced action of ad t on A / [A, A].
    const Vec z = derived_algebra(L).is_zero() ? Vec{} : derived_algebra(restrict_to(L, a)).vector(0);
    const Vec zl = to_ambient(a, {z}).front();
    std::vector<Vec> xy;
    for (const Vec& v : a.vectors()) {
      if (xy.size() == 2) break;
      std::vector<Vec> trial = xy;
      trial.push_back(v);
      trial.push_back(zl);
      if (Subspace::span(trial, n, f).dim() == trial.size()) xy.push_back(v);
    }
    const Mat frame = Mat::from_rows({xy[0], xy[1], zl}, n, f).transpose();
    Mat m(2, 2, f);
    for (std::size_t c = 0; c < 2; ++c) {
      const Vec coords = *solve(frame, L.bracket(t, xy[c]));
      m(0, c) = coords[0];
      m(1, c) = coords[1];
    }
    if (m.is_zero()) return TriState::yes("case-i-central-t").with("reason", "t can be chosen central");
    Irreducibility irr = irreducibility(charpoly(m));
    if (irr.verdict == Verdict::True) {
      const bool traceless = m.trace().is_zero();
      return TriState::yes(traceless ? "case-i" : "case-ii")
          .with("induced_action", m.str())
          .with("irreducibility", irr.method);
    }
    if (irr.verdict == Verdict::False) {
      const Scalar root = -irr.factor->coeff(0);
      const Mat shifted = m - root * Mat::identity(2, f);
      for (const Vec& e : kernel(shifted).row_list()) {
        const Vec w = e[0] * xy[0] + e[1] * xy[1];
        Subspace s = closure(L, {t, w, zl}, ClosureMode::Subalgebra);
        if (bad_subalgebra(L, s, budget))
          return subalgebra_witness("eigenvector", s).with("induced_action", m.str());
      }
    }
    return bad_subalgebra_search(L, budget, "case-i-unmatched");
  }
  // A = Kx ⋉ V with an irreducible action: case (v) with two-dimensional S,
  // which only admits sampled confirmation.
  return bad_subalgebra_search(L, budget, "case-v-sampled");
}

TriState depth2_nonsolvable(const LieAlgebra& L, const SearchBudget& budget) {
  const KillingReport kr = killing(L);
  if (kr.semisimple) {
    TriState simple = simplicity_status(L);
    if (simple.is_false()) {
      const Subspace ideal = Subspace::span(simple.witness, L.dim(), L.field());
      const Subspace other = centralizer(L, ideal);
      Subspace s = ideal + Subspace::span({other.vector(0)}, L.dim(), L.field());
      return subalgebra_witness("semisimple-sum", s).with("reason", "simple ideal plus a line of a complement");
    }
    if (simple.is_true() && L.dim() == 3) {
      DivisionCertificate cert = dim3_certificate(L);
      if (!cert.division) return TriState::yes("sl2").with("ramified", cert.ramified_str());
    }
    return TriState::unknown("simple", 0);
  }
  const Subspace& rad = kr.radical;
  if (is_abelian(L, rad)) {
    if (auto levi = levi_factor(L, rad)) {
      const LieAlgebra g = restrict_to(L, *levi);
      TriState gm = mna_status(g, budget);
      if (gm.is_false()) return subalgebra_witness("levi", *levi).with("reason", "Levi factor is not minimal nonabelian");
      if (gm.is_true()) {
        bool trivial = true;
        for (const Vec& s : levi->vectors())
          for (const Vec& r : rad.vectors()) trivial = trivial && is_zero(L.bracket(s, r));
        if (trivial) {
          if (rad.dim() == 1) return TriState::yes("case-iii").with("levi_dim", std::to_string(levi->dim()));
          Subspace s = *levi + Subspace::span({rad.vector(0)}, L.dim(), L.field());
          return subalgebra_witness("levi-extension", s);
        }
        if (levi->dim() == 3) {
          std::vector<Mat> rho;
          for (const Vec& s : levi->vectors()) rho.push_back(restrict_operator(L.ad(s), rad));
          std::size_t checked = 0;
          for (const Vec& c : sample_elements(3, L.field(), 200)) {
            ++checked;
            Irreducibility irr = irreducibility(charpoly(combine(rho, c)));
            if (irr.verdict == Verdict::Unknown) return TriState::unknown("case-iv", checked);
            if (irr.verdict == Verdict::False) {
              std::vector<Vec> gens = rad.vectors();
              gens.push_back(to_ambient(*levi, {c}).front());
              Subspace s = Subspace::span(gens, L.dim(), L.field());
              if (bad_subalgebra(L, s, budget)) return subalgebra_witness("reducible-action", s);
              return bad_subalgebra_search(L, budget, "case-iv");
            }
          }
          return TriState::unknown("case-iv-sampled", checked).with("grade", "true-sampled");
        }
      }
    }
  }
  return bad_subalgebra_search(L, budget, "search");
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Sl2: return "sl2";
    case Family::Heisenberg: return "heisenberg";
    case Family::Aff1: return "aff1";
    case Family::CaseI: return "case_i";
    case Family::CaseII: return "case_ii";
    case Family::CaseIII: return "case_iii";
    case Family::CaseIV: return "case_iv";
    case Family::CaseV: return "case_v";
  }
  return "?";
}

Prototypes prototypes(FieldSpec f) {
  return {LieAlgebra::validate(3, f, {entry(0, 1, {-2, 0, 0}, f), entry(0, 2, {0, 1, 0}, f), entry(1, 2, {0, 0, -2}, f)},
                               {"e", "h", "f"}),
          LieAlgebra::validate(3, f, {entry(0, 1, {0, 0, 1}, f)}, {"x", "y", "z"}),
          LieAlgebra::validate(2, f, {entry(0, 1, {0, 1}, f)}, {"t", "x"})};
}

Mat companion(const UPoly& monic) {
  if (!monic.is_monic() || monic.degree() < 1) throw ConstantPolynomial();
  const auto n = static_cast<std::size_t>(monic.degree());
  Mat m(n, n, monic.field());
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = Scalar::one(monic.field());
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -monic.coeff(i);
  return m;
}

FamilyInstance case_i_ii(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("case (i)/(ii) needs a 2x2 matrix");
  const FieldSpec f = m.field();
  const Scalar tr = m.trace();
  if (!tr.is_zero() && !tr.is_one()) throw BadTrace();

  std::vector<BracketEntry> brackets = {entry(0, 1, {0, 0, 1, 0}, f)};
  // [x,t] = -[t,x], [y,t] = -[t,y], [z,t] = -tr z.
  brackets.push_back({0, 3, {-m(0, 0), -m(1, 0), Scalar::zero(f), Scalar::zero(f)}});
  brackets.push_back({1, 3, {-m(0, 1), -m(1, 1), Scalar::zero(f), Scalar::zero(f)}});
  brackets.push_back({2, 3, {Scalar::zero(f), Scalar::zero(f), -tr, Scalar::zero(f)}});

  FamilyInstance inst;
  inst.tag = tr.is_zero() ? Family::CaseI : Family::CaseII;
  inst.params = {{"M", m.str()}};
  inst.algebra = LieAlgebra::validate(4, f, brackets, {"x", "y", "z", "t"});
  if (m.is_zero()) {
    inst.central_t = true;
    inst.validation = TriState::yes("central-t").with("reason", "M = 0: Heisenberg plus a central line");
    return inst;
  }
  const UPoly cp = charpoly(m);
  Irreducibility irr = irreducibility(cp);
  if (irr.verdict == Verdict::True) {
    inst.validation = TriState::yes("irreducible-charpoly").with("charpoly", cp.str()).with("irreducibility", irr.method);
    if (irr.prime != 0) inst.validation.with("prime", std::to_string(irr.prime));
  } else if (irr.verdict == Verdict::False) {
    const Scalar root = -irr.factor->coeff(0);
    const Vec eig = kernel(m - root * Mat::identity(2, f)).row(0);
    inst.validation = TriState::no("eigenvector", {eig}).with("charpoly", cp.str()).with("eigenvalue", root.str());
  } else {
    inst.validation = TriState::unknown("irreducible-charpoly", 0).with("charpoly", cp.str());
  }
  return inst;
}

FamilyInstance case_iii(const LieAlgebra& g, const SearchBudget& budget) {
  TriState simple = simplicity_status(g);
  if (!simple.is_true()) throw PreconditionNotCertified("g is not certified simple (" + simple.method + ")");
  TriState mna = mna_status(g, budget);
  if (!mna.is_true()) throw PreconditionNotCertified("g is not certified minimal nonabelian (" + mna.method + ")");
  FamilyInstance inst;
  inst.tag = Family::CaseIII;
  inst.params = {{"g_dim", std::to_string(g.dim())}};
  inst.algebra = direct_sum(g, LieAlgebra::abelian(1, g.field()));
  inst.validation = TriState::yes("inherited").with("simplicity", simple.method).with("mna", mna.method);
  return inst;
}

FamilyInstance case_iv(const LieAlgebra& s, const std::vector<Mat>& rho, std::size_t samples) {
  const bool aff = s.dim() == 2 && !s.is_abelian();
  if (!aff) {
    if (s.dim() != 3) throw PreconditionNotCertified("S must be 2-dim nonabelian or 3-dim simple");
    if (!simplicity_status(s).is_true()) throw PreconditionNotCertified("S is not certified simple");
    if (!mna_status(s).is_true()) throw PreconditionNotCertified("S is not certified minimal nonabelian");
  }
  FamilyInstance inst;
  inst.tag = Family::CaseIV;
  inst.algebra = semidirect_sum(s, rho);
  const std::size_t m = rho.empty() ? 0 : rho.front().rows();
  inst.params = {{"S_dim", std::to_string(s.dim())}, {"V_dim", std::to_string(m)}};
  if (m == 0) {
    inst.validation = TriState::no("zero-module", {});
    return inst;
  }
  if (m == 1) {
    inst.validation = TriState::yes("one-dimensional-module");
    return inst;
  }
  std::size_t checked = 0;
  for (const Vec& c : sample_elements(s.dim(), s.field(), std::max(samples, s.dim()))) {
    ++checked;
    const UPoly cp = charpoly(combine(rho, c));
    Irreducibility irr = irreducibility(cp);
    if (irr.verdict == Verdict::False) {
      inst.validation = TriState::no("reducible-action", {pad(c, inst.algebra.dim())}).with("charpoly", cp.str());
      return inst;
    }
    if (irr.verdict == Verdict::Unknown) {
      inst.validation = TriState::unknown("irreducible-action", checked).with("charpoly", cp.str());
      return inst;
    }
  }
  inst.validation = TriState::unknown("sampled", checked).with("grade", "true-sampled");
  return inst;
}

FamilyInstance case_v(const std::vector<Mat>& rho, std::size_t samples) {
  if (rho.empty() || rho.size() > 2) throw DimensionMismatch("case (v) needs one or two action matrices");
  for (std::size_t a = 0; a < rho.size(); ++a)
    for (std::size_t b = a + 1; b < rho.size(); ++b)
      if (rho[a] * rho[b] != rho[b] * rho[a]) throw NonCommutingAction(a, b);
  const FieldSpec f = rho.front().field();
  FamilyInstance inst;
  inst.tag = Family::CaseV;
  inst.algebra = semidirect_sum(LieAlgebra::abelian(rho.size(), f), rho);
  inst.params = {{"S_dim", std::to_string(rho.size())}, {"V_dim", std::to_string(rho.front().rows())}};
  std::size_t checked = 0;
  for (const Vec& c : sample_elements(rho.size(), f, rho.size() == 1 ? 1 : std::max<std::size_t>(samples, 2))) {
    ++checked;
    ChainBound cb = invariant_chain_bound(combine(rho, c));
    if (!cb.exact) {
      inst.validation = TriState::unknown("chain-bound", checked);
      return inst;
    }
    if (cb.value != 2) {
      inst.validation =
          TriState::no("chain-bound", {pad(c, inst.algebra.dim())}).with("chain_bound", std::to_string(cb.value));
      return inst;
    }
  }
  inst.validation = rho.size() == 1 ? TriState::yes("chain-bound").with("chain_bound", "2")
                                    : TriState::unknown("sampled", checked).with("grade", "true-sampled");
  return inst;
}

ChainBound invariant_chain_bound(const Mat& a) {
  if (!a.is_square()) throw NotSquare();
  ChainBound out;
  if (a.rows() == 0) {
    out.exact = true;
    return out;
  }
  out.factorization = factor(charpoly(a));
  out.value = out.factorization.length();
  out.exact = out.factorization.complete;
  return out;
}

TriState solvable_mna_status(const LieAlgebra& L) {
  if (!series(L).solvable) throw NotSolvable();
  if (L.is_abelian()) return TriState::no("abelian", {});
  if (is_heisenberg3(L)) return TriState::yes("heisenberg");
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  const Subspace d = derived_algebra(L);
  if (!is_abelian(L, d)) return subalgebra_witness("derived", d).with("reason", "derived algebra is nonabelian");
  std::vector<Vec> comp;
  for (std::size_t c : d.free_columns()) comp.push_back(unit_vec(n, c, f));

  if (comp.size() == 1) {
    const Vec& t = comp.front();
    const Mat a = restrict_operator(L.ad(t), d);
    const UPoly cp = charpoly(a);
    Irreducibility irr = irreducibility(cp);
    if (irr.verdict == Verdict::True)
      return TriState::yes("irreducible-action").with("charpoly", cp.str()).with("irreducibility", irr.method);
    if (irr.verdict == Verdict::Unknown)
      return TriState::unknown("irreducible-action", 0).with("charpoly", cp.str());
    // Cyclic subspace of a vector killed by the factor: invariant, proper.
    const Vec w0 = kernel(irr.factor->eval(a)).row(0);
    Subspace cyc = Subspace::span({w0}, d.dim(), f);
    Vec w = w0;
    for (;;) {
      w = a.apply(w);
      if (cyc.contains(w)) break;
      cyc = cyc + Subspace::span({w}, d.dim(), f);
    }
    std::vector<Vec> gens = to_ambient(d, cyc.vectors());
    gens.push_back(t);
    Subspace s = Subspace::span(gens, n, f);
    return subalgebra_witness("reducible-action", s).with("charpoly", cp.str());
  }
  // Codimension ≥ 2: D + Ku, or D + Ku + Kv, is a proper nonabelian subalgebra.
  for (const Vec& u : comp)
    for (const Vec& x : d.vectors())
      if (!is_zero(L.bracket(u, x))) return subalgebra_witness("derived-extension", d + Subspace::span({u}, n, f));
  if (comp.size() >= 3) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!is_zero(L.bracket(comp[i], comp[j])))
          return subalgebra_witness("derived-extension", d + Subspace::span({comp[i], comp[j]}, n, f));
  }
  PairSearch r = pair_search(L, SearchBudget{3, 5000}, [&](const Subspace& s) { return proper_nonabelian(L, s); });
  if (r.found) return subalgebra_witness("search", *r.found);
  return TriState::unknown("search", r.examined);
}

TriState mna_status(const LieAlgebra& L, const SearchBudget& budget) {
  require_rationals(L);
  if (L.is_abelian()) return TriState::no("abelian", {}).with("depth", "0");
  if (series(L).solvable) return solvable_mna_status(L);
  const Subspace d = derived_algebra(L);
  if (!d.is_whole()) return subalgebra_witness("derived", d).with("reason", "derived algebra is proper and nonabelian");
  TriState simple = simplicity_status(L);
  if (simple.is_false() && !simple.witness.empty()) {
    Subspace ideal = Subspace::span(simple.witness, L.dim(), L.field());
    if (proper_nonabelian(L, ideal)) return subalgebra_witness("ideal", ideal);
  }
  auto nonabelian = [&](const Subspace& s) { return proper_nonabelian(L, s); };
  if (simple.is_true() && L.dim() == 3) {
    DivisionCertificate cert = dim3_certificate(L);
    if (cert.division) return TriState::yes("hilbert").with("ramified", cert.ramified_str()).with("depth", "1");
    PairSearch r = pair_search(L, budget, nonabelian);
    if (r.found) return subalgebra_witness("search", *r.found).with("ramified", cert.ramified_str());
    TriState an = anisotropy_status(L, budget);
    if (an.is_false() && !an.witness.empty())
      return subalgebra_witness("borel", normalizer(L, Subspace::span({an.witness[0]}, 3, L.field())));
    return TriState::no("hilbert", {}).with("ramified", cert.ramified_str());
  }
  PairSearch r = pair_search(L, budget, nonabelian);
  if (r.found) {
    TriState t = subalgebra_witness("search", *r.found);
    t.examined = r.examined;
    return t;
  }
  return TriState::unknown("search", r.examined);
}

TriState depth2_status(const LieAlgebra& L, const SearchBudget& budget) {
  require_rationals(L);
  if (L.is_abelian()) return TriState::no("abelian", {}).with("depth", "0");
  TriState mna = mna_status(L, budget);
  if (mna.is_true()) return TriState::no("mna", {}).with("depth", "1").with("mna", mna.method);
  if (series(L).solvable) return depth2_solvable(L, budget);
  return depth2_nonsolvable(L, budget);
}

LieAlgebra quadratic_restriction(const LieAlgebra& L, long d) {
  require_rationals(L);
  if (d >= 0) {
    const auto r = static_cast<long>(std::llround(std::sqrt(double(d))));
    for (long c = std::max(0L, r - 1); c <= r + 1; ++c)
      if (c * c == d) throw BadScalar("quadratic_restriction needs a non-square d");
  }
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  const Scalar dd{mpq_class(d)};
  auto place = [&](const Vec& v, std::size_t offset, const Scalar& c) {
    Vec out = zero_vec(2 * n, f);
    for (std::size_t k = 0; k < n; ++k) out[offset + k] = c * v[k];
    return out;
  };
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = L.bracket(L.basis_vector(i), L.basis_vector(j));
      if (is_zero(c)) continue;
      if (i < j) {
        brackets.push_back({i, j, place(c, 0, Scalar::one(f))});
        brackets.push_back({n + i, n + j, place(c, 0, dd)});
      }
      brackets.push_back({i, n + j, place(c, n, Scalar::one(f))});
    }
  std::vector<std::string> labels = L.labels();
  for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + L.labels()[i]);
  return LieAlgebra::validate(2 * n, f, brackets, labels);
}

}  // namespace lieprop
