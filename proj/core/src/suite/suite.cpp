#include "lieprop/suite/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/arith/factor.hpp"
#include "lieprop/arith/height_order.hpp"
#include "lieprop/arith/linalg.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/families/families.hpp"
#include "lieprop/io/algebra_file.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/oracle/oracle.hpp"
#include "lieprop/quat/quaternion.hpp"
#include "lieprop/spectral/spectral.hpp"

namespace lieprop::suite {

namespace {

const FieldSpec Q = FieldSpec::rationals();

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t salt) : gen_(seed * 0x9e3779b97f4a7c15ULL + salt) {}
  long range(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  long nonzero(long bound) {
    const long v = range(1, bound);
    return range(0, 1) ? v : -v;
  }

 private:
  std::mt19937_64 gen_;
};

Mat random_mat(Rng& rng, std::size_t n, long bound) {
  Mat m(n, n, Q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(rng.range(-bound, bound), Q);
  return m;
}

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string failures() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }
  std::size_t total() const { return total_; }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failures_;
};

Row finish(std::string id, std::string name, const Checks& c, const std::string& summary) {
  return {std::move(id), std::move(name), c.ok(), c.ok() ? summary : c.failures()};
}

Subspace span_of(const LieAlgebra& L, const std::vector<Vec>& vs) { return Subspace::span(vs, L.dim(), L.field()); }

bool is_nonabelian_plane(const LieAlgebra& L, const Subspace& s) {
  return s.dim() == 2 && is_subalgebra(L, s) && !is_abelian(L, s);
}

bool proper_nonabelian(const LieAlgebra& L, const Subspace& s) {
  return !s.is_whole() && is_subalgebra(L, s) && !is_abelian(L, s);
}

/// Re-checks a False witness through the operation that defines the property.
bool replay(const LieAlgebra& L, const TriState& t, const std::string& property) {
  if (!t.is_false()) return true;
  if (property == "depth2" && t.witness.empty()) {
    if (t.fact("depth") == "0") return L.is_abelian();
    return t.fact("depth") == "1" && mna_status(L).is_true();
  }
  if (property == "mna" || property == "depth2") {
    if (t.witness.empty()) return L.is_abelian();
    return proper_nonabelian(L, span_of(L, t.witness));
  }
  if (t.witness.empty()) return false;
  const Vec& w = t.witness.front();
  if (property == "anisotropic") return !element_report(L, w).semisimple;
  return !element_report(L, w).regular;
}

// ---------------------------------------------------------------------------

Row c1_validation(std::uint64_t seed) {
  Checks c;
  const FieldSpec F3 = FieldSpec::prime(3), F5 = FieldSpec::prime(5);
  std::vector<std::pair<std::string, std::function<LieAlgebra()>>> ctors;
  for (FieldSpec f : {Q, F3, F5}) {
    const std::string tag = f.is_rational() ? "Q" : "F" + std::to_string(f.characteristic());
    ctors.emplace_back("sl2/" + tag, [f] { return prototypes(f).sl2; });
    ctors.emplace_back("heisenberg/" + tag, [f] { return prototypes(f).heisenberg; });
    ctors.emplace_back("aff1/" + tag, [f] { return prototypes(f).aff1; });
  }
  for (auto m : {std::vector<std::vector<long>>{{0, 2}, {1, 0}}, {{1, 0}, {0, -1}}, {{0, 0}, {0, 0}},
                 {{1, 0}, {0, 0}}, {{0, -1}, {1, 1}}})
    ctors.emplace_back("case_i_ii", [m] { return case_i_ii(Mat::from_ints(m, Q)).algebra; });
  ctors.emplace_back("case_iii", [] { return case_iii(pure_lie_algebra(-1, -1)).algebra; });
  ctors.emplace_back("case_iv", [] {
    return case_iv(prototypes(Q).aff1, {Mat::from_ints({{1, 0}, {0, 0}}, Q), Mat::from_ints({{0, 1}, {0, 0}}, Q)})
        .algebra;
  });
  ctors.emplace_back("case_v", [] { return case_v({companion(UPoly::from_ints({-2, 0, -1, 0, 1}, Q))}).algebra; });
  ctors.emplace_back("case_v/2", [] {
    return case_v({Mat::from_ints({{1, 0}, {0, 2}}, Q), Mat::from_ints({{3, 0}, {0, 4}}, Q)}).algebra;
  });
  ctors.emplace_back("pure(-1,-1)", [] { return pure_lie_algebra(-1, -1); });
  ctors.emplace_back("pure(2,3)", [] { return pure_lie_algebra(2, 3); });
  ctors.emplace_back("pure(1,1)", [] { return pure_lie_algebra(1, 1); });
  ctors.emplace_back("quadratic_restriction", [] { return quadratic_restriction(pure_lie_algebra(-1, -1), 2); });
  for (const auto& [name, make] : ctors) {
    try {
      const LieAlgebra L = make();
      c.expect(jacobi_bruteforce(L.dim(), L.field(), L.brackets()).empty(), name + " breaks Jacobi");
    } catch (const Error& e) {
      c.expect(false, name + " threw: " + e.what());
    }
  }

  const std::vector<std::pair<std::string, LieAlgebra>> bases = {
      {"sl2", prototypes(Q).sl2},
      {"heisenberg", prototypes(Q).heisenberg},
      {"case_i", case_i_ii(Mat::from_ints({{0, 2}, {1, 0}}, Q)).algebra}};
  Rng rng(seed, 1);
  std::size_t rejected_total = 0, benign_total = 0;
  for (const auto& [name, base] : bases) {
    const std::size_t n = base.dim();
    std::size_t rejected = 0, attempts = 0, mismatches = 0;
    while (rejected < 100 && attempts < 20000) {
      ++attempts;
      std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      if (i > j) std::swap(i, j);
      const std::size_t k = static_cast<std::size_t>(rng.range(0, static_cast<long>(n) - 1));
      const Scalar delta(rng.nonzero(3), Q);

      std::vector<BracketEntry> entries = base.brackets();
      auto it = std::find_if(entries.begin(), entries.end(), [&](const BracketEntry& b) { return b.i == i && b.j == j; });
      if (it == entries.end()) {
        entries.push_back({i, j, zero_vec(n, Q)});
        it = entries.end() - 1;
      }
      it->value[k] += delta;
      if (is_zero(it->value)) entries.erase(it);

      const auto expected = jacobi_bruteforce(n, Q, entries);
      try {
        LieAlgebra::validate(n, Q, entries);
        if (expected.empty()) {
          ++benign_total;
        } else {
          ++mismatches;
        }
      } catch (const JacobiViolation& e) {
        std::vector<std::array<std::size_t, 3>> located;
        for (const auto& t : e.triples()) located.push_back({t.i, t.j, t.k});
        if (!expected.empty() && located == expected) {
          ++rejected;
        } else {
          ++mismatches;
        }
      }
    }
    c.expect(mismatches == 0, name + ": " + std::to_string(mismatches) + " mutations judged differently by the dense check");
    c.expect(rejected == 100, name + ": only " + std::to_string(rejected) + " Jacobi-breaking mutations found");
    rejected_total += rejected;
  }
  std::ostringstream s;
  s << ctors.size() << " constructors pass Jacobi; " << rejected_total
    << " Jacobi-breaking mutations rejected with matching triples; " << benign_total
    << " mutations that keep Jacobi accepted";
  return finish("C1", "validation", c, s.str());
}

Row c2_rank(std::uint64_t seed) {
  Checks c;
  const Prototypes p = prototypes(Q);
  const RankCertificate sl2 = rank(p.sl2);
  const MPoly t1 = MPoly::variable(3, 0, Q), t2 = MPoly::variable(3, 1, Q), t3 = MPoly::variable(3, 2, Q);
  const MPoly expected = Scalar(-4, Q) * (t2 * t2 + t1 * t3);
  c.expect(sl2.rank == 1, "rank(sl2) = " + std::to_string(sl2.rank));
  c.expect(sl2.coefficient == expected, "c1(sl2) = " + sl2.coefficient.str());
  c.expect(sl2.vanished_below, "c0(sl2) not identically zero");
  c.expect(rank(p.heisenberg).rank == 3, "rank(heisenberg) != 3");
  for (std::size_t n = 1; n <= 6; ++n)
    c.expect(rank(LieAlgebra::abelian(n, Q)).rank == n, "rank(abelian " + std::to_string(n) + ") != n");

  const std::vector<std::pair<std::string, LieAlgebra>> pool = {
      {"sl2", p.sl2},
      {"heisenberg", p.heisenberg},
      {"aff1", p.aff1},
      {"K", LieAlgebra::abelian(1, Q)},
      {"K^2", LieAlgebra::abelian(2, Q)},
      {"pure(-1,-1)", pure_lie_algebra(-1, -1)},
      {"pure(1,1)", pure_lie_algebra(1, 1)},
      {"case_i", case_i_ii(Mat::from_ints({{0, 2}, {1, 0}}, Q)).algebra},
      {"case_ii", case_i_ii(Mat::from_ints({{1, 0}, {0, 0}}, Q)).algebra}};
  std::vector<std::size_t> ranks;
  for (const auto& [_, L] : pool) ranks.push_back(rank(L).rank);
  Rng rng(seed, 2);
  std::size_t sums = 0;
  while (sums < 10) {
    const auto a = static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1));
    const auto b = static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1));
    if (pool[a].second.dim() + pool[b].second.dim() > 7) continue;
    ++sums;
    const std::size_t r = rank(direct_sum(pool[a].second, pool[b].second)).rank;
    c.expect(r == ranks[a] + ranks[b], "rank(" + pool[a].first + " + " + pool[b].first + ") = " + std::to_string(r));
  }
  return finish("C2", "rank", c, "rank(sl2)=1 with c1 = " + sl2.coefficient.str() +
                                      "; heisenberg 3; abelian n; 10 direct sums additive");
}

Row c3_killing() {
  Checks c;
  const Prototypes p = prototypes(Q);
  const Mat gram = killing_gram(p.sl2);
  Mat direct(3, 3, Q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) direct(i, j) = (p.sl2.ad_basis(i) * p.sl2.ad_basis(j)).trace();
  c.expect(gram == direct, "gram differs from tr(ad e_i ad e_j)");
  const Scalar det = determinant(gram);
  c.expect(det == Scalar(-128, Q), "det gram(sl2) = " + det.str());
  c.expect(radical(p.sl2).dim() == 0, "radical(sl2) != 0");
  c.expect(radical(p.aff1).is_whole(), "radical(aff1) != aff1");
  c.expect(killing(direct_sum(p.sl2, LieAlgebra::abelian(1, Q))).reductive, "sl2 + K not reductive");
  c.expect(!killing(p.aff1).reductive, "aff1 reported reductive");
  return finish("C3", "killing-radical", c, "det gram(sl2) = -128; radical(sl2) = 0; radical(aff1) = aff1; sl2 + K reductive");
}

mpq_class random_rational(Rng& rng) { return mpq_class(rng.nonzero(60), rng.range(1, 12)); }

Row c4_hilbert(std::uint64_t seed) {
  Checks c;
  Rng rng(seed, 4);
  for (int t = 0; t < 50; ++t) {
    mpq_class a = random_rational(rng), b = random_rational(rng);
    a.canonicalize();
    b.canonicalize();
    int product = 1;
    for (const Place& v : relevant_places(a, b)) product *= hilbert_symbol(a, b, v);
    c.expect(product == 1, "product formula fails for (" + a.get_str() + ", " + b.get_str() + ")");
    for (long q : {3, 5, 7, 11, 13, 17, 19, 23}) {
      const Place v = Place::prime(q);
      const auto rel = relevant_places(a, b);
      if (std::find(rel.begin(), rel.end(), v) == rel.end())
        c.expect(hilbert_symbol(a, b, v) == 1, "(a, b)_" + std::to_string(q) + " = -1 at an unramified prime");
    }
  }
  std::vector<Place> ramified;
  for (long q = 2; q < 60; ++q)
    if (is_prime_u64(static_cast<std::uint64_t>(q)) && hilbert_symbol(-1, -1, Place::prime(q)) == -1)
      ramified.push_back(Place::prime(q));
  if (hilbert_symbol(-1, -1, Place::infinity()) == -1) ramified.push_back(Place::infinity());
  c.expect(ramified == std::vector<Place>{Place::prime(2), Place::infinity()}, "(-1,-1) ramification is not {2, inf}");
  c.expect(is_division(-1, -1).ramified == ramified, "is_division(-1,-1) lists " + is_division(-1, -1).ramified_str());
  c.expect(is_division(2, 3).division, "(2,3) not division");
  for (int t = 0; t < 10; ++t) {
    const mpq_class b = random_rational(rng);
    const DivisionCertificate d = is_division(1, b);
    c.expect(!d.division && d.ramified.empty(), "(1, " + b.get_str() + ") not split");
  }
  return finish("C4", "hilbert", c, "product formula on 50 pairs; (-1,-1) ramified at {2, inf}; (2,3) division; (1,b) split for 10 b");
}

Row c5_quaternion() {
  Checks c;
  const QuaternionReport div = certified_report(-1, -1);
  c.expect(div.certificate.division, "(-1,-1) not division");
  c.expect(div.anisotropic == Verdict::True && div.regular == Verdict::True && div.minimal_nonabelian == Verdict::True,
           "certified report for (-1,-1) not all True");
  c.expect(div.depth == 1, "certified depth " + std::to_string(div.depth));
  const LieAlgebra& H = div.algebra;
  c.expect(anisotropy_status(H).is_true(), "anisotropy_status(pure(-1,-1)) not True");
  c.expect(regularity_status(H).is_true(), "regularity_status(pure(-1,-1)) not True");
  c.expect(mna_status(H).is_true(), "mna_status(pure(-1,-1)) not True");
  const TriState d2 = depth2_status(H);
  c.expect(d2.is_false() && d2.fact("depth") == "1", "depth2_status(pure(-1,-1)) does not report depth 1");

  const QuaternionReport split = certified_report(1, 1);
  c.expect(!split.certificate.division, "(1,1) reported division");
  c.expect(!is_zero(split.nilpotent_witness) && element_report(split.algebra, split.nilpotent_witness).nilpotent,
           "(1,1) report has no nilpotent witness");
  const TriState a = anisotropy_status(split.algebra);
  c.expect(a.is_false() && !a.witness.empty(), "anisotropy_status(pure(1,1)) not False");
  std::string shown;
  if (a.is_false() && !a.witness.empty()) {
    const Vec& w = a.witness.front();
    c.expect(element_report(split.algebra, w).nilpotent, "pure(1,1) witness " + to_string(w) + " not nilpotent");
    c.expect(line_height(w) <= 2, "pure(1,1) witness height " + line_height(w).get_str());
    shown = to_string(w);
  }
  return finish("C5", "quaternion-path", c,
                "pure(-1,-1): anisotropic, regular, MNA certified, depth 1; pure(1,1): nilpotent witness " + shown);
}

Row c6_witnesses() {
  Checks c;
  const Prototypes p = prototypes(Q);
  const TriState a = anisotropy_status(p.sl2);
  std::string shown_a, shown_r;
  c.expect(a.is_false() && !a.witness.empty(), "anisotropy_status(sl2) not False");
  if (a.is_false() && !a.witness.empty()) {
    c.expect(line_height(a.witness.front()) == 1, "sl2 witness not of height 1");
    c.expect(replay(p.sl2, a, "anisotropic"), "sl2 witness is ad-semisimple");
    shown_a = to_string(a.witness.front());
  }
  const TriState r = regularity_status(p.aff1);
  c.expect(r.is_false() && !r.witness.empty(), "regularity_status(aff1) not False");
  if (r.is_false() && !r.witness.empty()) {
    c.expect(span_of(p.aff1, r.witness) == span_of(p.aff1, {p.aff1.basis_vector(1)}), "aff1 witness is not x");
    c.expect(replay(p.aff1, r, "regular"), "aff1 witness is regular");
    shown_r = to_string(r.witness.front());
  }
  return finish("C6", "witness-search", c, "sl2 anisotropy witness " + shown_a + "; aff1 regularity witness " + shown_r);
}

Row c7_depth() {
  Checks c;
  const FieldSpec F5 = FieldSpec::prime(5);
  const Prototypes p = prototypes(F5);
  const std::vector<std::tuple<std::string, std::function<LieAlgebra()>, std::size_t>> cases = {
      {"abelian", [F5] { return LieAlgebra::abelian(2, F5); }, 0},
      {"heisenberg", [p] { return p.heisenberg; }, 1},
      {"aff1", [p] { return p.aff1; }, 1},
      {"sl2", [p] { return p.sl2; }, 2},
      {"case_i([[0,2],[1,0]])", [] { return reduce_mod_p(case_i_ii(Mat::from_ints({{0, 2}, {1, 0}}, Q)).algebra, 5); }, 2},
      {"case_i(diag(1,-1))", [] { return reduce_mod_p(case_i_ii(Mat::from_ints({{1, 0}, {0, -1}}, Q)).algebra, 5); }, 3},
      {"case_v((l^2+1)(l^2-2)) over F3",
       [] { return reduce_mod_p(case_v({companion(UPoly::from_ints({-2, 0, -1, 0, 1}, Q))}).algebra, 3); }, 2}};
  std::string summary;
  for (const auto& [name, make, expected] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t d = depth_bruteforce(make());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(d == expected, name + " depth " + std::to_string(d) + ", expected " + std::to_string(expected));
    c.expect(seconds < 60, name + " exceeded 60 s");
    summary += (summary.empty() ? "" : ", ") + name + "=" + std::to_string(d);
  }
  return finish("C7", "depth-oracle", c, summary);
}

LieAlgebra random_solvable(Rng& rng) {
  const Prototypes p = prototypes(Q);
  switch (rng.range(0, 4)) {
    case 0: {
      const auto k = static_cast<std::size_t>(rng.range(1, 3));
      return semidirect_sum(LieAlgebra::abelian(1, Q), {random_mat(rng, k, 3)});
    }
    case 1: {
      const long a = rng.range(-3, 3), b = rng.range(-3, 3), cc = rng.range(-3, 3), tr = rng.range(0, 1);
      return case_i_ii(Mat::from_ints({{a, b}, {cc, tr - a}}, Q)).algebra;
    }
    case 2: {
      const auto k = static_cast<std::size_t>(rng.range(1, 2));
      const Mat a = random_mat(rng, k, 2);
      const Mat b = Scalar(rng.range(-2, 2), Q) * Mat::identity(k, Q) + Scalar(rng.range(-2, 2), Q) * a;
      return semidirect_sum(LieAlgebra::abelian(2, Q), {a, b});
    }
    case 3: {
      const std::vector<LieAlgebra> fixed = {direct_sum(p.aff1, LieAlgebra::abelian(1, Q)), direct_sum(p.aff1, p.aff1),
                                             direct_sum(p.heisenberg, LieAlgebra::abelian(1, Q)),
                                             direct_sum(p.aff1, LieAlgebra::abelian(2, Q)), p.heisenberg, p.aff1};
      return fixed[static_cast<std::size_t>(rng.range(0, static_cast<long>(fixed.size()) - 1))];
    }
    default:
      return LieAlgebra::abelian(static_cast<std::size_t>(rng.range(1, 4)), Q);
  }
}

Row c8_classifier(std::uint64_t seed) {
  Checks c;
  Rng rng(seed, 8);
  std::size_t kept = 0, drawn = 0, comparisons = 0;
  std::map<std::string, std::size_t> verdicts;
  while (kept < 20 && drawn < 2000) {
    ++drawn;
    const LieAlgebra L = random_solvable(rng);
    const TriState over_q = solvable_mna_status(L);
    if (over_q.is_unknown()) continue;
    bool survives = true;
    std::vector<LieAlgebra> reduced;
    for (std::uint32_t p : {3u, 5u}) {
      reduced.push_back(reduce_mod_p(L, p));
      survives = survives && solvable_mna_status(reduced.back()).verdict == over_q.verdict;
    }
    if (!survives) continue;
    ++kept;
    ++verdicts[std::string(to_string(over_q.verdict))];
    c.expect(replay(L, over_q, "mna"), "witness replay failed on " + io::emit_algebra(L));
    for (const LieAlgebra& Lp : reduced) {
      ++comparisons;
      const bool holds = property_bruteforce(Lp, Property::MNA).holds;
      c.expect(holds == over_q.is_true(), "disagreement over F" + std::to_string(Lp.field().characteristic()) +
                                              " on dim " + std::to_string(L.dim()) + " instance");
    }
  }
  c.expect(kept == 20, "only " + std::to_string(kept) + " algebras kept");
  std::ostringstream s;
  s << kept << " algebras (" << drawn << " drawn), " << comparisons << " oracle comparisons, 0 disagreements;";
  for (const auto& [v, n] : verdicts) s << " " << v << "=" << n;
  return finish("C8", "classifier-vs-oracle", c, s.str());
}

/// Anisotropy against nonabelian planes on one reductive algebra over Q.
bool pair_closure_consistent(const LieAlgebra& L, const std::string& name, Checks& c, std::string& note) {
  const TriState a = anisotropy_status(L);
  if (a.is_true()) {
    const PlaneSearch s = nonabelian_plane_search(L, 5);
    c.expect(!s.found, name + ": certified anisotropic but a nonabelian plane was found");
    note = name + " anisotropic (" + std::to_string(s.examined) + " x searched)";
    return !s.found;
  }
  if (a.is_false()) {
    const bool witness_ok = !a.witness.empty() && replay(L, a, "anisotropic");
    c.expect(witness_ok, name + ": anisotropy witness does not replay");
    if (!witness_ok) return false;
    const auto plane = nonabelian_plane_from(L, a.witness.front());
    const bool ok = plane && is_nonabelian_plane(L, *plane);
    c.expect(ok, name + ": no nonabelian plane from witness " + to_string(a.witness.front()));
    note = name + " split";
    return ok;
  }
  note = name + " undecided";
  return true;
}

Row c9_reductive_zoo() {
  Checks c;
  const Prototypes p = prototypes(Q);
  const LieAlgebra K = LieAlgebra::abelian(1, Q);
  const std::vector<std::pair<std::string, LieAlgebra>> zoo = {
      {"sl2", p.sl2},
      {"pure(-1,-1)", pure_lie_algebra(-1, -1)},
      {"pure(2,3)", pure_lie_algebra(2, 3)},
      {"sl2+K", direct_sum(p.sl2, K)},
      {"pure(-1,-1)+K", direct_sum(pure_lie_algebra(-1, -1), K)},
      {"pure(2,3)+K", direct_sum(pure_lie_algebra(2, 3), K)},
      {"sl2+sl2", direct_sum(p.sl2, p.sl2)}};
  std::string summary;
  std::size_t anisotropic = 0;
  for (const auto& [name, L] : zoo) {
    std::string note;
    pair_closure_consistent(L, name, c, note);
    if (anisotropy_status(L).is_true()) ++anisotropic;
    summary += (summary.empty() ? "" : "; ") + note;
  }
  c.expect(anisotropic == 4, std::to_string(anisotropic) + " anisotropic instances, expected 4");
  return finish("C9", "reductive-zoo", c, summary);
}

Row c10_chain(std::uint64_t seed) {
  Checks c;
  Rng rng(seed, 10);
  std::size_t exact = 0;
  for (int t = 0; t < 30; ++t) {
    const std::uint32_t p = rng.range(0, 1) ? 5 : 3;
    const auto n = static_cast<std::size_t>(rng.range(2, 4));
    const FieldSpec f = FieldSpec::prime(p);
    Mat a(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(rng.range(0, static_cast<long>(p) - 1), f);
    const ChainBound b = invariant_chain_bound(a);
    const std::size_t brute = invariant_chain_bruteforce(a);
    if (b.exact) ++exact;
    c.expect(b.exact && b.value == brute, "F" + std::to_string(p) + " " + a.str() + ": bound " + std::to_string(b.value) +
                                              " vs exhaustive " + std::to_string(brute));
  }
  return finish("C10", "chain-bound", c, "30 matrices, " + std::to_string(exact) + " exact, all equal to exhaustive");
}

Row guarded(const std::string& id, const std::string& name, const std::function<Row()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

mpz_class line_height(const Vec& v) {
  mpz_class lcm = 1;
  for (const Scalar& s : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.rational().get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const Scalar& s : v) {
    mpq_class scaled = s.rational() * lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  mpz_class h = 0;
  if (g == 0) return h;
  for (const auto& x : ints) h = std::max<mpz_class>(h, abs(x) / g);
  return h;
}

std::optional<Subspace> nonabelian_plane_from(const LieAlgebra& L, const Vec& w) {
  const std::size_t n = L.dim();
  const FieldSpec f = L.field();
  const Mat A = L.ad(w);
  const UPoly cp = charpoly(A);
  const UPoly sq = (cp / gcd(cp, cp.derivative())).monic();
  const UPoly dsq = sq.derivative();
  Mat S = A;
  for (int it = 0; it < 64; ++it) {
    const Mat r = sq.eval(S);
    if (r.is_zero()) break;
    S = S - r * inverse(dsq.eval(S));
  }
  const Mat N = A - S;
  if (N.is_zero()) return std::nullopt;

  auto flatten_solve = [&](const std::function<Mat(std::size_t)>& column, const Mat& target) -> std::optional<Vec> {
    Mat sys(n * n, n, f);
    Vec rhs;
    for (std::size_t c = 0; c < n; ++c) {
      const Mat m = column(c);
      for (std::size_t r = 0; r < n * n; ++r) sys(r, c) = m(r / n, r % n);
    }
    for (std::size_t r = 0; r < n * n; ++r) rhs.push_back(target(r / n, r % n));
    return solve(sys, rhs);
  };
  const auto nil = flatten_solve([&](std::size_t c) { return L.ad_basis(c); }, N);
  if (!nil) return std::nullopt;

  Mat lhs(n, n, f);
  for (std::size_t c = 0; c < n; ++c) lhs.set_col(c, L.bracket(L.bracket(*nil, L.basis_vector(c)), *nil));
  const auto z = solve(lhs, Scalar(2, f) * *nil);
  if (!z) return std::nullopt;
  const Vec h = L.bracket(*nil, *z);
  const Subspace plane = Subspace::span({h, *nil}, n, f);
  if (!is_nonabelian_plane(L, plane)) return std::nullopt;
  return plane;
}

PlaneSearch nonabelian_plane_search(const LieAlgebra& L, long max_height) {
  PlaneSearch out;
  const std::size_t n = L.dim();
  HeightOrder order(n, max_height);
  std::vector<long> digits;
  while (order.next(digits)) {
    ++out.examined;
    const Vec x = int_vec(digits, L.field());
    const Mat A = L.ad(x);
    UPoly cp = charpoly(A);
    const std::size_t zeros = cp.low_order();
    if (zeros == static_cast<std::size_t>(cp.degree())) continue;
    cp = cp / UPoly::monomial(Scalar::one(L.field()), zeros);
    for (const Factor& fac : factor(cp).factors) {
      if (fac.poly.degree() != 1) continue;
      const Scalar r = -fac.poly.coeff(0);
      const Mat k = kernel(A - r * Mat::identity(n, L.field()));
      const Subspace plane = Subspace::span({x, k.row(0)}, n, L.field());
      if (is_nonabelian_plane(L, plane)) {
        out.found = plane;
        return out;
      }
    }
  }
  return out;
}

Row criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return guarded("C1", "validation", [&] { return c1_validation(seed); });
    case 2: return guarded("C2", "rank", [&] { return c2_rank(seed); });
    case 3: return guarded("C3", "killing-radical", [] { return c3_killing(); });
    case 4: return guarded("C4", "hilbert", [&] { return c4_hilbert(seed); });
    case 5: return guarded("C5", "quaternion-path", [] { return c5_quaternion(); });
    case 6: return guarded("C6", "witness-search", [] { return c6_witnesses(); });
    case 7: return guarded("C7", "depth-oracle", [] { return c7_depth(); });
    case 8: return guarded("C8", "classifier-vs-oracle", [&] { return c8_classifier(seed); });
    case 9: return guarded("C9", "reductive-zoo", [] { return c9_reductive_zoo(); });
    case 10: return guarded("C10", "chain-bound", [&] { return c10_chain(seed); });
    default: throw IndexOutOfRange("criterion " + std::to_string(id));
  }
}

std::vector<Row> acceptance(std::uint64_t seed) {
  std::vector<Row> rows;
  for (int id = 1; id <= kCriteria; ++id) rows.push_back(criterion(id, seed));
  return rows;
}

bool SuiteReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.passed; });
}

namespace {

std::vector<Row> quaternion_rows() {
  const std::vector<std::pair<long, long>> pairs = {{-1, -1}, {2, 3}, {-1, -3}, {-2, -5}, {3, -7},
                                                    {1, 1},   {1, -1}, {2, -1}, {-1, 2},  {5, -5}};
  std::vector<Row> rows;
  for (const auto& [a, b] : pairs) {
    const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    rows.push_back(guarded("Q" + name, "quaternion", [&, a = a, b = b] {
      Checks c;
      const QuaternionReport rep = certified_report(a, b);
      const LieAlgebra& H = rep.algebra;
      const TriState an = anisotropy_status(H);
      if (rep.certificate.division) {
        c.expect(an.is_true(), "anisotropy_status not True");
        c.expect(regularity_status(H).is_true(), "regularity_status not True");
        c.expect(mna_status(H).is_true(), "mna_status not True");
        return finish("Q" + name, "quaternion", c,
                      "division (ramified " + rep.certificate.ramified_str() + "): anisotropic, regular, MNA");
      }
      c.expect(an.is_false() && replay(H, an, "anisotropic"), "split but anisotropy not refuted");
      c.expect(element_report(H, rep.nilpotent_witness).nilpotent, "reported witness not nilpotent");
      return finish("Q" + name, "quaternion", c, "split: nilpotent witness " + to_string(rep.nilpotent_witness));
    }));
  }
  return rows;
}

std::vector<Row> fixture_rows(const std::string& name, const LieAlgebra& L) {
  std::vector<Row> rows;
  if (!L.field().is_rational()) {
    rows.push_back(guarded("F:" + name, "depth-oracle", [&] {
      Checks c;
      const std::size_t d = depth_bruteforce(L);
      return finish("F:" + name, "depth-oracle", c, "depth " + std::to_string(d));
    }));
    return rows;
  }
  rows.push_back(guarded("F:" + name, "witness-replay", [&] {
    Checks c;
    std::string verdicts;
    const std::vector<std::pair<std::string, std::function<TriState()>>> checks = {
        {"anisotropic", [&] { return anisotropy_status(L); }},
        {"regular", [&] { return regularity_status(L); }},
        {"mna", [&] { return mna_status(L); }},
        {"depth2", [&] { return depth2_status(L); }}};
    for (const auto& [prop, run] : checks) {
      const TriState t = run();
      c.expect(replay(L, t, prop), prop + " witness does not replay");
      verdicts += (verdicts.empty() ? "" : ", ") + prop + "=" + std::string(to_string(t.verdict));
    }
    return finish("F:" + name, "witness-replay", c, verdicts);
  }));
  if (killing(L).reductive) {
    rows.push_back(guarded("F:" + name, "pair-closure", [&] {
      Checks c;
      std::string note;
      pair_closure_consistent(L, name, c, note);
      return finish("F:" + name, "pair-closure", c, note);
    }));
  }
  return rows;
}

}  // namespace

SuiteReport verify_suite(Zoo zoo, std::uint64_t seed, const std::vector<Fixture>& extra) {
  SuiteReport out;
  std::vector<std::pair<std::string, LieAlgebra>> accepted;
  for (const Fixture& fx : extra) {
    try {
      accepted.emplace_back(fx.name, io::parse_algebra(fx.text));
    } catch (const Error& e) {
      out.rejected.emplace_back(fx.name, e.what());
    }
  }
  out.rows = zoo == Zoo::Quaternion ? quaternion_rows() : acceptance(seed);
  for (const auto& [name, L] : accepted)
    for (Row& r : fixture_rows(name, L)) out.rows.push_back(std::move(r));
  return out;
}

}  // namespace lieprop::suite
