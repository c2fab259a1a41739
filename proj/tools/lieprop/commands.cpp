#include "commands.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lieprop/arith/charpoly.hpp"
#include "lieprop/errors.hpp"
#include "lieprop/families/families.hpp"
#include "lieprop/io/algebra_file.hpp"
#include "lieprop/lie/structure.hpp"
#include "lieprop/oracle/oracle.hpp"
#include "lieprop/quat/quaternion.hpp"
#include "lieprop/spectral/spectral.hpp"
#include "lieprop/suite/suite.hpp"

namespace lieprop::cli {

namespace {

using nlohmann::ordered_json;
const FieldSpec Q = FieldSpec::rationals();

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loaded {
  LieAlgebra algebra;
  std::string digest;
};

/// Format problems in the input file are rethrown as InputFormat.
Loaded load(const Options& o) {
  if (o.inputs.size() != 1) throw UsageError("exactly one --input is required");
  const std::string bytes = read_bytes(o.inputs.front());
  try {
    return {io::parse_algebra(bytes), io::fnv1a64(bytes)};
  } catch (const Error& e) {
    throw InputFormat(o.inputs.front() + ": " + e.what());
  }
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  if (o.height) b.max_height = *o.height;
  if (o.budget) b.max_candidates = static_cast<std::size_t>(*o.budget);
  if (b.max_height < 1 || (o.budget && *o.budget < 1)) throw UsageError("--budget and --height must be positive");
  return b;
}

ordered_json skeleton(const Options& o) {
  ordered_json r;
  r["command"] = o.argv;
  r["seed"] = o.seed;
  return r;
}

void describe_input(ordered_json& r, const Loaded& in) {
  const LieAlgebra& L = in.algebra;
  r["input"] = {{"digest", in.digest},
                {"field", L.field().is_rational() ? "Q" : "F" + std::to_string(L.field().characteristic())},
                {"dim", L.dim()}};
}

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Scalar& s : v) a.push_back(s.str());
  return a;
}

ordered_json mat_json(const Mat& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i)));
  return a;
}

/// "2*e - h"-style rendering against the basis labels.
std::string combination(const LieAlgebra& L, const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].str();
    bool negative = false;
    if (L.field().is_rational() && c[0] == '-') {
      negative = true;
      c.erase(0, 1);
    }
    const std::string term = (c == "1" ? "" : c + "*") + L.labels()[k];
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

ordered_json tristate_json(const LieAlgebra& L, const std::string& property, const TriState& t) {
  ordered_json j;
  j["property"] = property;
  j["verdict"] = std::string(to_string(t.verdict));
  j["method"] = t.method;
  ordered_json w = ordered_json::array(), terms = ordered_json::array();
  for (const Vec& v : t.witness) {
    w.push_back(vec_json(v));
    terms.push_back(combination(L, v));
  }
  j["witness"] = std::move(w);
  j["witness_terms"] = std::move(terms);
  ordered_json facts = ordered_json::object();
  for (const auto& [k, v] : t.facts) facts[k] = v;
  j["facts"] = std::move(facts);
  j["examined"] = t.examined;
  return j;
}

std::string tristate_text(const LieAlgebra& L, const std::string& property, const TriState& t) {
  std::ostringstream s;
  s << property << ": " << to_string(t.verdict) << "  [" << t.method << "]\n";
  if (!t.witness.empty()) {
    s << "  witness:";
    for (std::size_t k = 0; k < t.witness.size(); ++k) s << (k ? ", " : " ") << combination(L, t.witness[k]);
    s << "\n";
  }
  for (const auto& [k, v] : t.facts) s << "  " << k << ": " << v << "\n";
  if (t.examined) s << "  examined: " << t.examined << "\n";
  return s.str();
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::True: return kOk;
    case Verdict::False: return kFalse;
    default: return kUnknown;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

Vec parse_vector(const std::string& text, FieldSpec f, std::size_t n) {
  Vec v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      v.push_back(Scalar::parse(item, f));
    } catch (const Error& e) {
      throw UsageError("--vector: " + std::string(e.what()));
    }
  }
  if (v.size() != n) throw UsageError("--vector needs " + std::to_string(n) + " coordinates");
  return v;
}

/// "a,b;c,d" (rows separated by ';'), or "a,b,c,d" row-major when square.
Mat parse_matrix(const std::string& text) {
  std::vector<Vec> rows;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) {
    Vec r;
    std::stringstream rs(row);
    std::string item;
    while (std::getline(rs, item, ',')) r.push_back(Scalar::parse(item, Q));
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw UsageError("empty matrix");
  if (rows.size() == 1 && rows.front().size() > 1) {
    // A flat row-major list for a square matrix.
    const Vec flat = rows.front();
    std::size_t n = 1;
    while (n * n < flat.size()) ++n;
    if (n * n != flat.size()) throw UsageError("matrix entries do not form a square: " + text);
    rows.assign(n, Vec{});
    for (std::size_t k = 0; k < flat.size(); ++k) rows[k / n].push_back(flat[k]);
  }
  for (const Vec& r : rows)
    if (r.size() != rows.front().size()) throw UsageError("ragged matrix " + text);
  return Mat::from_rows(rows, rows.front().size(), Q);
}

std::vector<Mat> parse_matrices(const std::string& text) {
  std::vector<Mat> out;
  std::stringstream in(text);
  std::string one;
  while (std::getline(in, one, '|')) out.push_back(parse_matrix(one));
  return out;
}

mpq_class parse_rational(const std::string& text, const std::string& what) {
  try {
    return Scalar::parse(text, Q).rational();
  } catch (const Error& e) {
    throw UsageError(what + ": " + e.what());
  }
}

}  // namespace

Outcome run_check(const Options& o) {
  const Loaded in = load(o);
  const LieAlgebra& L = in.algebra;
  const SearchBudget budget = budget_of(o);
  TriState t;
  if (o.property == "anisotropic") {
    t = anisotropy_status(L, budget);
  } else if (o.property == "regular") {
    t = regularity_status(L, budget);
  } else if (o.property == "mna") {
    t = mna_status(L, budget);
  } else if (o.property == "depth2") {
    t = depth2_status(L, budget);
  } else {
    throw UsageError("unknown property " + o.property);
  }
  Outcome out;
  out.report = skeleton(o);
  describe_input(out.report, in);
  out.report["verdicts"] = ordered_json::array({tristate_json(L, o.property, t)});
  out.text = tristate_text(L, o.property, t);
  out.exit = exit_for(t.verdict);
  return out;
}

Outcome run_analyze(const Options& o) {
  const Loaded in = load(o);
  const LieAlgebra& L = in.algebra;
  Outcome out;
  out.report = skeleton(o);
  describe_input(out.report, in);
  std::ostringstream text;
  text << "dim " << L.dim() << " over "
       << (L.field().is_rational() ? "Q" : "F" + std::to_string(L.field().characteristic())) << "\n";

  const SeriesReport s = series(L);
  out.report["series"] = {{"derived_dims", s.derived_dims},
                          {"lower_central_dims", s.lower_central_dims},
                          {"solvable", s.solvable},
                          {"nilpotent", s.nilpotent}};
  text << "derived series: " << join(s.derived_dims) << "\n"
       << "lower central series: " << join(s.lower_central_dims) << "\n"
       << "solvable: " << yes_no(s.solvable) << ", nilpotent: " << yes_no(s.nilpotent) << "\n";

  ordered_json k;
  if (L.field().is_rational()) {
    const KillingReport kr = killing(L);
    k = {{"gram", mat_json(kr.gram)},
         {"rank", kr.rank},
         {"radical_dim", kr.radical.dim()},
         {"center_dim", kr.center.dim()},
         {"semisimple", kr.semisimple},
         {"reductive", kr.reductive}};
    text << "killing form rank " << kr.rank << ", radical dim " << kr.radical.dim() << ", center dim "
         << kr.center.dim() << "\n"
         << "semisimple: " << yes_no(kr.semisimple) << ", reductive: " << yes_no(kr.reductive) << "\n";
  } else {
    const Mat g = killing_gram(L);
    k = {{"gram", mat_json(g)}};
    text << "killing gram computed; radical needs characteristic 0\n";
  }
  out.report["killing"] = std::move(k);

  Verdict worst = Verdict::True;
  try {
    const RankCertificate rc = rank(L, o.budget ? static_cast<std::size_t>(*o.budget) : kDefaultRankBound);
    out.report["rank"] = {{"rank", rc.rank},
                          {"coefficient", rc.coefficient.str()},
                          {"witness_point", vec_json(rc.witness_point)}};
    text << "rank: " << rc.rank << "  (c_" << rc.rank << " = " << rc.coefficient.str() << ")\n";
  } catch (const DimensionBudgetExceeded& e) {
    out.report["rank"] = {{"unavailable", e.what()}};
    text << "rank: unavailable (" << e.what() << ")\n";
    worst = Verdict::Unknown;
  }

  const TriState simple = simplicity_status(L);
  out.report["verdicts"] = ordered_json::array({tristate_json(L, "simple", simple)});
  text << tristate_text(L, "simple", simple);
  if (simple.is_unknown()) worst = Verdict::Unknown;
  out.text = text.str();
  out.exit = worst == Verdict::Unknown ? kUnknown : kOk;
  return out;
}

Outcome run_element(const Options& o) {
  const Loaded in = load(o);
  const LieAlgebra& L = in.algebra;
  if (o.vector.empty()) throw UsageError("element needs --vector");
  const Vec x = parse_vector(o.vector, L.field(), L.dim());
  Outcome out;
  out.report = skeleton(o);
  describe_input(out.report, in);
  std::optional<std::size_t> rk;
  try {
    rk = rank(L).rank;
  } catch (const DimensionBudgetExceeded&) {
  }
  const ElementReport e = element_report(L, x, rk.value_or(0));
  ordered_json j = {{"element", vec_json(x)},
                    {"terms", combination(L, x)},
                    {"charpoly", e.charpoly.str()},
                    {"minpoly", e.minpoly.str()},
                    {"semisimple", e.semisimple},
                    {"nilpotent", e.nilpotent},
                    {"fitting0_dim", e.fitting0_dim}};
  if (rk) {
    j["rank"] = *rk;
    j["regular"] = e.regular;
  } else {
    j["rank"] = nullptr;
    j["regular"] = nullptr;
  }
  out.report["element"] = std::move(j);
  std::ostringstream text;
  text << "element: " << combination(L, x) << "\n"
       << "charpoly of ad: " << e.charpoly.str() << "\n"
       << "minpoly of ad: " << e.minpoly.str() << "\n"
       << "ad-semisimple: " << yes_no(e.semisimple) << ", ad-nilpotent: " << yes_no(e.nilpotent) << "\n"
       << "Fitting null dim: " << e.fitting0_dim << "\n";
  if (rk) {
    text << "regular: " << yes_no(e.regular) << " (rank " << *rk << ")\n";
  } else {
    text << "regular: unknown (rank unavailable)\n";
  }
  out.text = text.str();
  out.exit = rk ? kOk : kUnknown;
  return out;
}

Outcome run_rank(const Options& o) {
  const Loaded in = load(o);
  const LieAlgebra& L = in.algebra;
  Outcome out;
  out.report = skeleton(o);
  describe_input(out.report, in);
  try {
    const RankCertificate rc = rank(L, o.budget ? static_cast<std::size_t>(*o.budget) : kDefaultRankBound);
    ordered_json coeffs = ordered_json::array();
    for (const MPoly& c : rc.coefficients) coeffs.push_back(c.str());
    out.report["rank"] = {{"rank", rc.rank},
                          {"coefficient", rc.coefficient.str()},
                          {"vanished_below", rc.vanished_below},
                          {"witness_point", vec_json(rc.witness_point)},
                          {"coefficients", std::move(coeffs)}};
    std::ostringstream text;
    text << "rank: " << rc.rank << "\n"
         << "c_" << rc.rank << "(t) = " << rc.coefficient.str() << "\n"
         << "lower coefficients vanish identically: " << yes_no(rc.vanished_below) << "\n";
    if (!rc.witness_point.empty()) text << "nonzero at t = " << to_string(rc.witness_point) << "\n";
    out.text = text.str();
  } catch (const DimensionBudgetExceeded& e) {
    out.report["rank"] = {{"unavailable", e.what()}};
    out.text = std::string("rank: unavailable (") + e.what() + ")\n";
    out.exit = kUnknown;
  }
  return out;
}

Outcome run_construct(const Options& o) {
  std::map<std::string, std::string> kv;
  for (const std::string& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--params entries are key=value: " + p);
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  auto need = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw UsageError(o.family + " needs --params " + key + "=...");
    return it->second;
  };
  FieldSpec field = Q;
  if (kv.count("p")) field = FieldSpec::prime(std::stoul(kv.at("p")));

  FamilyInstance inst;
  const std::string& f = o.family;
  if (f == "sl2" || f == "heisenberg" || f == "aff1") {
    const Prototypes p = prototypes(field);
    inst.tag = f == "sl2" ? Family::Sl2 : f == "heisenberg" ? Family::Heisenberg : Family::Aff1;
    inst.algebra = f == "sl2" ? p.sl2 : f == "heisenberg" ? p.heisenberg : p.aff1;
    inst.validation = TriState::yes("prototype");
  } else if (f == "abelian") {
    inst.algebra = LieAlgebra::abelian(std::stoul(need("n")), field);
    inst.validation = TriState::yes("prototype");
  } else if (f == "case_i_ii") {
    inst = case_i_ii(parse_matrix(need("m")));
  } else if (f == "case_iii") {
    inst = case_iii(pure_lie_algebra(parse_rational(need("a"), "a"), parse_rational(need("b"), "b")), budget_of(o));
  } else if (f == "case_iv") {
    const std::string s = need("s");
    LieAlgebra base;
    if (s == "aff1") {
      base = prototypes(Q).aff1;
    } else if (s == "sl2") {
      base = prototypes(Q).sl2;
    } else if (s.rfind("pure:", 0) == 0) {
      const auto comma = s.find(',', 5);
      if (comma == std::string::npos) throw UsageError("s=pure:a,b");
      base = pure_lie_algebra(parse_rational(s.substr(5, comma - 5), "a"), parse_rational(s.substr(comma + 1), "b"));
    } else {
      throw UsageError("s must be aff1, sl2 or pure:a,b");
    }
    inst = case_iv(base, parse_matrices(need("rho")));
  } else if (f == "case_v") {
    inst = case_v(parse_matrices(need("rho")));
  } else if (f == "pure") {
    inst.algebra = pure_lie_algebra(parse_rational(need("a"), "a"), parse_rational(need("b"), "b"));
    inst.validation = TriState::yes("quaternion");
  } else if (f == "quadratic") {
    inst.algebra = quadratic_restriction(pure_lie_algebra(parse_rational(need("a"), "a"), parse_rational(need("b"), "b")),
                                         std::stol(need("d")));
    inst.validation = TriState::yes("restriction");
  } else {
    throw UsageError("unknown family " + f +
                     " (sl2, heisenberg, aff1, abelian, case_i_ii, case_iii, case_iv, case_v, pure, quadratic)");
  }
  Outcome out;
  out.raw = io::emit_algebra(inst.algebra);
  out.report = skeleton(o);
  out.report["verdicts"] = ordered_json::array({tristate_json(inst.algebra, "validation", inst.validation)});
  out.text = tristate_text(inst.algebra, "validation", inst.validation);
  out.exit = exit_for(inst.validation.verdict);
  return out;
}

Outcome run_depth_fp(const Options& o) {
  Loaded in = load(o);
  if (o.p == 0) throw UsageError("depth-fp needs --p");
  LieAlgebra L = in.algebra;
  if (L.field().is_rational()) {
    L = reduce_mod_p(L, o.p);
  } else if (L.field().characteristic() != o.p) {
    throw UsageError("input is over F" + std::to_string(L.field().characteristic()) + ", not F" + std::to_string(o.p));
  }
  OracleOptions opts;
  if (o.budget) opts.subspace_guard = static_cast<double>(*o.budget);
  Outcome out;
  out.report = skeleton(o);
  describe_input(out.report, in);
  try {
    const SubalgebraEnumeration e = enumerate_subalgebras(L, opts);
    const std::vector<std::size_t> depths = depth_table(e);
    const std::size_t depth = depths.back();
    out.report["depth"] = {{"p", o.p}, {"depth", depth}, {"subalgebras_by_dim", e.counts_by_dim}};
    out.text = "depth over F" + std::to_string(o.p) + ": " + std::to_string(depth) + "\nsubalgebras by dimension: " +
               join(e.counts_by_dim) + "\n";
  } catch (const BudgetGuardExceeded& e) {
    out.report["depth"] = {{"p", o.p}, {"unavailable", e.what()}};
    out.text = std::string("depth: unavailable (") + e.what() + ")\n";
    out.exit = kUnknown;
  }
  return out;
}

Outcome run_quat(const Options& o) {
  if (o.a.empty() || o.b.empty()) throw UsageError("quat needs --a and --b");
  const mpq_class a = parse_rational(o.a, "--a"), b = parse_rational(o.b, "--b");
  if (a == 0 || b == 0) throw UsageError("--a and --b must be nonzero");
  const QuaternionReport rep = certified_report(a, b);
  ordered_json places = ordered_json::array();
  for (const Place& v : rep.certificate.ramified) places.push_back(v.str());
  Outcome out;
  out.report = skeleton(o);
  ordered_json q = {{"a", a.get_str()}, {"b", b.get_str()}, {"division", rep.certificate.division}, {"ramified", places}};
  std::ostringstream text;
  text << "(" << a.get_str() << ", " << b.get_str() << ") is " << (rep.certificate.division ? "a division algebra" : "split")
       << "; ramified at " << rep.certificate.ramified_str() << "\n";
  if (rep.certificate.division) {
    q["anisotropic"] = std::string(to_string(rep.anisotropic));
    q["regular"] = std::string(to_string(rep.regular));
    q["minimal_nonabelian"] = std::string(to_string(rep.minimal_nonabelian));
    q["depth"] = rep.depth;
    text << "pure quaternions: anisotropic " << to_string(rep.anisotropic) << ", regular " << to_string(rep.regular)
         << ", minimal nonabelian " << to_string(rep.minimal_nonabelian) << ", depth " << rep.depth << "\n";
  } else {
    q["isomorphic_to_sl2"] = rep.isomorphic_to_sl2;
    q["nilpotent_witness"] = vec_json(rep.nilpotent_witness);
    text << "pure quaternions are isomorphic to sl2; nilpotent element "
         << combination(rep.algebra, rep.nilpotent_witness) << "\n";
  }
  out.report["quaternion"] = std::move(q);
  out.text = text.str();
  return out;
}

Outcome run_verify_suite(const Options& o) {
  suite::Zoo zoo;
  if (o.zoo == "default") {
    zoo = suite::Zoo::Default;
  } else if (o.zoo == "quaternion") {
    zoo = suite::Zoo::Quaternion;
  } else {
    throw UsageError("--zoo is default or quaternion");
  }
  std::vector<suite::Fixture> extra;
  for (const std::string& path : o.inputs) extra.push_back({path, read_bytes(path)});
  const suite::SuiteReport rep = suite::verify_suite(zoo, o.seed, extra);
  Outcome out;
  out.report = skeleton(o);
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const suite::Row& r : rep.rows) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
  }
  ordered_json rejected = ordered_json::array();
  for (const auto& [name, why] : rep.rejected) {
    rejected.push_back({{"fixture", name}, {"reason", why}});
    text << "REJECTED " << name << ": " << why << "\n";
  }
  out.report["rows"] = std::move(rows);
  out.report["rejected"] = std::move(rejected);
  out.report["passed"] = rep.passed();
  out.text = text.str();
  out.exit = rep.passed() ? kOk : kFalse;
  return out;
}

}  // namespace lieprop::cli
