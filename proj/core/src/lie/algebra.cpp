#include "lieprop/lie/algebra.hpp"

#include <algorithm>

namespace lieprop {

namespace {

std::string describe(const std::vector<JacobiTriple>& triples) {
  std::string msg = "Jacobi identity fails on " + std::to_string(triples.size()) + " triple(s)";
  const std::size_t shown = std::min<std::size_t>(triples.size(), 3);
  for (std::size_t t = 0; t < shown; ++t) {
    const auto& tr = triples[t];
    msg += (t == 0 ? ": " : ", ");
    msg += "(" + std::to_string(tr.i) + "," + std::to_string(tr.j) + "," + std::to_string(tr.k) +
           ") residual " + to_string(tr.residual);
  }
  if (shown < triples.size()) msg += ", ...";
  return msg;
}

// Dense table of all brackets [e_a, e_b] from the i<j records.
std::vector<Vec> dense_table(std::size_t n, FieldSpec field, const std::vector<BracketEntry>& brackets) {
  std::vector<Vec> table(n * n, zero_vec(n, field));
  for (const auto& b : brackets) {
    table[b.i * n + b.j] = b.value;
    table[b.j * n + b.i] = Scalar(-1, field) * b.value;
  }
  return table;
}

void check_entries(std::size_t n, FieldSpec field, const std::vector<BracketEntry>& brackets) {
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw IndexOutOfRange("bracket index out of range");
    if (b.i >= b.j) throw IndexOutOfRange("bracket entries need i < j");
    if (b.value.size() != n) throw DimensionMismatch("bracket value has wrong length");
    for (const auto& c : b.value)
      if (c.field() != field) throw FieldMismatch("bracket coefficient from another field");
  }
}

}  // namespace

JacobiViolation::JacobiViolation(std::vector<JacobiTriple> triples)
    : Error(describe(triples)), triples_(std::move(triples)) {}

std::vector<JacobiTriple> jacobi_residuals(std::size_t n, FieldSpec field,
                                           const std::vector<BracketEntry>& brackets) {
  check_entries(n, field, brackets);
  const std::vector<Vec> table = dense_table(n, field, brackets);
  auto br = [&](const Vec& x, std::size_t b) {
    // [x, e_b] for a vector x.
    Vec out = zero_vec(n, field);
    for (std::size_t a = 0; a < n; ++a) {
      if (x[a].is_zero()) continue;
      const Vec& t = table[a * n + b];
      for (std::size_t k = 0; k < n; ++k)
        if (!t[k].is_zero()) out[k] += x[a] * t[k];
    }
    return out;
  };
  auto neg = [&](const Vec& v) { return Scalar(-1, field) * v; };
  std::vector<JacobiTriple> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [e_i,[e_j,e_k]] = -[[e_j,e_k], e_i], and cyclically.
        Vec r = neg(br(table[j * n + k], i)) + neg(br(table[k * n + i], j)) +
                neg(br(table[i * n + j], k));
        if (!is_zero(r)) bad.push_back({i, j, k, std::move(r)});
      }
  return bad;
}

LieAlgebra LieAlgebra::validate(std::size_t dim, FieldSpec field, std::vector<BracketEntry> brackets,
                                std::vector<std::string> labels) {
  check_entries(dim, field, brackets);
  std::sort(brackets.begin(), brackets.end(), [](const BracketEntry& a, const BracketEntry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t t = 1; t < brackets.size(); ++t) {
    if (brackets[t].i == brackets[t - 1].i && brackets[t].j == brackets[t - 1].j) {
      throw BadScalar("duplicate bracket entry (" + std::to_string(brackets[t].i) + "," +
                      std::to_string(brackets[t].j) + ")");
    }
  }
  brackets.erase(std::remove_if(brackets.begin(), brackets.end(),
                                [](const BracketEntry& b) { return is_zero(b.value); }),
                 brackets.end());
  if (!labels.empty() && labels.size() != dim) throw DimensionMismatch("label count differs from dimension");

  auto bad = jacobi_residuals(dim, field, brackets);
  if (!bad.empty()) throw JacobiViolation(std::move(bad));

  LieAlgebra L;
  L.dim_ = dim;
  L.field_ = field;
  L.brackets_ = std::move(brackets);
  L.custom_labels_ = !labels.empty();
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  L.labels_ = std::move(labels);

  const std::vector<Vec> table = dense_table(dim, field, L.brackets_);
  L.ad_.assign(dim, Mat(dim, dim, field));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) L.ad_[a].set_col(b, table[a * dim + b]);
  return L;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, FieldSpec field) { return validate(dim, field, {}); }

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexOutOfRange("basis index out of range");
  return ad_[i].col(j);
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("element has wrong length");
  Mat out(dim_, dim_, field_);
  for (std::size_t a = 0; a < dim_; ++a)
    if (!x[a].is_zero()) out = out + x[a] * ad_[a];
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (y.size() != dim_) throw DimensionMismatch("element has wrong length");
  return ad(x).apply(y);
}

}  // namespace lieprop
