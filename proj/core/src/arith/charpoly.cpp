#include "lieprop/arith/charpoly.hpp"

#include "lieprop/arith/linalg.hpp"

namespace lieprop {

UPoly charpoly(const Mat& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j));
  const FieldSpec f = m.field();
  return UPoly(berkowitz(entries, n, Scalar::zero(f), Scalar::one(f)), f);
}

std::vector<MPoly> charpoly(const std::vector<MPoly>& entries, std::size_t n) {
  if (entries.size() != n * n) throw NotSquare();
  if (n == 0) throw DimensionMismatch("empty polynomial matrix");
  const MPoly& any = entries.front();
  MPoly zero(any.nvars(), any.field());
  MPoly one = MPoly::constant(any.nvars(), Scalar::one(any.field()));
  return berkowitz(entries, n, zero, one);
}

MinimalPolynomial minpoly(const Mat& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  const FieldSpec f = m.field();
  if (n == 0) return {UPoly::constant(Scalar::one(f)), true};

  // Columns are the flattened powers M^0 .. M^k; the first k whose power is
  // dependent on the earlier ones fixes the degree.
  std::vector<Vec> powers;
  Mat power = Mat::identity(n, f);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(power(i, j));
    powers.push_back(std::move(flat));

    Mat sys(n * n, powers.size(), f);
    for (std::size_t c = 0; c < powers.size(); ++c) sys.set_col(c, powers[c]);
    Mat ker = kernel(sys);
    if (ker.rows() > 0) {
      // A dependency necessarily involves the newest power; normalize it to 1.
      Vec dep = ker.row(0);
      Scalar lead = dep.back();
      Vec coeffs;
      for (const Scalar& c : dep) coeffs.push_back(c / lead);
      UPoly p(coeffs, f);
      return {p, is_squarefree(p)};
    }
    power = power * m;
  }
  throw Error("minimal polynomial search exceeded the matrix size");
}

}  // namespace lieprop
