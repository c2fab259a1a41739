// Hand-entered structure tables shared by the unit tests. These are typed in
// directly rather than taken from the families module so that constructor
// bugs cannot hide behind themselves.
#pragma once

#include <string>
#include <vector>

#include "lieprop/lie/algebra.hpp"

namespace fixture {

using lieprop::BracketEntry;
using lieprop::FieldSpec;
using lieprop::LieAlgebra;

inline BracketEntry entry(std::size_t i, std::size_t j, const std::vector<long>& v, FieldSpec f) {
  return {i, j, lieprop::int_vec(v, f)};
}

/// Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2(FieldSpec f = FieldSpec::rationals()) {
  return LieAlgebra::validate(3, f,
                              {entry(0, 1, {-2, 0, 0}, f), entry(0, 2, {0, 1, 0}, f),
                               entry(1, 2, {0, 0, -2}, f)},
                              {"e", "h", "f"});
}

/// Basis (x, y, z): [x,y] = z.
inline LieAlgebra heisenberg(FieldSpec f = FieldSpec::rationals()) {
  return LieAlgebra::validate(3, f, {entry(0, 1, {0, 0, 1}, f)}, {"x", "y", "z"});
}

/// Basis (t, x): [t,x] = x.
inline LieAlgebra aff1(FieldSpec f = FieldSpec::rationals()) {
  return LieAlgebra::validate(2, f, {entry(0, 1, {0, 1}, f)}, {"t", "x"});
}

/// Basis (x, y, z, t): [x,y] = z, [t,x] = y, [t,y] = 2x; ad t on span(x,y) is [[0,2],[1,0]].
inline LieAlgebra case_i_sqrt2(FieldSpec f = FieldSpec::rationals()) {
  return LieAlgebra::validate(4, f,
                              {entry(0, 1, {0, 0, 1, 0}, f), entry(0, 3, {0, -1, 0, 0}, f),
                               entry(1, 3, {-2, 0, 0, 0}, f)},
                              {"x", "y", "z", "t"});
}

/// Pure quaternions of (a, b) on (i, j, k): [i,j] = 2k, [i,k] = 2a j, [j,k] = -2b i.
inline LieAlgebra pure_quaternions(long a, long b, FieldSpec f = FieldSpec::rationals()) {
  return LieAlgebra::validate(3, f,
                              {entry(0, 1, {0, 0, 2}, f), entry(0, 2, {0, 2 * a, 0}, f),
                               entry(1, 2, {-2 * b, 0, 0}, f)},
                              {"i", "j", "k"});
}

}  // namespace fixture
