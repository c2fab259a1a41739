#pragma once

#include <cstddef>
#include <vector>

namespace lieprop {

/// Deterministic enumeration of primitive integer vectors by increasing
/// height (max absolute entry).
///
/// Within one height, vectors are read as mixed-radix numbers with
/// coordinate 0 least significant and digit order 0, 1, -1, 2, -2, ...;
/// vectors whose first nonzero entry is negative, and non-primitive ones,
/// are skipped since they span the same line as an earlier vector.
class HeightOrder {
 public:
  HeightOrder(std::size_t n, long max_height);

  /// Writes the next vector into `out`; false once exhausted.
  bool next(std::vector<long>& out);
  long current_height() const noexcept { return height_; }

 private:
  bool advance();
  bool acceptable() const;

  std::size_t n_;
  long max_height_;
  long height_ = 0;
  std::vector<long> digits_;  // digit indices in [0, 2 * height]
  bool started_ = false;
};

}  // namespace lieprop
