#include "lieprop/arith/height_order.hpp"

#include <cstdlib>
#include <numeric>

namespace lieprop {

namespace {

long digit_value(long idx) { return idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2); }

}  // namespace

HeightOrder::HeightOrder(std::size_t n, long max_height) : n_(n), max_height_(max_height) {}

bool HeightOrder::advance() {
  if (!started_) {
    started_ = true;
    height_ = (n_ == 0 || max_height_ < 1) ? max_height_ + 1 : 1;
    digits_.assign(n_, 0);
    return height_ <= max_height_;
  }
  if (height_ > max_height_) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    if (digits_[i] < 2 * height_) {
      ++digits_[i];
      return true;
    }
    digits_[i] = 0;
  }
  // All digits wrapped back to zero: move on to the next height.
  return ++height_ <= max_height_;
}

bool HeightOrder::acceptable() const {
  long g = 0;
  bool at_height = false;
  long first = 0;
  for (long idx : digits_) {
    long v = digit_value(idx);
    if (first == 0) first = v;
    if (std::labs(v) == height_) at_height = true;
    g = std::gcd(g, std::labs(v));
  }
  return at_height && g == 1 && first > 0;
}

bool HeightOrder::next(std::vector<long>& out) {
  while (advance()) {
    if (acceptable()) {
      out.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) out[i] = digit_value(digits_[i]);
      return true;
    }
  }
  return false;
}

}  // namespace lieprop
