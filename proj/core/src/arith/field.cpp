#include "lieprop/arith/field.hpp"

#include "lieprop/errors.hpp"

namespace lieprop {

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime_u64(p)) {
    throw BadScalar("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

}  // namespace lieprop
