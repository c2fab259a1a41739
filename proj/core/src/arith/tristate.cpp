#include "lieprop/arith/tristate.hpp"

namespace lieprop {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::True:
      return "True";
    case Verdict::False:
      return "False";
    case Verdict::Unknown:
      break;
  }
  return "Unknown";
}

std::string TriState::fact(std::string_view key) const {
  for (const auto& [k, v] : facts)
    if (k == key) return v;
  return {};
}

Verdict conjunction(Verdict a, Verdict b) noexcept {
  if (a == Verdict::False || b == Verdict::False) return Verdict::False;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::True;
}

}  // namespace lieprop
