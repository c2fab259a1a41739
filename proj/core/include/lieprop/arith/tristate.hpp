#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieprop/arith/scalar.hpp"

namespace lieprop {

enum class Verdict { True, False, Unknown };

std::string_view to_string(Verdict v) noexcept;

/// A three-valued decision with its evidence.
///
/// True carries a certificate, False a witness that an independent operation
/// can re-check, Unknown the budget consumed. `method` names the rule that
/// fired; `facts` are ordered key/value certificate items for reports.
struct TriState {
  Verdict verdict = Verdict::Unknown;
  std::string method;
  std::vector<Vec> witness;
  std::vector<std::pair<std::string, std::string>> facts;
  std::size_t examined = 0;

  static TriState yes(std::string method) { return {Verdict::True, std::move(method), {}, {}, 0}; }
  static TriState no(std::string method, std::vector<Vec> witness) {
    return {Verdict::False, std::move(method), std::move(witness), {}, 0};
  }
  static TriState unknown(std::string method, std::size_t examined) {
    return {Verdict::Unknown, std::move(method), {}, {}, examined};
  }

  TriState& with(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  bool is_true() const noexcept { return verdict == Verdict::True; }
  bool is_false() const noexcept { return verdict == Verdict::False; }
  bool is_unknown() const noexcept { return verdict == Verdict::Unknown; }
  /// The value recorded under `key`, or empty.
  std::string fact(std::string_view key) const;
};

/// Three-valued conjunction: False dominates, then Unknown.
Verdict conjunction(Verdict a, Verdict b) noexcept;

}  // namespace lieprop
