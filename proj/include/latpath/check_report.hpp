#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace latpath {

struct Mismatch {
  std::string where;     // e.g. "n=7" or "(i,j)=(3,2)"
  std::string expected;  // left-hand side of the identity
  std::string actual;    // right-hand side
};

/// Outcome of an identity verification: how many instances were checked and
/// the first one that failed, if any.
struct CheckReport {
  std::string name;
  std::size_t cases = 0;
  std::optional<Mismatch> first_failure;

  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  bool passed() const { return !first_failure.has_value(); }
  explicit operator bool() const { return passed(); }

  /// Counts one instance; keeps only the first failure.
  void record(bool ok, const std::string& where, const std::string& lhs,
              const std::string& rhs) {
    ++cases;
    if (!ok && !first_failure) first_failure = Mismatch{where, lhs, rhs};
  }

  template <class T>
  void compare(const T& lhs, const T& rhs, const std::string& where) {
    ++cases;
    if (!(lhs == rhs) && !first_failure) {
      first_failure = Mismatch{where, lhs.to_string(), rhs.to_string()};
    }
  }

  void merge(const CheckReport& other) {
    cases += other.cases;
    if (!first_failure && other.first_failure) first_failure = other.first_failure;
  }
};

}  // namespace latpath
