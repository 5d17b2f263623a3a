#pragma once

// Outcome of an exact verification run: how many equalities were checked
// and the first one that failed, rendered for reports.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace dendra {

inline constexpr std::size_t kReportTermLimit = 20;

struct Counterexample {
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string diff;
};

struct Verdict {
  std::size_t checks = 0;
  std::optional<Counterexample> failure;

  bool passed() const { return !failure && checks > 0; }

  void merge(const Verdict& other) {
    checks += other.checks;
    if (!failure && other.failure) failure = other.failure;
  }
};

template <class V>
std::string render_for_report(const V& x) {
  if constexpr (requires { render_truncated(x, kReportTermLimit); }) {
    return render_truncated(x, kReportTermLimit);
  } else {
    return to_string(x);
  }
}

/// Counts one check; records the first mismatch with both sides and their
/// difference.
template <class V>
bool expect_equal(Verdict& verdict, std::string_view label, const V& lhs, const V& rhs) {
  ++verdict.checks;
  if (lhs == rhs) return true;
  if (!verdict.failure) {
    V diff = lhs;
    diff -= rhs;
    verdict.failure = Counterexample{std::string(label), render_for_report(lhs), render_for_report(rhs),
                                     render_for_report(diff)};
  }
  return false;
}

inline bool expect_true(Verdict& verdict, std::string_view label, bool ok, std::string_view detail = "") {
  ++verdict.checks;
  if (!ok && !verdict.failure) {
    verdict.failure = Counterexample{std::string(label), std::string(detail), "", ""};
  }
  return ok;
}

}  // namespace dendra
