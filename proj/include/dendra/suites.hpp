#pragma once

// Named verification suites over named structures, as run by the command
// line tool.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dendra/structures/mr.hpp"
#include "dendra/structures/rota_baxter.hpp"
#include "dendra/structures/trees.hpp"
#include "dendra/structures/words.hpp"
#include "dendra/verdict.hpp"

namespace dendra {

/// Unknown suite or structure, malformed structure string, or a suite that
/// does not apply to the chosen structure.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyStructure =
    std::variant<ShuffleStructure, MaxStructure, MalvenutoReutenauer, FreeDendriform, SeqMatRB, PolyMatRB>;

/// "shuffle", "max", "max-rev", "mr", "free",
/// "rb-seqmat:θ=<q>,k=<int>,N=<int>" (also "theta=", every key optional,
/// defaults θ=1, k=2, N=6), "rb-polymat:k=<int>" (default k=2).
/// `theta` overrides the weight of rb-seqmat. Throws UsageError.
AnyStructure parse_structure(std::string_view text, const std::optional<Scalar>& theta = std::nullopt);

std::string structure_name(const AnyStructure& s);

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// The eleven suites, in display order.
const std::vector<SuiteInfo>& suite_catalogue();

struct SuiteParams {
  std::optional<int> n;
  int degree = 5;
  int cap = 6;
  std::uint64_t seed = 42;
  int jobs = 1;
};

struct SuiteReport {
  std::string suite;
  std::string structure;
  std::map<std::string, std::string> params;
  Verdict verdict;
  long elapsed_ms = 0;
};

/// Default n of a suite when --n is absent: 8 for census, 5 for pbw and
/// convolution, 6 otherwise.
int default_n(std::string_view suite);

/// Runs one suite. Throws UsageError for an unknown suite or a suite that
/// needs a Rota-Baxter structure.
SuiteReport run_suite(std::string_view suite, const AnyStructure& structure, const SuiteParams& params);

/// The single element a used by the one-element suites.
std::string describe_default_element(const AnyStructure& structure);

/// The operations of `expand`: w-left, w-right, ell, r, dynkin-w,
/// theorem33-right, theorem33-left.
const std::vector<std::string>& expand_operations();

/// The degree-n value of `op` at a, rendered in full. `element` replaces the
/// default a and is accepted for the word structures only. Throws
/// UsageError.
std::string expand(const AnyStructure& structure, std::string_view op, int n,
                   const std::optional<std::string>& element, std::uint64_t seed = 42);

/// Omega^(1..cap) of the default element, rendered in full.
std::vector<std::string> omega_coefficients(const AnyStructure& structure, int cap, std::uint64_t seed = 42);

}  // namespace dendra
