#include "dendra/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "dendra/hopf.hpp"
#include "dendra/lyndon.hpp"
#include "dendra/magnus.hpp"
#include "dendra/rb_identities.hpp"

namespace dendra {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

int parse_positive(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size() || v < 1) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError(key + " must be a positive integer, got '" + value + "'");
  }
}

// "key=value,key=value" after the colon of an rb-* structure string.
std::map<std::string, std::string> parse_options(std::string_view text) {
  std::map<std::string, std::string> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value in '" + std::string(item) + "'");
    std::string key = trim(item.substr(0, eq));
    if (key == "theta") key = "θ";
    out[key] = trim(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

AnyStructure parse_structure(std::string_view text, const std::optional<Scalar>& theta) {
  if (text == "shuffle") return ShuffleStructure();
  if (text == "max") return MaxStructure(3, LetterOrder::increasing);
  if (text == "max-rev") return MaxStructure(3, LetterOrder::decreasing);
  if (text == "mr") return MalvenutoReutenauer();
  if (text == "free") return FreeDendriform();
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const auto options = colon == std::string_view::npos ? std::map<std::string, std::string>{}
                                                       : parse_options(text.substr(colon + 1));
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
  };
  auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : options) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
        throw UsageError("unknown option '" + k + "' for " + std::string(head));
      }
    }
  };
  if (head == "rb-seqmat") {
    reject_unknown({"θ", "k", "N"});
    Scalar weight;
    try {
      weight = theta ? *theta : parse_scalar(get("θ", "1"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("θ: ") + e.what());
    }
    const int k = parse_positive("k", get("k", "2"));
    const int horizon = parse_positive("N", get("N", "6"));
    try {
      return SeqMatRB(SeqMatAlgebra(horizon, k, weight), RBVariant::plain);
    } catch (const RBWeightCheckFailure& e) {
      throw UsageError(e.what());
    }
  }
  if (head == "rb-polymat") {
    reject_unknown({"k"});
    if (theta && *theta != 0) throw UsageError("rb-polymat has weight 0");
    return PolyMatRB(PolyMatAlgebra(parse_positive("k", get("k", "2"))), RBVariant::plain);
  }
  throw UsageError("unknown structure '" + std::string(text) + "'");
}

std::string structure_name(const AnyStructure& s) {
  return std::visit([](const auto& x) { return std::string(x.name()); }, s);
}

const std::vector<SuiteInfo>& suite_catalogue() {
  static const std::vector<SuiteInfo> catalogue = {
      {"axioms", "dendriform axioms and unit conventions on all basis triples up to --degree"},
      {"prelie-laws", "pre-Lie laws, the three Lie bracket forms, and l^(n) = (-1)^(n-1) r^(n)"},
      {"lemma-dynkin", "D(w_>^(n)(a)) = l^(n)(a) from the w-subalgebra coproduct and antipode"},
      {"theorem33", "power sums as composition sums of l- and r-products, opposite structure, Gamma"},
      {"theorem51", "symmetrized half products over S_n against sum T_sigma and sum U_sigma"},
      {"magnus", "Omega^(1..3), exp*(Omega) = Y, log*(Y) = Omega, Dynkin ODE"},
      {"pbw", "x1...xn = sum over Lyn(beta) of Dynkin bracket products, for all beta"},
      {"census", "permutations by Lyndon sequence against n!/(i1(i1+i2)...)"},
      {"rb-corollary", "Rota-Baxter form of the S_n identities and of the pre-Lie products"},
      {"rb-spitzer", "R applied to both Rota-Baxter identities; classical Spitzer when commutative"},
      {"convolution", "Dynkin convolution identity on T(X) and the MAX ordered set partition identity"},
  };
  return catalogue;
}

int default_n(std::string_view suite) {
  if (suite == "census") return 8;
  if (suite == "pbw" || suite == "convolution") return 5;
  return 6;
}

namespace {

template <class S>
constexpr bool is_rb = std::is_same_v<S, SeqMatRB> || std::is_same_v<S, PolyMatRB>;

template <class S>
value_t<S> single_element(const S& s, std::uint64_t seed) {
  if constexpr (std::is_same_v<S, ShuffleStructure>) {
    return letter(1) + letter(2);
  } else if constexpr (std::is_same_v<S, MaxStructure>) {
    return letter(1) + letter(2) + letter(3);
  } else if constexpr (std::is_same_v<S, MalvenutoReutenauer>) {
    return perm_elem(Permutation{1});
  } else if constexpr (std::is_same_v<S, FreeDendriform>) {
    return s.generator();
  } else {
    std::mt19937_64 rng(seed);
    return lift(s.algebra().random(rng));
  }
}

template <class S>
std::vector<value_t<S>> argument_list(const S& s, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<value_t<S>> out;
  if constexpr (std::is_same_v<S, ShuffleStructure>) {
    for (int i = 1; i <= n; ++i) out.push_back(letter(i));
  } else if constexpr (std::is_same_v<S, MaxStructure>) {
    std::vector<int> beta(static_cast<std::size_t>(n));
    std::iota(beta.begin(), beta.end(), 1);
    std::shuffle(beta.begin(), beta.end(), rng);
    for (int b : beta) out.push_back(letter(b));
  } else if constexpr (std::is_same_v<S, MalvenutoReutenauer>) {
    for (int i = 1; i <= n; ++i) out.push_back(random_scalar(rng) * perm_elem(Permutation{1}));
    if (n <= 4) out.back() += perm_elem(Permutation{1, 2}) - Scalar(2) * perm_elem(Permutation{2, 1});
  } else if constexpr (std::is_same_v<S, FreeDendriform>) {
    const TreeElem a = s.generator();
    for (int i = 1; i <= n; ++i) out.push_back(random_scalar(rng) * a);
    if (n <= 4) out.back() += succ(s, a, a);
  } else {
    for (int i = 1; i <= n; ++i) out.push_back(lift(s.algebra().random(rng)));
  }
  return out;
}

template <class S>
Verdict suite_axioms(const S& s, const SuiteParams& p) {
  Verdict v = check_axioms(s, p.degree);
  v.merge(check_axioms(opposite(s), p.degree));
  if constexpr (is_rb<S>) {
    const auto& alg = s.algebra();
    v.merge(check_axioms(RBDendriform(alg, RBVariant::primed), p.degree));
    v.merge(check_rota_baxter(alg, p.degree, 16, p.seed));
    v.merge(check_rota_baxter(TildeOperator(alg), p.degree, 16, p.seed));
  }
  return v;
}

template <class S>
Verdict suite_prelie(const S& s, const SuiteParams& p) {
  Verdict v;
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < 4; ++i) {
    const auto a = s.random_element(rng, 3);
    const auto b = s.random_element(rng, 3);
    const auto c = s.random_element(rng, 3);
    v.merge(check_prelie_laws(s, a, b, c));
  }
  const auto a = single_element(s, p.seed);
  const auto ells = ell_powers(s, a, p.degree);
  const auto rs = r_powers(s, a, p.degree);
  for (int n = 1; n <= p.degree; ++n) {
    expect_equal(v, "ℓ^(n)(a) = (−1)^(n−1) r^(n)(a)", ells[n], Scalar(sign_power(n - 1)) * rs[n]);
  }
  return v;
}

template <class S>
Verdict suite_theorem33(const S& s, int n, const SuiteParams& p) {
  const auto a = single_element(s, p.seed);
  Verdict v = check_theorem33(s, a, n);
  v.merge(check_gamma_inverts_dynkin(s, a, n));
  if constexpr (std::is_same_v<S, MalvenutoReutenauer>) {
    for (int m = 1; m <= n; ++m) {
      expect_equal(v, "MR: w_≺^(n)(1) = 1⋯n", w_left(s, a, m), perm_elem(Permutation::identity(m)));
    }
  }
  return v;
}

template <class S>
Verdict suite_magnus(const S& s, const SuiteParams& p) {
  const auto a = single_element(s, p.seed);
  Verdict v = check_magnus(s, a, p.cap);
  v.merge(dynkin_ode_check(s, a, p.cap));
  return v;
}

Verdict suite_pbw(int n) {
  Verdict v;
  for (int m = 1; m <= n; ++m) {
    std::vector<Letter> letters(static_cast<std::size_t>(m));
    std::iota(letters.begin(), letters.end(), 1);
    const WordElem target = word_elem(Word(letters));
    for (const auto& beta : all_permutations(m)) {
      const auto lyn = lyn_set(beta);
      expect_true(v, "identity ∈ Lyn(β)", std::find(lyn.begin(), lyn.end(), Permutation::identity(m)) != lyn.end(),
                  render_key(beta));
      expect_equal(v, "x1⋯xn = Σ_{σ∈Lyn(β)} D(β(l1))⋯D(β(lk))", pbw_expansion(beta), target);
    }
    expect_equal(v, "set partition form (blocks by decreasing minimum) = Lyn(ω) expansion", dynkid_expansion(m),
                 pbw_expansion(Permutation::reversal(m)));
  }
  return v;
}

Verdict suite_census(int n, int jobs) {
  Verdict v;
  const Census census = lyndon_census(n, 8, jobs);
  for (const auto& row : census.rows) {
    std::string comp;
    for (int part : row.composition) comp += (comp.empty() ? "" : ",") + std::to_string(part);
    expect_true(v, "|{σ : L(σ) = (" + comp + ")}| = n!/(i1(i1+i2)⋯)", Scalar(row.count) == row.expected,
                "count " + std::to_string(row.count) + " vs " + to_string(row.expected));
  }
  expect_true(v, "counts sum to n!", Scalar(census.total) == factorial(n), std::to_string(census.total));
  return v;
}

template <class S>
std::vector<typename S::carrier_type> carrier_arguments(const S& s, int n, std::uint64_t seed) {
  std::vector<typename S::carrier_type> out;
  for (const auto& a : argument_list(s, n, seed)) out.push_back(a.body);
  return out;
}

template <class S>
Verdict dispatch(std::string_view suite, const S& s, int n, const SuiteParams& p) {
  if (suite == "axioms") return suite_axioms(s, p);
  if (suite == "prelie-laws") return suite_prelie(s, p);
  if (suite == "lemma-dynkin") return check_lemma_dynkin(s, single_element(s, p.seed), p.degree);
  if (suite == "theorem33") return suite_theorem33(s, n, p);
  if (suite == "theorem51") {
    const auto args = argument_list(s, n, p.seed);
    return theorem51_check(s, std::span<const value_t<S>>(args), Theorem51Options{7, p.jobs});
  }
  if (suite == "magnus") return suite_magnus(s, p);
  if (suite == "pbw") return suite_pbw(n);
  if (suite == "census") return suite_census(n, p.jobs);
  if (suite == "convolution") {
    Verdict v = check_convolution(n);
    v.merge(check_max_multilinear(n));
    return v;
  }
  if (suite == "rb-corollary" || suite == "rb-spitzer") {
    if constexpr (is_rb<S>) {
      const auto args = carrier_arguments(s, n, p.seed);
      const std::span<const typename S::carrier_type> xs(args);
      return suite == "rb-corollary" ? check_rb_corollary(s.algebra(), xs, p.jobs)
                                     : check_rb_spitzer(s.algebra(), xs, p.jobs);
    } else {
      throw UsageError("suite '" + std::string(suite) + "' needs an rb-seqmat or rb-polymat structure");
    }
  }
  throw UsageError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace

std::string describe_default_element(const AnyStructure& structure) {
  return std::visit([](const auto& s) { return render_for_report(single_element(s, 42)); }, structure);
}

const std::vector<std::string>& expand_operations() {
  static const std::vector<std::string> ops = {"w-left", "w-right", "ell", "r", "dynkin-w", "theorem33-right",
                                               "theorem33-left"};
  return ops;
}

std::string expand(const AnyStructure& structure, std::string_view op, int n,
                   const std::optional<std::string>& element, std::uint64_t seed) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto& ops = expand_operations();
  if (std::find(ops.begin(), ops.end(), op) == ops.end()) throw UsageError("unknown operation '" + std::string(op) + "'");
  return std::visit(
      [&](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        value_t<S> a = single_element(s, seed);
        if (element) {
          if constexpr (std::is_same_v<S, ShuffleStructure> || std::is_same_v<S, MaxStructure>) {
            try {
              a = parse_word_elem(*element);
            } catch (const std::invalid_argument& e) {
              throw UsageError(std::string("--element: ") + e.what());
            }
            if (s.unit_coeff(a) != 0) throw UsageError("--element must have no constant term");
          } else {
            throw UsageError("--element is only accepted for word structures");
          }
        }
        if (op == "w-left") return to_string(w_left(s, a, n));
        if (op == "w-right") return to_string(w_right(s, a, n));
        if (op == "ell") return to_string(ell_power(s, a, n));
        if (op == "r") return to_string(r_power(s, a, n));
        if (op == "dynkin-w") return to_string(dynkin_w(s, a, n));
        if (op == "theorem33-right") return to_string(theorem33_rhs_right(s, a, n));
        return to_string(theorem33_rhs_left(s, a, n));
      },
      structure);
}

std::vector<std::string> omega_coefficients(const AnyStructure& structure, int cap, std::uint64_t seed) {
  if (cap < 1) throw UsageError("--cap must be >= 1");
  return std::visit(
      [&](const auto& s) {
        const auto omega = magnus_omega(s, single_element(s, seed), cap);
        std::vector<std::string> out;
        for (int n = 1; n <= cap; ++n) out.push_back(to_string(omega[n]));
        return out;
      },
      structure);
}

SuiteReport run_suite(std::string_view suite, const AnyStructure& structure, const SuiteParams& params) {
  const auto known = suite_catalogue();
  if (std::none_of(known.begin(), known.end(), [&](const SuiteInfo& i) { return i.name == suite; })) {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  const int n = params.n.value_or(default_n(suite));
  if (n < 1) throw UsageError("--n must be >= 1");
  SuiteReport report;
  report.suite = std::string(suite);
  report.structure = structure_name(structure);
  if (suite == "axioms" || suite == "prelie-laws" || suite == "lemma-dynkin") {
    report.params["degree"] = std::to_string(params.degree);
  } else if (suite == "magnus") {
    report.params["cap"] = std::to_string(params.cap);
  } else {
    report.params["n"] = std::to_string(n);
  }
  report.params["seed"] = std::to_string(params.seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    report.verdict = std::visit([&](const auto& s) { return dispatch(suite, s, n, params); }, structure);
  } catch (const BoundExceeded& e) {
    throw UsageError(e.what());
  }
  report.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return report;
}

}  // namespace dendra
