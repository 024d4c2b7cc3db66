#ifndef A5ZP_PROVER_HPP_
#define A5ZP_PROVER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a5zp/canonical.hpp"
#include "a5zp/lifting.hpp"
#include "a5zp/product_group.hpp"
#include "a5zp/words.hpp"

namespace a5zp {

enum class Method { kNonmin, kDoubleEdge, kCoset3, kDetCriterion, kAll2 };

const char* MethodName(Method m);  // "nonmin", "double_edge", ...
Method ParseMethod(std::string_view name);  // throws ParseError

// How a witness was built. Kept in memory only; not serialized.
struct Trace {
  std::optional<Normalization> normalization;
  char pivot = 0;                       // dropped / doubled letter, if any
  std::vector<std::string> cycle_ids;   // bank cycles used
  std::optional<DetTrace> det;
  std::optional<DoubleEdgeTrace> double_edge;
  Word quotient_cycle;                  // in the input letters
};

struct Witness {
  PrimeModulus p;
  GenSet generators;
  Method method;
  Word word;
  std::map<char, long long> weights;  // net weights of `word`
  Trace trace;
};

struct ProveOptions {
  ProveOptions() { search.prune_degree = true; }
  SearchOptions search;
};

// Builds and verifies a Hamiltonian cycle of Cay(A5 x Z_p; S). Requires
// p == 1 (mod 30) and S a minimal generating set of A5 x Z_p; a non-minimal
// S is rejected with Error(kNotMinimal) naming a redundant letter.
Witness prove(const GenSet& S, const PrimeModulus& p,
              const ProveOptions& opts = {});

// Greedily drops letters (in order) while the rest still generates.
GenSet suggest_minimal_subset(const GenSet& S, const PrimeModulus& p);

struct WitnessReport {
  bool ok = false;
  std::string message;
  HamiltonReport hamilton;
};

// Independent re-check: closure size 60p, Hamiltonicity, stored weights.
WitnessReport verify_witness(const Witness& w);

// Witness text format (exact field order, one "key = value" per line):
//   p = 31
//   method = coset3
//   generators = 2
//   a = ((1,2)(3,4) | 0)
//   b = ((2,4,5) | 1)
//   weights = a:0 b:0
//   length = 1860
//   word = a b b ...
std::string serialize_witness(const Witness& w);
Witness parse_witness(std::string_view text);  // throws ParseError

struct AppendixCycleItem {
  std::string id;
  std::vector<Perm> gens;
  bool hamiltonian = false;
  std::vector<long long> expected_weights;
  std::vector<long long> weights;
  bool ok = false;
  std::string message;
};

struct DeterminantItem {
  std::string case_id;
  std::vector<std::string> cycle_ids;
  WeightMatrix matrix;
  long long expected = 0;
  bool sign_differs = false;  // |det| matches but the sign does not
  std::vector<long long> factors;
  bool factors_below_31 = false;
  bool ok = false;
};

struct AppendixReport {
  std::vector<AppendixCycleItem> cycles;   // bank entries
  std::vector<AppendixCycleItem> derived;  // conjugation-derived cycles
  std::vector<DeterminantItem> determinants;
  bool ok = false;
};

// Expected determinant (or single weight) per case, in table order. When
// `magnitude_only` is set the stated value is only trusted up to sign.
struct ExpectedDeterminant {
  std::string case_id;
  long long value;
  bool magnitude_only = false;
};

const std::vector<ExpectedDeterminant>& expected_determinants();

AppendixReport verify_appendix();

}  // namespace a5zp

#endif  // A5ZP_PROVER_HPP_
