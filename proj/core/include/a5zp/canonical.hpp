#ifndef A5ZP_CANONICAL_HPP_
#define A5ZP_CANONICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a5zp/perm.hpp"

// Classification of generating sets of A5 up to conjugation in S5, inverting
// individual generators, and reordering them.
namespace a5zp {

// Orders of the generators, ascending.
using Signature = std::vector<int>;

std::string signature_string(const Signature& sig);  // "2-2-3"
Signature signature_of(std::span<const Perm> gens);

struct CaseRepresentative {
  std::string id;          // signature string plus a variant letter if needed
  Signature signature;
  std::vector<Perm> gens;  // in letter order a, b, c
};

// The fixed representative list, one entry per orbit of minimal generating
// sets except signature {2,2,2}, which has none.
const std::vector<CaseRepresentative>& case_representatives();
const CaseRepresentative& case_representative(const std::string& id);

struct MinimalityVerdict {
  bool generates = false;
  bool minimal = false;
  // First index whose removal still generates A5 (only when generates and
  // not minimal).
  std::optional<std::size_t> drop;
};

MinimalityVerdict minimality_check(std::span<const Perm> gens);

// Maps an input list onto a representative:
//   rep[i] == sigma * input[reorder[i]]^(inverted[reorder[i]] ? -1 : 1) * sigma^-1
// For signature {2,2,2} only `case_id` is set and `representative` is empty.
struct Normalization {
  Perm sigma;
  std::vector<char> inverted;      // per input letter
  std::vector<std::size_t> reorder;
  std::string case_id;
  std::vector<Perm> representative;
};

// Enumerates representatives in list order, sigma over S5 in lexicographic
// order, inversion masks ascending, then reorders lexicographically; the first
// match wins. Throws Error(kNotGenerating / kNotMinimal) on bad input and
// Error(kNotFound) if no representative matches.
Normalization normalize(std::span<const Perm> gens);

// Applies the record to `gens` (the inverse of normalize's search).
std::vector<Perm> apply_normalization(const Normalization& n,
                                      std::span<const Perm> gens);

// Orbits of all minimal generating sets of A5 of the given size, grouped by
// signature. Each orbit is listed by its smallest member (sorted codes) and
// its size as a set of unordered generator sets.
struct Orbit {
  std::vector<Perm> member;
  std::size_t size = 0;
};

std::map<Signature, std::vector<Orbit>> minimal_set_orbits(std::size_t k);

// Number of distinct subgroups <g> with g of order 5.
std::size_t count_order5_subgroups();

// Length of the longest strictly increasing chain of subgroups 1 < ... < A5.
int longest_subgroup_chain();

struct QuadrupleVerdict {
  bool ok = false;
  int chain_length = 0;
  std::uint64_t checked = 0;  // 4-subsets examined
  std::optional<std::vector<Perm>> counterexample;
};

// Exhaustive check that no 4 elements of A5 form a minimal generating set;
// together with the chain bound this rules out sizes >= 4.
QuadrupleVerdict no_minimal_quadruples();

// Minimal generating triples containing an element of order 5 (expected
// empty).
std::vector<std::vector<Perm>> minimal_triples_with_order5();

}  // namespace a5zp

#endif  // A5ZP_CANONICAL_HPP_
