#ifndef A5ZP_HAMSEARCH_HPP_
#define A5ZP_HAMSEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "a5zp/error.hpp"
#include "a5zp/product_group.hpp"
#include "a5zp/words.hpp"

namespace a5zp {

// A Cayley graph as a table: vertex 0 is the identity, and move m takes
// vertex v to v * (letter_m)^(sign_m). Moves are ordered a+, a-, b+, b-, ...
class CayleyGraph {
 public:
  struct Move {
    char letter;
    int sign;
  };

  CayleyGraph(int order, std::vector<Move> moves, std::vector<int> next);

  // Closes {identity} under right multiplication by the generators.
  // `Elem` needs operator<; `mul` and `inv` are the group operations.
  template <class Elem, class Mul, class Inv>
  static CayleyGraph FromGenerators(std::span<const char> names,
                                    std::span<const Elem> gens,
                                    const Elem& identity, Mul mul, Inv inv);

  int order() const { return order_; }
  const std::vector<Move>& moves() const { return moves_; }
  int next(int move, int v) const { return next_[move * order_ + v]; }

  // Distinct neighbours of v, in move order.
  const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }
  bool adjacent(int u, int v) const;

 private:
  int order_;
  std::vector<Move> moves_;
  std::vector<int> next_;
  std::vector<std::vector<int>> neighbours_;
};

// Cay(<S>; S) over A5 x Z_p, restricted to `universe` (which must be closed
// under the generators; throws Error(kInvalidArgument) otherwise).
CayleyGraph make_cayley_graph(const GenSet& S, const PrimeModulus& p,
                              const std::set<GElem>& universe);

// Cay(<S-bar>; S-bar): the bar projection, one move pair per letter even when
// two letters project to the same permutation.
CayleyGraph make_quotient_graph(const GenSet& S);

struct SearchOptions {
  // Exact net weights required of the returned cycle (letters not listed are
  // unconstrained).
  std::optional<std::map<char, long long>> target_weights;
  // Steps forced at the start of the cycle.
  Word prefix;
  // Deterministic mode returns the DFS-first cycle in move order. Otherwise
  // any cycle found by any worker may be returned.
  bool deterministic = true;
  // The returned cycle must use this letter (either sign) at least once.
  std::optional<char> require_letter;
  // Prune when an unvisited vertex is left with fewer than two usable
  // neighbours. Only removes dead subtrees, so the result is unchanged.
  bool prune_degree = false;
  // Worker threads; the first two DFS levels are split into subtrees.
  int threads = 1;
  // 0 = unlimited. Exceeding the limit throws Error(kTooLarge).
  std::uint64_t node_limit = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Backtracking search for a Hamiltonian cycle rooted at the identity.
// Returns nullopt only after exhausting the search space, and for graphs
// with fewer than 3 vertices. Throws Error(kInvalidPrefix) if the prefix
// revisits a vertex.
std::optional<Word> find_cycle(const CayleyGraph& graph,
                               const SearchOptions& opts = {},
                               SearchStats* stats = nullptr);

// Same search on Cay(universe; S), with the result re-checked by
// is_hamiltonian_cycle before it is returned.
std::optional<Word> find_cycle(const GenSet& S, const PrimeModulus& p,
                               const std::set<GElem>& universe,
                               const SearchOptions& opts = {});

// Search in the bar projection Cay(<S-bar>; S-bar), re-checked by
// is_quotient_hamiltonian_cycle.
std::optional<Word> find_quotient_cycle(const GenSet& S,
                                        const SearchOptions& opts = {});

// Test oracle: number of directed Hamiltonian cycles through the identity,
// counted as distinct vertex sequences, by enumerating every ordering of the
// non-identity vertices. Throws Error(kTooLarge) above 12 vertices.
std::uint64_t count_cycles_bruteforce(const CayleyGraph& graph);
std::uint64_t count_cycles_bruteforce(const GenSet& S, const PrimeModulus& p,
                                      const std::set<GElem>& universe);

template <class Elem, class Mul, class Inv>
CayleyGraph CayleyGraph::FromGenerators(std::span<const char> names,
                                        std::span<const Elem> gens,
                                        const Elem& identity, Mul mul,
                                        Inv inv) {
  if (names.size() != gens.size()) {
    throw Error(ErrorCode::kInvalidArgument, "names and generators differ in size");
  }
  std::vector<Elem> steps;
  std::vector<Move> moves;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    moves.push_back({names[i], 1});
    steps.push_back(gens[i]);
    moves.push_back({names[i], -1});
    steps.push_back(inv(gens[i]));
  }
  std::map<Elem, int> index{{identity, 0}};
  std::vector<Elem> elements{identity};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const Elem& s : steps) {
      Elem y = mul(elements[k], s);
      if (index.emplace(y, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(y));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<int> next(moves.size() * n);
  for (std::size_t m = 0; m < moves.size(); ++m) {
    for (int v = 0; v < n; ++v) {
      next[m * n + v] = index.at(mul(elements[v], steps[m]));
    }
  }
  return CayleyGraph(n, std::move(moves), std::move(next));
}

}  // namespace a5zp

#endif  // A5ZP_HAMSEARCH_HPP_
