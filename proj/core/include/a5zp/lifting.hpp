#ifndef A5ZP_LIFTING_HPP_
#define A5ZP_LIFTING_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "a5zp/hamsearch.hpp"
#include "a5zp/product_group.hpp"
#include "a5zp/words.hpp"

// Constructions that turn Hamiltonian cycles in Cay(A5; S-bar) into
// Hamiltonian cycles in Cay(A5 x Z_p; S). Every function verifies its output
// against the full group before returning it and throws Error(kVerification)
// if that check fails.
namespace a5zp {

// Net weights of cycles (rows) on a fixed list of letters (columns).
struct WeightMatrix {
  std::vector<char> columns;
  std::vector<std::vector<long long>> rows;
  long long det = 0;  // only meaningful when square
};

// Exact integer determinant (cofactor expansion; fine for the 1x1..3x3 cases
// here). Throws Error(kInvalidArgument) on a non-square matrix.
long long determinant(const std::vector<std::vector<long long>>& m);

WeightMatrix weight_matrix(std::span<const Word> cycles, const GenSet& S,
                           std::span<const char> columns);

// Prime factors of |d| in ascending order, with multiplicity. d != 0.
std::vector<long long> prime_factors(long long d);

// quotient_cycle repeated p times. The input must be a Hamiltonian cycle in
// Cay(A5; S-bar) whose voltage has non-zero residue (kZeroVoltage otherwise).
Word fgl_lift(const Word& quotient_cycle, const GenSet& S,
              const PrimeModulus& p);

// s-bar == t-bar but s != t, with t given as a signed letter. Searches a
// Hamiltonian cycle in the quotient; when its voltage is trivial, the first
// occurrence of s^(+-1) is replaced by t^(+-1), which shifts the voltage by a
// non-trivial central element. S must generate A5 x Z_p.
struct DoubleEdgeTrace {
  Word quotient_cycle;          // as found by the search
  bool substituted = false;
  std::size_t position = 0;     // index of the substituted step
  bool required_letter = false; // search had to be told to use s
};

Word double_edge_lift(const GenSet& S, const PrimeModulus& p, char s, Step t,
                      const SearchOptions& search = {},
                      DoubleEdgeTrace* trace = nullptr);

// cycle60 is a Hamiltonian cycle in Cay(A5; S-bar minus a-bar) that does not
// use a. Every other letter has residue 0 and a has a non-zero residue.
// Returns (s_{2i-1}, a^(p-1), s_{2i}, a^-(p-1)) for i = 1..30.
Word nonmin_lift(const Word& cycle60, const GenSet& S, char a,
                 const PrimeModulus& p);

// The lift template for a = ((1,2)(3,4), 0), b = ((2,4,5), r != 0).
inline constexpr const char* kCosetTemplate =
    "((a,b^(3p-1))^3,(a,b^-(3p-1))^3,(a,b^(3p-1),a,b^-(3p-1))^2)^2";

Word coset_lift_order3(const GenSet& S, const PrimeModulus& p);

struct DetTrace {
  WeightMatrix matrix;
  std::vector<long long> residues;  // of the weight columns
  std::size_t chosen = 0;
  long long chosen_voltage = 0;     // sum of weight * residue, mod p
};

// Involution letters must have residue 0; the remaining letters form the
// weight columns and `cycles` supplies one quotient cycle per column.
// Picks the first cycle whose voltage is non-zero and lifts it.
Word det_criterion(std::span<const Word> cycles, const GenSet& S,
                   const PrimeModulus& p, DetTrace* trace = nullptr);

}  // namespace a5zp

#endif  // A5ZP_LIFTING_HPP_
