#ifndef A5ZP_APPENDIX_BANK_HPP_
#define A5ZP_APPENDIX_BANK_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a5zp/perm.hpp"
#include "a5zp/words.hpp"

// Hamiltonian cycles of Cay(A5; S-bar) for the case representatives, stored
// as flat words, plus the cycles obtained from them by conjugation.
namespace a5zp {

struct BankEntry {
  std::string id;                 // "<case id>/<n>"
  std::string case_id;
  std::vector<Perm> gens;         // letters a, b, c in order
  std::string word;               // flat, uppercase = inverse
  std::vector<long long> weights; // net weight per letter
};

const std::vector<BankEntry>& appendix_bank();
const BankEntry& bank_entry(std::string_view id);

// Letters a, b, c, ... bound to (g, 0). Only the bar projection of these is
// meaningful.
GenSet quotient_genset(std::span<const Perm> gens);

Word bank_word(const BankEntry& e);

// A cycle obtained from a bank entry by rewriting every letter x as the
// letter y^(+-1) with y-bar^(+-1) = sigma^-1 x-bar sigma. Vertex g of the
// source walk becomes sigma^-1 g sigma, so Hamiltonicity is preserved.
struct DerivedCycle {
  std::string id;
  std::string source;
  Perm sigma;
  std::vector<long long> weights;  // expected
};

const std::vector<DerivedCycle>& derived_cycles();

// Throws Error(kNotFound) if some conjugated generator is not a letter or an
// inverse letter of `gens`.
Word conjugate_word(const Word& w, std::span<const Perm> gens,
                    const Perm& sigma);

Word derived_word(const DerivedCycle& d);

// Ids of the cycles used for a case, in weight-matrix row order. Empty for
// cases that do not use the determinant criterion.
std::vector<std::string> case_cycle_ids(std::string_view case_id);

// Resolves bank and derived ids alike.
Word cycle_by_id(std::string_view id);

}  // namespace a5zp

#endif  // A5ZP_APPENDIX_BANK_HPP_
