#ifndef A5ZP_WORDS_HPP_
#define A5ZP_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a5zp/perm.hpp"
#include "a5zp/product_group.hpp"

namespace a5zp {

struct Letter {
  char name = 'a';
  GElem element;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// An ordered connection set. Letter names are distinct lowercase ASCII
// letters (uppercase is reserved for inverses in flat words); elements are
// distinct and not the identity.
class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  std::optional<std::size_t> find(char name) const;
  // Throws Error(kUnknownLetter).
  std::size_t index_of(char name) const;
  const GElem& element(char name) const { return letters_[index_of(name)].element; }

  std::vector<GElem> elements() const;
  // The bar projection, one entry per letter (entries may repeat).
  std::vector<Perm> bar() const;

  // Letters whose bar has order 2, and the rest, in letter order.
  std::vector<char> involution_letters() const;
  std::vector<char> other_letters() const;

  friend bool operator==(const GenSet&, const GenSet&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Step {
  char letter = 'a';
  int sign = 1;  // +1 or -1

  friend auto operator<=>(const Step&, const Step&) = default;
};

using Word = std::vector<Step>;

// Reversed word with every step inverted; walks the same cycle backwards.
Word inverse_word(const Word& w);

// alpha * p + beta.
struct Exponent {
  long long p_coeff = 0;
  long long constant = 1;

  long long evaluate(long long p) const { return p_coeff * p + constant; }
  bool is_symbolic() const { return p_coeff != 0; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Parse tree for the compact walk notation, e.g. "(a,b^(3p-1))^3,A^2".
//
//   expr  := term ("," term)*
//   term  := atom | "(" expr ")" power?
//   atom  := LETTER power?
//   power := "^" exp
//   exp   := INT | "-"? "(" lin ")" | lin
//   lin   := INT? "p" (("+"|"-") INT)? | "-"? INT
//
// An uppercase LETTER is the inverse of its lowercase letter. A negative
// exponent repeats the reversed, inverted segment.
struct WordExpr {
  struct Node {
    bool is_group = false;
    char letter = 'a';   // atoms only
    int sign = 1;        // atoms only; -1 for uppercase
    std::vector<Node> children;  // groups only
    Exponent power;

    friend bool operator==(const Node&, const Node&) = default;
  };

  std::vector<Node> terms;

  friend bool operator==(const WordExpr&, const WordExpr&) = default;
};

WordExpr parse_word_expr(std::string_view text);

// Normalized text: no whitespace, "^1" omitted, symbolic powers in
// parentheses, atoms printed lowercase with explicit negative powers.
std::string to_string(const WordExpr& e);

// Throws Error(kInvalidArgument) on a symbolic exponent when `p` is absent,
// and Error(kTooLarge) if the expansion would exceed 2^26 steps.
Word expand(const WordExpr& e, std::optional<long long> p = std::nullopt);
Word expand(std::string_view text, std::optional<long long> p = std::nullopt);

// Compact expression for a flat word (runs collapsed into powers); parsing
// and expanding it returns the same word.
std::string to_expr_string(const Word& w);

// Flat witness form: space-separated letters, uppercase for inverse steps.
std::string format_flat(const Word& w);
Word parse_flat_word(std::string_view text);

struct Walk {
  std::vector<GElem> vertices;  // size |w| + 1, vertices[0] is the identity
  GElem endpoint;
};

// Throws Error(kUnknownLetter).
Walk eval_walk(const Word& w, const GenSet& S, const PrimeModulus& p);

// Product of all steps (the walk's endpoint).
GElem voltage(const Word& w, const GenSet& S, const PrimeModulus& p);

// Occurrences of s minus occurrences of s^-1, for every letter of S.
std::map<char, long long> net_weights(const Word& w, const GenSet& S);

enum class HamiltonViolation {
  kNone,
  kUnknownLetter,
  kLength,
  kEndpoint,
  kRepeatedVertex,
  kOutsideUniverse,
  kMissingVertex,
};

const char* HamiltonViolationName(HamiltonViolation v);

struct HamiltonReport {
  bool ok = false;
  HamiltonViolation violation = HamiltonViolation::kNone;
  // Step index (1-based vertex index) where the violation was detected.
  std::size_t position = 0;
  std::string message;
};

// Checks, in order: word length equals |universe|, the walk closes at the
// identity, intermediate vertices are distinct and lie in the universe, and
// every universe element is visited.
HamiltonReport is_hamiltonian_cycle(const Word& w, const GenSet& S,
                                    const PrimeModulus& p,
                                    const std::set<GElem>& universe);

// Same check for the bar projection: a Hamiltonian cycle in Cay(<S-bar>; S-bar).
HamiltonReport is_quotient_hamiltonian_cycle(const Word& w, const GenSet& S);

}  // namespace a5zp

#endif  // A5ZP_WORDS_HPP_
