#ifndef A5ZP_PRODUCT_GROUP_HPP_
#define A5ZP_PRODUCT_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "a5zp/perm.hpp"

namespace a5zp {

// A prime p; construction checks primality by trial division.
class PrimeModulus {
 public:
  explicit PrimeModulus(long long p);

  long long value() const { return p_; }

  // The full proving pipeline needs p == 1 (mod 30).
  bool is_one_mod_30() const { return p_ % 30 == 1; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  long long p_;
};

bool is_prime(long long n);

// Throws Error(kModulus) unless p == 1 (mod 30).
void require_one_mod_30(const PrimeModulus& p);

// An element (perm, res) of A5 x Z_p. `perm` is the bar projection to A5 and
// `res` the projection to Z_p.
struct GElem {
  Perm perm;
  long long res = 0;

  friend auto operator<=>(const GElem&, const GElem&) = default;
};

// Validates that `perm` is even and reduces `res` into 0..p-1.
GElem make_gelem(const Perm& perm, long long res, const PrimeModulus& p);

inline GElem identity_gelem() { return GElem{Perm(), 0}; }

// Throws Error(kModulusMismatch) if an operand's residue is not reduced mod p.
GElem gmul(const GElem& x, const GElem& y, const PrimeModulus& p);
GElem ginverse(const GElem& x, const PrimeModulus& p);
GElem gpower(const GElem& x, long long k, const PrimeModulus& p);

// Order of x in A5 x Z_p: lcm(|perm|, order of res in Z_p).
long long gorder(const GElem& x, const PrimeModulus& p);

// <gens> as an explicit set (at most 60p elements).
std::set<GElem> product_closure(std::span<const GElem> gens,
                                const PrimeModulus& p);

// |<gens>| without materializing a std::set.
std::size_t product_closure_size(std::span<const GElem> gens,
                                 const PrimeModulus& p);

// <gens> == A5 x Z_p.
bool generates_product(std::span<const GElem> gens, const PrimeModulus& p);

// Generates A5 x Z_p and no proper subset does. On failure, `drop_index`
// (when non-null) receives the index of a removable element, or gens.size()
// if the set does not generate at all.
bool is_minimal_generating(std::span<const GElem> gens, const PrimeModulus& p,
                           std::size_t* drop_index = nullptr);

// "((1,2)(3,4) | 0)". Whitespace inside is optional on input.
std::string to_string(const GElem& x);
GElem parse_gelem(std::string_view text, const PrimeModulus& p);

std::ostream& operator<<(std::ostream& os, const GElem& x);

}  // namespace a5zp

#endif  // A5ZP_PRODUCT_GROUP_HPP_
