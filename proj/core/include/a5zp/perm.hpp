#ifndef A5ZP_PERM_HPP_
#define A5ZP_PERM_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace a5zp {

// A permutation of {1,...,5}. Permutations act on the left, so the product
// g * s is "apply s, then g": (g * s)(i) == g(s(i)). Under this convention the
// walk e, s1, s1*s2, ... appends factors on the right.
//
// Perms are ordered lexicographically by image array, which makes every
// std::set<Perm> iteration (and everything built on it) deterministic.
class Perm {
 public:
  static constexpr int kDegree = 5;

  constexpr Perm() : images_{1, 2, 3, 4, 5} {}

  // Throws Error(kInvalidArgument) unless `images` is a bijection of 1..5.
  static Perm FromImages(const std::array<int, kDegree>& images);

  // Image of the point i, for i in 1..5.
  int operator()(int i) const { return images_[i - 1]; }

  const std::array<std::uint8_t, kDegree>& images() const { return images_; }

  bool is_identity() const { return *this == Perm(); }
  bool is_even() const;

  // Mixed-radix code in 0..3124; distinct perms get distinct codes.
  int code() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::array<std::uint8_t, kDegree> images_;
};

Perm compose(const Perm& g, const Perm& s);
inline Perm operator*(const Perm& g, const Perm& s) { return compose(g, s); }

Perm inverse(const Perm& g);

// Smallest k >= 1 with g^k == identity.
int element_order(const Perm& g);

Perm power(const Perm& g, long long k);

// by * g * by^-1.
Perm conjugate(const Perm& g, const Perm& by);

// Cycle lengths (including fixed points) sorted descending, e.g. {2,2,1}.
std::vector<int> cycle_type(const Perm& g);

// The subgroup generated by `gens`, computed by closing under right
// multiplication by generators until nothing new appears.
std::set<Perm> closure(std::span<const Perm> gens);

// All 120 elements of S5 / all 60 elements of A5, in lexicographic order.
const std::vector<Perm>& symmetric_group();
const std::vector<Perm>& alternating_group();

// Accepts cycle notation ("(1,2)(3,4)", "(1 2 3)", "e", "()") or an image
// array ("[2,1,4,3,5]"). Throws ParseError.
Perm parse_perm(std::string_view text);

// Canonical cycle notation: each cycle starts at its least point, cycles
// ordered by that point, fixed points omitted; identity prints as "e".
std::string to_string(const Perm& g);
std::string to_image_string(const Perm& g);

std::ostream& operator<<(std::ostream& os, const Perm& g);

// Index of A5 elements 0..59 with a precomputed multiplication table. Used by
// the exhaustive enumerations, where std::set<Perm> would dominate runtime.
class A5Table {
 public:
  static const A5Table& instance();

  static constexpr int kOrder = 60;

  // -1 if g is odd.
  int index(const Perm& g) const { return index_of_code_[g.code()]; }
  const Perm& element(int i) const { return elements_[i]; }
  int mul(int x, int y) const { return mul_[x][y]; }
  int inv(int x) const { return inv_[x]; }
  int identity() const { return 0; }

  // Bitmask (bit i <=> element i) of the subgroup generated by `gens`.
  std::uint64_t closure_mask(std::span<const int> gens) const;

 private:
  A5Table();

  std::vector<Perm> elements_;
  std::vector<int> index_of_code_;
  std::array<std::array<std::uint8_t, kOrder>, kOrder> mul_{};
  std::array<std::uint8_t, kOrder> inv_{};
};

}  // namespace a5zp

template <>
struct std::hash<a5zp::Perm> {
  std::size_t operator()(const a5zp::Perm& g) const noexcept {
    return static_cast<std::size_t>(g.code());
  }
};

#endif  // A5ZP_PERM_HPP_
