#include "a5zp/product_group.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <vector>

#include "a5zp/error.hpp"

namespace a5zp {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(long long p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
}

void require_one_mod_30(const PrimeModulus& p) {
  if (!p.is_one_mod_30()) {
    throw Error(ErrorCode::kModulus,
                "p = " + std::to_string(p.value()) + " is not 1 mod 30");
  }
}

GElem make_gelem(const Perm& perm, long long res, const PrimeModulus& p) {
  if (!perm.is_even()) {
    throw Error(ErrorCode::kInvalidArgument,
                "permutation " + to_string(perm) + " is not in A5");
  }
  long long r = res % p.value();
  if (r < 0) r += p.value();
  return GElem{perm, r};
}

namespace {

void CheckReduced(const GElem& x, const PrimeModulus& p) {
  if (x.res < 0 || x.res >= p.value()) {
    throw Error(ErrorCode::kModulusMismatch,
                "residue " + std::to_string(x.res) + " not reduced mod " +
                    std::to_string(p.value()));
  }
}

}  // namespace

GElem gmul(const GElem& x, const GElem& y, const PrimeModulus& p) {
  CheckReduced(x, p);
  CheckReduced(y, p);
  return GElem{x.perm * y.perm, (x.res + y.res) % p.value()};
}

GElem ginverse(const GElem& x, const PrimeModulus& p) {
  CheckReduced(x, p);
  return GElem{inverse(x.perm), (p.value() - x.res) % p.value()};
}

GElem gpower(const GElem& x, long long k, const PrimeModulus& p) {
  CheckReduced(x, p);
  const long long m = p.value();
  long long km = k % m;
  if (km < 0) km += m;
  const long long r = (x.res * km) % m;
  return GElem{power(x.perm, k), r};
}

long long gorder(const GElem& x, const PrimeModulus& p) {
  CheckReduced(x, p);
  const long long res_order = x.res == 0 ? 1 : p.value();
  return std::lcm(static_cast<long long>(element_order(x.perm)), res_order);
}

namespace {

// Elements are encoded as a5_index * p + res.
std::vector<char> ClosureBits(std::span<const GElem> gens,
                              const PrimeModulus& p, std::size_t* count) {
  const A5Table& a5 = A5Table::instance();
  const long long m = p.value();
  struct Gen {
    int perm;
    long long res;
  };
  std::vector<Gen> coded;
  for (const GElem& g : gens) {
    CheckReduced(g, p);
    const int idx = a5.index(g.perm);
    if (idx < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator " + to_string(g) + " is not in A5 x Z_p");
    }
    coded.push_back({idx, g.res});
  }
  std::vector<char> seen(static_cast<std::size_t>(A5Table::kOrder * m), 0);
  std::vector<long long> stack{0};
  seen[0] = 1;
  std::size_t n = 1;
  while (!stack.empty()) {
    const long long x = stack.back();
    stack.pop_back();
    const int xp = static_cast<int>(x / m);
    const long long xr = x % m;
    for (const Gen& s : coded) {
      const long long y = a5.mul(xp, s.perm) * m + (xr + s.res) % m;
      if (!seen[y]) {
        seen[y] = 1;
        ++n;
        stack.push_back(y);
      }
    }
  }
  *count = n;
  return seen;
}

}  // namespace

std::set<GElem> product_closure(std::span<const GElem> gens,
                                const PrimeModulus& p) {
  std::size_t count = 0;
  const std::vector<char> seen = ClosureBits(gens, p, &count);
  const A5Table& a5 = A5Table::instance();
  const long long m = p.value();
  std::set<GElem> out;
  for (long long code = 0; code < static_cast<long long>(seen.size()); ++code) {
    if (seen[code]) out.insert(out.end(), GElem{a5.element(code / m), code % m});
  }
  return out;
}

std::size_t product_closure_size(std::span<const GElem> gens,
                                 const PrimeModulus& p) {
  std::size_t count = 0;
  ClosureBits(gens, p, &count);
  return count;
}

bool generates_product(std::span<const GElem> gens, const PrimeModulus& p) {
  return product_closure_size(gens, p) ==
         static_cast<std::size_t>(A5Table::kOrder * p.value());
}

bool is_minimal_generating(std::span<const GElem> gens, const PrimeModulus& p,
                           std::size_t* drop_index) {
  if (!generates_product(gens, p)) {
    if (drop_index) *drop_index = gens.size();
    return false;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<GElem> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) rest.push_back(gens[j]);
    }
    if (generates_product(rest, p)) {
      if (drop_index) *drop_index = i;
      return false;
    }
  }
  return true;
}

std::string to_string(const GElem& x) {
  return "(" + to_string(x.perm) + " | " + std::to_string(x.res) + ")";
}

GElem parse_gelem(std::string_view text, const PrimeModulus& p) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  if (end - begin < 2 || text[begin] != '(' || text[end - 1] != ')') {
    throw ParseError("group element must look like '(cycles | r)'", begin);
  }
  const std::size_t bar = text.find('|', begin);
  if (bar == std::string_view::npos || bar >= end) {
    throw ParseError("missing '|' in group element", begin);
  }
  Perm perm;
  try {
    perm = parse_perm(text.substr(begin + 1, bar - begin - 1));
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), begin + 1 + e.position());
  }
  std::string_view res_text = text.substr(bar + 1, end - 1 - bar - 1);
  std::size_t i = 0;
  while (i < res_text.size() && std::isspace(static_cast<unsigned char>(res_text[i]))) ++i;
  bool negative = false;
  if (i < res_text.size() && res_text[i] == '-') {
    negative = true;
    ++i;
  }
  if (i >= res_text.size() || !std::isdigit(static_cast<unsigned char>(res_text[i]))) {
    throw ParseError("expected residue after '|'", bar + 1);
  }
  long long r = 0;
  while (i < res_text.size() && std::isdigit(static_cast<unsigned char>(res_text[i]))) {
    r = r * 10 + (res_text[i] - '0');
    if (r > (1LL << 50)) throw ParseError("residue too large", bar + 1 + i);
    ++i;
  }
  while (i < res_text.size() && std::isspace(static_cast<unsigned char>(res_text[i]))) ++i;
  if (i != res_text.size()) throw ParseError("trailing characters in residue", bar + 1 + i);
  try {
    return make_gelem(perm, negative ? -r : r, p);
  } catch (const Error& e) {
    throw ParseError(e.what(), begin);
  }
}

std::ostream& operator<<(std::ostream& os, const GElem& x) {
  return os << to_string(x);
}

}  // namespace a5zp
