#include "a5zp/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "a5zp/error.hpp"

namespace a5zp {

namespace {

constexpr std::uint64_t kFull = (std::uint64_t{1} << 60) - 1;

bool Generates(std::span<const int> idx) {
  return A5Table::instance().closure_mask(idx) == kFull;
}

// Minimal generating, on A5 indices.
bool MinimalIdx(std::span<const int> idx) {
  if (!Generates(idx)) return false;
  std::vector<int> rest;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j != i) rest.push_back(idx[j]);
    }
    if (Generates(rest)) return false;
  }
  return true;
}

// conj[s][x] = index of sigma_s * x * sigma_s^-1, sigma_s the s-th element of
// S5 in lexicographic order.
const std::vector<std::array<int, 60>>& ConjTable() {
  static const std::vector<std::array<int, 60>> table = [] {
    const A5Table& a5 = A5Table::instance();
    std::vector<std::array<int, 60>> t;
    for (const Perm& s : symmetric_group()) {
      std::array<int, 60> row{};
      for (int x = 0; x < 60; ++x) row[x] = a5.index(conjugate(a5.element(x), s));
      t.push_back(row);
    }
    return t;
  }();
  return table;
}

std::vector<int> OrbitKey(std::span<const int> set) {
  const A5Table& a5 = A5Table::instance();
  std::vector<int> best;
  std::vector<int> key(set.size());
  for (const auto& row : ConjTable()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      const int c = row[set[i]];
      key[i] = std::min(c, a5.inv(c));
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = key;
  }
  return best;
}

// Calls f on every k-subset of 1..59 (indices into A5, identity excluded).
template <class F>
void ForEachSubset(std::size_t k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    f(std::span<const int>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == static_cast<int>(59 - (k - i))) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::string signature_string(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(sig[i]);
  }
  return out;
}

Signature signature_of(std::span<const Perm> gens) {
  Signature sig;
  for (const Perm& g : gens) sig.push_back(element_order(g));
  std::sort(sig.begin(), sig.end());
  return sig;
}

const std::vector<CaseRepresentative>& case_representatives() {
  static const std::vector<CaseRepresentative> reps = [] {
    const std::vector<std::pair<std::string, std::vector<std::string>>> raw = {
        {"2-3", {"(1,2)(3,4)", "(2,4,5)"}},
        {"2-5a", {"(1,2)(3,4)", "(1,2,3,4,5)"}},
        {"2-5b", {"(1,3)(2,4)", "(1,2,3,4,5)"}},
        {"3-3", {"(1,2,3)", "(3,4,5)"}},
        {"3-5a", {"(1,2,3)", "(1,2,3,4,5)"}},
        {"3-5b", {"(1,2,4)", "(1,2,3,4,5)"}},
        {"5-5a", {"(1,2,3,4,5)", "(1,2,3,5,4)"}},
        {"5-5b", {"(1,2,3,4,5)", "(1,3,4,2,5)"}},
        {"3-3-3", {"(1,2,5)", "(1,3,5)", "(1,4,5)"}},
        {"2-3-3", {"(1,2)(4,5)", "(1,2,3)", "(1,2,4)"}},
        {"2-2-3a", {"(1,2)(4,5)", "(1,2)(3,4)", "(1,2,3)"}},
        {"2-2-3b", {"(1,2)(4,5)", "(1,3)(2,4)", "(1,2,3)"}},
        {"2-2-3c", {"(1,2)(3,4)", "(1,2)(3,5)", "(1,2,3)"}},
        {"2-2-3d", {"(1,2)(3,4)", "(1,3)(2,5)", "(1,2,3)"}},
    };
    std::vector<CaseRepresentative> out;
    for (const auto& [id, texts] : raw) {
      CaseRepresentative r;
      r.id = id;
      for (const auto& t : texts) r.gens.push_back(parse_perm(t));
      r.signature = signature_of(r.gens);
      out.push_back(std::move(r));
    }
    return out;
  }();
  return reps;
}

const CaseRepresentative& case_representative(const std::string& id) {
  for (const auto& r : case_representatives()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorCode::kNotFound, "no case representative '" + id + "'");
}

MinimalityVerdict minimality_check(std::span<const Perm> gens) {
  MinimalityVerdict v;
  const std::set<Perm> all = closure(gens);
  v.generates = all.size() == 60 &&
                std::all_of(all.begin(), all.end(),
                            [](const Perm& g) { return g.is_even(); });
  if (!v.generates) return v;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Perm> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) rest.push_back(gens[j]);
    }
    if (closure(rest).size() == 60) {
      v.drop = i;
      return v;
    }
  }
  v.minimal = true;
  return v;
}

Normalization normalize(std::span<const Perm> gens) {
  const MinimalityVerdict mv = minimality_check(gens);
  if (!mv.generates) {
    throw Error(ErrorCode::kNotGenerating,
                "not a generating pattern: the generators do not generate A5");
  }
  if (!mv.minimal) {
    throw Error(ErrorCode::kNotMinimal,
                "generating set is not minimal; generator " +
                    std::to_string(*mv.drop + 1) + " is redundant");
  }
  const std::size_t k = gens.size();
  const Signature sig = signature_of(gens);
  Normalization n;
  n.inverted.assign(k, 0);
  n.reorder.resize(k);
  std::iota(n.reorder.begin(), n.reorder.end(), 0);
  if (sig == Signature{2, 2, 2}) {
    n.case_id = signature_string(sig);
    return n;
  }
  for (const CaseRepresentative& rep : case_representatives()) {
    if (rep.signature != sig) continue;
    for (const Perm& sigma : symmetric_group()) {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<Perm> images(k);
        for (std::size_t j = 0; j < k; ++j) {
          const Perm g = (mask >> j & 1) ? inverse(gens[j]) : gens[j];
          images[j] = conjugate(g, sigma);
        }
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        do {
          bool match = true;
          for (std::size_t i = 0; match && i < k; ++i) {
            match = images[order[i]] == rep.gens[i];
          }
          if (match) {
            n.sigma = sigma;
            for (std::size_t j = 0; j < k; ++j) n.inverted[j] = (mask >> j & 1) ? 1 : 0;
            n.reorder = order;
            n.case_id = rep.id;
            n.representative = rep.gens;
            return n;
          }
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
  throw Error(ErrorCode::kNotFound,
              "not a generating pattern: no representative for signature " +
                  signature_string(sig));
}

std::vector<Perm> apply_normalization(const Normalization& n,
                                      std::span<const Perm> gens) {
  if (gens.size() != n.reorder.size()) {
    throw Error(ErrorCode::kInvalidArgument, "normalization size mismatch");
  }
  std::vector<Perm> out;
  for (std::size_t j : n.reorder) {
    const Perm g = n.inverted[j] ? inverse(gens[j]) : gens[j];
    out.push_back(conjugate(g, n.sigma));
  }
  return out;
}

std::map<Signature, std::vector<Orbit>> minimal_set_orbits(std::size_t k) {
  const A5Table& a5 = A5Table::instance();
  std::map<std::vector<int>, std::size_t> sizes;
  ForEachSubset(k, [&](std::span<const int> set) {
    if (MinimalIdx(set)) ++sizes[OrbitKey(set)];
  });
  std::map<Signature, std::vector<Orbit>> out;
  for (const auto& [key, size] : sizes) {
    Orbit o;
    for (int i : key) o.member.push_back(a5.element(i));
    std::stable_sort(o.member.begin(), o.member.end(),
                     [](const Perm& x, const Perm& y) {
                       return element_order(x) < element_order(y);
                     });
    o.size = size;
    out[signature_of(o.member)].push_back(std::move(o));
  }
  return out;
}

std::size_t count_order5_subgroups() {
  const A5Table& a5 = A5Table::instance();
  std::set<std::uint64_t> groups;
  for (int i = 0; i < 60; ++i) {
    if (element_order(a5.element(i)) != 5) continue;
    const int g[] = {i};
    groups.insert(a5.closure_mask(g));
  }
  return groups.size();
}

int longest_subgroup_chain() {
  const A5Table& a5 = A5Table::instance();
  std::set<std::uint64_t> subgroups{1};
  std::vector<std::uint64_t> frontier{1};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t h : frontier) {
      std::vector<int> gens;
      for (int i = 0; i < 60; ++i) {
        if (h >> i & 1) gens.push_back(i);
      }
      for (int g = 0; g < 60; ++g) {
        if (h >> g & 1) continue;
        gens.push_back(g);
        const std::uint64_t k = a5.closure_mask(gens);
        gens.pop_back();
        if (subgroups.insert(k).second) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> by_size(subgroups.begin(), subgroups.end());
  std::sort(by_size.begin(), by_size.end(), [](std::uint64_t x, std::uint64_t y) {
    return std::popcount(x) < std::popcount(y);
  });
  std::map<std::uint64_t, int> length;
  for (std::uint64_t h : by_size) {
    int best = 0;
    for (const auto& [k, len] : length) {
      if (k != h && (k & h) == k) best = std::max(best, len + 1);
    }
    length[h] = best;
  }
  return length.at(kFull);
}

QuadrupleVerdict no_minimal_quadruples() {
  QuadrupleVerdict v;
  v.chain_length = longest_subgroup_chain();
  // gen3[i][j][l] for i < j < l: does the triple generate A5?
  std::vector<char> gen3(60 * 60 * 60, 0);
  auto at = [](int i, int j, int l) { return (i * 60 + j) * 60 + l; };
  ForEachSubset(3, [&](std::span<const int> t) {
    gen3[at(t[0], t[1], t[2])] = Generates(t) ? 1 : 0;
  });
  const A5Table& a5 = A5Table::instance();
  ForEachSubset(4, [&](std::span<const int> q) {
    ++v.checked;
    if (v.counterexample) return;
    if (gen3[at(q[0], q[1], q[2])] || gen3[at(q[0], q[1], q[3])] ||
        gen3[at(q[0], q[2], q[3])] || gen3[at(q[1], q[2], q[3])]) {
      return;  // a proper subset already generates
    }
    if (Generates(q)) {
      std::vector<Perm> ce;
      for (int i : q) ce.push_back(a5.element(i));
      v.counterexample = ce;
    }
  });
  v.ok = !v.counterexample && v.chain_length <= 4;
  return v;
}

std::vector<std::vector<Perm>> minimal_triples_with_order5() {
  const A5Table& a5 = A5Table::instance();
  std::vector<std::vector<Perm>> out;
  ForEachSubset(3, [&](std::span<const int> t) {
    const bool has5 = std::any_of(t.begin(), t.end(), [&](int i) {
      return element_order(a5.element(i)) == 5;
    });
    if (has5 && MinimalIdx(t)) {
      std::vector<Perm> s;
      for (int i : t) s.push_back(a5.element(i));
      out.push_back(std::move(s));
    }
  });
  return out;
}

}  // namespace a5zp
