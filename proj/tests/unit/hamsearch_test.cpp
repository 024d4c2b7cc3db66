#include "a5zp/hamsearch.hpp"

#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "a5zp/appendix_bank.hpp"
#include "test_support.hpp"

namespace a5zp {
namespace {

using testing::Gens;

const PrimeModulus p31(31);

// Walks the word through the move table and checks it is a Hamiltonian cycle.
bool IsCycleIn(const CayleyGraph& g, const Word& w) {
  if (static_cast<int>(w.size()) != g.order()) return false;
  std::set<int> seen{0};
  int v = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int m = -1;
    for (std::size_t k = 0; k < g.moves().size(); ++k) {
      if (g.moves()[k].letter == w[i].letter && g.moves()[k].sign == w[i].sign) {
        m = static_cast<int>(k);
      }
    }
    if (m < 0) return false;
    v = g.next(m, v);
    if (i + 1 < w.size() && !seen.insert(v).second) return false;
  }
  return v == 0 && static_cast<int>(seen.size()) == g.order();
}

CayleyGraph Cyclic(int n, std::vector<int> gens) {
  std::vector<char> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(static_cast<char>('a' + i));
  return CayleyGraph::FromGenerators<int>(
      names, gens, 0, [n](int x, int y) { return (x + y) % n; },
      [n](int x) { return (n - x) % n; });
}

// Dihedral group of order 2n as (rotation, flip): (r1,f1)(r2,f2) =
// (r1 + (-1)^f1 r2, f1 + f2).
using Dih = std::pair<int, int>;

CayleyGraph Dihedral(int n, std::vector<Dih> gens) {
  std::vector<char> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(static_cast<char>('a' + i));
  auto mul = [n](const Dih& x, const Dih& y) {
    const int r = x.second ? x.first - y.first : x.first + y.first;
    return Dih{((r % n) + n) % n, (x.second + y.second) % 2};
  };
  auto inv = [n](const Dih& x) {
    return x.second ? x : Dih{(n - x.first) % n, 0};
  };
  return CayleyGraph::FromGenerators<Dih>(names, gens, Dih{0, 0}, mul, inv);
}

std::vector<CayleyGraph> SmallGraphs() {
  std::vector<CayleyGraph> out;
  for (int n = 1; n <= 10; ++n) {
    for (int x = 1; x < n; ++x) {
      out.push_back(Cyclic(n, {x}));
      for (int y = x + 1; y < n; ++y) out.push_back(Cyclic(n, {x, y}));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    std::vector<Dih> elems;
    for (int r = 0; r < n; ++r) {
      for (int f = 0; f < 2; ++f) {
        if (r || f) elems.push_back({r, f});
      }
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      out.push_back(Dihedral(n, {elems[i]}));
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        out.push_back(Dihedral(n, {elems[i], elems[j]}));
      }
    }
  }
  return out;
}

TEST(CayleyGraph, Construction) {
  const CayleyGraph c6 = Cyclic(6, {1});
  EXPECT_EQ(c6.order(), 6);
  ASSERT_EQ(c6.moves().size(), 2u);
  EXPECT_EQ(c6.moves()[1].sign, -1);
  EXPECT_EQ(c6.neighbours(0).size(), 2u);
  EXPECT_TRUE(c6.adjacent(0, 1));
  EXPECT_TRUE(c6.adjacent(0, c6.next(1, 0)));
  EXPECT_FALSE(c6.adjacent(0, 3));
}

TEST(CayleyGraph, FromGenSet) {
  const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 1}}, p31);
  const auto universe = product_closure(S.elements(), p31);
  const CayleyGraph g = make_cayley_graph(S, p31, universe);
  EXPECT_EQ(g.order(), 1860);
  EXPECT_EQ(make_quotient_graph(S).order(), 60);
  const GElem sub[] = {S.element('a')};
  EXPECT_THROW(make_cayley_graph(S, p31, product_closure(sub, p31)), Error);
}

TEST(Bruteforce, KnownCounts) {
  EXPECT_EQ(count_cycles_bruteforce(Cyclic(6, {1})), 2u);
  EXPECT_EQ(count_cycles_bruteforce(Cyclic(2, {1})), 0u);
  EXPECT_EQ(count_cycles_bruteforce(Cyclic(1, {})), 0u);
  EXPECT_EQ(count_cycles_bruteforce(Cyclic(3, {1})), 2u);
  // Z4 x Z2 with generators of orders 4 and 2, as Z8-free pairs.
  auto mul = [](const Dih& x, const Dih& y) {
    return Dih{(x.first + y.first) % 4, (x.second + y.second) % 2};
  };
  auto inv = [](const Dih& x) { return Dih{(4 - x.first) % 4, x.second}; };
  const std::vector<Dih> gens{{1, 0}, {0, 1}};
  const std::vector<char> names{'a', 'b'};
  const CayleyGraph z4z2 = CayleyGraph::FromGenerators<Dih>(names, gens, Dih{0, 0}, mul, inv);
  const std::uint64_t n = count_cycles_bruteforce(z4z2);
  EXPECT_GT(n, 0u);
  EXPECT_EQ(count_cycles_bruteforce(z4z2), n);
  EXPECT_TRUE(find_cycle(z4z2).has_value());
  try {
    count_cycles_bruteforce(Cyclic(13, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(FindCycle, AgreesWithBruteforceOnSmallGroups) {
  int with = 0;
  int without = 0;
  for (const CayleyGraph& g : SmallGraphs()) {
    const std::uint64_t count = count_cycles_bruteforce(g);
    const std::optional<Word> w = find_cycle(g);
    EXPECT_EQ(w.has_value(), count > 0) << "order " << g.order();
    if (w) {
      EXPECT_TRUE(IsCycleIn(g, *w));
      ++with;
    } else {
      ++without;
    }
    SearchOptions pruned;
    pruned.prune_degree = true;
    EXPECT_EQ(find_cycle(g, pruned), w);
  }
  EXPECT_GT(with, 50);
  EXPECT_GT(without, 5);
}

TEST(FindCycle, CycleGraph) {
  const std::optional<Word> w = find_cycle(Cyclic(6, {1}));
  ASSERT_TRUE(w);
  EXPECT_EQ(format_flat(*w), "a a a a a a");
  EXPECT_FALSE(find_cycle(Cyclic(2, {1})));
}

SearchOptions Pruned() {
  SearchOptions o;
  o.prune_degree = true;
  return o;
}

TEST(FindCycle, A5QuotientVerifies) {
  const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 0}}, p31);
  const std::optional<Word> w = find_quotient_cycle(S, Pruned());
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_quotient_hamiltonian_cycle(*w, S).ok);
  // Determinism across runs.
  EXPECT_EQ(find_quotient_cycle(S, Pruned()), w);
  // The banked cycle for this set is a valid answer too.
  EXPECT_TRUE(is_quotient_hamiltonian_cycle(bank_word(bank_entry("2-3/1")), S).ok);
}

TEST(FindCycle, PruningDoesNotChangeTheResult) {
  // Quotients on subgroups of A5 and larger dihedral groups.
  std::vector<CayleyGraph> graphs;
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"(1,2,3)", "(1,2,4)"}, {"(1,2)(3,4)", "(1,2,3)"}, {"(1,2,3,4,5)", "(2,5)(3,4)"},
           {"(1,2)(3,4)", "(1,3)(2,4)"}}) {
    graphs.push_back(make_quotient_graph(Gens({{x, 0}, {y, 0}}, p31)));
  }
  for (int n = 6; n <= 12; ++n) {
    graphs.push_back(Dihedral(n, {{1, 0}, {0, 1}}));
    graphs.push_back(Dihedral(n, {{0, 1}, {1, 1}}));
  }
  for (const CayleyGraph& g : graphs) {
    const std::optional<Word> plain = find_cycle(g);
    EXPECT_EQ(find_cycle(g, Pruned()), plain) << "order " << g.order();
    if (plain) EXPECT_TRUE(IsCycleIn(g, *plain));
  }
}

TEST(FindCycle, ThreadsDoNotChangeDeterministicResult) {
  const GenSet S = Gens({{"(1,2,3)", 0}, {"(1,2,3,4,5)", 0}}, p31);
  const std::optional<Word> base = find_quotient_cycle(S, Pruned());
  ASSERT_TRUE(base);
  SearchOptions o = Pruned();
  o.threads = 4;
  EXPECT_EQ(find_quotient_cycle(S, o), base);
  o.deterministic = false;
  const std::optional<Word> any = find_quotient_cycle(S, o);
  ASSERT_TRUE(any);
  EXPECT_TRUE(is_quotient_hamiltonian_cycle(*any, S).ok);
}

TEST(FindCycle, TargetWeights) {
  const GenSet S = Gens({{"(1,2,3)", 0}, {"(3,4,5)", 0}}, p31);
  SearchOptions o;
  o.target_weights = std::map<char, long long>{{'a', 4}, {'b', 0}};
  o.prune_degree = true;
  const std::optional<Word> w = find_quotient_cycle(S, o);
  ASSERT_TRUE(w);
  const auto wt = net_weights(*w, S);
  EXPECT_EQ(wt.at('a'), 4);
  EXPECT_EQ(wt.at('b'), 0);
  // Weights of a 60-step cycle have the parity of 60.
  o.target_weights = std::map<char, long long>{{'a', 1}, {'b', 0}};
  o.node_limit = 5'000'000;
  EXPECT_FALSE(find_quotient_cycle(S, o));
}

TEST(FindCycle, PrefixAndRequiredLetter) {
  const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 0}}, p31);
  SearchOptions o = Pruned();
  o.prefix = parse_flat_word("b b a");
  std::optional<Word> w = find_quotient_cycle(S, o);
  ASSERT_TRUE(w);
  EXPECT_EQ(Word(w->begin(), w->begin() + 3), o.prefix);

  o.prefix = parse_flat_word("b b b");
  try {
    find_quotient_cycle(S, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPrefix);
  }
  o.prefix = parse_flat_word("z");
  EXPECT_THROW(find_quotient_cycle(S, o), Error);

  // A duplicate letter: c has the same bar as a, and must be used.
  const GenSet D = Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 0}, {"(1,2)(3,4)", 1}}, p31);
  SearchOptions r = Pruned();
  r.require_letter = 'c';
  w = find_quotient_cycle(D, r);
  ASSERT_TRUE(w);
  EXPECT_NE(net_weights(*w, D).at('c'), 0);
}

TEST(FindCycle, NodeLimit) {
  const GenSet S = Gens({{"(1,2,3)", 0}, {"(3,4,5)", 0}}, p31);
  SearchOptions o;
  o.target_weights = std::map<char, long long>{{'a', 4}, {'b', 0}};
  o.node_limit = 100;
  try {
    find_quotient_cycle(S, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(FindCycle, FullGroupSearchIsVerified) {
  // A small full group: <((1,2,3), 1)> has 93 elements and one generator, so
  // its Cayley graph is a single cycle.
  const GenSet S = Gens({{"(1,2,3)", 1}}, p31);
  const auto universe = product_closure(S.elements(), p31);
  const std::optional<Word> w = find_cycle(S, p31, universe);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->size(), 93u);
  EXPECT_TRUE(is_hamiltonian_cycle(*w, S, p31, universe).ok);
}

}  // namespace
}  // namespace a5zp
