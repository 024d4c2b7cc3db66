#include "a5zp/lifting.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "a5zp/appendix_bank.hpp"
#include "a5zp/canonical.hpp"
#include "test_support.hpp"

namespace a5zp {
namespace {

using testing::Gens;

const PrimeModulus p31(31);
const PrimeModulus p61(61);

// Leibniz formula: sum over permutations with their signs.
long long Leibniz(const std::vector<std::vector<long long>>& m) {
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) inversions += idx[i] > idx[j];
    }
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < idx.size(); ++i) term *= m[i][idx[i]];
    total += term;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

bool LiftVerifies(const Word& w, const GenSet& S, const PrimeModulus& p) {
  const auto universe = product_closure(S.elements(), p);
  return universe.size() == static_cast<std::size_t>(60 * p.value()) &&
         is_hamiltonian_cycle(w, S, p, universe).ok;
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long long> v(-40, 40);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
      for (auto& row : m) {
        for (auto& x : row) x = v(rng);
      }
      EXPECT_EQ(determinant(m), Leibniz(m));
    }
  }
  EXPECT_EQ(determinant({{29, 17, 14}, {17, 14, 29}, {14, 29, 17}}), -11340);
  EXPECT_EQ(determinant({{5, -1}, {-1, 3}}), 14);
  EXPECT_EQ(determinant({{4, 0}, {6, -4}}), -16);
  EXPECT_THROW(determinant({{1, 2}}), Error);
}

TEST(PrimeFactors, Basics) {
  EXPECT_EQ(prime_factors(11340), (std::vector<long long>{2, 2, 3, 3, 3, 3, 5, 7}));
  EXPECT_EQ(prime_factors(-19), std::vector<long long>{19});
  EXPECT_TRUE(prime_factors(1).empty());
  EXPECT_THROW(prime_factors(0), Error);
  std::mt19937 rng(2);
  std::uniform_int_distribution<long long> v(2, 100000);
  for (int i = 0; i < 300; ++i) {
    const long long d = v(rng);
    const auto f = prime_factors(d);
    long long prod = 1;
    for (long long q : f) {
      prod *= q;
      EXPECT_TRUE(is_prime(q));
    }
    EXPECT_EQ(prod, d);
    EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
  }
}

TEST(WeightMatrix, EntriesAreNetWeights) {
  const std::vector<Word> cycles{cycle_by_id("3-5a/1"), cycle_by_id("3-5a/2")};
  const GenSet S = quotient_genset(bank_entry("3-5a/1").gens);
  const std::vector<char> cols{'a', 'b'};
  const WeightMatrix m = weight_matrix(cycles, S, cols);
  ASSERT_EQ(m.rows.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto wt = net_weights(cycles[i], S);
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(m.rows[i][j], wt.at(cols[j]));
  }
  EXPECT_EQ(m.rows, (std::vector<std::vector<long long>>{{5, -1}, {-1, 3}}));
  EXPECT_EQ(m.det, 14);
}

TEST(FglLift, RepeatsTheQuotientCycle) {
  const Word c = cycle_by_id("2-5a/1");
  const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(1,2,3,4,5)", 1}}, p31);
  const Word w = fgl_lift(c, S, p31);
  ASSERT_EQ(w.size(), 1860u);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(w[i], c[i % 60]);
  EXPECT_TRUE(LiftVerifies(w, S, p31));
}

TEST(FglLift, Guards) {
  const Word c = cycle_by_id("2-5a/1");
  const GenSet zero = Gens({{"(1,2)(3,4)", 0}, {"(1,2,3,4,5)", 0}}, p31);
  EXPECT_EQ(CodeOf([&] { fgl_lift(c, zero, p31); }), ErrorCode::kZeroVoltage);
  Word broken = c;
  std::swap(broken[0], broken[1]);
  const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(1,2,3,4,5)", 1}}, p31);
  EXPECT_EQ(CodeOf([&] { fgl_lift(broken, S, p31); }), ErrorCode::kPrecondition);
  EXPECT_THROW(PrimeModulus(1), Error);
}

SearchOptions Pruned() {
  SearchOptions o;
  o.prune_degree = true;
  return o;
}

TEST(DoubleEdge, InvolutionWithResidue) {
  const GenSet S = Gens({{"(1,2)(3,4)", 5}, {"(2,4,5)", 0}}, p31);
  DoubleEdgeTrace tr;
  const Word w = double_edge_lift(S, p31, 'a', Step{'a', -1}, Pruned(), &tr);
  EXPECT_EQ(w.size(), 1860u);
  EXPECT_TRUE(LiftVerifies(w, S, p31));
  EXPECT_TRUE(is_quotient_hamiltonian_cycle(tr.quotient_cycle, S).ok);
  if (tr.substituted) {
    EXPECT_EQ(tr.quotient_cycle[tr.position].letter, 'a');
    EXPECT_EQ(w[tr.position].sign, -tr.quotient_cycle[tr.position].sign);
  }
}

TEST(DoubleEdge, DistinctLettersWithEqualBars) {
  const GenSet S = Gens({{"(1,2,3)", 0}, {"(1,2,3,4,5)", 0}, {"(1,2,3)", 7}}, p31);
  DoubleEdgeTrace tr;
  const Word w = double_edge_lift(S, p31, 'a', Step{'c', 1}, Pruned(), &tr);
  EXPECT_TRUE(LiftVerifies(w, S, p31));
}

TEST(DoubleEdge, Guards) {
  const GenSet S = Gens({{"(1,2)(3,4)", 5}, {"(2,4,5)", 0}}, p31);
  EXPECT_EQ(CodeOf([&] { double_edge_lift(S, p31, 'a', Step{'a', 1}); }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] { double_edge_lift(S, p31, 'a', Step{'b', 1}); }),
            ErrorCode::kPrecondition);
  const GenSet flat = Gens({{"(1,2,3)", 0}, {"(1,2,3,4,5)", 0}, {"(3,2,1)", 0}}, p31);
  EXPECT_EQ(CodeOf([&] { double_edge_lift(flat, p31, 'a', Step{'c', -1}); }),
            ErrorCode::kPrecondition);  // a and c^-1 coincide
}

TEST(NonminLift, InterleavesPowersOfThePivot) {
  const Word base = cycle_by_id("2-3/1");
  const GenSet S({Letter{'a', make_gelem(parse_perm("(1,2)(3,4)"), 0, p31)},
                  Letter{'b', make_gelem(parse_perm("(2,4,5)"), 0, p31)},
                  Letter{'x', make_gelem(parse_perm("(1,2,3)"), 3, p31)}});
  const Word w = nonmin_lift(base, S, 'x', p31);
  ASSERT_EQ(w.size(), 30u * (2 + 2 * 30));
  EXPECT_TRUE(LiftVerifies(w, S, p31));
  EXPECT_EQ(w[0], base[0]);
  EXPECT_EQ(w[1], (Step{'x', 1}));
  EXPECT_EQ(w[31], base[1]);
  EXPECT_EQ(w[32], (Step{'x', -1}));
  EXPECT_EQ(net_weights(w, S).at('x'), 0);
}

TEST(NonminLift, Guards) {
  const Word base = cycle_by_id("2-3/1");
  const GenSet S({Letter{'a', make_gelem(parse_perm("(1,2)(3,4)"), 0, p31)},
                  Letter{'b', make_gelem(parse_perm("(2,4,5)"), 0, p31)},
                  Letter{'x', make_gelem(parse_perm("(1,2,3)"), 3, p31)}});
  const PrimeModulus p7(7);
  const GenSet S7({Letter{'a', make_gelem(parse_perm("(1,2)(3,4)"), 0, p7)},
                   Letter{'b', make_gelem(parse_perm("(2,4,5)"), 0, p7)},
                   Letter{'x', make_gelem(parse_perm("(1,2,3)"), 3, p7)}});
  EXPECT_EQ(CodeOf([&] { nonmin_lift(base, S7, 'x', p7); }), ErrorCode::kModulus);
  const GenSet zero({Letter{'a', make_gelem(parse_perm("(1,2)(3,4)"), 0, p31)},
                     Letter{'b', make_gelem(parse_perm("(2,4,5)"), 0, p31)},
                     Letter{'x', make_gelem(parse_perm("(1,2,3)"), 0, p31)}});
  EXPECT_EQ(CodeOf([&] { nonmin_lift(base, zero, 'x', p31); }), ErrorCode::kPrecondition);
  const GenSet other({Letter{'a', make_gelem(parse_perm("(1,2)(3,4)"), 2, p31)},
                      Letter{'b', make_gelem(parse_perm("(2,4,5)"), 0, p31)},
                      Letter{'x', make_gelem(parse_perm("(1,2,3)"), 3, p31)}});
  EXPECT_EQ(CodeOf([&] { nonmin_lift(base, other, 'x', p31); }), ErrorCode::kPrecondition);
  Word uses_x = base;
  uses_x[0].letter = 'x';
  EXPECT_THROW(nonmin_lift(uses_x, S, 'x', p31), Error);
}

TEST(CosetLift, LengthAndWeights) {
  for (const PrimeModulus& p : {p31, p61}) {
    for (long long r : {1LL, 2LL, p.value() - 1}) {
      const GenSet S = Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", r}}, p);
      const Word w = coset_lift_order3(S, p);
      EXPECT_EQ(w.size(), static_cast<std::size_t>(60 * p.value()));
      EXPECT_EQ(net_weights(w, S).at('b'), 0);
      EXPECT_TRUE(LiftVerifies(w, S, p));
    }
  }
}

TEST(CosetLift, Guards) {
  EXPECT_EQ(CodeOf([&] {
              coset_lift_order3(Gens({{"(1,2)(3,4)", 1}, {"(2,4,5)", 1}}, p31), p31);
            }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] {
              coset_lift_order3(Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 0}}, p31), p31);
            }),
            ErrorCode::kPrecondition);
  EXPECT_EQ(CodeOf([&] {
              coset_lift_order3(Gens({{"(1,3)(2,4)", 0}, {"(2,4,5)", 1}}, p31), p31);
            }),
            ErrorCode::kPrecondition);
}

TEST(DetCriterion, SelectsFirstRowWithNonzeroVoltage) {
  const std::vector<Word> cycles{cycle_by_id("3-3/1"), cycle_by_id("3-3/2")};
  const GenSet S = Gens({{"(1,2,3)", 1}, {"(3,4,5)", 0}}, p31);
  DetTrace tr;
  const Word w = det_criterion(cycles, S, p31, &tr);
  EXPECT_EQ(tr.matrix.det, 16);
  EXPECT_EQ(tr.chosen, 0u);
  EXPECT_EQ(tr.chosen_voltage, 4);
  EXPECT_TRUE(LiftVerifies(w, S, p31));

  const GenSet T = Gens({{"(1,2,3)", 0}, {"(3,4,5)", 1}}, p31);
  det_criterion(cycles, T, p31, &tr);
  EXPECT_EQ(tr.chosen, 1u);
}

TEST(DetCriterion, Guards) {
  const std::vector<Word> cycles{cycle_by_id("3-3/1"), cycle_by_id("3-3/2")};
  const GenSet zero = Gens({{"(1,2,3)", 0}, {"(3,4,5)", 0}}, p31);
  EXPECT_EQ(CodeOf([&] { det_criterion(cycles, zero, p31); }), ErrorCode::kNotGenerating);
  const GenSet S = Gens({{"(1,2,3)", 1}, {"(3,4,5)", 0}}, p31);
  EXPECT_EQ(CodeOf([&] { det_criterion(std::vector<Word>{cycles[0]}, S, p31); }),
            ErrorCode::kPrecondition);
  const PrimeModulus p29(29);
  const std::vector<Word> single{cycle_by_id("2-5a/1")};
  const GenSet s29 = Gens({{"(1,2)(3,4)", 0}, {"(1,2,3,4,5)", 1}}, p29);
  EXPECT_EQ(CodeOf([&] { det_criterion(single, s29, p29); }),
            ErrorCode::kCriterionInapplicable);
  const GenSet inv = Gens({{"(1,2)(3,4)", 3}, {"(1,2,3,4,5)", 1}}, p31);
  EXPECT_EQ(CodeOf([&] { det_criterion(single, inv, p31); }), ErrorCode::kPrecondition);
}

TEST(DetCriterion, VoltageShortcutOnEveryCase) {
  std::mt19937 rng(31);
  for (const CaseRepresentative& rep : case_representatives()) {
    const std::vector<std::string> ids = case_cycle_ids(rep.id);
    if (ids.empty()) continue;
    std::vector<Word> cycles;
    for (const auto& id : ids) cycles.push_back(cycle_by_id(id));
    for (const PrimeModulus& p : {p31, p61}) {
      std::uniform_int_distribution<long long> res(0, p.value() - 1);
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<Letter> letters;
        bool any = false;
        for (std::size_t i = 0; i < rep.gens.size(); ++i) {
          long long r = element_order(rep.gens[i]) == 2 ? 0 : res(rng);
          any = any || r != 0;
          letters.push_back(Letter{static_cast<char>('a' + i), make_gelem(rep.gens[i], r, p)});
        }
        if (!any) continue;
        const GenSet S(std::move(letters));
        DetTrace tr;
        const Word w = det_criterion(cycles, S, p, &tr);
        EXPECT_EQ(voltage(cycles[tr.chosen], S, p).res, tr.chosen_voltage) << rep.id;
        EXPECT_EQ(w.size(), static_cast<std::size_t>(60 * p.value()));
        EXPECT_TRUE(LiftVerifies(w, S, p)) << rep.id;
      }
    }
  }
}

}  // namespace
}  // namespace a5zp
