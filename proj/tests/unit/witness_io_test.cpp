#include <gtest/gtest.h>

#include <string>

#include "a5zp/error.hpp"
#include "a5zp/prover.hpp"
#include "test_support.hpp"

namespace a5zp {
namespace {

using testing::Gens;

const PrimeModulus p31(31);

const Witness& Sample() {
  static const Witness w =
      prove(Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 1}}, p31), p31);
  return w;
}

std::string Replace(std::string s, const std::string& from, const std::string& to) {
  const std::size_t at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

TEST(WitnessText, Layout) {
  const std::string text = serialize_witness(Sample());
  EXPECT_EQ(text.substr(0, text.find("word = ")),
            "p = 31\n"
            "method = coset3\n"
            "generators = 2\n"
            "a = ((1,2)(3,4) | 0)\n"
            "b = ((2,4,5) | 1)\n"
            "weights = a:20 b:0\n"
            "length = 1860\n");
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.substr(text.find("word = "), 16), "word = a b b b b");
}

TEST(WitnessText, RoundTripIsBitExact) {
  const GenSet sets[] = {
      Gens({{"(1,2)(3,4)", 0}, {"(2,4,5)", 1}}, p31),
      Gens({{"(1,2,3)", 1}, {"(3,4,5)", 0}}, p31),
      Gens({{"(1,2)(3,4)", 3}, {"(2,4,5)", 1}}, p31),
      Gens({{"(1,2)(4,5)", 0}, {"(1,2,3)", 30}, {"(1,2,4)", 2}}, p31),
  };
  for (const GenSet& S : sets) {
    const Witness w = prove(S, p31);
    const std::string text = serialize_witness(w);
    const Witness back = parse_witness(text);
    EXPECT_EQ(serialize_witness(back), text);
    EXPECT_EQ(back.generators, w.generators);
    EXPECT_EQ(back.word, w.word);
    EXPECT_EQ(back.method, w.method);
    EXPECT_EQ(back.weights, w.weights);
    EXPECT_TRUE(verify_witness(back).ok);
  }
}

TEST(WitnessText, RejectsMalformedInput) {
  const std::string good = serialize_witness(Sample());
  const std::string bad[] = {
      "",
      good.substr(0, good.size() - 1),                       // no final newline
      good + "extra\n",                                      // trailing data
      Replace(good, "p = 31", "p = 32"),                     // not prime
      Replace(good, "p = 31", "p = 031"),                    // leading zero
      Replace(good, "p = 31", "p=31"),                       // spacing
      Replace(good, "method = coset3", "method = magic"),
      Replace(good, "generators = 2", "generators = 3"),
      Replace(good, "generators = 2", "generators = 0"),
      Replace(good, "b = ((2,4,5) | 1)", "b = ((2,4) | 1)"),  // odd perm
      Replace(good, "b = ((2,4,5) | 1)", "a = ((2,4,5) | 1)"),
      Replace(good, "b = ((2,4,5) | 1)", "b = ((2,4,5)|1)"),  // not canonical
      Replace(good, "weights = a:20 b:0", "weights = a:0"),
      Replace(good, "weights = a:20 b:0", "weights = a:0 a:0"),
      Replace(good, "weights = a:20 b:0", "weights = a:20 b:0 "),
      Replace(good, "weights = a:20 b:0", "weights = a:0 c:0"),
      Replace(good, "weights = a:20 b:0", "weights = a:0 b:-0"),
      Replace(good, "length = 1860", "length = 1859"),
      Replace(good, "word = a", "word = x"),
      Replace(good, "word = a b", "word = ab"),
      Replace(good, "word = a", "word =  a"),
  };
  for (const std::string& text : bad) {
    EXPECT_THROW(parse_witness(text), ParseError) << text.substr(0, 120);
  }
}

TEST(WitnessText, ErrorsCarryPositions) {
  const std::string good = serialize_witness(Sample());
  const std::string text = Replace(good, "method = coset3", "method = magic");
  try {
    parse_witness(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), good.find("coset3"));
  }
}

TEST(WitnessText, WellFormedButWrongWitnessFailsVerification) {
  // Parses, but the cycle is not Hamiltonian for the altered residue.
  const std::string good = serialize_witness(Sample());
  const Witness w = parse_witness(Replace(good, "b = ((2,4,5) | 1)", "b = ((2,4,5) | 0)"));
  EXPECT_FALSE(verify_witness(w).ok);
}

}  // namespace
}  // namespace a5zp
