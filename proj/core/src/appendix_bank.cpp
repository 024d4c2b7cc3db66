#include "a5zp/appendix_bank.hpp"

#include <algorithm>
#include <map>

#include "a5zp/error.hpp"

namespace a5zp {

namespace {

struct RawEntry {
  const char* id;
  std::vector<const char*> gens;
  const char* word;
  std::vector<long long> weights;
};

// clang-format off
const std::vector<RawEntry>& RawEntries() {
  static const std::vector<RawEntry> raw = {
    {"2-3/1",
     {"(1,2)(3,4)", "(2,4,5)"},
     "a b b a b b a b b a B B a B B a B B a b b a B B a b b a B B a b b "
     "a b b a b b a B B a B B a B B a b b a B B a b b a B B",
     {20, 0}},
    {"2-3/2",
     {"(1,2)(3,4)", "(2,4,5)"},
     "a b b a b b a b b a B B a B B a B B a b b a B B a b b a B B a b b "
     "a b b a b b a B B a B B a B B a b b a B B a b b a B B",
     {20, 0}},
    {"2-5a/1",
     {"(1,2)(3,4)", "(1,2,3,4,5)"},
     "a b a b b b b a b a b b b b a b b a B a b b b b a b a b b a b b a "
     "b b a B B a b b b b a B B a b a b a B a b b b b a b b",
     {19, 29}},
    {"2-5b/1",
     {"(1,3)(2,4)", "(1,2,3,4,5)"},
     "a b b b b a B a b a B a B B B B a B B a B B B B a b b a B B B B a "
     "b b a B B B B a b a B a B B B B a B B a B B B B a b b",
     {17, -19}},
    {"3-3/1",
     {"(1,2,3)", "(3,4,5)"},
     "b a b b a a B B A A b b a a b b A A B B A A b b a a B B a B B A A "
     "b b a b A B B a a b b a a B B A A B a b a a B A A B a",
     {4, 0}},
    {"3-5a/1",
     {"(1,2,3)", "(1,2,3,4,5)"},
     "a a B B A A B A b b b a a b a a b a B a a b a a b a a B B a a b a "
     "B A A b a a B A A b A B B A B A A b a a B A A B A A b",
     {5, -1}},
    {"3-5a/2",
     {"(1,2,3)", "(1,2,3,4,5)"},
     "a a B a a b a a b a a B A A b A A B a a b a a B A A b b A A B A A "
     "B A A b A A b a a b a a B a b A A b a a B A A B A A b",
     {-1, 3}},
    {"3-5b/1",
     {"(1,2,4)", "(1,2,3,4,5)"},
     "a a B B A A B A b a a B A A b A A B B A A B A b a a B a a b A A B "
     "a a b a a B A A b A A B B A A B A b a a B A A b A A b",
     {-9, -5}},
    {"3-5b/2",
     {"(1,2,4)", "(1,2,3,4,5)"},
     "a a B B A A B A b a a B a a B a a B B A A B A b a a B a a b A A B "
     "a a b a a B A A b A A B B A A B A b a a B A A b A A b",
     {-1, -7}},
    {"5-5a/1",
     {"(1,2,3,4,5)", "(1,2,3,5,4)"},
     "b A b a b b b b a b b A b b A B A b A b a b b A b b A B a B B A B "
     "B B B A B a B B B B a B B A B a B B A b b b b a B B a",
     {-2, 0}},
    {"5-5b/1",
     {"(1,2,3,4,5)", "(1,3,4,2,5)"},
     "a a a a B A A A A b a a a a B a a b A A b A b A A A A B A B a a a "
     "a b A A A A B A A A A B a a b a a b a a a a B a B a b",
     {4, 0}},
    {"5-5b/2",
     {"(1,2,3,4,5)", "(1,3,4,2,5)"},
     "a a a a B A A A A b a a a a B a a b A B A A A A B a B A A B a a a "
     "a b A A A A B A A A A B a a b a a b a a a a B a B a b",
     {6, -4}},
    {"3-3-3/1",
     {"(1,2,5)", "(1,3,5)", "(1,4,5)"},
     "a a b a a b a a c a a b a a b a a c a b b a a b a a c c a a c b a "
     "b c a c b b c b b a a b a a b a c c a b b a c c a c c",
     {29, 17, 14}},
    {"2-3-3/1",
     {"(1,2)(4,5)", "(1,2,3)", "(1,2,4)"},
     "a C a b a c a b b a b c B a B B a C a C b b c B B a B B c a b C B "
     "a C a B B a B c a b b a b c B a C b b c a b C a B a b",
     {19, 1, 0}},
    {"2-3-3/2",
     {"(1,2)(4,5)", "(1,2,3)", "(1,2,4)"},
     "a C a b a c a b b a b c B a C b b c a b C B a B B a C b a b b a c "
     "a b C B a C a C b b c B B a B B c a b b a b C a B a b",
     {19, 7, -2}},
    {"2-2-3a/1",
     {"(1,2)(4,5)", "(1,2)(3,4)", "(1,2,3)"},
     "a C a b a b a C a b C b c b a b a c a b a b a c a b a b a c c b C "
     "b a b a b C C a b a b a C a b a b a C C b a C a b a b",
     {24, 21, -5}},
    {"2-2-3b/1",
     {"(1,2)(4,5)", "(1,3)(2,4)", "(1,2,3)"},
     "a b a b a b a b c a b a b a b a b a C b a b C b a b a b a C b a b "
     "a b c b a C b a b a b a b a b c a b a b a b a b a C b",
     {25, 27, -2}},
    {"2-2-3c/1",
     {"(1,2)(3,4)", "(1,2)(3,5)", "(1,2,3)"},
     "a C a c b a b a b c a b a b a c a c a b a C C a C b a c b a b c c "
     "a b a b a c a b a b a c a C a C a b a b a C C a b a b",
     {26, 17, 1}},
    {"2-2-3d/1",
     {"(1,2)(3,4)", "(1,3)(2,5)", "(1,2,3)"},
     "a b C a b a b a c b a b a b a b a b c a b a C a b a C b a b c c a "
     "b a b a c b a b a C b a b a C b a b a b C b a b a C b",
     {24, 24, -2}},
  };
  return raw;
}
// clang-format on

}  // namespace

const std::vector<BankEntry>& appendix_bank() {
  static const std::vector<BankEntry> bank = [] {
    std::vector<BankEntry> out;
    for (const RawEntry& r : RawEntries()) {
      BankEntry e;
      e.id = r.id;
      e.case_id = e.id.substr(0, e.id.find('/'));
      for (const char* g : r.gens) e.gens.push_back(parse_perm(g));
      e.word = r.word;
      e.weights = r.weights;
      out.push_back(std::move(e));
    }
    return out;
  }();
  return bank;
}

const BankEntry& bank_entry(std::string_view id) {
  for (const BankEntry& e : appendix_bank()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::kNotFound, "no bank entry '" + std::string(id) + "'");
}

GenSet quotient_genset(std::span<const Perm> gens) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    letters.push_back(Letter{static_cast<char>('a' + i), GElem{gens[i], 0}});
  }
  return GenSet(std::move(letters));
}

Word bank_word(const BankEntry& e) { return parse_flat_word(e.word); }

const std::vector<DerivedCycle>& derived_cycles() {
  static const std::vector<DerivedCycle> derived = {
      {"3-3/2", "3-3/1", parse_perm("(1,4)(2,5)"), {0, 4}},
      {"5-5a/2", "5-5a/1", parse_perm("(4,5)"), {0, -2}},
      {"3-3-3/2", "3-3-3/1", parse_perm("(2,3,4)"), {17, 14, 29}},
      {"3-3-3/3", "3-3-3/1", power(parse_perm("(2,3,4)"), 2), {14, 29, 17}},
  };
  return derived;
}

Word conjugate_word(const Word& w, std::span<const Perm> gens,
                    const Perm& sigma) {
  const Perm sigma_inv = inverse(sigma);
  std::map<char, Step> image;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Perm target = sigma_inv * gens[i] * sigma;
    const char from = static_cast<char>('a' + i);
    for (std::size_t j = 0; j < gens.size() && !image.count(from); ++j) {
      const char to = static_cast<char>('a' + j);
      if (gens[j] == target) {
        image[from] = Step{to, 1};
      } else if (inverse(gens[j]) == target) {
        image[from] = Step{to, -1};
      }
    }
    if (!image.count(from)) {
      throw Error(ErrorCode::kNotFound,
                  "conjugate of " + to_string(gens[i]) + " by " +
                      to_string(sigma) + " is not a generator");
    }
  }
  Word out;
  out.reserve(w.size());
  for (const Step& s : w) {
    const Step& t = image.at(s.letter);
    out.push_back(Step{t.letter, t.sign * s.sign});
  }
  return out;
}

Word derived_word(const DerivedCycle& d) {
  const BankEntry& src = bank_entry(d.source);
  return conjugate_word(bank_word(src), src.gens, d.sigma);
}

std::vector<std::string> case_cycle_ids(std::string_view case_id) {
  if (case_id == "2-3") return {};
  std::vector<std::string> ids;
  for (const BankEntry& e : appendix_bank()) {
    if (e.case_id == case_id) ids.push_back(e.id);
  }
  for (const DerivedCycle& d : derived_cycles()) {
    if (d.id.substr(0, d.id.find('/')) == case_id) ids.push_back(d.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

Word cycle_by_id(std::string_view id) {
  for (const DerivedCycle& d : derived_cycles()) {
    if (d.id == id) return derived_word(d);
  }
  return bank_word(bank_entry(id));
}

}  // namespace a5zp
