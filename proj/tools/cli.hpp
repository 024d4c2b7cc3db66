#ifndef A5ZP_TOOLS_CLI_HPP_
#define A5ZP_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "a5zp/product_group.hpp"
#include "a5zp/prover.hpp"
#include "a5zp/words.hpp"

namespace a5zp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerification = 1,
  kExitUsage = 2,
};

// Runs one command line (args[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "a=((1,2)(3,4)|0); b=((2,4,5)|1)". Entries are separated by ';' or
// newlines; '#' starts a comment. Throws ParseError.
GenSet parse_generator_spec(std::string_view text, const PrimeModulus& p);

// "a:4,b:0".
std::map<char, long long> parse_target_weights(std::string_view text);

struct CaseSample {
  std::string group;  // case id, or "double_edge", "nonmin", "all2"
  GenSet gens;
};

// Seeded random decorations: for every case representative a random S5
// conjugate with shuffled, randomly inverted letters and random residues
// (involutions 0, the rest not all 0), then the same number of samples for
// the double-edge, non-minimal and all-involution paths.
std::vector<CaseSample> generate_case_samples(const PrimeModulus& p,
                                              int samples_per_group,
                                              std::uint64_t seed);

struct CaseResult {
  std::string group;
  std::string method;
  std::size_t length = 0;
  bool ok = false;
  std::string message;
  double seconds = 0;
};

// Proves and independently verifies every sample; results are in input
// order regardless of `threads`.
std::vector<CaseResult> run_cases(const std::vector<CaseSample>& samples,
                                  const PrimeModulus& p, int threads);

}  // namespace a5zp::cli

#endif  // A5ZP_TOOLS_CLI_HPP_
