#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "a5zp/error.hpp"

namespace a5zp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "a5zp");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path TempFile(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "a5zp_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(GeneratorSpec, Parses) {
  const PrimeModulus p(31);
  const GenSet S = parse_generator_spec("a=((1,2)(3,4)|0); b=((2,4,5)|1)", p);
  ASSERT_EQ(S.size(), 2u);
  EXPECT_EQ(S.element('b').res, 1);
  const GenSet T = parse_generator_spec("# comment\nx = ((1,2,3) | 4)\n\ny=((3,4,5)|0)\n", p);
  EXPECT_EQ(T.letters()[0].name, 'x');
  EXPECT_THROW(parse_generator_spec("a=((1,2)|0)", p), Error);
  EXPECT_THROW(parse_generator_spec("a((1,2,3)|0)", p), Error);
  EXPECT_THROW(parse_generator_spec("", p), Error);
}

TEST(TargetWeights, Parses) {
  EXPECT_EQ(parse_target_weights("a:4,b:0"),
            (std::map<char, long long>{{'a', 4}, {'b', 0}}));
  EXPECT_EQ(parse_target_weights("a:-2"), (std::map<char, long long>{{'a', -2}}));
  EXPECT_THROW(parse_target_weights("a4"), Error);
  EXPECT_THROW(parse_target_weights("a:4,a:2"), Error);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"prove", "--p", "31"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"prove", "--p", "7", "--gens-inline", "a=((1,2)(3,4)|0); b=((2,4,5)|1)"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"--format", "xml", "verify-appendix"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyAppendixKv) {
  const Result r = Invoke({"--format", "kv", "verify-appendix"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("summary.cycles=19/19\n"), std::string::npos);
  EXPECT_NE(r.out.find("summary.derived=4/4\n"), std::string::npos);
  EXPECT_NE(r.out.find("summary.determinants=13/13\n"), std::string::npos);
  EXPECT_NE(r.out.find("det.3-3-3.sign_differs=1\n"), std::string::npos);
  EXPECT_EQ(Invoke({"--format", "kv", "verify-appendix"}).out, r.out);
  const Result h = Invoke({"verify-appendix"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("sign differs"), std::string::npos);
}

TEST(Cli, ProveThenCheck) {
  const auto path = TempFile("coset.witness");
  const Result r = Invoke({"--format", "kv", "prove", "--p", "31", "--gens-inline",
                        "a=((1,2)(3,4)|0); b=((2,4,5)|1)", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("method=coset3\n"), std::string::npos);
  EXPECT_NE(r.out.find("length=1860\n"), std::string::npos);

  const Result c = Invoke({"--format", "kv", "check", path.string()});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out, "result=pass\nmethod=coset3\np=31\nlength=1860\n");

  // Without --out the witness itself goes to stdout.
  const Result s = Invoke({"prove", "--p", "31", "--gens-inline",
                        "a=((1,2)(3,4)|0); b=((2,4,5)|1)"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.out, Slurp(path));
  EXPECT_NE(s.err.find("coset3"), std::string::npos);
}

TEST(Cli, ProveFromFile) {
  const auto gens = TempFile("gens.txt");
  std::ofstream(gens) << "# order 3 pair\na = ((1,2,3) | 1)\nb = ((3,4,5) | 0)\n";
  const Result r = Invoke({"--format", "kv", "prove", "--p", "61", "--gens", gens.string(),
                        "--out", TempFile("det.witness").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("method=det_criterion\n"), std::string::npos);
  EXPECT_NE(r.out.find("case=3-3\n"), std::string::npos);
}

TEST(Cli, CheckRejectsCorruptedWitness) {
  const auto path = TempFile("corrupt.witness");
  ASSERT_EQ(Invoke({"prove", "--p", "31", "--gens-inline",
                 "a=((1,2)(3,4)|0); b=((2,4,5)|1)", "--out", path.string()})
                .code,
            kExitOk);
  std::string text = Slurp(path);
  // Residue 0: well formed, no longer generating.
  std::string zero = text;
  zero.replace(zero.find("| 1)"), 4, "| 0)");
  std::ofstream(path, std::ios::binary) << zero;
  Result c = Invoke({"--format", "kv", "check", path.string()});
  EXPECT_EQ(c.code, kExitVerification);
  EXPECT_EQ(c.out.rfind("result=fail\n", 0), 0u);

  // Truncated word: malformed (length mismatch).
  std::string cut = text;
  cut.erase(cut.size() - 3, 2);
  std::ofstream(path, std::ios::binary) << cut;
  c = Invoke({"check", path.string()});
  EXPECT_EQ(c.code, kExitVerification);
  EXPECT_NE(c.out.find("FAIL"), std::string::npos);

  EXPECT_EQ(Invoke({"check", TempFile("missing.witness").string()}).code, kExitUsage);
}

TEST(Cli, Search) {
  Result r = Invoke({"--format", "kv", "search", "--gens", "a=((1,2)(3,4)|0); b=((2,4,5)|0)",
                  "--deterministic"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("vertices=60\nfound=1\nlength=60\n"), std::string::npos);
  EXPECT_EQ(Invoke({"--format", "kv", "search", "--gens", "a=((1,2)(3,4)|0); b=((2,4,5)|0)",
                 "--deterministic"})
                .out,
            r.out);
  r = Invoke({"--format", "kv", "search", "--gens", "a=((1,2,3)|0); b=((3,4,5)|0)",
           "--target-weights", "a:4,b:0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("weights=a:4 b:0"), std::string::npos);
  r = Invoke({"--format", "kv", "search", "--gens", "a=((1,2,3)|0); b=((3,4,5)|0)",
           "--target-weights", "a:1,b:0"});
  EXPECT_EQ(r.code, kExitVerification);
  EXPECT_NE(r.out.find("found=0"), std::string::npos);
  r = Invoke({"search", "--gens", "a=((1,2,3)|1)", "--full"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("vertices: 93"), std::string::npos);
}

TEST(Cli, CasesIsStable) {
  const std::vector<std::string> args{"--format", "kv", "cases", "--p", "31",
                                      "--samples", "2", "--seed", "5"};
  const Result a = Invoke(args);
  EXPECT_EQ(a.code, kExitOk) << a.out;
  EXPECT_NE(a.out.find("summary.ok=1\n"), std::string::npos);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(Invoke(threaded).out, a.out);
}

TEST(CaseSamples, CoverEveryGroup) {
  const PrimeModulus p(31);
  const auto samples = generate_case_samples(p, 3, 11);
  std::map<std::string, int> per_group;
  for (const CaseSample& s : samples) {
    ++per_group[s.group];
    EXPECT_TRUE(is_minimal_generating(s.gens.elements(), p)) << s.group;
  }
  EXPECT_EQ(per_group.size(), 17u);
  for (const auto& [g, n] : per_group) EXPECT_EQ(n, 3) << g;
  const auto again = generate_case_samples(p, 3, 11);
  ASSERT_EQ(again.size(), samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    EXPECT_EQ(again[i].gens, samples[i].gens);
  }
}

}  // namespace
}  // namespace a5zp::cli
