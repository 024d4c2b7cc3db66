#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "a5zp/appendix_bank.hpp"
#include "a5zp/canonical.hpp"
#include "a5zp/error.hpp"
#include "a5zp/hamsearch.hpp"

namespace a5zp::cli {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string Join(const std::vector<long long>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string Gens(const std::vector<Perm>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ' ';
    out += to_string(gens[i]);
  }
  return out;
}

std::string Weights(const std::map<char, long long>& wt) {
  std::string out;
  for (const auto& [c, v] : wt) {
    if (!out.empty()) out += ' ';
    out += c;
    out += ':';
    out += std::to_string(v);
  }
  return out;
}

std::string Factorization(const std::vector<long long>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!out.empty()) out += '*';
    out += std::to_string(factors[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::string Matrix(const WeightMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (i) out += ',';
    out += '[' + Join(m.rows[i]) + ']';
  }
  return out + ']';
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kVerification:
    case ErrorCode::kCriterionInapplicable:
      return kExitVerification;
    default:
      return kExitUsage;
  }
}

// ---------------------------------------------------------------------------

int VerifyAppendix(bool kv, std::ostream& out) {
  const AppendixReport rep = verify_appendix();
  auto count_ok = [](const std::vector<AppendixCycleItem>& v) {
    return std::count_if(v.begin(), v.end(), [](const auto& i) { return i.ok; });
  };
  const auto det_ok =
      std::count_if(rep.determinants.begin(), rep.determinants.end(),
                    [](const auto& d) { return d.ok; });
  if (kv) {
    auto cycles = [&](const char* kind, const std::vector<AppendixCycleItem>& v) {
      for (const auto& c : v) {
        out << kind << '.' << c.id << ".hamiltonian=" << c.hamiltonian << '\n';
        out << kind << '.' << c.id << ".weights=" << Join(c.weights) << '\n';
        out << kind << '.' << c.id << ".expected=" << Join(c.expected_weights) << '\n';
        out << kind << '.' << c.id << ".result=" << (c.ok ? "pass" : "fail") << '\n';
      }
    };
    cycles("cycle", rep.cycles);
    cycles("derived", rep.derived);
    for (const auto& d : rep.determinants) {
      out << "det." << d.case_id << ".value=" << d.matrix.det << '\n';
      out << "det." << d.case_id << ".expected=" << d.expected << '\n';
      out << "det." << d.case_id << ".sign_differs=" << d.sign_differs << '\n';
      out << "det." << d.case_id << ".factors=" << Factorization(d.factors) << '\n';
      out << "det." << d.case_id << ".result=" << (d.ok ? "pass" : "fail") << '\n';
    }
    out << "summary.cycles=" << count_ok(rep.cycles) << '/' << rep.cycles.size() << '\n';
    out << "summary.derived=" << count_ok(rep.derived) << '/' << rep.derived.size() << '\n';
    out << "summary.determinants=" << det_ok << '/' << rep.determinants.size() << '\n';
    out << "summary.ok=" << rep.ok << '\n';
  } else {
    auto cycles = [&](const char* title, const std::vector<AppendixCycleItem>& v) {
      out << title << '\n';
      out << std::left << std::setw(10) << "id" << std::setw(36) << "generators"
          << std::setw(14) << "weights" << std::setw(14) << "expected" << "result\n";
      for (const auto& c : v) {
        out << std::left << std::setw(10) << c.id << std::setw(36) << Gens(c.gens)
            << std::setw(14) << '[' + Join(c.weights) + ']' << std::setw(14)
            << '[' + Join(c.expected_weights) + ']'
            << (c.ok ? "PASS" : "FAIL " + c.message) << '\n';
      }
      out << '\n';
    };
    cycles("Quotient cycles", rep.cycles);
    cycles("Conjugated cycles", rep.derived);
    out << "Weight determinants\n";
    out << std::left << std::setw(8) << "case" << std::setw(36) << "matrix"
        << std::setw(9) << "det" << std::setw(9) << "expected" << std::setw(14)
        << "factors" << "result\n";
    for (const auto& d : rep.determinants) {
      out << std::left << std::setw(8) << d.case_id << std::setw(36) << Matrix(d.matrix)
          << std::setw(9) << d.matrix.det << std::setw(9) << d.expected
          << std::setw(14) << Factorization(d.factors) << (d.ok ? "PASS" : "FAIL");
      if (d.sign_differs) out << " (sign differs; magnitude matches)";
      out << '\n';
    }
    out << '\n'
        << "cycles " << count_ok(rep.cycles) << '/' << rep.cycles.size()
        << ", conjugated " << count_ok(rep.derived) << '/' << rep.derived.size()
        << ", determinants " << det_ok << '/' << rep.determinants.size() << ": "
        << (rep.ok ? "PASS" : "FAIL") << '\n';
  }
  return rep.ok ? kExitOk : kExitVerification;
}

void PrintWitnessSummary(const Witness& w, bool kv, std::ostream& os) {
  const std::string case_id =
      w.trace.normalization ? w.trace.normalization->case_id : "-";
  if (kv) {
    os << "method=" << MethodName(w.method) << '\n'
       << "case=" << case_id << '\n'
       << "p=" << w.p.value() << '\n'
       << "length=" << w.word.size() << '\n'
       << "weights=" << Weights(w.weights) << '\n'
       << "verified=1\n";
  } else {
    os << "method:   " << MethodName(w.method) << '\n'
       << "case:     " << case_id << '\n'
       << "length:   " << w.word.size() << " (p = " << w.p.value() << ")\n"
       << "weights:  " << Weights(w.weights) << '\n'
       << "verified: yes\n";
  }
}

int Prove(long long pv, const std::string& gens_file,
          const std::string& gens_inline, const std::string& out_file, bool kv,
          std::ostream& out, std::ostream& err) {
  const PrimeModulus p(pv);
  const std::string spec = gens_file.empty() ? gens_inline : ReadFile(gens_file);
  const GenSet S = parse_generator_spec(spec, p);
  const Witness w = prove(S, p);
  const std::string text = serialize_witness(w);
  if (out_file.empty()) {
    PrintWitnessSummary(w, kv, err);
    out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!(f << text)) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_file);
    PrintWitnessSummary(w, kv, out);
    out << (kv ? "witness=" : "witness:  ") << out_file << '\n';
  }
  return kExitOk;
}

int Check(const std::string& path, bool kv, std::ostream& out) {
  const std::string text = ReadFile(path);
  auto fail = [&](const std::string& msg) {
    if (kv) {
      out << "result=fail\nmessage=" << msg << '\n';
    } else {
      out << "FAIL: " << msg << '\n';
    }
    return kExitVerification;
  };
  std::optional<Witness> w;
  try {
    w = parse_witness(text);
  } catch (const ParseError& e) {
    return fail(std::string("malformed witness: ") + e.what());
  } catch (const Error& e) {
    return fail(std::string("malformed witness: ") + e.what());
  }
  const WitnessReport r = verify_witness(*w);
  if (!r.ok) return fail(r.message);
  if (kv) {
    out << "result=pass\nmethod=" << MethodName(w->method) << "\np="
        << w->p.value() << "\nlength=" << w->word.size() << '\n';
  } else {
    out << "PASS: Hamiltonian cycle of length " << w->word.size() << " in A5 x Z_"
        << w->p.value() << " (method " << MethodName(w->method) << ")\n";
  }
  return kExitOk;
}

int Search(long long pv, const std::string& gens, const std::string& targets,
           const std::string& prefix, bool deterministic, bool full, bool prune,
           int threads, std::uint64_t max_nodes, bool kv, std::ostream& out) {
  const PrimeModulus p(pv);
  const GenSet S = parse_generator_spec(gens, p);
  SearchOptions opts;
  if (!targets.empty()) opts.target_weights = parse_target_weights(targets);
  if (!prefix.empty()) opts.prefix = expand(prefix, pv);
  opts.deterministic = deterministic;
  opts.prune_degree = prune;
  opts.threads = threads;
  opts.node_limit = max_nodes;
  SearchStats stats;
  std::optional<Word> w;
  std::size_t vertices = 0;
  if (full) {
    const std::vector<GElem> elems = S.elements();
    const std::set<GElem> universe = product_closure(elems, p);
    const CayleyGraph g = make_cayley_graph(S, p, universe);
    vertices = universe.size();
    w = find_cycle(g, opts, &stats);
    if (w && !is_hamiltonian_cycle(*w, S, p, universe).ok) {
      throw Error(ErrorCode::kVerification, "search returned an invalid cycle");
    }
  } else {
    const CayleyGraph g = make_quotient_graph(S);
    vertices = static_cast<std::size_t>(g.order());
    w = find_cycle(g, opts, &stats);
    if (w && !is_quotient_hamiltonian_cycle(*w, S).ok) {
      throw Error(ErrorCode::kVerification, "search returned an invalid cycle");
    }
  }
  if (kv) {
    out << "vertices=" << vertices << "\nfound=" << (w ? 1 : 0) << '\n';
    if (w) {
      out << "length=" << w->size() << "\nweights=" << Weights(net_weights(*w, S))
          << "\nword=" << to_expr_string(*w) << '\n';
    }
    out << "nodes=" << stats.nodes << '\n';
  } else {
    out << "vertices: " << vertices << '\n';
    if (w) {
      out << "found:    Hamiltonian cycle of length " << w->size() << '\n'
          << "weights:  " << Weights(net_weights(*w, S)) << '\n'
          << "word:     " << to_expr_string(*w) << '\n';
    } else {
      out << "found:    none (search space exhausted)\n";
    }
    out << "nodes:    " << stats.nodes << '\n';
  }
  return w ? kExitOk : kExitVerification;
}

int Cases(long long pv, int samples, std::uint64_t seed, int threads,
          bool timing, bool kv, std::ostream& out) {
  const PrimeModulus p(pv);
  require_one_mod_30(p);
  if (samples < 1) throw Error(ErrorCode::kInvalidArgument, "--samples must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CaseSample> cases = generate_case_samples(p, samples, seed);
  const std::vector<CaseResult> results = run_cases(cases, p, threads);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  struct Row {
    std::size_t total = 0, passed = 0;
    std::set<std::string> methods;
    double worst = 0;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  std::size_t passed = 0;
  for (const CaseResult& r : results) {
    if (!rows.count(r.group)) order.push_back(r.group);
    Row& row = rows[r.group];
    ++row.total;
    row.passed += r.ok;
    passed += r.ok;
    if (!r.method.empty()) row.methods.insert(r.method);
    row.worst = std::max(row.worst, r.seconds);
  }
  auto methods = [](const Row& r) {
    std::string s;
    for (const auto& m : r.methods) s += (s.empty() ? "" : "+") + m;
    return s.empty() ? std::string("-") : s;
  };
  if (kv) {
    for (const auto& g : order) {
      const Row& r = rows[g];
      out << "group." << g << ".passed=" << r.passed << '/' << r.total << '\n';
      out << "group." << g << ".methods=" << methods(r) << '\n';
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].ok) out << "failure." << i << '=' << results[i].group << ": " << results[i].message << '\n';
    }
    out << "summary.passed=" << passed << '/' << results.size() << '\n';
    if (timing) out << "summary.seconds=" << elapsed << '\n';
    out << "summary.ok=" << (passed == results.size()) << '\n';
  } else {
    out << "p = " << pv << ", " << samples << " samples per group, seed " << seed << "\n\n";
    out << std::left << std::setw(13) << "group" << std::setw(10) << "passed"
        << std::setw(22) << "method";
    if (timing) out << "worst (s)";
    out << '\n';
    for (const auto& g : order) {
      const Row& r = rows[g];
      out << std::left << std::setw(13) << g << std::setw(10)
          << std::to_string(r.passed) + '/' + std::to_string(r.total)
          << std::setw(22) << methods(r);
      if (timing) out << std::fixed << std::setprecision(3) << r.worst;
      out << '\n';
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].ok) {
        out << "FAIL #" << i << " (" << results[i].group << "): " << results[i].message << '\n';
      }
    }
    out << '\n' << passed << '/' << results.size() << " witnesses verified";
    if (timing) out << " in " << std::fixed << std::setprecision(2) << elapsed << " s";
    out << ": " << (passed == results.size() ? "PASS" : "FAIL") << '\n';
  }
  return passed == results.size() ? kExitOk : kExitVerification;
}

}  // namespace

// ---------------------------------------------------------------------------

GenSet parse_generator_spec(std::string_view text, const PrimeModulus& p) {
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view entry = text.substr(start, end - start);
    const std::size_t hash = entry.find('#');
    if (hash != std::string_view::npos) entry = entry.substr(0, hash);
    const std::size_t lead = entry.find_first_not_of(" \t\r");
    if (lead != std::string_view::npos) {
      const std::size_t at = start + lead;
      entry = Trim(entry);
      const std::size_t eq = entry.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'letter=(cycles|res)'", at);
      const std::string_view name = Trim(entry.substr(0, eq));
      if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0]))) {
        throw ParseError("generator name must be one lowercase letter", at);
      }
      try {
        letters.push_back(Letter{name[0], parse_gelem(entry.substr(eq + 1), p)});
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), at + eq + 1 + e.position());
      }
    }
    start = end + 1;
  }
  if (letters.empty()) throw ParseError("no generators given", 0);
  try {
    return GenSet(std::move(letters));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

std::map<char, long long> parse_target_weights(std::string_view text) {
  std::map<char, long long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = Trim(text.substr(start, end - start));
    if (tok.size() < 3 || !std::islower(static_cast<unsigned char>(tok[0])) || tok[1] != ':') {
      throw ParseError("expected 'letter:weight'", start);
    }
    const std::string num(tok.substr(2));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != num.size()) throw ParseError("bad weight '" + num + "'", start + 2);
    if (!out.emplace(tok[0], v).second) throw ParseError("duplicate letter", start);
    start = end + 1;
  }
  return out;
}

std::vector<CaseSample> generate_case_samples(const PrimeModulus& p,
                                              int samples_per_group,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  auto residue = [&](bool nonzero) {
    const long long lo = nonzero ? 1 : 0;
    return std::uniform_int_distribution<long long>(lo, p.value() - 1)(rng);
  };
  const std::vector<Perm>& s5 = symmetric_group();

  // Random conjugate, random inversions, shuffled; bars only.
  auto scramble = [&](const std::vector<Perm>& gens) {
    const Perm& sigma = s5[below(s5.size())];
    std::vector<Perm> out;
    for (const Perm& g : gens) {
      const Perm h = below(2) ? inverse(g) : g;
      out.push_back(conjugate(h, sigma));
    }
    std::shuffle(out.begin(), out.end(), rng);
    return out;
  };
  auto build = [&](const std::vector<Perm>& bars, const std::vector<long long>& res) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < bars.size(); ++i) {
      letters.push_back(Letter{static_cast<char>('a' + i), make_gelem(bars[i], res[i], p)});
    }
    return GenSet(std::move(letters));
  };
  // Involutions 0, others random and not all 0.
  auto standard = [&](const std::vector<Perm>& bars) {
    std::vector<long long> res(bars.size(), 0);
    bool any = false;
    while (!any) {
      for (std::size_t i = 0; i < bars.size(); ++i) {
        res[i] = element_order(bars[i]) == 2 ? 0 : residue(false);
        any = any || res[i] != 0;
      }
    }
    return res;
  };

  std::vector<CaseSample> out;
  const auto& reps = case_representatives();
  for (const CaseRepresentative& rep : reps) {
    for (int k = 0; k < samples_per_group; ++k) {
      const std::vector<Perm> bars = scramble(rep.gens);
      out.push_back({rep.id, build(bars, standard(bars))});
    }
  }

  std::vector<const CaseRepresentative*> with_involution, pairs;
  for (const CaseRepresentative& rep : reps) {
    if (rep.signature.front() == 2) with_involution.push_back(&rep);
    if (rep.gens.size() == 2) pairs.push_back(&rep);
  }
  for (int k = 0; k < samples_per_group; ++k) {
    const std::vector<Perm> bars = scramble(with_involution[below(with_involution.size())]->gens);
    std::vector<long long> res = standard(bars);
    std::vector<std::size_t> inv;
    for (std::size_t i = 0; i < bars.size(); ++i) {
      if (element_order(bars[i]) == 2) inv.push_back(i);
    }
    res[inv[below(inv.size())]] = residue(true);
    out.push_back({"double_edge", build(bars, res)});
  }

  for (int k = 0; k < samples_per_group; ++k) {
    const std::vector<Perm>& base = pairs[below(pairs.size())]->gens;
    std::vector<Perm> extra;
    for (const Perm& c : alternating_group()) {
      const std::vector<Perm> ac{base[0], c}, bc{base[1], c};
      if (closure(ac).size() < 60 && closure(bc).size() < 60) extra.push_back(c);
    }
    const std::vector<Perm> chosen{base[0], base[1], extra[below(extra.size())]};
    // Scramble all three together, tracking which one is the extra letter.
    const Perm& sigma = s5[below(s5.size())];
    std::vector<std::pair<Perm, long long>> items;
    for (std::size_t i = 0; i < 3; ++i) {
      const Perm h = below(2) ? inverse(chosen[i]) : chosen[i];
      items.push_back({conjugate(h, sigma), i == 2 ? residue(true) : 0});
    }
    std::shuffle(items.begin(), items.end(), rng);
    std::vector<Perm> bars;
    std::vector<long long> res;
    for (const auto& [g, r] : items) {
      bars.push_back(g);
      res.push_back(r);
    }
    out.push_back({"nonmin", build(bars, res)});
  }

  static const std::vector<std::vector<Perm>> involution_triples = [] {
    std::vector<Perm> inv;
    for (const Perm& g : alternating_group()) {
      if (element_order(g) == 2) inv.push_back(g);
    }
    std::vector<std::vector<Perm>> t;
    for (std::size_t x = 0; x < inv.size(); ++x) {
      for (std::size_t y = x + 1; y < inv.size(); ++y) {
        for (std::size_t z = y + 1; z < inv.size(); ++z) {
          std::vector<Perm> s{inv[x], inv[y], inv[z]};
          if (minimality_check(s).minimal) t.push_back(std::move(s));
        }
      }
    }
    return t;
  }();
  for (int k = 0; k < samples_per_group; ++k) {
    const std::vector<Perm> bars = scramble(involution_triples[below(involution_triples.size())]);
    std::vector<long long> res(3, 0);
    while (std::all_of(res.begin(), res.end(), [](long long r) { return r == 0; })) {
      for (long long& r : res) r = residue(false);
    }
    out.push_back({"all2", build(bars, res)});
  }
  return out;
}

std::vector<CaseResult> run_cases(const std::vector<CaseSample>& samples,
                                  const PrimeModulus& p, int threads) {
  std::vector<CaseResult> results(samples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < samples.size(); i = next++) {
      CaseResult& r = results[i];
      r.group = samples[i].group;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Witness w = prove(samples[i].gens, p);
        r.method = MethodName(w.method);
        r.length = w.word.size();
        // Re-check from the serialized form as well.
        const Witness back = parse_witness(serialize_witness(w));
        const WitnessReport a = verify_witness(w);
        const WitnessReport b = verify_witness(back);
        r.ok = a.ok && b.ok && r.length == static_cast<std::size_t>(60 * p.value());
        r.message = !a.ok ? a.message : !b.ok ? b.message : r.ok ? "ok" : "wrong length";
      } catch (const std::exception& e) {
        r.ok = false;
        r.message = e.what();
      }
      r.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hamiltonian cycles in Cayley graphs on A5 x Z_p", "a5zp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"human", "kv"}));

  auto* va = app.add_subcommand("verify-appendix",
                                "Check the stored quotient cycles, weights and determinants");

  long long p = 0;
  std::string gens_file, gens_inline, out_file;
  auto* pr = app.add_subcommand("prove", "Construct and verify a Hamiltonian cycle");
  pr->add_option("--p", p, "Prime modulus, 1 mod 30")->required();
  auto* gf = pr->add_option("--gens", gens_file, "File with generators");
  auto* gi = pr->add_option("--gens-inline", gens_inline,
                            "Generators, e.g. \"a=((1,2)(3,4)|0); b=((2,4,5)|1)\"");
  gf->excludes(gi);
  gi->excludes(gf);
  pr->add_option("--out", out_file, "Write the witness here instead of stdout");

  std::string witness_path;
  auto* ck = app.add_subcommand("check", "Verify a witness file");
  ck->add_option("witness", witness_path, "Witness file")->required();

  long long search_p = 31;
  std::string search_gens, targets, prefix;
  bool deterministic = false, full = false, no_prune = false;
  int threads = 1;
  std::uint64_t max_nodes = 0;
  auto* se = app.add_subcommand("search", "Backtracking search for a Hamiltonian cycle");
  se->add_option("--gens", search_gens, "Generators (inline syntax)")->required();
  se->add_option("--p", search_p, "Prime modulus for residues");
  se->add_option("--target-weights", targets, "Required net weights, e.g. a:4,b:0");
  se->add_option("--prefix", prefix, "Forced opening steps (word expression)");
  se->add_flag("--deterministic", deterministic, "DFS-first result even with threads");
  se->add_flag("--full", full, "Search Cay(<S>; S) instead of the A5 quotient");
  se->add_flag("--no-prune", no_prune, "Disable degree pruning");
  se->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  se->add_option("--max-nodes", max_nodes, "Node limit (0 = none)");

  long long cases_p = 0;
  int samples = 20, case_threads = 1;
  std::uint64_t seed = 1;
  bool timing = false;
  auto* cs = app.add_subcommand("cases", "Prove random decorations of every case");
  cs->add_option("--p", cases_p, "Prime modulus, 1 mod 30")->required();
  cs->add_option("--samples", samples, "Samples per group");
  cs->add_option("--seed", seed, "RNG seed");
  cs->add_option("--threads", case_threads, "Worker threads")->check(CLI::Range(1, 256));
  cs->add_flag("--timing", timing, "Include timings (not stable across runs)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool kv = format == "kv";
  try {
    if (va->parsed()) return VerifyAppendix(kv, out);
    if (pr->parsed()) {
      if (gens_file.empty() && gens_inline.empty()) {
        err << "prove: one of --gens or --gens-inline is required\n";
        return kExitUsage;
      }
      return Prove(p, gens_file, gens_inline, out_file, kv, out, err);
    }
    if (ck->parsed()) return Check(witness_path, kv, out);
    if (se->parsed()) {
      return Search(search_p, search_gens, targets, prefix,
                    deterministic || threads == 1, full, !no_prune, threads,
                    max_nodes, kv, out);
    }
    if (cs->parsed()) return Cases(cases_p, samples, seed, case_threads, timing, kv, out);
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitFor(e);
  }
  return kExitUsage;
}

}  // namespace a5zp::cli
