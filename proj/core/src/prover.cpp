#include "a5zp/prover.hpp"

#include <algorithm>
#include <cstdlib>

#include "a5zp/appendix_bank.hpp"
#include "a5zp/error.hpp"

namespace a5zp {

const char* MethodName(Method m) {
  switch (m) {
    case Method::kNonmin: return "nonmin";
    case Method::kDoubleEdge: return "double_edge";
    case Method::kCoset3: return "coset3";
    case Method::kDetCriterion: return "det_criterion";
    case Method::kAll2: return "all2";
  }
  return "?";
}

Method ParseMethod(std::string_view name) {
  for (Method m : {Method::kNonmin, Method::kDoubleEdge, Method::kCoset3,
                   Method::kDetCriterion, Method::kAll2}) {
    if (name == MethodName(m)) return m;
  }
  throw ParseError("unknown method '" + std::string(name) + "'", 0);
}

namespace {

GenSet Without(const GenSet& S, char drop) {
  std::vector<Letter> rest;
  for (const Letter& l : S.letters()) {
    if (l.name != drop) rest.push_back(l);
  }
  return GenSet(std::move(rest));
}

// Rewrites a word over the representative letters a, b, c, ... back into the
// input letters.
Word Transport(const Word& w, const Normalization& n, const GenSet& S) {
  Word out;
  out.reserve(w.size());
  for (const Step& st : w) {
    const std::size_t j = n.reorder[static_cast<std::size_t>(st.letter - 'a')];
    const int eps = n.inverted[j] ? -1 : 1;
    out.push_back(Step{S.letters()[j].name, st.sign * eps});
  }
  return out;
}

Witness Finish(const GenSet& S, const PrimeModulus& p, Method method, Word w,
               Trace trace) {
  Witness out{p, S, method, std::move(w), {}, std::move(trace)};
  out.weights = net_weights(out.word, S);
  const WitnessReport r = verify_witness(out);
  if (!r.ok) {
    throw Error(ErrorCode::kVerification,
                std::string("witness (") + MethodName(method) +
                    ") failed verification: " + r.message);
  }
  return out;
}

}  // namespace

GenSet suggest_minimal_subset(const GenSet& S, const PrimeModulus& p) {
  std::vector<Letter> keep = S.letters();
  auto gens_of = [](const std::vector<Letter>& ls) {
    std::vector<GElem> g;
    for (const Letter& l : ls) g.push_back(l.element);
    return g;
  };
  if (!generates_product(gens_of(keep), p)) {
    throw Error(ErrorCode::kNotGenerating, "S does not generate A5 x Z_p");
  }
  for (std::size_t i = 0; i < keep.size();) {
    std::vector<Letter> trial = keep;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (generates_product(gens_of(trial), p)) {
      keep = std::move(trial);
    } else {
      ++i;
    }
  }
  return GenSet(std::move(keep));
}

Witness prove(const GenSet& S, const PrimeModulus& p, const ProveOptions& opts) {
  require_one_mod_30(p);
  const std::vector<GElem> elems = S.elements();
  std::size_t drop = 0;
  if (!is_minimal_generating(elems, p, &drop)) {
    if (drop == elems.size()) {
      throw Error(ErrorCode::kNotGenerating,
                  "S does not generate A5 x Z_" + std::to_string(p.value()));
    }
    throw Error(ErrorCode::kNotMinimal,
                std::string("S is not minimal: letter '") +
                    S.letters()[drop].name + "' is redundant");
  }

  const std::vector<Perm> bar = S.bar();
  const MinimalityVerdict mv = minimality_check(bar);
  Trace trace;

  if (!mv.minimal) {
    // S-bar minus a-bar still generates A5, so every other letter has residue
    // 0 (else S would not be minimal).
    const char a = S.letters()[*mv.drop].name;
    trace.pivot = a;
    const GenSet others = Without(S, a);
    std::optional<Word> c = find_quotient_cycle(others, opts.search);
    if (!c) {
      throw Error(ErrorCode::kNotFound,
                  "no Hamiltonian cycle in the quotient without '" +
                      std::string(1, a) + "'");
    }
    trace.quotient_cycle = *c;
    Word w = nonmin_lift(*c, S, a, p);
    return Finish(S, p, Method::kNonmin, std::move(w), std::move(trace));
  }

  const Signature sig = signature_of(bar);
  const bool all2 = sig == Signature{2, 2, 2};
  for (const Letter& l : S.letters()) {
    if (element_order(l.element.perm) != 2 || l.element.res == 0) continue;
    trace.pivot = l.name;
    DoubleEdgeTrace de;
    Word w = double_edge_lift(S, p, l.name, Step{l.name, -1}, opts.search, &de);
    trace.quotient_cycle = de.quotient_cycle;
    trace.double_edge = std::move(de);
    return Finish(S, p, all2 ? Method::kAll2 : Method::kDoubleEdge,
                  std::move(w), std::move(trace));
  }
  if (all2) {
    throw Error(ErrorCode::kVerification,
                "all generators are involutions with residue 0");
  }

  const Normalization n = normalize(bar);
  trace.normalization = n;
  std::vector<Letter> rep_letters;
  for (std::size_t i = 0; i < n.reorder.size(); ++i) {
    const std::size_t j = n.reorder[i];
    const long long res = S.letters()[j].element.res;
    rep_letters.push_back(Letter{static_cast<char>('a' + i),
                                 make_gelem(n.representative[i],
                                            n.inverted[j] ? -res : res, p)});
  }
  const GenSet rep(std::move(rep_letters));

  if (n.case_id == "2-3") {
    Word w = coset_lift_order3(rep, p);
    return Finish(S, p, Method::kCoset3, Transport(w, n, S), std::move(trace));
  }

  trace.cycle_ids = case_cycle_ids(n.case_id);
  std::vector<Word> cycles;
  for (const std::string& id : trace.cycle_ids) cycles.push_back(cycle_by_id(id));
  DetTrace dt;
  Word w = det_criterion(cycles, rep, p, &dt);
  trace.quotient_cycle = Transport(cycles[dt.chosen], n, S);
  trace.det = std::move(dt);
  return Finish(S, p, Method::kDetCriterion, Transport(w, n, S),
                std::move(trace));
}

WitnessReport verify_witness(const Witness& w) {
  WitnessReport r;
  try {
    const std::vector<GElem> gens = w.generators.elements();
    const std::set<GElem> universe = product_closure(gens, w.p);
    const std::size_t order = static_cast<std::size_t>(60 * w.p.value());
    if (universe.size() != order) {
      r.message = "generators span " + std::to_string(universe.size()) +
                  " elements, not " + std::to_string(order);
      return r;
    }
    r.hamilton = is_hamiltonian_cycle(w.word, w.generators, w.p, universe);
    if (!r.hamilton.ok) {
      r.message = r.hamilton.message;
      return r;
    }
    const std::map<char, long long> wt = net_weights(w.word, w.generators);
    if (wt != w.weights) {
      r.message = "stated weights differ from the word's net weights";
      return r;
    }
  } catch (const Error& e) {
    r.message = e.what();
    return r;
  }
  r.ok = true;
  r.message = "ok";
  return r;
}

const std::vector<ExpectedDeterminant>& expected_determinants() {
  static const std::vector<ExpectedDeterminant> table = {
      {"2-5a", 29},   {"2-5b", -19},  {"3-3", 16},     {"3-5a", 14},
      {"3-5b", 58},   {"5-5a", 4},    {"5-5b", -16},
      // Printed as 11340; the matrix with rows in the stated order has
      // determinant -11340.
      {"3-3-3", 11340, true},
      {"2-3-3", -2},  {"2-2-3a", -5}, {"2-2-3b", -2},  {"2-2-3c", 1},
      {"2-2-3d", -2},
  };
  return table;
}

namespace {

AppendixCycleItem CheckCycle(const std::string& id, const std::vector<Perm>& gens,
                             const Word& w,
                             const std::vector<long long>& expected) {
  AppendixCycleItem item;
  item.id = id;
  item.gens = gens;
  item.expected_weights = expected;
  const GenSet S = quotient_genset(gens);
  const HamiltonReport h = is_quotient_hamiltonian_cycle(w, S);
  item.hamiltonian = h.ok && w.size() == 60;
  const std::map<char, long long> wt = net_weights(w, S);
  for (const Letter& l : S.letters()) item.weights.push_back(wt.at(l.name));
  item.ok = item.hamiltonian && item.weights == expected;
  if (!item.hamiltonian) {
    item.message = h.ok ? "quotient is not A5" : h.message;
  } else if (!item.ok) {
    item.message = "weights differ";
  } else {
    item.message = "ok";
  }
  return item;
}

}  // namespace

AppendixReport verify_appendix() {
  AppendixReport report;
  report.ok = true;
  for (const BankEntry& e : appendix_bank()) {
    report.cycles.push_back(CheckCycle(e.id, e.gens, bank_word(e), e.weights));
    report.ok = report.ok && report.cycles.back().ok;
  }
  for (const DerivedCycle& d : derived_cycles()) {
    const BankEntry& src = bank_entry(d.source);
    AppendixCycleItem item;
    try {
      item = CheckCycle(d.id, src.gens, derived_word(d), d.weights);
    } catch (const Error& e) {
      item.id = d.id;
      item.message = e.what();
    }
    report.derived.push_back(std::move(item));
    report.ok = report.ok && report.derived.back().ok;
  }
  for (const ExpectedDeterminant& ex : expected_determinants()) {
    DeterminantItem item;
    item.case_id = ex.case_id;
    item.expected = ex.value;
    item.cycle_ids = case_cycle_ids(ex.case_id);
    const CaseRepresentative& rep = case_representative(ex.case_id);
    const GenSet S = quotient_genset(rep.gens);
    std::vector<Word> cycles;
    for (const std::string& id : item.cycle_ids) cycles.push_back(cycle_by_id(id));
    const std::vector<char> columns = S.other_letters();
    item.matrix = weight_matrix(cycles, S, columns);
    const long long det = item.matrix.det;
    item.sign_differs = det != ex.value && det == -ex.value;
    const bool square = item.matrix.rows.size() == columns.size();
    item.ok = square && (det == ex.value || (ex.magnitude_only && item.sign_differs));
    if (det != 0) {
      item.factors = prime_factors(det);
      item.factors_below_31 =
          std::all_of(item.factors.begin(), item.factors.end(),
                      [](long long q) { return q < 31; });
    }
    item.ok = item.ok && item.factors_below_31;
    report.determinants.push_back(std::move(item));
    report.ok = report.ok && report.determinants.back().ok;
  }
  return report;
}

}  // namespace a5zp
