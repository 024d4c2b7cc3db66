#include "a5zp/lifting.hpp"

#include <algorithm>
#include <string>

#include "a5zp/error.hpp"

namespace a5zp {

namespace {

long long Mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<GElem> Elements(const GenSet& S) { return S.elements(); }

void VerifyLift(const Word& w, const GenSet& S, const PrimeModulus& p,
                const char* what) {
  const std::vector<GElem> gens = Elements(S);
  const std::set<GElem> universe = product_closure(gens, p);
  if (universe.size() != static_cast<std::size_t>(60 * p.value())) {
    throw Error(ErrorCode::kNotGenerating,
                std::string(what) + ": generators do not generate A5 x Z_p");
  }
  const HamiltonReport r = is_hamiltonian_cycle(w, S, p, universe);
  if (!r.ok) {
    throw Error(ErrorCode::kVerification,
                std::string(what) + " produced an invalid cycle: " + r.message);
  }
}

void RequireQuotientCycle(const Word& w, const GenSet& S, const char* what) {
  const HamiltonReport r = is_quotient_hamiltonian_cycle(w, S);
  if (!r.ok) {
    throw Error(ErrorCode::kPrecondition,
                std::string(what) + ": input is not a Hamiltonian cycle of the "
                                    "quotient: " + r.message);
  }
  if (w.size() != 60) {
    throw Error(ErrorCode::kPrecondition,
                std::string(what) + ": quotient generators do not generate A5");
  }
}

}  // namespace

long long determinant(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "determinant of a non-square matrix");
    }
  }
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const long long term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

WeightMatrix weight_matrix(std::span<const Word> cycles, const GenSet& S,
                           std::span<const char> columns) {
  WeightMatrix out;
  out.columns.assign(columns.begin(), columns.end());
  for (const Word& c : cycles) {
    const std::map<char, long long> wt = net_weights(c, S);
    std::vector<long long> row;
    for (char col : columns) row.push_back(wt.at(col));
    out.rows.push_back(std::move(row));
  }
  if (out.rows.size() == out.columns.size()) out.det = determinant(out.rows);
  return out;
}

std::vector<long long> prime_factors(long long d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "prime factors of 0");
  d = d < 0 ? -d : d;
  std::vector<long long> out;
  for (long long q = 2; q * q <= d; ++q) {
    while (d % q == 0) {
      out.push_back(q);
      d /= q;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

Word fgl_lift(const Word& quotient_cycle, const GenSet& S,
              const PrimeModulus& p) {
  RequireQuotientCycle(quotient_cycle, S, "fgl_lift");
  const GElem v = voltage(quotient_cycle, S, p);
  if (v.res == 0) {
    throw Error(ErrorCode::kZeroVoltage, "voltage does not generate N");
  }
  Word out;
  out.reserve(quotient_cycle.size() * p.value());
  for (long long k = 0; k < p.value(); ++k) {
    out.insert(out.end(), quotient_cycle.begin(), quotient_cycle.end());
  }
  VerifyLift(out, S, p, "fgl_lift");
  return out;
}

Word double_edge_lift(const GenSet& S, const PrimeModulus& p, char s, Step t,
                      const SearchOptions& search, DoubleEdgeTrace* trace) {
  const GElem se = S.element(s);
  const GElem te = t.sign > 0 ? S.element(t.letter) : ginverse(S.element(t.letter), p);
  if (!(se.perm == te.perm)) {
    throw Error(ErrorCode::kPrecondition,
                "double_edge_lift: s and t differ in A5");
  }
  if (se == te) {
    throw Error(ErrorCode::kPrecondition, "double_edge_lift: s == t");
  }
  const std::vector<GElem> gens = S.elements();
  if (!generates_product(gens, p)) {
    throw Error(ErrorCode::kNotGenerating,
                "double_edge_lift: S does not generate A5 x Z_p");
  }

  DoubleEdgeTrace local;
  DoubleEdgeTrace& tr = trace ? *trace : local;
  tr = DoubleEdgeTrace{};

  SearchOptions opts = search;
  std::optional<Word> cycle = find_quotient_cycle(S, opts);
  if (!cycle) {
    throw Error(ErrorCode::kNotFound,
                "double_edge_lift: no Hamiltonian cycle in the quotient");
  }
  RequireQuotientCycle(*cycle, S, "double_edge_lift");
  tr.quotient_cycle = *cycle;

  Word w = *cycle;
  if (voltage(w, S, p).res == 0) {
    auto uses_s = [&](Word& x) {
      return std::find_if(x.begin(), x.end(),
                          [&](const Step& st) { return st.letter == s; });
    };
    if (uses_s(w) == w.end()) {
      opts.require_letter = s;
      cycle = find_quotient_cycle(S, opts);
      if (!cycle) {
        throw Error(ErrorCode::kNotFound,
                    std::string("double_edge_lift: no quotient cycle uses '") +
                        s + "'");
      }
      tr.required_letter = true;
      tr.quotient_cycle = *cycle;
      w = *cycle;
    }
    if (voltage(w, S, p).res == 0) {
      const auto it = uses_s(w);
      tr.substituted = true;
      tr.position = static_cast<std::size_t>(it - w.begin());
      *it = Step{t.letter, t.sign * it->sign};
    }
  }
  return fgl_lift(w, S, p);
}

Word nonmin_lift(const Word& cycle60, const GenSet& S, char a,
                 const PrimeModulus& p) {
  if (!p.is_one_mod_30()) {
    throw Error(ErrorCode::kModulus, "nonmin_lift: p must be 1 mod 30");
  }
  const GElem ae = S.element(a);
  if (ae.res == 0) {
    throw Error(ErrorCode::kPrecondition, "nonmin_lift: a has zero residue");
  }
  if (!power(ae.perm, p.value() - 1).is_identity()) {
    throw Error(ErrorCode::kPrecondition,
                "nonmin_lift: a-bar^(p-1) is not the identity");
  }
  std::vector<Letter> rest;
  for (const Letter& l : S.letters()) {
    if (l.name == a) continue;
    if (l.element.res != 0) {
      throw Error(ErrorCode::kPrecondition,
                  std::string("nonmin_lift: letter '") + l.name +
                      "' has non-zero residue");
    }
    rest.push_back(l);
  }
  const GenSet others(std::move(rest));
  RequireQuotientCycle(cycle60, others, "nonmin_lift");

  const std::size_t run = static_cast<std::size_t>(p.value() - 1);
  Word out;
  out.reserve(60 * static_cast<std::size_t>(p.value()));
  for (std::size_t i = 0; i < 30; ++i) {
    out.push_back(cycle60[2 * i]);
    out.insert(out.end(), run, Step{a, 1});
    out.push_back(cycle60[2 * i + 1]);
    out.insert(out.end(), run, Step{a, -1});
  }
  VerifyLift(out, S, p, "nonmin_lift");
  return out;
}

Word coset_lift_order3(const GenSet& S, const PrimeModulus& p) {
  if (S.size() != 2) {
    throw Error(ErrorCode::kPrecondition, "coset_lift_order3: need two letters");
  }
  const Letter& a = S.letters()[0];
  const Letter& b = S.letters()[1];
  if (!(a.element.perm == parse_perm("(1,2)(3,4)")) ||
      !(b.element.perm == parse_perm("(2,4,5)"))) {
    throw Error(ErrorCode::kPrecondition,
                "coset_lift_order3: generators must be (1,2)(3,4) and (2,4,5)");
  }
  if (a.element.res != 0 || b.element.res == 0) {
    throw Error(ErrorCode::kPrecondition,
                "coset_lift_order3: need a residue 0 and b residue non-zero");
  }
  Word w = expand(kCosetTemplate, p.value());
  for (Step& st : w) st.letter = st.letter == 'a' ? a.name : b.name;
  VerifyLift(w, S, p, "coset_lift_order3");
  return w;
}

Word det_criterion(std::span<const Word> cycles, const GenSet& S,
                   const PrimeModulus& p, DetTrace* trace) {
  for (char c : S.involution_letters()) {
    if (S.element(c).res != 0) {
      throw Error(ErrorCode::kPrecondition,
                  std::string("det_criterion: involution letter '") + c +
                      "' has non-zero residue");
    }
  }
  const std::vector<char> columns = S.other_letters();
  if (cycles.size() != columns.size()) {
    throw Error(ErrorCode::kPrecondition,
                "det_criterion: need " + std::to_string(columns.size()) +
                    " cycles, got " + std::to_string(cycles.size()));
  }
  for (const Word& c : cycles) RequireQuotientCycle(c, S, "det_criterion");

  DetTrace local;
  DetTrace& tr = trace ? *trace : local;
  tr = DetTrace{};
  for (char c : columns) tr.residues.push_back(S.element(c).res);
  if (std::all_of(tr.residues.begin(), tr.residues.end(),
                  [](long long r) { return r == 0; })) {
    throw Error(ErrorCode::kNotGenerating,
                "det_criterion: every residue is zero");
  }
  tr.matrix = weight_matrix(cycles, S, columns);
  if (Mod(tr.matrix.det, p.value()) == 0) {
    throw Error(ErrorCode::kCriterionInapplicable,
                "criterion inapplicable: determinant " +
                    std::to_string(tr.matrix.det) + " is 0 mod " +
                    std::to_string(p.value()));
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    long long sum = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      sum = Mod(sum + Mod(tr.matrix.rows[i][j], p.value()) * tr.residues[j],
                p.value());
    }
    const long long direct = voltage(cycles[i], S, p).res;
    if (sum != direct) {
      throw Error(ErrorCode::kVerification,
                  "weighted residue sum " + std::to_string(sum) +
                      " disagrees with the voltage " + std::to_string(direct));
    }
    if (sum != 0) {
      tr.chosen = i;
      tr.chosen_voltage = sum;
      return fgl_lift(cycles[i], S, p);
    }
  }
  // Non-zero determinant and a non-zero residue vector cannot give all-zero
  // sums.
  throw Error(ErrorCode::kVerification,
              "det_criterion: no cycle has non-zero voltage");
}

}  // namespace a5zp
