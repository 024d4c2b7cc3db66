#include "a5zp/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "a5zp/error.hpp"

namespace a5zp {

namespace {

constexpr std::size_t kMaxExpansion = std::size_t{1} << 26;

bool IsLower(char c) { return c >= 'a' && c <= 'z'; }
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }

}  // namespace

GenSet::GenSet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (!IsLower(l.name)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("letter name '") + l.name +
                      "' must be a lowercase ASCII letter");
    }
    if (l.element == identity_gelem()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("letter '") + l.name + "' is the identity");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[j].name == l.name) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("duplicate letter '") + l.name + "'");
      }
      if (letters_[j].element == l.element) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("letters '") + letters_[j].name + "' and '" +
                        l.name + "' name the same element");
      }
    }
  }
}

std::optional<std::size_t> GenSet::find(char name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t GenSet::index_of(char name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::kUnknownLetter,
              std::string("unknown letter '") + name + "'");
}

std::vector<GElem> GenSet::elements() const {
  std::vector<GElem> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.element);
  return out;
}

std::vector<Perm> GenSet::bar() const {
  std::vector<Perm> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.element.perm);
  return out;
}

std::vector<char> GenSet::involution_letters() const {
  std::vector<char> out;
  for (const Letter& l : letters_) {
    if (element_order(l.element.perm) == 2) out.push_back(l.name);
  }
  return out;
}

std::vector<char> GenSet::other_letters() const {
  std::vector<char> out;
  for (const Letter& l : letters_) {
    if (element_order(l.element.perm) != 2) out.push_back(l.name);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Step& s : out) s.sign = -s.sign;
  return out;
}

// ---------------------------------------------------------------------------
// Compact notation

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  WordExpr Parse() {
    WordExpr e;
    e.terms = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) {
      throw ParseError(Peek(')') ? "unbalanced ')'" : "unexpected character",
                       pos_);
    }
    return e;
  }

 private:
  std::vector<WordExpr::Node> ParseExpr() {
    std::vector<WordExpr::Node> terms;
    SkipSpace();
    if (AtEnd() || Peek(')')) return terms;  // empty expression
    terms.push_back(ParseTerm());
    while (true) {
      SkipSpace();
      if (!Peek(',')) break;
      ++pos_;
      terms.push_back(ParseTerm());
    }
    return terms;
  }

  WordExpr::Node ParseTerm() {
    SkipSpace();
    WordExpr::Node node;
    if (Peek('(')) {
      const std::size_t open = pos_;
      ++pos_;
      node.is_group = true;
      node.children = ParseExpr();
      SkipSpace();
      if (!Peek(')')) throw ParseError("missing ')' for '(' opened", open);
      ++pos_;
    } else if (!AtEnd() && (IsLower(text_[pos_]) || IsUpper(text_[pos_]))) {
      const char c = text_[pos_++];
      node.letter = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      node.sign = IsUpper(c) ? -1 : 1;
    } else {
      throw ParseError("expected a letter or '('", pos_);
    }
    SkipSpace();
    if (Peek('^')) {
      ++pos_;
      node.power = ParseExponent();
    }
    return node;
  }

  Exponent ParseExponent() {
    SkipSpace();
    bool negate = false;
    if (Peek('-')) {
      negate = true;
      ++pos_;
      SkipSpace();
    }
    Exponent e;
    if (Peek('(')) {
      const std::size_t open = pos_;
      ++pos_;
      e = ParseLinear(/*allow_sign=*/true);
      SkipSpace();
      if (!Peek(')')) throw ParseError("missing ')' in exponent", open);
      ++pos_;
    } else {
      const std::size_t start = pos_;
      e = ParseLinear(/*allow_sign=*/false);
      if (negate && e.is_symbolic()) {
        throw ParseError("negated symbolic exponent needs parentheses: -(...)",
                         start);
      }
    }
    if (negate) {
      e.p_coeff = -e.p_coeff;
      e.constant = -e.constant;
    }
    return e;
  }

  // lin := INT? "p" (("+"|"-") INT)? | "-"? INT
  Exponent ParseLinear(bool allow_sign) {
    SkipSpace();
    bool negative = false;
    if (allow_sign && Peek('-')) {
      negative = true;
      ++pos_;
      SkipSpace();
    }
    std::optional<long long> leading;
    if (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      leading = ParseInt();
    }
    SkipSpace();
    if (Peek('p')) {
      if (negative) {
        throw ParseError("negated symbolic exponent needs -(...)", pos_);
      }
      ++pos_;
      Exponent e{leading.value_or(1), 0};
      SkipSpace();
      if (Peek('+') || Peek('-')) {
        const bool minus = Peek('-');
        ++pos_;
        SkipSpace();
        if (AtEnd() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected integer after sign", pos_);
        }
        const long long v = ParseInt();
        e.constant = minus ? -v : v;
      }
      return e;
    }
    if (!leading) throw ParseError("expected an exponent", pos_);
    return Exponent{0, negative ? -*leading : *leading};
  }

  long long ParseInt() {
    const std::size_t start = pos_;
    long long v = 0;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 40)) throw ParseError("integer too large", start);
      ++pos_;
    }
    return v;
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  bool Peek(char c) const { return !AtEnd() && text_[pos_] == c; }
  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string FormatLinear(long long a, long long b) {
  std::string out = a == 1 ? "" : std::to_string(a);
  out += 'p';
  if (b > 0) out += "+" + std::to_string(b);
  if (b < 0) out += "-" + std::to_string(-b);
  return out;
}

std::string FormatPower(Exponent e) {
  if (!e.is_symbolic()) {
    if (e.constant == 1) return "";
    return "^" + std::to_string(e.constant);
  }
  if (e.p_coeff > 0) return "^(" + FormatLinear(e.p_coeff, e.constant) + ")";
  return "^-(" + FormatLinear(-e.p_coeff, -e.constant) + ")";
}

void FormatNodes(const std::vector<WordExpr::Node>& nodes, std::string& out) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += ',';
    const WordExpr::Node& n = nodes[i];
    if (n.is_group) {
      out += '(';
      FormatNodes(n.children, out);
      out += ')';
      out += FormatPower(n.power);
    } else {
      out += n.letter;
      Exponent e = n.power;
      if (n.sign < 0) e = Exponent{-e.p_coeff, -e.constant};
      out += FormatPower(e);
    }
  }
}

void ExpandNodes(const std::vector<WordExpr::Node>& nodes,
                 std::optional<long long> p, Word& out) {
  for (const WordExpr::Node& n : nodes) {
    if (n.power.is_symbolic() && !p) {
      throw Error(ErrorCode::kInvalidArgument,
                  "symbolic exponent needs a value for p");
    }
    long long k = p ? n.power.evaluate(*p) : n.power.constant;
    Word segment;
    if (n.is_group) {
      ExpandNodes(n.children, p, segment);
    } else {
      segment.push_back(Step{n.letter, n.sign});
    }
    if (k < 0) {
      segment = inverse_word(segment);
      k = -k;
    }
    if (segment.empty() || k == 0) continue;
    if (static_cast<unsigned long long>(k) >
        (kMaxExpansion - out.size()) / segment.size()) {
      throw Error(ErrorCode::kTooLarge, "word expansion exceeds 2^26 steps");
    }
    for (long long r = 0; r < k; ++r) {
      out.insert(out.end(), segment.begin(), segment.end());
    }
  }
}

}  // namespace

WordExpr parse_word_expr(std::string_view text) {
  return ExprParser(text).Parse();
}

std::string to_string(const WordExpr& e) {
  std::string out;
  FormatNodes(e.terms, out);
  return out;
}

Word expand(const WordExpr& e, std::optional<long long> p) {
  Word out;
  ExpandNodes(e.terms, p, out);
  return out;
}

Word expand(std::string_view text, std::optional<long long> p) {
  return expand(parse_word_expr(text), p);
}

std::string to_expr_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ',';
    out += w[i].letter;
    const long long run = static_cast<long long>(j - i) * w[i].sign;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_flat(const Word& w) {
  std::string out;
  out.reserve(w.size() * 2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += w[i].sign > 0
               ? w[i].letter
               : static_cast<char>(std::toupper(static_cast<unsigned char>(w[i].letter)));
  }
  return out;
}

Word parse_flat_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!IsLower(c) && !IsUpper(c)) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    if (i + 1 < text.size() &&
        !std::isspace(static_cast<unsigned char>(text[i + 1]))) {
      throw ParseError("flat word tokens are single letters", i);
    }
    out.push_back(Step{static_cast<char>(std::tolower(static_cast<unsigned char>(c))),
                       IsUpper(c) ? -1 : 1});
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Walks

namespace {

struct ResolvedSteps {
  std::vector<GElem> steps;
};

ResolvedSteps Resolve(const Word& w, const GenSet& S, const PrimeModulus& p) {
  std::vector<GElem> plus, minus;
  for (const Letter& l : S.letters()) {
    plus.push_back(l.element);
    minus.push_back(ginverse(l.element, p));
  }
  ResolvedSteps out;
  out.steps.reserve(w.size());
  for (const Step& s : w) {
    const std::size_t i = S.index_of(s.letter);
    out.steps.push_back(s.sign > 0 ? plus[i] : minus[i]);
  }
  return out;
}

}  // namespace

Walk eval_walk(const Word& w, const GenSet& S, const PrimeModulus& p) {
  const ResolvedSteps r = Resolve(w, S, p);
  Walk walk;
  walk.vertices.reserve(w.size() + 1);
  walk.vertices.push_back(identity_gelem());
  for (const GElem& s : r.steps) {
    walk.vertices.push_back(gmul(walk.vertices.back(), s, p));
  }
  walk.endpoint = walk.vertices.back();
  return walk;
}

GElem voltage(const Word& w, const GenSet& S, const PrimeModulus& p) {
  const ResolvedSteps r = Resolve(w, S, p);
  GElem x = identity_gelem();
  for (const GElem& s : r.steps) x = gmul(x, s, p);
  return x;
}

std::map<char, long long> net_weights(const Word& w, const GenSet& S) {
  std::map<char, long long> out;
  for (const Letter& l : S.letters()) out[l.name] = 0;
  for (const Step& s : w) {
    auto it = out.find(s.letter);
    if (it == out.end()) {
      throw Error(ErrorCode::kUnknownLetter,
                  std::string("unknown letter '") + s.letter + "'");
    }
    it->second += s.sign;
  }
  return out;
}

const char* HamiltonViolationName(HamiltonViolation v) {
  switch (v) {
    case HamiltonViolation::kNone: return "none";
    case HamiltonViolation::kUnknownLetter: return "unknown-letter";
    case HamiltonViolation::kLength: return "length";
    case HamiltonViolation::kEndpoint: return "endpoint";
    case HamiltonViolation::kRepeatedVertex: return "repeated-vertex";
    case HamiltonViolation::kOutsideUniverse: return "outside-universe";
    case HamiltonViolation::kMissingVertex: return "missing-vertex";
  }
  return "unknown";
}

namespace {

HamiltonReport Fail(HamiltonViolation v, std::size_t pos, std::string msg) {
  return HamiltonReport{false, v, pos, std::move(msg)};
}

// Shared by the A5 x Z_p and quotient checks; `Elem` is GElem or Perm.
template <class Elem, class Universe, class Contains>
HamiltonReport CheckCycle(const std::vector<Elem>& vertices,
                          const Universe& universe, Contains contains,
                          const Elem& identity) {
  const std::size_t m = vertices.size() - 1;
  if (m != universe.size()) {
    return Fail(HamiltonViolation::kLength, m,
                "word length " + std::to_string(m) + " != " +
                    std::to_string(universe.size()) + " vertices");
  }
  if (!(vertices.back() == identity)) {
    std::ostringstream os;
    os << "walk ends at " << vertices.back() << ", not the identity";
    return Fail(HamiltonViolation::kEndpoint, m, os.str());
  }
  std::set<Elem> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const Elem& v = vertices[k];
    if (!contains(v)) {
      std::ostringstream os;
      os << "vertex " << k << " = " << v << " is outside the universe";
      return Fail(HamiltonViolation::kOutsideUniverse, k, os.str());
    }
    if (!seen.insert(v).second) {
      std::ostringstream os;
      os << "vertex " << k << " = " << v << " visited twice";
      return Fail(HamiltonViolation::kRepeatedVertex, k, os.str());
    }
  }
  if (seen.size() != universe.size()) {
    return Fail(HamiltonViolation::kMissingVertex, m,
                std::to_string(universe.size() - seen.size()) +
                    " vertices never visited");
  }
  return HamiltonReport{true, HamiltonViolation::kNone, 0, "ok"};
}

std::optional<HamiltonReport> CheckLetters(const Word& w, const GenSet& S) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!S.find(w[i].letter) || (w[i].sign != 1 && w[i].sign != -1)) {
      return Fail(HamiltonViolation::kUnknownLetter, i + 1,
                  std::string("step ") + std::to_string(i + 1) +
                      " uses unknown letter '" + w[i].letter + "'");
    }
  }
  return std::nullopt;
}

}  // namespace

HamiltonReport is_hamiltonian_cycle(const Word& w, const GenSet& S,
                                    const PrimeModulus& p,
                                    const std::set<GElem>& universe) {
  if (auto bad = CheckLetters(w, S)) return *bad;
  if (w.size() != universe.size()) {
    return Fail(HamiltonViolation::kLength, w.size(),
                "word length " + std::to_string(w.size()) + " != " +
                    std::to_string(universe.size()) + " vertices");
  }
  const Walk walk = eval_walk(w, S, p);
  return CheckCycle(walk.vertices, universe,
                    [&](const GElem& v) { return universe.count(v) > 0; },
                    identity_gelem());
}

HamiltonReport is_quotient_hamiltonian_cycle(const Word& w, const GenSet& S) {
  if (auto bad = CheckLetters(w, S)) return *bad;
  const std::vector<Perm> bar = S.bar();
  const std::set<Perm> universe = closure(bar);
  if (w.size() != universe.size()) {
    return Fail(HamiltonViolation::kLength, w.size(),
                "word length " + std::to_string(w.size()) + " != " +
                    std::to_string(universe.size()) + " vertices");
  }
  std::vector<Perm> vertices{Perm()};
  vertices.reserve(w.size() + 1);
  for (const Step& s : w) {
    const Perm& g = bar[S.index_of(s.letter)];
    vertices.push_back(vertices.back() * (s.sign > 0 ? g : inverse(g)));
  }
  return CheckCycle(vertices, universe,
                    [&](const Perm& v) { return universe.count(v) > 0; },
                    Perm());
}

}  // namespace a5zp
