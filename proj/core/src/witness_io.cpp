#include <cctype>
#include <sstream>

#include "a5zp/error.hpp"
#include "a5zp/prover.hpp"

namespace a5zp {

std::string serialize_witness(const Witness& w) {
  std::ostringstream os;
  os << "p = " << w.p.value() << '\n';
  os << "method = " << MethodName(w.method) << '\n';
  os << "generators = " << w.generators.size() << '\n';
  for (const Letter& l : w.generators.letters()) {
    os << l.name << " = " << to_string(l.element) << '\n';
  }
  os << "weights =";
  for (const auto& [c, v] : w.weights) os << ' ' << c << ':' << v;
  os << '\n';
  os << "length = " << w.word.size() << '\n';
  os << "word = " << format_flat(w.word) << '\n';
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line without its newline; every line, including the last, must end
  // in '\n'.
  std::string_view Next(std::size_t* offset) {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of witness", pos_);
    const std::size_t nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) {
      throw ParseError("missing newline at end of witness", text_.size());
    }
    *offset = pos_;
    std::string_view line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  bool AtEnd() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// "key = value" with exactly one space on each side of '='.
std::string_view Field(LineReader& in, std::string_view key, std::size_t* at) {
  std::size_t off = 0;
  const std::string_view line = in.Next(&off);
  const std::string prefix = std::string(key) + " = ";
  if (line.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected '" + prefix + "...'", off);
  }
  *at = off + prefix.size();
  return line.substr(prefix.size());
}

long long Integer(std::string_view s, std::size_t at, bool allow_negative) {
  std::size_t i = 0;
  bool neg = false;
  if (allow_negative && !s.empty() && s[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i >= s.size()) throw ParseError("expected an integer", at);
  if (s[i] == '0' && i + 1 < s.size()) throw ParseError("leading zero", at + i);
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("expected an integer", at + i);
    }
    v = v * 10 + (s[i] - '0');
    if (v > (1LL << 40)) throw ParseError("integer too large", at + i);
  }
  if (neg && v == 0) throw ParseError("negative zero", at);
  return neg ? -v : v;
}

}  // namespace

Witness parse_witness(std::string_view text) {
  LineReader in(text);
  std::size_t at = 0;

  const std::string_view p_text = Field(in, "p", &at);
  const long long pv = Integer(p_text, at, false);
  std::optional<PrimeModulus> p;
  try {
    p.emplace(pv);
  } catch (const Error& e) {
    throw ParseError(e.what(), at);
  }

  const std::string_view m_text = Field(in, "method", &at);
  Method method;
  try {
    method = ParseMethod(m_text);
  } catch (const ParseError&) {
    throw ParseError("unknown method '" + std::string(m_text) + "'", at);
  }

  const long long k = Integer(Field(in, "generators", &at), at, false);
  if (k < 1 || k > 26) throw ParseError("generator count out of range", at);
  std::vector<Letter> letters;
  for (long long i = 0; i < k; ++i) {
    std::size_t off = 0;
    const std::string_view line = in.Next(&off);
    if (line.size() < 5 || !std::islower(static_cast<unsigned char>(line[0])) ||
        line.substr(1, 3) != " = ") {
      throw ParseError("expected 'x = (cycles | r)'", off);
    }
    try {
      letters.push_back(Letter{line[0], parse_gelem(line.substr(4), *p)});
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), off + 4 + e.position());
    }
  }
  GenSet gens;
  try {
    gens = GenSet(std::move(letters));
  } catch (const Error& e) {
    throw ParseError(e.what(), at);
  }

  const std::string_view wt_line = Field(in, "weights", &at);
  std::map<char, long long> weights;
  {
    std::size_t i = 0;
    while (i < wt_line.size()) {
      std::size_t end = wt_line.find(' ', i);
      if (end == std::string_view::npos) end = wt_line.size();
      const std::string_view tok = wt_line.substr(i, end - i);
      if (tok.size() < 3 || tok[1] != ':') {
        throw ParseError("expected 'letter:weight'", at + i);
      }
      if (!gens.find(tok[0])) throw ParseError("weight for unknown letter", at + i);
      if (!weights.emplace(tok[0], Integer(tok.substr(2), at + i + 2, true)).second) {
        throw ParseError("duplicate weight", at + i);
      }
      i = end + 1;
      if (end + 1 == wt_line.size()) throw ParseError("trailing space", at + end);
    }
  }
  if (weights.size() != gens.size()) {
    throw ParseError("need one weight per generator", at);
  }

  const long long length = Integer(Field(in, "length", &at), at, false);
  const std::string_view word_text = Field(in, "word", &at);
  Word word;
  try {
    word = parse_flat_word(word_text);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), at + e.position());
  }
  for (const Step& st : word) {
    if (!gens.find(st.letter)) {
      throw ParseError(std::string("word uses unknown letter '") + st.letter + "'", at);
    }
  }
  if (static_cast<long long>(word.size()) != length) {
    throw ParseError("word has " + std::to_string(word.size()) +
                         " steps but length says " + std::to_string(length),
                     at);
  }
  if (!in.AtEnd()) throw ParseError("trailing data after word", in.pos());

  Witness w{*p, std::move(gens), method, std::move(word), std::move(weights), {}};
  // Only canonical text is accepted, so that files round-trip bit-exactly.
  const std::string canonical = serialize_witness(w);
  if (canonical != text) {
    std::size_t i = 0;
    while (i < canonical.size() && i < text.size() && canonical[i] == text[i]) ++i;
    throw ParseError("witness is not in canonical form", i);
  }
  return w;
}

}  // namespace a5zp
