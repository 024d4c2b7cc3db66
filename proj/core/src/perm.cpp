#include "a5zp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "a5zp/error.hpp"

namespace a5zp {

Perm Perm::FromImages(const std::array<int, kDegree>& images) {
  std::array<bool, kDegree> seen{};
  Perm g;
  for (int i = 0; i < kDegree; ++i) {
    const int v = images[i];
    if (v < 1 || v > kDegree || seen[v - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "image array is not a permutation of 1..5");
    }
    seen[v - 1] = true;
    g.images_[i] = static_cast<std::uint8_t>(v);
  }
  return g;
}

bool Perm::is_even() const {
  int inversions = 0;
  for (int i = 0; i < kDegree; ++i) {
    for (int j = i + 1; j < kDegree; ++j) {
      if (images_[i] > images_[j]) ++inversions;
    }
  }
  return inversions % 2 == 0;
}

int Perm::code() const {
  int c = 0;
  for (int i = 0; i < kDegree; ++i) c = c * kDegree + (images_[i] - 1);
  return c;
}

Perm compose(const Perm& g, const Perm& s) {
  std::array<int, Perm::kDegree> out{};
  for (int i = 1; i <= Perm::kDegree; ++i) out[i - 1] = g(s(i));
  return Perm::FromImages(out);
}

Perm inverse(const Perm& g) {
  std::array<int, Perm::kDegree> out{};
  for (int i = 1; i <= Perm::kDegree; ++i) out[g(i) - 1] = i;
  return Perm::FromImages(out);
}

int element_order(const Perm& g) {
  // lcm of the cycle lengths
  int order = 1;
  for (int len : cycle_type(g)) order = std::lcm(order, len);
  return order;
}

Perm power(const Perm& g, long long k) {
  const int n = element_order(g);
  long long r = k % n;
  if (r < 0) r += n;
  Perm out;
  for (long long i = 0; i < r; ++i) out = out * g;
  return out;
}

Perm conjugate(const Perm& g, const Perm& by) {
  return by * g * inverse(by);
}

std::vector<int> cycle_type(const Perm& g) {
  std::vector<int> lengths;
  std::array<bool, Perm::kDegree> seen{};
  for (int i = 1; i <= Perm::kDegree; ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = g(j)) {
      seen[j - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::set<Perm> closure(std::span<const Perm> gens) {
  std::set<Perm> group{Perm()};
  std::vector<Perm> frontier{Perm()};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& s : gens) {
        Perm y = x * s;
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return group;
}

const std::vector<Perm>& symmetric_group() {
  static const std::vector<Perm> elements = [] {
    std::vector<Perm> out;
    std::array<int, Perm::kDegree> images{1, 2, 3, 4, 5};
    do {
      out.push_back(Perm::FromImages(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return elements;
}

const std::vector<Perm>& alternating_group() {
  static const std::vector<Perm> elements = [] {
    std::vector<Perm> out;
    for (const Perm& g : symmetric_group()) {
      if (g.is_even()) out.push_back(g);
    }
    return out;
  }();
  return elements;
}

namespace {

class PermParser {
 public:
  explicit PermParser(std::string_view text) : text_(text) {}

  Perm Parse() {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == '[') return ParseImages();
    return ParseCycles();
  }

 private:
  Perm ParseImages() {
    ++pos_;
    std::array<int, Perm::kDegree> images{};
    for (int i = 0; i < Perm::kDegree; ++i) {
      if (i > 0) Expect(',');
      images[i] = ParsePoint();
    }
    Expect(']');
    ExpectEnd();
    try {
      return Perm::FromImages(images);
    } catch (const Error& e) {
      throw ParseError(e.what(), 0);
    }
  }

  Perm ParseCycles() {
    std::array<int, Perm::kDegree> images{1, 2, 3, 4, 5};
    std::array<bool, Perm::kDegree> used{};
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      ExpectEnd();
      return Perm();
    }
    bool any = false;
    while (true) {
      SkipSpace();
      if (pos_ >= text_.size()) break;
      Expect('(');
      any = true;
      SkipSpace();
      if (Peek(')')) {
        ++pos_;
        continue;
      }
      if (Peek('e')) {
        ++pos_;
        Expect(')');
        continue;
      }
      std::vector<int> cycle;
      std::size_t cycle_start = pos_;
      while (true) {
        int v = ParsePoint();
        if (used[v - 1]) {
          throw ParseError("point " + std::to_string(v) + " repeated",
                           cycle_start);
        }
        used[v - 1] = true;
        cycle.push_back(v);
        SkipSpace();
        if (Peek(')')) {
          ++pos_;
          break;
        }
        if (Peek(',')) ++pos_;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      }
    }
    if (!any) throw ParseError("empty permutation text", 0);
    return Perm::FromImages(images);
  }

  int ParsePoint() {
    SkipSpace();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a point 1..5", pos_);
    }
    const std::size_t start = pos_;
    int v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 99) break;
      ++pos_;
    }
    if (v < 1 || v > Perm::kDegree) {
      throw ParseError("point out of range 1..5", start);
    }
    return v;
  }

  bool Peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void Expect(char c) {
    SkipSpace();
    if (!Peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void ExpectEnd() {
    SkipSpace();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Perm parse_perm(std::string_view text) { return PermParser(text).Parse(); }

std::string to_string(const Perm& g) {
  if (g.is_identity()) return "e";
  std::string out;
  std::array<bool, Perm::kDegree> seen{};
  for (int i = 1; i <= Perm::kDegree; ++i) {
    if (seen[i - 1] || g(i) == i) continue;
    out += '(';
    for (int j = i; !seen[j - 1]; j = g(j)) {
      if (j != i) out += ',';
      seen[j - 1] = true;
      out += std::to_string(j);
    }
    out += ')';
  }
  return out;
}

std::string to_image_string(const Perm& g) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= Perm::kDegree; ++i) {
    if (i > 1) os << ',';
    os << g(i);
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& g) {
  return os << to_string(g);
}

const A5Table& A5Table::instance() {
  static const A5Table table;
  return table;
}

A5Table::A5Table()
    : elements_(alternating_group()), index_of_code_(3125, -1) {
  for (int i = 0; i < kOrder; ++i) index_of_code_[elements_[i].code()] = i;
  for (int x = 0; x < kOrder; ++x) {
    for (int y = 0; y < kOrder; ++y) {
      mul_[x][y] = static_cast<std::uint8_t>(index(elements_[x] * elements_[y]));
    }
    inv_[x] = static_cast<std::uint8_t>(index(inverse(elements_[x])));
  }
}

std::uint64_t A5Table::closure_mask(std::span<const int> gens) const {
  std::uint64_t mask = 1;  // identity is element 0
  std::array<int, kOrder> stack{};
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const int x = stack[--top];
    for (int s : gens) {
      const int y = mul_[x][s];
      if (!(mask >> y & 1)) {
        mask |= std::uint64_t{1} << y;
        stack[top++] = y;
      }
    }
  }
  return mask;
}

}  // namespace a5zp
