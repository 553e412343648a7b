#include "perminv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "perminv/error.hpp"

namespace perminv {

int CycleType::arity() const {
  int total = 0;
  for (int l : lengths) total += l;
  return total;
}

Permutation::Permutation(std::span<const int> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  img_.reserve(n);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("image list is not a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    img_.push_back(v - 1);
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.img_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.img_[i] = static_cast<int>(i);
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  std::transform(img_.begin(), img_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    q.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  }
  return q;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == static_cast<int>(start)) continue;
    os << '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) os << ' ';
      os << i + 1;
      first = false;
      i = static_cast<std::size_t>(img_[i]);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.arity() != b.arity()) {
    throw InvalidArgument("cannot compose permutations of arity " + std::to_string(a.arity()) +
                          " and " + std::to_string(b.arity()));
  }
  auto ai = a.zero_based();
  auto bi = b.zero_based();
  std::vector<int> out(a.arity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ai[static_cast<std::size_t>(bi[i])] + 1;
  }
  return Permutation(out);
}

CycleType cycle_type(const Permutation& p) {
  auto img = p.zero_based();
  std::vector<bool> seen(img.size(), false);
  CycleType ct;
  for (std::size_t start = 0; start < img.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(img[i])) {
      seen[i] = true;
      ++len;
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  return ct;
}

int sign_of(const Permutation& p) {
  const auto ct = cycle_type(p);
  const auto parity = (p.arity() - ct.lengths.size()) % 2;
  return parity == 0 ? 1 : -1;
}

bool is_transposition(const Permutation& p) {
  auto img = p.zero_based();
  int moved = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] != static_cast<int>(i)) ++moved;
  }
  // A permutation moving exactly two points swaps them.
  return moved == 2;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation result = Permutation::identity(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cycle notation \"" + std::string(text) + "\": " + why + " at offset " +
                      std::to_string(pos));
  };

  std::vector<Permutation> cycles;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> points;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{} || ptr == text.data() + pos) throw fail("expected an integer");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || static_cast<std::size_t>(value) > n) {
        throw fail("index " + std::to_string(value) + " outside [1," + std::to_string(n) + "]");
      }
      if (std::find(points.begin(), points.end(), value) != points.end()) {
        throw fail("index " + std::to_string(value) + " repeated within one cycle");
      }
      points.push_back(value);
    }
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i + 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
      img[static_cast<std::size_t>(points[k] - 1)] = points[(k + 1) % points.size()];
    }
    cycles.emplace_back(img);
    skip_ws();
  }
  for (const auto& c : cycles) result = compose(result, c);
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.zero_based()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace perminv
