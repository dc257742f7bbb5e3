#include "gpav/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpav {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

bool is_rearrangement(std::span<const int> w) {
  std::vector<char> seen(w.size(), 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
  require(is_rearrangement(word), "permutation word must contain each of 1..n exactly once");
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word) out.push_back(static_cast<char>('0' + v));
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

GeneralizedPattern::GeneralizedPattern(std::vector<int> word, std::vector<std::uint8_t> glue)
    : word_(std::move(word)), glue_(std::move(glue)) {
  require(!word_.empty(), "pattern must have length k >= 1");
  require(glue_.size() + 1 == word_.size(), "pattern needs exactly k-1 adjacency flags");
  require(is_rearrangement(word_), "pattern word must be a permutation of 1..k");
}

GeneralizedPattern GeneralizedPattern::parse(std::string_view text) {
  std::vector<int> word;
  std::vector<std::uint8_t> glue;
  bool have_digit = false;
  bool pending_dash = false;
  for (char ch : text) {
    if (ch == '-') {
      require(have_digit && !pending_dash, "misplaced dash in pattern");
      pending_dash = true;
    } else if (ch >= '1' && ch <= '9') {
      if (have_digit) glue.push_back(pending_dash ? 0 : 1);
      word.push_back(ch - '0');
      have_digit = true;
      pending_dash = false;
    } else {
      require(false, "pattern may contain only digits 1..9 and dashes");
    }
  }
  require(have_digit, "empty pattern");
  require(!pending_dash, "trailing dash in pattern");
  return GeneralizedPattern(std::move(word), std::move(glue));
}

std::string GeneralizedPattern::format() const {
  std::string out;
  for (int t = 0; t < length(); ++t) {
    if (t > 0 && !glue_[t - 1]) out.push_back('-');
    out.push_back(static_cast<char>('0' + word_[t]));
  }
  return out;
}

bool GeneralizedPattern::classical() const {
  return std::none_of(glue_.begin(), glue_.end(), [](std::uint8_t g) { return g != 0; });
}

std::vector<std::vector<int>> GeneralizedPattern::blocks() const {
  std::vector<std::vector<int>> out;
  for (int t = 0; t < length(); ++t) {
    if (t == 0 || !glue_[t - 1]) out.emplace_back();
    out.back().push_back(t + 1);
  }
  return out;
}

bool order_isomorphic(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("order_isomorphic requires words of equal length");
  for (size_t i = 0; i + 1 < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      if ((u[i] < u[j]) != (v[i] < v[j])) return false;
  return true;
}

namespace {

// Depth-first search over pattern positions. At glued positions the index is
// forced; elsewhere it scans forward. The order-isomorphism constraint is
// checked incrementally against all previously placed letters.
struct Matcher {
  std::span<const int> w;
  std::span<const std::uint8_t> glue;
  std::span<const int> pi;
  bool count_all = false;
  std::int64_t hits = 0;
  int idx[9];
  int val[9];

  bool consistent(int t, int v) const {
    for (int s = 0; s < t; ++s)
      if ((w[s] < w[t]) != (val[s] < v)) return false;
    return true;
  }

  // Returns true once a single occurrence suffices and has been found.
  bool walk(int t, int lo) {
    const int k = static_cast<int>(w.size());
    const int n = static_cast<int>(pi.size());
    if (t == k) {
      ++hits;
      return !count_all;
    }
    if (t > 0 && glue[t - 1]) {
      const int i = idx[t - 1] + 1;
      if (i >= n || !consistent(t, pi[i])) return false;
      idx[t] = i;
      val[t] = pi[i];
      return walk(t + 1, i + 1);
    }
    for (int i = lo; i + (k - t) <= n; ++i) {
      if (!consistent(t, pi[i])) continue;
      idx[t] = i;
      val[t] = pi[i];
      if (walk(t + 1, i + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool occurs_in(const GeneralizedPattern& p, std::span<const int> pi) {
  if (p.length() > static_cast<int>(pi.size())) return false;
  Matcher m{p.word(), p.glue(), pi};
  return m.walk(0, 0);
}

std::int64_t count_occurrences(const GeneralizedPattern& p, std::span<const int> pi) {
  if (p.length() > static_cast<int>(pi.size())) return 0;
  Matcher m{p.word(), p.glue(), pi};
  m.count_all = true;
  m.walk(0, 0);
  return m.hits;
}

bool occurs_in(const GeneralizedPattern& p, const Permutation& pi) {
  return occurs_in(p, std::span<const int>(pi.word));
}

std::int64_t count_occurrences(const GeneralizedPattern& p, const Permutation& pi) {
  return count_occurrences(p, std::span<const int>(pi.word));
}

bool avoids_all(std::span<const GeneralizedPattern> patterns, std::span<const int> pi) {
  for (const auto& p : patterns)
    if (occurs_in(p, pi)) return false;
  return true;
}

}  // namespace gpav
