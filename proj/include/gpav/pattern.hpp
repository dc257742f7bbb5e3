#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gpav {

/// Permutation in one-line notation: word is a rearrangement of 1..n.
struct Permutation {
  std::vector<int> word;

  Permutation() = default;
  explicit Permutation(std::vector<int> w);  // validates the rearrangement
  int size() const { return static_cast<int>(word.size()); }
  std::string str() const;  // "231" for n<=9, space-separated beyond
};

/// Dashed (vincular) pattern: a permutation word of 1..k plus glue flags
/// between consecutive positions. glue[t] set means positions t and t+1 lie
/// in the same block, so the matched letters must be adjacent in the host
/// permutation. A dash in the text notation is an unset flag; a classical
/// pattern has no glue at all.
class GeneralizedPattern {
 public:
  GeneralizedPattern(std::vector<int> word, std::vector<std::uint8_t> glue);

  /// Grammar: pattern := run ('-' run)*, run := digit+, digits '1'..'9'.
  static GeneralizedPattern parse(std::string_view text);
  std::string format() const;

  int length() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  std::span<const std::uint8_t> glue() const { return glue_; }
  bool classical() const;
  std::vector<std::vector<int>> blocks() const;  // 1-based positions

  friend bool operator==(const GeneralizedPattern&, const GeneralizedPattern&) = default;

 private:
  std::vector<int> word_;
  std::vector<std::uint8_t> glue_;
};

/// True iff u and v have the same pairwise comparison profile. Both words
/// must have pairwise-distinct entries; unequal lengths are a caller error.
bool order_isomorphic(std::span<const int> u, std::span<const int> v);

/// Occurrence test per the dashed-pattern semantics: indices i_1<...<i_k with
/// i_{t+1} = i_t+1 whenever glue joins t and t+1, and values order-isomorphic
/// to the pattern word. Entries of pi must be pairwise distinct; k > n yields
/// false.
bool occurs_in(const GeneralizedPattern& p, std::span<const int> pi);
bool occurs_in(const GeneralizedPattern& p, const Permutation& pi);

/// Number of witnessing index tuples.
std::int64_t count_occurrences(const GeneralizedPattern& p, std::span<const int> pi);
std::int64_t count_occurrences(const GeneralizedPattern& p, const Permutation& pi);

bool avoids_all(std::span<const GeneralizedPattern> patterns, std::span<const int> pi);

}  // namespace gpav
