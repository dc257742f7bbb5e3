#pragma once

#include <string>
#include <vector>

#include "gpav/pattern.hpp"

namespace gpav {

enum class FamilyKind { c_family, p_family, classical_centralizer, classical_parabolic, explicit_list };

/// Theorem 1.1's "centralizer of k-1 and k" admits two readings; the prefix
/// one matches the paper's own gloss and is the default everywhere. Both are
/// kept so the verification suite can compare them against the series.
enum class CentralizerReading { prefix, stabilizer };

struct PatternFamily {
  FamilyKind kind = FamilyKind::explicit_list;
  int k = 0, a = 0, l = 0, m = 0;  // populated per kind
  CentralizerReading reading = CentralizerReading::prefix;
  std::vector<GeneralizedPattern> patterns;  // canonical order, no duplicates

  std::string label() const;
};

/// All patterns s1 s2 - s3 - ... - sk with s1 = a, s2 = a+l; (k-2)! members.
PatternFamily c_family(int k, int a, int l);

/// First block (length l) is a permutation of {a,...,a+l-1}, the remaining
/// k-l positions are singletons over the complement; l!*(k-l)! members.
PatternFamily p_family(int k, int a, int l);

/// Classical patterns of length k with first letters k-1, k (prefix reading)
/// or with k-1, k fixed in the last two positions (stabilizer reading).
PatternFamily classical_centralizer_set(int k, CentralizerReading reading = CentralizerReading::prefix);

/// Classical patterns in S_{l+m} whose first l letters are {a,...,a+l-1}.
PatternFamily classical_parabolic_set(int l, int m, int a);

PatternFamily explicit_family(std::vector<GeneralizedPattern> patterns);

bool avoids_all(const PatternFamily& fam, std::span<const int> pi);
bool avoids_all(const PatternFamily& fam, const Permutation& pi);

}  // namespace gpav
