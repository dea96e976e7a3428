#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcmod {

/// Parameters of F(n,m): n generators, each of order m. Both must be >= 2.
struct GroupParams {
  int n = 2;
  int m = 2;

  friend bool operator==(const GroupParams &, const GroupParams &) = default;
};

/// Throws ParameterError unless n >= 2 and m >= 2.
GroupParams make_params(int n, int m);
void validate(const GroupParams &params);

/// One syllable u_generator^exponent; generators are 1-indexed.
struct Syllable {
  int generator = 1;
  int exponent = 1;

  friend auto operator<=>(const Syllable &, const Syllable &) = default;
};

struct RawSyllable {
  int generator = 1;
  long long exponent = 1;
};

/// Normal-form element of F(n,m): adjacent syllables use distinct
/// generators, exponents lie in [1, m-1]. The empty word is the identity.
///
/// Words are ordered by syllable count, then lexicographically on the
/// (generator, exponent) sequence. This is the order of enumerate_words.
struct Word {
  std::vector<Syllable> syllables;

  Word() = default;
  Word(std::initializer_list<Syllable> s) : syllables(s) {}
  explicit Word(std::vector<Syllable> s) : syllables(std::move(s)) {}

  bool is_identity() const { return syllables.empty(); }
  std::size_t length() const { return syllables.size(); }

  friend bool operator==(const Word &, const Word &) = default;
  friend std::strong_ordering operator<=>(const Word &a, const Word &b) {
    if (auto c = a.syllables.size() <=> b.syllables.size(); c != 0)
      return c;
    return a.syllables <=> b.syllables;
  }
};

std::string to_string(const Word &w);

/// Throws ParameterError unless w is a normal form over params.
void validate(const Word &w, const GroupParams &params);

Word normalize(std::span<const RawSyllable> raw, const GroupParams &params);
Word word_mul(const Word &a, const Word &b, const GroupParams &params);
Word word_inv(const Word &a, const GroupParams &params);
/// g^{-1} a g.
Word word_conj(const Word &a, const Word &g, const GroupParams &params);

/// u_v^a as a word (identity when a = 0 mod m).
Word generator_power(int v, long long a, const GroupParams &params);

/// First `count` words g_0, g_1, ... of the canonical enumeration.
std::vector<Word> enumerate_words(const GroupParams &params, std::uint64_t count);

/// g_index of the canonical enumeration, computed directly.
Word word_at(const GroupParams &params, std::uint64_t index);

/// Inverse of word_at.
std::uint64_t word_index(const GroupParams &params, const Word &w);

} // namespace qcmod
