#pragma once

// Generic q-ary block codes: Hamming geometry, exact minimum distance, and
// puncturing. Positions are 0-based in the C++ API; text formats use 1-based
// positions.

#include "rsld/gf.hpp"
#include "rsld/numeric.hpp"
#include "rsld/random.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace rsld::codes {

using gf::Symbol;
using Codeword = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline constexpr std::size_t kDefaultCodeCap = std::size_t{1} << 20;

enum class DistanceProvenance { Verified, Asserted };

struct DistanceInfo {
  std::size_t d = 0;
  std::size_t h = 0;  // m - d: two distinct codewords agree on at most h positions
  DistanceProvenance provenance = DistanceProvenance::Verified;
};

class Code {
 public:
  /// Validates that all words have length m, symbols lie in [0, q), and words are distinct.
  Code(std::uint32_t q, std::size_t m, std::vector<Codeword> words, std::size_t cap = kDefaultCodeCap);

  std::uint32_t q() const noexcept { return q_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  const Codeword& word(std::size_t i) const { return words_.at(i); }

  const std::optional<DistanceInfo>& distance() const noexcept { return distance_; }
  void cache_distance(DistanceInfo info) { distance_ = info; }

  friend bool operator==(const Code& a, const Code& b) {
    return a.q_ == b.q_ && a.m_ == b.m_ && a.words_ == b.words_;
  }

 private:
  std::uint32_t q_;
  std::size_t m_;
  std::vector<Codeword> words_;
  std::optional<DistanceInfo> distance_;
};

std::size_t hamming_distance(WordView x, WordView y);
std::size_t agreement(WordView x, WordView y);

/// Brute-force minimum distance over all pairs. Requires at least two words.
std::size_t compute_min_distance(const Code& code);

/// compute_min_distance, caching d and h = m - d (provenance Verified).
std::size_t min_distance(Code& code);

/// Smallest integer count t with t >= (1 - r) * n. Requires 0 < r < 1.
std::size_t agreement_threshold(const Rational& r, std::size_t n);

/// True iff word agrees with center on at least (1 - r) * n positions.
bool ball_member(WordView center, WordView word, const Rational& r);

class PuncturingPlan {
 public:
  PuncturingPlan(std::size_t m, std::vector<std::size_t> positions);

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return positions_.size(); }
  /// The ordered tuple (a_1, ..., a_n), 0-based.
  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  /// The underlying set S, sorted ascending.
  std::vector<std::size_t> index_set() const;

  static PuncturingPlan identity(std::size_t m);

  friend bool operator==(const PuncturingPlan&, const PuncturingPlan&) = default;

 private:
  std::size_t m_;
  std::vector<std::size_t> positions_;
};

struct PunctureResult {
  Code code;
  bool collapsed = false;  // two source words restricted to the same word
};

/// Restricts every word to positions a_1..a_n (in that order), collapsing duplicates.
PunctureResult puncture(const Code& code, const PuncturingPlan& plan);

/// Uniform ordered n-tuple of distinct positions from [m] by partial Fisher-Yates.
PuncturingPlan sample_puncturing(std::size_t m, std::size_t n, Rng& rng);
PuncturingPlan sample_puncturing(std::size_t m, std::size_t n, std::uint64_t seed);

// Text formats.
//   code: "q m N" then N lines of m symbols
//   plan: "m n" then the n positions, 1-based
void write_code(std::ostream& out, const Code& code);
Code read_code(std::istream& in);
void write_plan(std::ostream& out, const PuncturingPlan& plan);
PuncturingPlan read_plan(std::istream& in);

}  // namespace rsld::codes
