#pragma once

// Exact (r, L)-list-decodability deciders.
//
// A code is (r, L)-list-decodable when every Hamming ball of relative radius
// r holds at most L codewords, i.e. no center agrees with L+1 distinct
// codewords on at least t = ceil((1 - r) n) positions each.

#include "rsld/codes.hpp"
#include "rsld/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rsld::listdec {

using codes::Code;
using codes::Codeword;
using codes::Symbol;
using codes::WordView;

inline constexpr std::uint64_t kDefaultCenterSpaceCap = std::uint64_t{1} << 24;

struct ListDecParams {
  Rational r;
  std::size_t L = 1;
  std::size_t n = 0;
  std::size_t t = 0;  // smallest integer >= (1 - r) n

  static ListDecParams make(const Rational& r, std::size_t L, std::size_t n);
};

struct Witness {
  Codeword center;
  std::vector<std::size_t> members;  // L+1 distinct indices into the code, ascending
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t subsets = 0;
};

struct Budget {
  std::uint64_t max_nodes = std::uint64_t{1} << 32;
  std::uint64_t max_subsets = std::uint64_t{1} << 28;
  std::uint64_t center_space_cap = kDefaultCenterSpaceCap;
};

struct Decision {
  bool decodable = true;
  std::optional<Witness> witness;
  SearchStats stats;
};

/// |C ∩ B_r(center)|.
std::size_t ball_count(const Code& code, WordView center, const ListDecParams& params);

/// Size of the reduced center space: per position, the symbols seen in that
/// column plus one absent symbol when the column does not use the whole alphabet.
BigInt reduced_center_space(const Code& code);

/// Enumerates every reduced center. Throws SearchSpaceTooLarge when the space
/// exceeds budget.center_space_cap and BudgetExceeded past budget.max_nodes.
Decision decide_exhaustive(const Code& code, const ListDecParams& params, const Budget& budget = {});

/// Backtracking search for a center giving every word at least t agreements.
/// Returns the center, or nullopt when none exists. `stats`/`max_nodes` are optional.
std::optional<Codeword> center_exists(std::span<const WordView> words, std::size_t t,
                                      SearchStats* stats = nullptr,
                                      std::uint64_t max_nodes = UINT64_MAX);
std::optional<Codeword> center_exists(const std::vector<Codeword>& words, std::size_t t);

/// Searches (L+1)-subsets of codewords in colex order for one with a common
/// center. Throws BudgetExceeded past budget.max_subsets or budget.max_nodes.
Decision decide_witness_search(const Code& code, const ListDecParams& params, const Budget& budget = {});

/// Re-checks a witness: distinct members, each within the ball around the center.
bool verify_witness(const Code& code, const ListDecParams& params, const Witness& witness);

}  // namespace rsld::listdec
