#include "rsld/codes.hpp"
#include "rsld/error.hpp"
#include "rsld/listdec.hpp"
#include "rsld/random.hpp"
#include "rsld/rs.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rsld;
using namespace rsld::listdec;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

Code full_rs(std::uint64_t p, std::size_t k) { return rs::materialize(rs::RSCode::full(gf::FieldCtx::create(p, 1), k)); }

// Calls fn on every word of [q]^n.
template <typename Fn>
void for_each_word(std::uint32_t q, std::size_t n, Fn&& fn) {
  Codeword w(n, 0);
  while (true) {
    fn(w);
    std::size_t i = 0;
    while (i < n && ++w[i] == q) w[i++] = 0;
    if (i == n) return;
  }
}

std::size_t count_agreeing(const Code& code, const Codeword& center, std::size_t t) {
  std::size_t c = 0;
  for (const auto& w : code.words()) c += codes::agreement(w, center) >= t;
  return c;
}

// Largest ball population over every center in [q]^n.
std::size_t max_ball_unrestricted(const Code& code, std::size_t t) {
  std::size_t best = 0;
  for_each_word(code.q(), code.m(), [&](const Codeword& c) { best = std::max(best, count_agreeing(code, c, t)); });
  return best;
}

Code random_code(Rng& rng, std::uint32_t q, std::size_t n, std::size_t size) {
  std::set<Codeword> words;
  while (words.size() < size) {
    Codeword w(n);
    for (auto& s : w) s = static_cast<Symbol>(rng.below(q));
    words.insert(w);
  }
  return Code(q, n, {words.begin(), words.end()});
}

}  // namespace

TEST(Listdec, BallCount) {
  const auto constants = full_rs(3, 1);
  EXPECT_EQ(ball_count(constants, Codeword{0, 1, 2}, ListDecParams::make(Rational(2, 3), 1, 3)), 3u);
  const auto rs52 = full_rs(5, 2);
  const auto params = ListDecParams::make(Rational(3, 5), 1, 5);
  EXPECT_EQ(ball_count(rs52, Codeword(5, 0), params), count_agreeing(rs52, Codeword(5, 0), params.t));
  // Each codeword of a distance-n code is alone in a small ball.
  const Code rep(2, 3, {{0, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(ball_count(rep, Codeword{1, 1, 1}, ListDecParams::make(Rational(1, 4), 1, 3)), 1u);
  EXPECT_EQ(code_of([&] { ball_count(rep, Codeword{1, 1}, ListDecParams::make(Rational(1, 4), 1, 3)); }),
            Errc::LengthMismatch);
}

TEST(Listdec, TrivialListSize) {
  const auto rs52 = full_rs(5, 2);
  for (auto r : {Rational(1, 5), Rational(4, 5)}) {
    const auto d = decide_exhaustive(rs52, ListDecParams::make(r, 25, 5));
    EXPECT_TRUE(d.decodable);
    EXPECT_TRUE(decide_witness_search(rs52, ListDecParams::make(r, 25, 5)).decodable);
  }
  // Five constants of length 5: the center (0,1,2,3,4) meets each once, so
  // at r = 4/5 all five share a ball and L = 4 is not enough.
  const auto constants = full_rs(5, 1);
  EXPECT_FALSE(decide_witness_search(constants, ListDecParams::make(Rational(4, 5), 4, 5)).decodable);
  EXPECT_TRUE(decide_witness_search(constants, ListDecParams::make(Rational(4, 5), 5, 5)).decodable);
}

TEST(Listdec, ConstantsWitness) {
  const auto constants = full_rs(3, 1);
  const auto params = ListDecParams::make(Rational(2, 3), 2, 3);
  for (auto d : {decide_exhaustive(constants, params), decide_witness_search(constants, params)}) {
    ASSERT_FALSE(d.decodable);
    ASSERT_TRUE(d.witness);
    EXPECT_TRUE(verify_witness(constants, params, *d.witness));
    // Every center of three distinct symbols works; (0,1,2) is one of them.
    std::set<Symbol> distinct(d.witness->center.begin(), d.witness->center.end());
    EXPECT_EQ(distinct.size(), 3u);
  }
  EXPECT_TRUE(verify_witness(constants, params, Witness{{0, 1, 2}, {0, 1, 2}}));
}

TEST(Listdec, SmallestDecodableListSizeOfRs52) {
  const auto rs52 = full_rs(5, 2);
  const auto r = Rational(3, 5);
  const std::size_t t = ListDecParams::make(r, 1, 5).t;
  const std::size_t oracle = max_ball_unrestricted(rs52, t);
  std::size_t smallest = 0;
  for (std::size_t L = 1; L <= 25 && smallest == 0; ++L)
    if (decide_exhaustive(rs52, ListDecParams::make(r, L, 5)).decodable) smallest = L;
  EXPECT_EQ(smallest, oracle);
}

TEST(Listdec, CenterExistsExamples) {
  const std::vector<Codeword> two{{0, 0}, {1, 1}};
  auto c = center_exists(two, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(codes::agreement(*c, two[0]), 1u);
  EXPECT_EQ(codes::agreement(*c, two[1]), 1u);
  EXPECT_FALSE(center_exists(two, 2));
}

TEST(Listdec, CenterExistsMatchesEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Codeword> words(3, Codeword(6));
    for (auto& w : words)
      for (auto& s : w) s = static_cast<Symbol>(rng.below(5));
    for (std::size_t t = 0; t <= 6; ++t) {
      bool any = false;
      for_each_word(5, 6, [&](const Codeword& beta) {
        if (any) return;
        bool all = true;
        for (const auto& w : words) all = all && codes::agreement(w, beta) >= t;
        any = all;
      });
      const auto found = center_exists(words, t);
      ASSERT_EQ(found.has_value(), any) << "trial " << trial << " t " << t;
      if (found)
        for (const auto& w : words) EXPECT_GE(codes::agreement(w, *found), t);
    }
  }
}

TEST(Listdec, ReducedCentersMatchUnrestrictedSearch) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto q = static_cast<std::uint32_t>(2 + rng.below(3));
    const std::size_t n = 2 + rng.below(3);
    const std::uint64_t space = ipow(BigInt(q), n).convert_to<std::uint64_t>();
    const auto code = random_code(rng, q, n, 2 + rng.below(std::min<std::uint64_t>(8, space - 1)));
    const std::size_t L = 1 + rng.below(3);
    for (auto r : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
      const auto params = ListDecParams::make(r, L, n);
      const bool oracle = max_ball_unrestricted(code, params.t) <= L;
      ASSERT_EQ(decide_exhaustive(code, params).decodable, oracle);
    }
  }
}

TEST(Listdec, DecidersAgreeAndWitnessesVerify) {
  Rng rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const auto q = static_cast<std::uint32_t>(2 + rng.below(4));
    const std::size_t n = 2 + rng.below(5);
    const std::uint64_t space = std::min<std::uint64_t>(30, ipow(BigInt(q), n).convert_to<std::uint64_t>());
    const auto code = random_code(rng, q, n, 2 + rng.below(space - 1));
    const std::size_t L = 1 + rng.below(3);
    for (auto r : {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)}) {
      const auto params = ListDecParams::make(r, L, n);
      const auto a = decide_exhaustive(code, params);
      const auto b = decide_witness_search(code, params);
      ASSERT_EQ(a.decodable, b.decodable);
      if (a.witness) EXPECT_TRUE(verify_witness(code, params, *a.witness));
      if (b.witness) EXPECT_TRUE(verify_witness(code, params, *b.witness));
    }
  }
}

TEST(Listdec, WitnessForTwoCloseWords) {
  const Code code(3, 4, {{0, 0, 1, 2}, {0, 0, 2, 1}, {2, 2, 2, 2}});
  const auto params = ListDecParams::make(Rational(1, 2), 1, 4);
  const auto d = decide_witness_search(code, params);
  ASSERT_FALSE(d.decodable);
  EXPECT_TRUE(verify_witness(code, params, *d.witness));
}

TEST(Listdec, VerifyWitnessRejectsBadWitnesses) {
  const auto constants = full_rs(3, 1);
  const auto params = ListDecParams::make(Rational(2, 3), 2, 3);
  EXPECT_FALSE(verify_witness(constants, params, Witness{{0, 0, 0}, {0, 1, 2}}));
  EXPECT_FALSE(verify_witness(constants, params, Witness{{0, 1, 2}, {0, 0, 1}}));
  EXPECT_FALSE(verify_witness(constants, params, Witness{{0, 1, 2}, {0, 1}}));
}

TEST(Listdec, BudgetsAreEnforced) {
  const auto rs72 = full_rs(7, 2);
  const auto params = ListDecParams::make(Rational(1, 2), 3, 7);
  Budget tiny;
  tiny.center_space_cap = 10;
  EXPECT_EQ(code_of([&] { decide_exhaustive(rs72, params, tiny); }), Errc::SearchSpaceTooLarge);
  Budget few_nodes;
  few_nodes.max_nodes = 5;
  EXPECT_EQ(code_of([&] { decide_exhaustive(rs72, params, few_nodes); }), Errc::BudgetExceeded);
  Budget few_subsets;
  few_subsets.max_subsets = 3;
  EXPECT_EQ(code_of([&] { decide_witness_search(rs72, ListDecParams::make(Rational(1, 2), 2, 7), few_subsets); }),
            Errc::BudgetExceeded);
}

TEST(Listdec, ReducedCenterSpaceSize) {
  const Code code(4, 2, {{0, 1}, {0, 2}});
  // Column 0 uses {0} plus one sentinel; column 1 uses {1, 2} plus one sentinel.
  EXPECT_EQ(reduced_center_space(code), 6);
  const auto rs52 = full_rs(5, 2);
  EXPECT_EQ(reduced_center_space(rs52), 3125);
}
