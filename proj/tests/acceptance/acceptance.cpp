// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Tolerances are exact unless a line states otherwise.

#include "rsld/badtuples.hpp"
#include "rsld/bounds.hpp"
#include "rsld/codes.hpp"
#include "rsld/error.hpp"
#include "rsld/gf.hpp"
#include "rsld/harness.hpp"
#include "rsld/interval.hpp"
#include "rsld/listdec.hpp"
#include "rsld/random.hpp"
#include "rsld/rs.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rsld;
using codes::Code;
using codes::Codeword;
using gf::FieldCtx;
using gf::Symbol;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    out.pass = false;
    out.detail += "; exceeded time limit";
  }
  if (!out.pass) ++g_failures;
  std::printf("[%s] criterion %d: %s (%s; %.1f s of %.0f s)\n", out.pass ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), secs, limit_seconds);
  std::fflush(stdout);
}

std::vector<FieldCtx> small_fields() {
  std::vector<FieldCtx> out;
  for (const char* spec : {"2", "3", "2^2", "5", "7", "2^3", "3^2"}) out.push_back(FieldCtx::parse(spec));
  return out;
}

// Minimum weight over all nonzero codewords of the RS code on `evals`, by
// enumerating every message whose most significant nonzero coefficient is one.
// Every nonzero codeword is a scalar multiple of exactly one of these, and
// scaling preserves weight, so for a linear code this is the exact distance.
std::size_t min_weight_oracle(const FieldCtx& f, std::size_t k, const std::vector<gf::FieldElement>& evals) {
  const std::size_t n = evals.size();
  const std::uint32_t q = f.q();
  // contrib[j][v][i] = v * x_i^j
  std::vector<std::vector<std::vector<Symbol>>> contrib(k, std::vector<std::vector<Symbol>>(q, std::vector<Symbol>(n)));
  for (std::size_t j = 0; j < k; ++j)
    for (Symbol v = 0; v < q; ++v)
      for (std::size_t i = 0; i < n; ++i) contrib[j][v][i] = f.mul(f.element(v), f.pow(evals[i], j)).value;
  std::vector<Symbol> neg(q);
  for (Symbol v = 0; v < q; ++v) neg[v] = f.neg(f.element(v)).value;

  std::size_t best = n + 1;
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<Symbol> word = contrib[lead][f.one().value];
    std::vector<Symbol> digits(lead, 0);
    while (true) {
      std::size_t w = 0;
      for (auto s : word) w += s != 0;
      best = std::min(best, w);
      std::size_t j = 0;
      for (; j < lead; ++j) {
        const Symbol old = digits[j];
        const Symbol next = (old + 1 == q) ? 0 : old + 1;
        for (std::size_t i = 0; i < n; ++i)
          word[i] = f.add_sym(f.add_sym(word[i], neg[contrib[j][old][i]]), contrib[j][next][i]);
        digits[j] = next;
        if (next != 0) break;
      }
      if (j == lead) break;
    }
  }
  return best;
}

std::vector<gf::FieldElement> random_points(const FieldCtx& f, std::size_t n, std::uint64_t seed) {
  const auto plan = codes::sample_puncturing(f.q(), n, seed);
  std::vector<gf::FieldElement> out;
  for (auto a : plan.positions()) out.push_back(f.element(static_cast<Symbol>(a)));
  return out;
}

std::vector<Code> g_materialized;  // shared with criterion 4

Outcome criterion_mds() {
  std::size_t codes_checked = 0, pairwise = 0, violations = 0;
  std::uint64_t seed = 1;
  for (const auto& f : small_fields()) {
    for (std::size_t n = 3; n <= f.q(); ++n) {
      for (std::size_t k = 2; k < n; ++k) {
        for (int rep = 0; rep < 20; ++rep) {
          const auto evals = random_points(f, n, seed++);
          const auto code = rs::RSCode::create(f, k, evals);
          const std::size_t expect = n - k + 1;
          const std::size_t weight = min_weight_oracle(f, k, evals);
          if (weight != expect) ++violations;
          if (code.size() <= 4096) {
            auto words = rs::materialize(code, 4096, 0);
            if (codes::compute_min_distance(words) != expect) ++violations;
            ++pairwise;
            g_materialized.push_back(std::move(words));
          }
          ++codes_checked;
        }
      }
    }
  }
  std::ostringstream d;
  d << codes_checked << " codes, " << pairwise << " also by pairwise comparison, " << violations << " mismatches";
  return {violations == 0 && codes_checked > 0, d.str()};
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

Outcome criterion_cross_validation() {
  Rng rng(2024);
  const std::vector<Rational> radii{Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
  std::size_t instances = 0, disagreements = 0, bad_witness = 0, witnesses = 0;
  auto check = [&](const Code& code, std::size_t L, const Rational& r) {
    const auto params = listdec::ListDecParams::make(r, L, code.m());
    const auto a = listdec::decide_exhaustive(code, params);
    const auto b = listdec::decide_witness_search(code, params);
    ++instances;
    if (a.decodable != b.decodable) ++disagreements;
    for (const auto* d : {&a, &b}) {
      if (!d->witness) continue;
      ++witnesses;
      if (!listdec::verify_witness(code, params, *d->witness)) ++bad_witness;
    }
  };
  // Punctured RS codes.
  for (const char* spec : {"3", "2^2", "5"}) {
    const auto f = FieldCtx::parse(spec);
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto full = rs::materialize(rs::RSCode::full(f, k));
      if (full.size() > 30) continue;
      for (std::size_t n = 2; n <= f.q(); ++n) {
        const auto plan = codes::sample_puncturing(f.q(), n, rng.next());
        const auto code = codes::puncture(full, plan).code;
        if (code.size() < 2) continue;
        for (const auto& r : radii) check(code, 1 + rng.below(3), r);
      }
    }
  }
  // Random codes.
  while (instances < 400) {
    const auto q = static_cast<std::uint32_t>(2 + rng.below(4));
    const std::size_t n = 2 + rng.below(5);
    const std::uint64_t space = ipow(BigInt(q), n).convert_to<std::uint64_t>();
    const auto code = random_code(rng, q, n, 2 + rng.below(std::min<std::uint64_t>(29, space - 1)));
    for (const auto& r : radii) check(code, 1 + rng.below(3), r);
  }
  std::ostringstream d;
  d << instances << " instances, " << disagreements << " disagreements, " << witnesses << " witnesses, "
    << bad_witness << " failed re-verification";
  return {instances >= 200 && disagreements == 0 && bad_witness == 0, d.str()};
}

// Largest ball population over every center in [q]^n.
std::size_t max_ball_unrestricted(const Code& code, std::size_t t) {
  std::size_t best = 0;
  Codeword beta(code.m(), 0);
  while (true) {
    std::size_t count = 0;
    for (const auto& w : code.words()) count += codes::agreement(w, beta) >= t;
    best = std::max(best, count);
    std::size_t i = 0;
    while (i < beta.size() && ++beta[i] == code.q()) beta[i++] = 0;
    if (i == beta.size()) return best;
  }
}

Outcome criterion_center_reduction() {
  std::size_t codes_checked = 0, decisions = 0, disagreements = 0;
  auto check = [&](const Code& code) {
    ++codes_checked;
    for (std::size_t t = 1; t <= code.m(); ++t) {
      const std::size_t oracle = max_ball_unrestricted(code, t);
      // Radius with threshold exactly t.
      const Rational r(code.m() - t, code.m());
      if (r <= 0) continue;
      for (std::size_t L = 1; L <= std::min<std::size_t>(3, code.size()); ++L) {
        const auto params = listdec::ListDecParams::make(r, L, code.m());
        ++decisions;
        if (listdec::decide_exhaustive(code, params).decodable != (oracle <= L)) ++disagreements;
      }
    }
  };
  // Every code with at least two words when q^n <= 16.
  for (std::uint32_t q = 2; q <= 4; ++q) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::uint64_t space = ipow(BigInt(q), n).convert_to<std::uint64_t>();
      if (space > 16) continue;
      std::vector<Codeword> all(space, Codeword(n));
      for (std::uint64_t v = 0; v < space; ++v) {
        std::uint64_t x = v;
        for (std::size_t i = 0; i < n; ++i, x /= q) all[v][i] = static_cast<Symbol>(x % q);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::vector<Codeword> words;
        for (std::uint64_t v = 0; v < space; ++v)
          if (mask >> v & 1) words.push_back(all[v]);
        check(Code(q, n, std::move(words)));
      }
    }
  }
  const std::size_t exhaustive = codes_checked;
  // Random codes for the larger spaces.
  Rng rng(77);
  for (int i = 0; i < 3000; ++i) {
    const auto q = static_cast<std::uint32_t>(3 + rng.below(2));
    const std::size_t n = 2 + rng.below(3);
    const std::uint64_t space = ipow(BigInt(q), n).convert_to<std::uint64_t>();
    if (space <= 16) continue;
    check(random_code(rng, q, n, 2 + rng.below(std::min<std::uint64_t>(space - 1, 20))));
  }
  std::ostringstream d;
  d << codes_checked << " codes (" << exhaustive << " by exhaustive enumeration of all codes with q^n <= 16), "
    << decisions << " decisions, " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

Outcome criterion_structural() {
  std::size_t agree_violations = 0, determine_violations = 0, subsets = 0;
  for (auto& code : g_materialized) {
    const std::size_t h = code.m() - codes::min_distance(code);
    for (std::size_t i = 0; i < code.size(); ++i)
      for (std::size_t j = i + 1; j < code.size(); ++j)
        if (codes::agreement(code.word(i), code.word(j)) > h) ++agree_violations;
    // Every (h+1)-subset of positions: restrictions must be pairwise distinct.
    std::vector<std::size_t> pos(h + 1);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      ++subsets;
      std::set<Codeword> seen;
      for (const auto& w : code.words()) {
        Codeword r;
        for (auto p : pos) r.push_back(w[p]);
        if (!seen.insert(r).second) ++determine_violations;
      }
      std::size_t i = pos.size();
      while (i-- > 0 && pos[i] == code.m() - pos.size() + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++pos[i];
      for (std::size_t j = i + 1; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  std::ostringstream d;
  d << g_materialized.size() << " codes, " << subsets << " position subsets, " << agree_violations
    << " agreement violations, " << determine_violations << " determination violations";
  return {!g_materialized.empty() && agree_violations == 0 && determine_violations == 0, d.str()};
}

Outcome criterion_chain() {
  const std::vector<BigInt> values{BigInt(1) << 10, BigInt(1) << 16, BigInt(1000000)};
  constexpr std::uint64_t kMax = 256;
  std::uint64_t points = 0, violations = 0, literal = 0, literal_mismatch = 0;
  Rng rng(5);
  for (const auto& m : values) {
    for (const auto& q : values) {
      for (std::uint64_t h = 1; h <= 32; ++h) {
        badtuples::ChainEvaluator ev(m, q, h, kMax);
        for (std::uint64_t c = 5; c <= 7; ++c) {
          if (!ev.h_small(c)) continue;
          for (std::uint64_t M = 2 * c * h; M <= kMax; ++M) {
            for (std::uint64_t Z = 0; Z * (2 * c - 2) <= M; ++Z) {
              for (std::uint64_t n = M; n <= kMax; ++n) {
                const auto r = ev.check(c, M, Z, n);
                ++points;
                if (!r.hypotheses()) continue;  // every enumerated point satisfies them
                if (!r.inequality) ++violations;
                if (rng.below(4096) == 0 || n == M) {
                  ++literal;
                  const auto lit = badtuples::counting_chain_check(m, q, h, c, M, Z, n);
                  if (lit.inequality != r.inequality || lit.hypotheses() != r.hypotheses()) ++literal_mismatch;
                }
              }
            }
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << points << " admissible points, " << violations << " violations, " << literal
    << " re-evaluated in full form with " << literal_mismatch << " mismatches";
  return {points > 0 && violations == 0 && literal_mismatch == 0, d.str()};
}

Outcome criterion_bad_tuple_baseline() {
  std::size_t baseline = 0, baseline_fail = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    // Two constant words of length m; any code works when every I_j is empty.
    const Code code(2, m, {Codeword(m, 0), Codeword(m, 1)});
    for (std::size_t n = 1; n <= std::min<std::size_t>(4, m); ++n) {
      const auto sys = badtuples::AgreementSystem::make(n, {{}, {}}, 5, 1);
      const auto r = badtuples::count_bad_tuples(sys, code);
      BigInt expect = 1;
      for (std::size_t i = 0; i < n; ++i) expect *= m - i;
      ++baseline;
      if (r.bad != expect || r.total != expect) ++baseline_fail;
    }
  }
  const std::vector<Code> pool{rs::materialize(rs::RSCode::full(FieldCtx::parse("3"), 1)),
                               rs::materialize(rs::RSCode::full(FieldCtx::parse("3"), 2)),
                               rs::materialize(rs::RSCode::full(FieldCtx::parse("2^2"), 1)),
                               rs::materialize(rs::RSCode::full(FieldCtx::parse("5"), 1))};
  Rng rng(99);
  std::size_t induction = 0, induction_fail = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto& code = pool[rng.below(pool.size())];
    const std::size_t n = 1 + rng.below(std::min<std::size_t>(3, code.m()));
    const std::size_t L = 1 + rng.below(std::min<std::size_t>(2, code.size() - 1));
    std::vector<std::vector<std::size_t>> sets(L + 1);
    for (auto& s : sets)
      for (std::size_t i = 0; i < n; ++i)
        if (rng.bernoulli(1, 2)) s.push_back(i);
    const auto sys = badtuples::AgreementSystem::make(n, sets, 5, 1);
    ++induction;
    if (!badtuples::induction_monotonicity_check(sys, code)) ++induction_fail;
  }
  std::ostringstream d;
  d << baseline << " baseline counts with " << baseline_fail << " mismatches, " << induction
    << " induction instances with " << induction_fail << " violations";
  return {baseline_fail == 0 && induction >= 50 && induction_fail == 0, d.str()};
}

Outcome criterion_z_sampling() {
  struct Setting {
    std::uint64_t c, h;
    std::size_t L, n;
    int shape;
  };
  std::vector<Setting> settings;
  // (L+2) e^(-h/(4c^3)) <= 1/2  <=>  h >= 4c^3 ln(2(L+2)).
  for (std::size_t L = 1; L <= 4; ++L) {
    const std::uint64_t hmin = static_cast<std::uint64_t>(std::ceil(500.0 * std::log(2.0 * (L + 2))));
    for (int shape = 0; shape < 5; ++shape) settings.push_back({5, hmin + 40 * shape, L, 0, shape});
  }
  constexpr std::size_t kSeeds = 200;
  constexpr std::size_t kRetries = 10;
  std::size_t sets_ok = 0, bad_z = 0, hypothesis_fail = 0;
  std::vector<std::string> failures;
  for (auto& s : settings) {
    // Every I_t holds a common core of 2ch + slack positions plus a private tail.
    const std::size_t core = 2 * s.c * s.h + 200 * s.shape;
    const std::size_t tail = 50 * s.shape;
    s.n = core + tail * (s.L + 1);
    std::vector<std::vector<std::size_t>> sets(s.L + 1);
    for (std::size_t t = 0; t <= s.L; ++t) {
      for (std::size_t i = 0; i < core; ++i) sets[t].push_back(i);
      for (std::size_t i = 0; i < tail; ++i) sets[t].push_back(core + t * tail + i);
    }
    const auto sys = badtuples::AgreementSystem::make(s.n, sets, s.c, s.h);
    const double bound = (s.L + 2) * std::exp(-static_cast<double>(s.h) / (4.0 * s.c * s.c * s.c));
    if (bound > 0.5) {
      ++hypothesis_fail;
      continue;
    }
    const auto M = badtuples::compute_M(sys);
    std::size_t successes = 0;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
      try {
        const auto z = badtuples::sample_Z(sys, M, splitmix64(seed * 1000 + s.L * 10 + s.shape), kRetries);
        ++successes;
        if (!badtuples::verify_Z(sys, M, z.Z)) ++bad_z;
      } catch (const Error& e) {
        if (e.code() == Errc::HypothesisUnmet) ++hypothesis_fail;
        if (e.code() != Errc::RetriesExhausted) throw;
      }
    }
    // Binomial acceptance at 5 sigma around p = 0.9.
    const double floor_rate = 0.9 - 5.0 * std::sqrt(0.9 * 0.1 / kSeeds);
    if (static_cast<double>(successes) / kSeeds >= floor_rate) {
      ++sets_ok;
    } else {
      failures.push_back("L=" + std::to_string(s.L) + " h=" + std::to_string(s.h) + ": " +
                         std::to_string(successes) + "/" + std::to_string(kSeeds));
    }
  }
  std::ostringstream d;
  d << settings.size() << " parameter sets x " << kSeeds << " seeds, " << sets_ok << " met the success floor, "
    << bad_z << " invalid Z, " << hypothesis_fail << " hypothesis failures";
  for (const auto& f : failures) d << "; low " << f;
  return {settings.size() >= 20 && sets_ok == settings.size() && bad_z == 0 && hypothesis_fail == 0, d.str()};
}

Outcome criterion_johnson() {
  struct Point {
    const char* field;
    std::size_t k, n;
    Rational eps;
  };
  const std::vector<Point> points{{"7", 1, 7, Rational(3, 7)}, {"5", 1, 5, Rational(1, 2)},
                                  {"7", 1, 5, Rational(1, 2)}, {"2^3", 1, 8, Rational(3, 8)},
                                  {"3^2", 1, 9, Rational(1, 3)}, {"7", 2, 7, Rational(4, 7)},
                                  {"5", 1, 4, Rational(1, 2)}};
  std::size_t failures = 0;
  std::ostringstream d;
  for (const auto& p : points) {
    const auto f = FieldCtx::parse(p.field);
    const auto profile = bounds::johnson_profile(p.eps, p.n, f.q());
    const Rational rate(p.k, p.n);
    if (rate > profile.rate_threshold) {
      ++failures;
      continue;
    }
    std::vector<gf::FieldElement> evals;
    for (Symbol i = 0; i < p.n; ++i) evals.push_back(f.element(i));
    const auto code = rs::materialize(rs::RSCode::create(f, p.k, evals));
    const std::size_t L = profile.list_size.convert_to<std::size_t>();
    const auto params = listdec::ListDecParams::make(profile.radius, L, p.n);
    if (!listdec::decide_exhaustive(code, params).decodable) ++failures;
    // Informational: the smallest list size that actually suffices.
    std::size_t smallest = 1;
    while (!listdec::decide_witness_search(code, listdec::ListDecParams::make(profile.radius, smallest, p.n)).decodable)
      ++smallest;
    d << p.field << "/" << p.k << "/" << p.n << " smallest L " << smallest << " vs qn^2 " << L << "; ";
  }
  d << failures << " failures over " << points.size() << " points";
  return {failures == 0, d.str()};
}

Outcome criterion_validators() {
  bool ok = true;
  std::ostringstream d;
  const bool equal = ipow(BigInt(32), 4) == ipow(BigInt(16), 5);
  const bool field = bounds::check_field_size(32, 16, 5);
  ok = ok && equal && field;
  d << "field size (32,16,5) " << (field ? "true" : "false") << (equal ? " with equality" : "");
  const auto w = bounds::check_window_1_3(5, BigInt(1) << 10, 4, BigInt(1) << 20, 61);
  ok = ok && w.window_empty;
  d << "; window at (5,4,2^10) " << (w.window_empty ? "empty" : "non-empty");
  // Every interval comparison is either certified or raises UncertifiedComparison.
  std::size_t certified = 0, raised = 0, silent = 0;
  auto tally = [&](const bounds::Report& r) {
    for (const auto& c : r.checks) (c.certified ? certified : silent)++;
  };
  for (std::uint64_t c = 5; c <= 7; ++c)
    for (unsigned bits : {10u, 16u, 20u, 64u, 101u, 400u})
      for (std::uint64_t h : {1u, 4u, 37u, 1000u, 10000u})
        for (std::uint64_t n : {3 * c * h + 1, 4 * c * h, 10 * c * h}) {
          const BigInt q = (BigInt(1) << bits) + (bits % 2);
          const BigInt m = BigInt(1) << (bits / 2 + 30);
          try {
            tally(bounds::check_window_1_3(c, q, h, m, n).report);
            tally(bounds::check_eq3(n, m, c, q, h));
            tally(bounds::check_eq4(n, m, c, q, h));
          } catch (const Error& e) {
            if (e.code() != Errc::UncertifiedComparison) throw;
            ++raised;
          }
        }
  try {
    interval::certify(
        [](mpfr_prec_t prec) {
          auto two = interval::Interval::exact(BigInt(2), prec);
          return std::pair{two * log2(interval::Interval::exact(BigInt(3), prec)),
                           log2(interval::Interval::exact(BigInt(9), prec))};
        },
        interval::Relation::LessEqual);
    ++silent;
  } catch (const Error& e) {
    if (e.code() == Errc::UncertifiedComparison) ++raised;
  }
  ok = ok && silent == 0 && raised >= 1;
  d << "; " << certified << " certified comparisons, " << raised << " raised UncertifiedComparison, " << silent
    << " uncertified booleans";
  return {ok, d.str()};
}

Outcome criterion_monte_carlo() {
  harness::ExperimentConfig cfg;
  cfg.field = "7";
  cfg.k = 2;
  cfg.n = 5;
  cfg.trials = 100;
  cfg.seed = 20240601;
  cfg.mode = harness::DeciderMode::Exhaustive;
  cfg.r = Rational(3, 5);
  cfg.L = 2;
  std::string reference;
  std::size_t runs = 0, mismatches = 0;
  for (unsigned threads : {1u, 2u}) {
    for (int rep = 0; rep < 3; ++rep) {
      cfg.threads = threads;
      const auto json = harness::to_json(harness::run_mc(cfg));
      if (reference.empty()) reference = json;
      ++runs;
      if (json != reference) ++mismatches;
    }
  }
  cfg.threads = 1;
  auto fraction = [](const harness::SweepRow& row) {
    if (!row.result || !row.result->fraction_failed()) return Rational(-1);
    return *row.result->fraction_failed();
  };
  std::vector<harness::ExperimentConfig> by_L, by_r;
  for (auto r : {Rational(1, 2), Rational(3, 5)}) {
    for (std::size_t L = 1; L <= 5; ++L) {
      auto c = cfg;
      c.r = r;
      c.L = L;
      by_L.push_back(c);
    }
  }
  for (auto r : {Rational(1, 5), Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(2, 3),
                 Rational(4, 5)}) {
    auto c = cfg;
    c.r = r;
    by_r.push_back(c);
  }
  const auto rows_L = harness::sweep(by_L);
  const auto rows_r = harness::sweep(by_r);
  bool mono = true;
  std::ostringstream d;
  d << runs << " runs over 2 thread counts, " << mismatches << " byte mismatches; fraction_failed by L:";
  for (std::size_t i = 0; i < rows_L.size(); ++i) {
    const auto f = fraction(rows_L[i]);
    const bool same_r = i % 5 != 0;
    mono = mono && f >= 0 && (!same_r || f <= fraction(rows_L[i - 1]));
    d << (same_r ? " " : (i == 0 ? " r=" : ", r=") + to_string(rows_L[i].config.r) + ":") << to_string(f);
  }
  d << "; by r:";
  for (std::size_t i = 0; i < rows_r.size(); ++i) {
    const auto f = fraction(rows_r[i]);
    mono = mono && f >= 0 && (i == 0 || f >= fraction(rows_r[i - 1]));
    d << " " << to_string(f);
  }
  return {mismatches == 0 && mono, d.str()};
}

}  // namespace

int main() {
  run_criterion(1, "MDS exactness for q <= 9", 60, criterion_mds);
  run_criterion(2, "exhaustive and witness deciders agree", 300, criterion_cross_validation);
  run_criterion(3, "reduced centers match unrestricted centers", 120, criterion_center_reduction);
  run_criterion(4, "agreement and determination lemmas", 60, criterion_structural);
  run_criterion(5, "counting-chain inequality sweep", 300, criterion_chain);
  run_criterion(6, "bad-tuple baseline and induction monotonicity", 60, criterion_bad_tuple_baseline);
  run_criterion(7, "Z-set sampling postconditions", 120, criterion_z_sampling);
  run_criterion(8, "Johnson-bound spot checks", 120, criterion_johnson);
  run_criterion(9, "parameter validators and certified comparisons", 60, criterion_validators);
  run_criterion(10, "Monte-Carlo determinism and monotonicity", 180, criterion_monte_carlo);
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
