#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncp/category.hpp"
#include "oracle.hpp"

using namespace ncp;

namespace {
const ColourSet CS = ColourSet::xy();
const ColourSet CX = ColourSet::self_inverse("x");

Partition proj_pair(char a, char b) { return make_partition({a, b}, {a, b}, {{0, 1}, {2, 3}}); }

ClosureConfig cfg_budget(int b) {
  ClosureConfig cfg;
  cfg.point_budget = b;
  return cfg;
}

bool all_pair_blocks(const Partition& p) {
  return std::all_of(p.blocks.begin(), p.blocks.end(),
                     [](const auto& b) { return b.size() == 2; });
}
}  // namespace

TEST_CASE("closure with no generators is the pairing category") {
  Category cat = closure_generate(CX, {}, cfg_budget(6));
  CHECK_FALSE(cat.truncated);
  // every noncrossing pairing on at most 6 points, over every row split, is present
  std::size_t expected = 0;
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l + k <= 6; ++l)
      for (const auto& p : oracle::all_noncrossing(Word(k, 'x'), Word(l, 'x')))
        if (all_pair_blocks(p)) {
          ++expected;
          CHECK(cat.has(p));
        }
  CHECK(cat.size() == expected);
  CHECK(contains(cat, identity('x')).yes());
  CHECK(enumerate_members(cat, "x", "").empty());
}

TEST_CASE("closure of the one-colour pair generator") {
  Category cat = closure_generate(CX, {d_pair('x', 'x')}, cfg_budget(6));
  CHECK(enumerate_members(cat, "xxxx", "").size() == 2);
  CHECK(enumerate_members(cat, "xxxxxx", "").size() == 5);
  CHECK(enumerate_members(cat, "xx", "xx").size() == 2);
}

TEST_CASE("two-coloured pair closure") {
  Category cat = closure_generate(CS, {proj_pair('x', 'y')}, cfg_budget(8));
  CHECK(cat.has(tensor(pi("x", "y"), pi("x", "y"))));
  CHECK_FALSE(contains(cat, d_pair('x', 'y')).yes());
  CHECK(contains(cat, d_pair('x', 'y')).verdict == Verdict::NO_UP_TO_BOUND);
  CHECK(contains(cat, identity('y')).yes());

  auto projs = projectives(cat, "xy");
  bool found_id = false, found_pp = false;
  for (const auto& pr : projs) {
    if (pr.p == identity_word("xy")) {
      found_id = true;
      CHECK(pr.t == 2);
    }
    if (pr.p == proj_pair('x', 'y')) {
      found_pp = true;
      CHECK(pr.t == 0);
    }
  }
  CHECK(found_id);
  CHECK(found_pp);

  auto empties = projectives(cat, "");
  REQUIRE(empties.size() == 1);
  CHECK(empties[0].p == empty_partition());
}

TEST_CASE("derivation traces replay to their members") {
  for (const auto& gens : std::vector<std::vector<Partition>>{
           {proj_pair('x', 'y')}, {d_pair('x', 'x'), singleton_word("xx")}}) {
    Category cat = closure_generate(CS, gens, cfg_budget(8));
    for (std::size_t i = 0; i < cat.size(); ++i) {
      Partition p = cat.member(static_cast<std::uint32_t>(i));
      auto script = derivation_trace(cat, p);
      REQUIRE(!script.empty());
      CHECK(replay_trace(script, CS) == p);
    }
  }
}

TEST_CASE("closure monotone in the budget") {
  Category small = closure_generate(CS, {proj_pair('x', 'y')}, cfg_budget(6));
  Category big = closure_generate(CS, {proj_pair('x', 'y')}, cfg_budget(8));
  for (const auto& key : small.keys) CHECK(big.index.count(key) == 1);
  CHECK(big.size() > small.size());
}

TEST_CASE("closure members stay noncrossing and stable") {
  Category cat = closure_generate(CS, {singleton_word("xx"), d_pair('x', 'x'), d_pair('y', 'y')},
                                  cfg_budget(8));
  for (std::size_t i = 0; i < cat.size(); ++i) {
    Partition p = cat.member(static_cast<std::uint32_t>(i));
    CHECK(is_noncrossing(p));
    if (2 * p.upper_size() <= 8) CHECK(cat.has(compose(involute(p), p).part));
  }
}

TEST_CASE("closure set is schedule independent") {
  std::vector<Partition> gens{proj_pair('x', 'y'), singleton_word("xx")};
  Category a = closure_generate(CS, gens, cfg_budget(6));
  ClosureConfig shuffled = cfg_budget(6);
  shuffled.shuffle_seed = 12345;
  shuffled.threads = 4;
  Category b = closure_generate(CS, gens, shuffled);
  CHECK(closure_dump(a) == closure_dump(b));
}

TEST_CASE("projective half-cut decomposition") {
  Category cat = closure_generate(CS, {proj_pair('x', 'y'), q_k(1)}, cfg_budget(6));
  for (const Word& w : {Word("xy"), Word("yxy")}) {
    for (const auto& pr : projectives(cat, w)) {
      CHECK(pr.t == through_block_count(pr.p));
      CHECK(pr.half.low == Word(pr.t, 'x'));
      CHECK(compose(involute(pr.half), pr.half).part == pr.p);
    }
  }
}

TEST_CASE("projective equivalence") {
  Category cat = closure_generate(
      CS, {d_pair('x', 'x'), d_pair('y', 'y'), singleton_word("xx"), singleton_word("yy")},
      cfg_budget(8));
  ProjectiveInfo two_sing = projective_info(
      make_partition("xx", "xx", {{0}, {1}, {2}, {3}}), CS);  // (P_x* P_x) tensor squared
  ProjectiveInfo empty = projective_info(empty_partition(), CS);
  REQUIRE(cat.has(two_sing.p));

  auto refl = is_equivalent(cat, two_sing, two_sing);
  CHECK(refl.verdict == Verdict::YES);

  auto m = is_equivalent(cat, two_sing, empty);
  CHECK(m.verdict == Verdict::YES);
  REQUIRE(!m.witness.empty());
  CHECK(m.witness[0].find("up=xx;low=;blocks=u1|u2") != std::string::npos);

  ProjectiveInfo idx = projective_info(identity('x'), CS);
  ProjectiveInfo pp = projective_info(proj_pair('x', 'x'), CS);
  auto no = is_equivalent(cat, idx, pp);
  CHECK(no.verdict == Verdict::NO);  // through-block counts 1 vs 0
}

TEST_CASE("full subpartitions") {
  Partition fig = parse_partition("up=xyxyx;low=xy;blocks=u1,u5,l1,l2|u2,u4|u3", CS);
  auto subs = full_subpartitions(fig, CS);
  bool singleton_extraction = false, whole = false;
  Partition x_pair = make_partition("x", "x", {{0}, {1}});
  for (const auto& [sub, extraction] : subs) {
    if (sub == singleton_word("x") && extraction == x_pair) singleton_extraction = true;
    if (sub.points() == fig.points()) whole = true;
  }
  CHECK(singleton_extraction);
  CHECK(whole);

  // the upper block of q_1 with its nested singleton is full and extracts q_1 itself
  auto q1subs = full_subpartitions(q_k(1), CS);
  bool q1_self = false;
  for (const auto& [sub, extraction] : q1subs)
    if (extraction == q_k(1)) q1_self = true;
  CHECK(q1_self);

  // extractions are projective
  for (const auto& [sub, extraction] : subs) CHECK(is_projective(extraction));

  // and they land in closures: the x singleton inside P_xy extracts to x|x
  Category cat = closure_generate(CS, {singleton_word("xy")}, cfg_budget(6));
  CHECK(cat.has(x_pair));
  auto script = derivation_trace(cat, x_pair);
  REQUIRE(!script.empty());
  CHECK(replay_trace(script, CS) == x_pair);
}

TEST_CASE("implied member registration") {
  Category cat = closure_generate(CS, {}, cfg_budget(6));
  Partition q = q_k(1);
  CHECK_FALSE(cat.has(q));
  cat.register_implied(q, "spectrum-law", {empty_partition()});
  CHECK(cat.has(q));
  auto script = derivation_trace(cat, q);
  REQUIRE(!script.empty());
  CHECK(script.back().find("implied spectrum-law") != std::string::npos);
  CHECK(replay_trace(script, CS, false) == q);
  CHECK_THROWS(replay_trace(script, CS, true));
}

TEST_CASE("alternating reduction") {
  CHECK(reduce_alternating(Word("xxyy"), CS) == "");
  CHECK(reduce_alternating(Word("xyxy"), CS) == "xyxy");
  CHECK(reduce_alternating(Word("xyyxy"), CS) == "y");
  CHECK(reduce_alternating(singleton_word("xyyxy"), CS) == "y");

  // confluence: every deletion order reaches the same irreducible word
  std::vector<Word> words{""};
  for (int len = 1; len <= 8; ++len) {
    std::vector<Word> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1) {
        next.push_back(w + "x");
        next.push_back(w + "y");
      }
    for (const auto& w : next) {
      auto terminals = oracle::all_terminal_reductions(w, CS);
      REQUIRE(terminals.size() == 1);
      CHECK(*terminals.begin() == reduce_alternating(w, CS));
    }
    words.insert(words.end(), next.begin(), next.end());
  }
}

TEST_CASE("generator validation") {
  Partition crossing = make_partition("xxxx", "", {{0, 2}, {1, 3}});
  CHECK_THROWS(closure_generate(CS, {crossing}, cfg_budget(8)));
  CHECK_THROWS(closure_generate(CS, {pi("xxxx", "xxxx")}, cfg_budget(6)));  // over budget
}
