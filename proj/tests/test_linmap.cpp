#include "doctest.h"

#include <algorithm>

#include "ncp/linmap.hpp"
#include "oracle.hpp"

using namespace ncp;

namespace {
const ColourSet CS = ColourSet::xy();

// Direct entry-by-entry evaluation from the definition: walk every (row, col)
// pair and test block constancy of the combined index assignment.
std::vector<std::pair<std::uint64_t, std::uint64_t>> tp_oracle(const Partition& p, int N) {
  int k = p.upper_size(), l = p.lower_size();
  std::uint64_t rows = 1, cols = 1;
  for (int i = 0; i < l; ++i) rows *= N;
  for (int i = 0; i < k; ++i) cols *= N;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nz;
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c) {
      std::vector<int> digit(p.points());
      std::uint64_t cc = c;
      for (int i = k - 1; i >= 0; --i) {
        digit[i] = static_cast<int>(cc % N);
        cc /= N;
      }
      std::uint64_t rr = r;
      for (int j = l - 1; j >= 0; --j) {
        digit[k + j] = static_cast<int>(rr % N);
        rr /= N;
      }
      bool ok = true;
      for (const auto& b : p.blocks)
        for (size_t i = 1; i < b.size() && ok; ++i)
          if (digit[b[i]] != digit[b[0]]) ok = false;
      if (ok) nz.emplace_back(r, c);
    }
  return nz;
}
}  // namespace

TEST_CASE("matrix of elementary partitions") {
  TpMatrix id = tp_matrix(identity('x'), 3);
  CHECK(id.rows == 3);
  CHECK(id.cols == 3);
  CHECK(id.nz == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {1, 1}, {2, 2}});

  TpMatrix cup = tp_matrix(d_pair('x', 'x'), 2);
  CHECK(cup.rows == 1);
  CHECK(cup.cols == 4);
  CHECK(cup.nz == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {0, 3}});

  TpMatrix four = tp_matrix(pi("xx", "xx"), 2);
  CHECK(four.nz == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {3, 3}});

  TpMatrix point = tp_matrix(singleton_word("x"), 3);
  CHECK(point.rows == 1);
  CHECK(point.nz.size() == 3);

  TpMatrix empty = tp_matrix(empty_partition(), 5);
  CHECK(empty.rows == 1);
  CHECK(empty.cols == 1);
  CHECK(empty.nz.size() == 1);

  CHECK_THROWS_AS(tp_matrix(singleton_word("xxxxxxxxxx"), 10, 1000), std::length_error);
}

TEST_CASE("matrix agrees with the entry oracle") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 60) {
    Word up = oracle::random_word(std::uniform_int_distribution<int>(0, 3)(rng), rng);
    Word low = oracle::random_word(std::uniform_int_distribution<int>(0, 2)(rng), rng);
    auto p = oracle::random_noncrossing(up, low, rng);
    if (!p) continue;
    for (int N : {2, 3}) {
      TpMatrix m = tp_matrix(*p, N);
      CHECK(m.nz == tp_oracle(*p, N));
    }
    ++done;
  }
}

TEST_CASE("tensor gives the Kronecker product and involution the transpose") {
  std::mt19937 rng(12);
  int done = 0;
  while (done < 40) {
    auto p = oracle::random_noncrossing(oracle::random_word(2, rng), oracle::random_word(1, rng), rng);
    auto q = oracle::random_noncrossing(oracle::random_word(1, rng), oracle::random_word(2, rng), rng);
    if (!p || !q) continue;
    const int N = 2;
    TpMatrix mp = tp_matrix(*p, N), mq = tp_matrix(*q, N);
    TpMatrix mt = tp_matrix(tensor(*p, *q), N);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> kron;
    for (const auto& [r1, c1] : mp.nz)
      for (const auto& [r2, c2] : mq.nz)
        kron.emplace_back(r1 * mq.rows + r2, c1 * mq.cols + c2);
    std::sort(kron.begin(), kron.end());
    CHECK(mt.nz == kron);

    TpMatrix mi = tp_matrix(involute(*p), N);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tr;
    for (const auto& [r, c] : mp.nz) tr.emplace_back(c, r);
    std::sort(tr.begin(), tr.end());
    CHECK(mi.nz == tr);
    ++done;
  }
}

TEST_CASE("composition law") {
  Partition pp = make_partition("xx", "xx", {{0, 1}, {2, 3}});
  for (int N : {2, 3, 5}) CHECK(check_composition(pp, pp, N));
  CHECK(check_composition(d_pair('x', 'y'), involute(d_pair('x', 'y')), 4));

  std::mt19937 rng(13);
  int done = 0;
  while (done < 80) {
    Word w1 = oracle::random_word(std::uniform_int_distribution<int>(0, 2)(rng), rng);
    Word w2 = oracle::random_word(std::uniform_int_distribution<int>(0, 3)(rng), rng);
    Word w3 = oracle::random_word(std::uniform_int_distribution<int>(0, 2)(rng), rng);
    auto p = oracle::random_noncrossing(w1, w2, rng);
    auto q = oracle::random_noncrossing(w2, w3, rng);
    if (!p || !q) continue;
    for (int N : {2, 3}) CHECK(check_composition(*q, *p, N));
    ++done;
  }
}

TEST_CASE("join block counts") {
  CHECK(join_block_count(identity('x'), identity('x')) == 1);
  CHECK(join_block_count(identity('x'), make_partition("x", "x", {{0}, {1}})) == 1);
  CHECK(join_block_count(make_partition("x", "x", {{0}, {1}}),
                         make_partition("x", "x", {{0}, {1}})) == 2);
  CHECK(join_block_count(identity_word("xx"), pi("xx", "xx")) == 1);
  CHECK_THROWS(join_block_count(identity('x'), d_pair('x', 'x')));

  // Gram identity: N^join equals the number of shared nonzero positions
  std::mt19937 rng(14);
  int done = 0;
  while (done < 40) {
    Word up = oracle::random_word(std::uniform_int_distribution<int>(1, 3)(rng), rng);
    Word low = oracle::random_word(std::uniform_int_distribution<int>(0, 2)(rng), rng);
    auto a = oracle::random_noncrossing(up, low, rng);
    auto b = oracle::random_noncrossing(up, low, rng);
    if (!a || !b) continue;
    const int N = 3;
    auto na = tp_oracle(*a, N), nb = tp_oracle(*b, N);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> common;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(common));
    std::uint64_t expect = 1;
    for (int i = 0; i < join_block_count(*a, *b); ++i) expect *= N;
    CHECK(common.size() == expect);
    ++done;
  }
}

TEST_CASE("span ranks and morphism dimensions") {
  // all five partitions of three points are noncrossing and independent at N >= 4
  auto parts3 = oracle::all_noncrossing("xx", "x");
  REQUIRE(parts3.size() == 5);
  CHECK(tp_span_rank(parts3, 4) == 5);
  CHECK(tp_span_rank(parts3, 5) == 5);
  CHECK(tp_span_rank(parts3, 1) == 1);  // every matrix is all-ones at N=1
  CHECK(tp_span_rank(parts3, 2) < 5);   // small-dimension degeneracy

  ColourSet cx = ColourSet::self_inverse("x");
  ClosureConfig cfg;
  cfg.point_budget = 6;
  Category all6 = closure_generate(cx, {d_pair('x', 'x'), singleton_word("x"), pi("xxxx", "")}, cfg);
  for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
    auto md = mor_dimension(all6, Word(k, 'x'), Word(l, 'x'), 5);
    CHECK(md.count == oracle::all_noncrossing(Word(k, 'x'), Word(l, 'x')).size());
    CHECK(md.rank == md.count);
  }
}
