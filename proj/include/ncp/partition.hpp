#pragma once

#include <string>
#include <vector>

#include "ncp/colour.hpp"

namespace ncp {

// A two-row coloured partition. Points are numbered 0..k-1 on the upper row
// (left to right) and k..k+l-1 on the lower row (left to right), where
// k = |up| and l = |low|. Blocks are kept in canonical form: points sorted
// within each block, blocks sorted by their minimal point. Two partitions are
// equal iff their words and canonical blocks coincide.
struct Partition {
  Word up, low;
  std::vector<std::vector<int>> blocks;

  int upper_size() const { return static_cast<int>(up.size()); }
  int lower_size() const { return static_cast<int>(low.size()); }
  int points() const { return upper_size() + lower_size(); }

  bool is_upper(int pt) const { return pt < upper_size(); }
  char colour_of(int pt) const {
    return is_upper(pt) ? up[pt] : low[pt - upper_size()];
  }
  // Index of the block containing a point.
  int block_of(int pt) const;

  bool operator==(const Partition&) const = default;
};

// Derived per-block information.
struct BlockView {
  int size = 0;
  bool is_through = false;   // touches both rows
  bool is_interval = false;  // consecutive points within a single row
  Word upper_word, lower_word;  // row-wise colour words of the block
};
BlockView block_view(const Partition& p, int block_index);

// Validates that the blocks form a set partition of the points and returns
// the canonical form. Throws std::invalid_argument on bad input.
Partition make_partition(Word up, Word low, std::vector<std::vector<int>> blocks);

// Literal grammar: up=<word>;low=<word>;blocks=<block>(|<block>)* with
// point labels u<int> / l<int> (1-based). Round-trips with format_partition.
Partition parse_partition(const std::string& text, const ColourSet& cs);
std::string format_partition(const Partition& p);

// Compact key: words plus per-point block labels; uniquely identifies the
// canonical form and decodes back.
std::string partition_key(const Partition& p);
Partition partition_from_key(const std::string& key);

// Crossing test in the cyclic boundary order (upper row left to right, then
// lower row right to left), so the answer is invariant under rotations.
bool is_noncrossing(const Partition& p);

// Horizontal concatenation; q's blocks are shifted past p's.
Partition tensor(const Partition& p, const Partition& q);

struct ComposeResult {
  Partition part;
  int loops = 0;
};
// Vertical concatenation with p on top of q: requires p.low == q.up, returns
// the partition with rows (p.up, q.low) together with the number of closed
// middle loops removed.
ComposeResult compose(const Partition& q, const Partition& p);

// Reflection across the horizontal axis; rows swap, left-right order kept.
Partition involute(const Partition& p);

enum class Side { left, right };
enum class Dir { up, down };
// Moves the extreme point on the given side from one row to the other (down:
// upper to lower, up: lower to upper), replacing its colour by its inverse.
Partition rotate(const Partition& p, Side side, Dir dir, const ColourSet& cs);

// Half-turn of the whole diagram: the result has rows
// (reverse_invert(low), reverse_invert(up)).
Partition conjugate(const Partition& p, const ColourSet& cs);

int through_block_count(const Partition& p);
bool is_projective(const Partition& p);

// Named builders.
Partition empty_partition();
Partition identity(char c);                       // one through pair on colour c
Partition identity_word(const Word& w);           // |w| vertical strings
Partition d_pair(char a, char b);                 // single upper block on word ab
Partition singleton_word(const Word& w);          // P_w: all singletons, upper row
Partition pi(const Word& w, const Word& wp);      // unique one-block partition
Partition beta(const Word& w, const Word& wp);    // one upper and one lower block
Partition beta_gamma(const Word& w);              // beta(w, w)
Partition p_k(int k);  // rows (yx)^k y; all y's one block, x's singletons
Partition q_k(int k);  // like p_k but upper and lower y's in separate blocks

}  // namespace ncp
