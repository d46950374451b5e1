#pragma once

#include "ncp/category.hpp"

namespace ncp {

// Block statistics of the members of one colour's restriction (members whose
// row words use only that colour).
struct OneColourProfile {
  bool any_member = false;   // some nonempty member uses only this colour
  bool singleton = false;    // a singleton block occurs
  bool odd_ge3 = false;      // a block of odd size >= 3 occurs
  bool all_even = true;      // every block has even size
  int max_block = 0;
};

// Block statistics over the full closure.
struct BlockProfile {
  bool all_pairs = true;                  // every block has size exactly 2
  bool all_even = true;                   // every block has even size
  bool has_odd_ge3 = false;
  bool singleton_present = false;
  bool two_coloured_block_present = false;  // a block carrying both colours
  bool d_xy_block_present = false;          // a two-point one-row block coloured {x, y}
  int max_block_size = 0;
  OneColourProfile cx, cy;  // restrictions to the first and second colour
};

BlockProfile block_profile(const Category& cat);

}  // namespace ncp
