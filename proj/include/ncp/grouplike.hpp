#pragma once

#include <string>
#include <vector>

#include "ncp/category.hpp"
#include "ncp/profile.hpp"

namespace ncp {

enum class GroupShape { CYCLIC, DIHEDRAL_QUOTIENT };

struct Relation {
  std::string name;    // e.g. "s^2 = 1", "s_x^2 = 1"
  Partition witness;   // closure member exhibiting the relation
};

// Computed structure of the group of one-dimensional representations.
// An order or exponent of 0 means "no relation found up to the bound"
// (possibly infinite).
struct GroupLikePresentation {
  GroupShape shape = GroupShape::CYCLIC;
  int order_of_s = 0;           // CYCLIC
  int d = 0;                    // DIHEDRAL_QUOTIENT: exponent of s_x s_y
  bool sx_involutive = false;   // s_x^2 = 1 witnessed
  bool sy_involutive = false;
  std::vector<Relation> relations;
  int bound = 0;

  std::string serialize() const;  // "group: cyclic k=.." / "group: dihedral d=.. sx2=.. sy2=.."
};

// Reduced class word of a through-block-free projective (its upper row,
// reduced). Throws if t > 0.
Word one_dim_class(const Category& cat, const ProjectiveInfo& p);

// YES iff the upper row of p, as a one-line partition, is itself a member.
Membership is_trivial_onedim(const Category& cat, const ProjectiveInfo& p);

// Pair-partition categories: minimal k >= 1 such that some one-line member
// has reduced colouring alternating of length 2k; 0 if none within bound.
int order_of_s(const Category& cat);

// Minimal k >= 1 with the one-line partition beta((xy)^k, empty) a member;
// 0 if none within bound.
int minimal_d(const Category& cat);

// Minimal k >= 1 with beta((xy)^k, (xy)^k) a member; 0 if none within bound.
int minimal_n(const Category& cat);

// Minimal k >= 0 with beta((xy)^k x, (xy)^k x) a member; -1 if none within
// bound.
int minimal_m(const Category& cat);

GroupLikePresentation grouplike_group(const Category& cat, const BlockProfile& profile);

}  // namespace ncp
