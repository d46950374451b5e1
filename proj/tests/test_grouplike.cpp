#include "doctest.h"

#include "ncp/grouplike.hpp"

using namespace ncp;

namespace {
const ColourSet CS = ColourSet::xy();

Partition proj_pair(char a, char b) { return make_partition({a, b}, {a, b}, {{0, 1}, {2, 3}}); }

Category closure(const std::vector<Partition>& gens, int budget, const ColourSet& cs = CS) {
  ClosureConfig cfg;
  cfg.point_budget = budget;
  return closure_generate(cs, gens, cfg);
}
}  // namespace

TEST_CASE("one dimensional class words") {
  Category cat = closure({proj_pair('x', 'y')}, 6);
  CHECK(one_dim_class(cat, projective_info(proj_pair('x', 'y'), CS)) == "xy");
  CHECK(one_dim_class(cat, projective_info(empty_partition(), CS)) == "");

  Partition two_sing = make_partition("x", "x", {{0}, {1}});
  CHECK(one_dim_class(cat, projective_info(two_sing, CS)) == "x");

  CHECK_THROWS(one_dim_class(cat, projective_info(identity('x'), CS)));
}

TEST_CASE("triviality of a class") {
  ColourSet cx = ColourSet::self_inverse("x");
  Category pairs = closure({d_pair('x', 'x')}, 6, cx);
  // the one-line row of x-x cup pairs is D_xx itself, so the class is trivial
  CHECK(is_trivial_onedim(pairs, projective_info(proj_pair('x', 'x'), cx)).yes());

  Category sings = closure({singleton_word("xx"), singleton_word("yy"), d_pair('x', 'x'),
                            d_pair('y', 'y')},
                           8);
  Partition two_sing = make_partition("x", "x", {{0}, {1}});
  auto m = is_trivial_onedim(sings, projective_info(two_sing, CS));
  CHECK(m.verdict == Verdict::NO_UP_TO_BOUND);  // a lone singleton is not a member
}

TEST_CASE("order of the generating class in pair categories") {
  CHECK(order_of_s(closure({proj_pair('x', 'y')}, 8)) == 0);  // no one-line relation

  Partition alt4 = make_partition("xyxy", "", {{0, 3}, {1, 2}});
  CHECK(order_of_s(closure({proj_pair('x', 'y'), alt4}, 8)) == 2);

  CHECK(order_of_s(closure({d_pair('x', 'y')}, 6)) == 1);
}

TEST_CASE("minimal relation exponents") {
  // all-even category with a length-4 one-row block and the mixed four-block
  Category g2 = closure({pi("xx", "xx"), pi("xy", "xy"), beta("xyxy", "")}, 8);
  CHECK(minimal_d(g2) == 2);
  CHECK(minimal_n(g2) == 2);  // beta(w,empty) tensor beta(empty,w)
  CHECK(minimal_m(g2) == -1);

  Category g2n1 = closure({pi("xx", "xx"), pi("xy", "xy"), beta("xyxy", ""), beta_gamma("xy")}, 8);
  CHECK(minimal_d(g2n1) == 2);
  CHECK(minimal_n(g2n1) == 1);

  Category odd = closure({singleton_word("xx"), singleton_word("yy"), d_pair('x', 'x'),
                          d_pair('y', 'y')},
                         8);
  CHECK(minimal_d(odd) == 0);
  CHECK(minimal_m(odd) == 0);  // beta_gamma("x") is a rotation of the double singleton
}

TEST_CASE("group of one dimensional representations") {
  Category sings = closure({singleton_word("xx"), singleton_word("yy"), d_pair('x', 'x'),
                            d_pair('y', 'y')},
                           8);
  auto g = grouplike_group(sings, block_profile(sings));
  CHECK(g.shape == GroupShape::DIHEDRAL_QUOTIENT);
  CHECK(g.sx_involutive);
  CHECK(g.sy_involutive);
  CHECK(g.d == 0);
  CHECK(g.serialize() == "group: dihedral d=0 sx2=true sy2=true");
  bool sx = false, sy = false;
  for (const auto& r : g.relations) {
    if (r.name == "s_x^2 = 1") {
      sx = true;
      CHECK(r.witness == singleton_word("xx"));
    }
    if (r.name == "s_y^2 = 1") sy = true;
  }
  CHECK(sx);
  CHECK(sy);

  Category pp = closure({proj_pair('x', 'y')}, 8);
  auto gp = grouplike_group(pp, block_profile(pp));
  CHECK(gp.shape == GroupShape::CYCLIC);
  CHECK(gp.order_of_s == 0);
  CHECK(gp.serialize() == "group: cyclic k=0");

  Partition alt4 = make_partition("xyxy", "", {{0, 3}, {1, 2}});
  Category fin = closure({proj_pair('x', 'y'), alt4}, 8);
  auto gf = grouplike_group(fin, block_profile(fin));
  CHECK(gf.shape == GroupShape::CYCLIC);
  CHECK(gf.order_of_s == 2);
  REQUIRE(!gf.relations.empty());
  CHECK(gf.relations[0].name == "s^2 = 1");
  CHECK(reduce_alternating(gf.relations[0].witness, CS).size() == 4);

  // even wreath categories: cyclic of order d/n
  Category g2 = closure({pi("xx", "xx"), pi("xy", "xy"), beta("xyxy", "")}, 8);
  auto ge = grouplike_group(g2, block_profile(g2));
  CHECK(ge.shape == GroupShape::CYCLIC);
  CHECK(ge.order_of_s == 1);

  Category g2n1 = closure({pi("xx", "xx"), pi("xy", "xy"), beta("xyxy", ""), beta_gamma("xy")}, 8);
  auto g21 = grouplike_group(g2n1, block_profile(g2n1));
  CHECK(g21.order_of_s == 2);
}
