#include "ncp/grouplike.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncp {
namespace {

Word xy_power(int k) {
  Word w;
  for (int i = 0; i < k; ++i) w += "xy";
  return w;
}

bool is_alternating(const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

// One-line members of the closure (either row empty), decoded.
std::vector<Partition> one_line_members(const Category& cat) {
  std::vector<Partition> out;
  for (const auto& key : cat.keys) {
    size_t a = key.find('|');
    size_t b = key.find('|', a + 1);
    if (a != 0 && b != a + 1) continue;  // both rows nonempty
    out.push_back(partition_from_key(key));
  }
  return out;
}

}  // namespace

std::string GroupLikePresentation::serialize() const {
  if (shape == GroupShape::CYCLIC) return "group: cyclic k=" + std::to_string(order_of_s);
  return "group: dihedral d=" + std::to_string(d) + " sx2=" + (sx_involutive ? "true" : "false") +
         " sy2=" + (sy_involutive ? "true" : "false");
}

Word one_dim_class(const Category& cat, const ProjectiveInfo& p) {
  if (p.t != 0) throw std::invalid_argument("one_dim_class requires a through-block-free projective");
  return reduce_alternating(p.p.up, cat.cs);
}

Membership is_trivial_onedim(const Category& cat, const ProjectiveInfo& p) {
  if (p.t != 0) throw std::invalid_argument("is_trivial_onedim requires a through-block-free projective");
  int k = p.p.upper_size();
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.p.blocks) {
    std::vector<int> nb;
    for (int pt : b)
      if (pt < k) nb.push_back(pt);
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  return contains(cat, make_partition(p.p.up, "", std::move(blocks)));
}

int order_of_s(const Category& cat) {
  int best = 0;
  for (const auto& p : one_line_members(cat)) {
    Word r = reduce_alternating(p, cat.cs);
    if (r.empty()) continue;
    if (r.size() % 2 != 0 || !is_alternating(r))
      throw std::invalid_argument("order_of_s on a category that is not pair-generated");
    int k = static_cast<int>(r.size()) / 2;
    if (best == 0 || k < best) best = k;
  }
  return best;
}

int minimal_d(const Category& cat) {
  for (int k = 1; 2 * k <= cat.cfg.point_budget; ++k)
    if (cat.has(beta(xy_power(k), ""))) return k;
  return 0;
}

int minimal_n(const Category& cat) {
  for (int k = 1; 4 * k <= cat.cfg.point_budget; ++k)
    if (cat.has(beta_gamma(xy_power(k)))) return k;
  return 0;
}

int minimal_m(const Category& cat) {
  for (int k = 0; 2 * (2 * k + 1) <= cat.cfg.point_budget; ++k)
    if (cat.has(beta_gamma(xy_power(k) + "x"))) return k;
  return -1;
}

GroupLikePresentation grouplike_group(const Category& cat, const BlockProfile& profile) {
  if (cat.cs.letters != "xy" || cat.cs.inverse('x') != 'x' || cat.cs.inverse('y') != 'y')
    throw std::invalid_argument("grouplike_group requires the self-inverse colour set {x, y}");
  GroupLikePresentation g;
  g.bound = cat.cfg.point_budget;
  if (profile.all_pairs) {
    g.shape = GroupShape::CYCLIC;
    g.order_of_s = order_of_s(cat);
    if (g.order_of_s > 0) {
      // find a one-line member realising the minimal reduction
      for (const auto& p : one_line_members(cat)) {
        Word r = reduce_alternating(p, cat.cs);
        if (static_cast<int>(r.size()) == 2 * g.order_of_s) {
          g.relations.push_back({"s^" + std::to_string(g.order_of_s) + " = 1", p});
          break;
        }
      }
    }
    return g;
  }
  if (profile.singleton_present) {
    g.shape = GroupShape::DIHEDRAL_QUOTIENT;
    Partition pxx = singleton_word("xx"), pyy = singleton_word("yy");
    if (cat.has(pxx)) {
      g.sx_involutive = true;
      g.relations.push_back({"s_x^2 = 1", pxx});
    }
    if (cat.has(pyy)) {
      g.sy_involutive = true;
      g.relations.push_back({"s_y^2 = 1", pyy});
    }
    g.d = minimal_d(cat);
    if (g.d > 0)
      g.relations.push_back({"(s_x s_y)^" + std::to_string(g.d) + " = 1", beta(xy_power(g.d), "")});
    return g;
  }
  // even case: cyclic of order d/n when both parameters are witnessed
  g.shape = GroupShape::CYCLIC;
  int d = minimal_d(cat), n = minimal_n(cat);
  if (d > 0 && n > 0 && d % n == 0) {
    g.order_of_s = d / n;
    g.relations.push_back({"s^" + std::to_string(d / n) + " = 1", beta(xy_power(d), "")});
  } else {
    g.order_of_s = 0;
  }
  return g;
}

}  // namespace ncp
