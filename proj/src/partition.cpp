#include "ncp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncp {
namespace {

// Small union-find over point indices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::string point_label(const Partition& p, int pt) {
  if (p.is_upper(pt)) return "u" + std::to_string(pt + 1);
  return "l" + std::to_string(pt - p.upper_size() + 1);
}

void canonicalize(Partition& p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

int Partition::block_of(int pt) const {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    for (int q : blocks[i])
      if (q == pt) return i;
  throw std::invalid_argument("point out of range");
}

BlockView block_view(const Partition& p, int block_index) {
  const auto& b = p.blocks.at(block_index);
  BlockView v;
  v.size = static_cast<int>(b.size());
  bool has_up = false, has_low = false;
  for (int pt : b) {
    if (p.is_upper(pt)) {
      has_up = true;
      v.upper_word += p.colour_of(pt);
    } else {
      has_low = true;
      v.lower_word += p.colour_of(pt);
    }
  }
  v.is_through = has_up && has_low;
  if (!v.is_through && !b.empty()) {
    v.is_interval = true;
    for (size_t i = 1; i < b.size(); ++i)
      if (b[i] != b[i - 1] + 1) v.is_interval = false;
  }
  return v;
}

Partition make_partition(Word up, Word low, std::vector<std::vector<int>> blocks) {
  Partition p{std::move(up), std::move(low), std::move(blocks)};
  int n = p.points();
  std::vector<int> seen(n, 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int pt : b) {
      if (pt < 0 || pt >= n) throw std::invalid_argument("block point out of range");
      if (seen[pt]++) throw std::invalid_argument("point occurs twice in blocks");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("point " + point_label(p, i) + " not covered by any block");
  canonicalize(p);
  return p;
}

Partition parse_partition(const std::string& text, const ColourSet& cs) {
  auto field = [&](const std::string& name, size_t& pos, char terminator) {
    std::string prefix = name + "=";
    if (text.compare(pos, prefix.size(), prefix) != 0)
      throw std::invalid_argument("expected '" + prefix + "' in partition literal");
    pos += prefix.size();
    size_t end = terminator ? text.find(terminator, pos) : text.size();
    if (terminator && end == std::string::npos)
      throw std::invalid_argument("missing '" + std::string(1, terminator) + "' in partition literal");
    std::string value = text.substr(pos, end - pos);
    pos = terminator ? end + 1 : text.size();
    return value;
  };
  size_t pos = 0;
  Word up = field("up", pos, ';');
  Word low = field("low", pos, ';');
  std::string blockstr = field("blocks", pos, '\0');
  cs.validate_word(up);
  cs.validate_word(low);

  int k = static_cast<int>(up.size()), l = static_cast<int>(low.size());
  std::vector<std::vector<int>> blocks;
  size_t bpos = 0;
  while (bpos < blockstr.size()) {
    size_t bend = blockstr.find('|', bpos);
    if (bend == std::string::npos) bend = blockstr.size();
    std::string item = blockstr.substr(bpos, bend - bpos);
    std::vector<int> block;
    size_t ppos = 0;
    while (ppos < item.size()) {
      size_t pend = item.find(',', ppos);
      if (pend == std::string::npos) pend = item.size();
      std::string lab = item.substr(ppos, pend - ppos);
      if (lab.size() < 2 || (lab[0] != 'u' && lab[0] != 'l'))
        throw std::invalid_argument("bad point label \"" + lab + "\"");
      int idx;
      try {
        size_t used;
        idx = std::stoi(lab.substr(1), &used);
        if (used != lab.size() - 1) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("bad point label \"" + lab + "\"");
      }
      if (lab[0] == 'u') {
        if (idx < 1 || idx > k) throw std::invalid_argument("upper label out of range: " + lab);
        block.push_back(idx - 1);
      } else {
        if (idx < 1 || idx > l) throw std::invalid_argument("lower label out of range: " + lab);
        block.push_back(k + idx - 1);
      }
      ppos = pend + 1;
    }
    if (block.empty()) throw std::invalid_argument("empty block in literal");
    blocks.push_back(std::move(block));
    bpos = bend + 1;
  }
  return make_partition(std::move(up), std::move(low), std::move(blocks));
}

std::string format_partition(const Partition& p) {
  std::string out = "up=" + p.up + ";low=" + p.low + ";blocks=";
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) out += '|';
    for (size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) out += ',';
      out += point_label(p, p.blocks[i][j]);
    }
  }
  return out;
}

std::string partition_key(const Partition& p) {
  std::string labels(p.points(), '?');
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (int pt : p.blocks[i]) labels[pt] = static_cast<char>('A' + i);
  return p.up + "|" + p.low + "|" + labels;
}

Partition partition_from_key(const std::string& key) {
  size_t a = key.find('|');
  size_t b = key.find('|', a + 1);
  if (a == std::string::npos || b == std::string::npos)
    throw std::invalid_argument("bad partition key");
  Word up = key.substr(0, a), low = key.substr(a + 1, b - a - 1);
  std::string labels = key.substr(b + 1);
  if (labels.size() != up.size() + low.size())
    throw std::invalid_argument("bad partition key");
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i < labels.size(); ++i) {
    size_t idx = static_cast<size_t>(labels[i] - 'A');
    if (idx >= labels.size()) throw std::invalid_argument("bad partition key");
    if (idx >= blocks.size()) blocks.resize(idx + 1);
    blocks[idx].push_back(static_cast<int>(i));
  }
  return make_partition(std::move(up), std::move(low), std::move(blocks));
}

bool is_noncrossing(const Partition& p) {
  int k = p.upper_size(), l = p.lower_size(), n = p.points();
  // Boundary order: upper left to right, then lower right to left.
  std::vector<int> order;
  order.reserve(n);
  for (int i = 0; i < k; ++i) order.push_back(i);
  for (int j = l - 1; j >= 0; --j) order.push_back(k + j);

  std::vector<int> label(n), remaining(p.blocks.size());
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    remaining[i] = static_cast<int>(p.blocks[i].size());
    for (int pt : p.blocks[i]) label[pt] = static_cast<int>(i);
  }
  std::vector<int> stack;
  std::vector<char> open(p.blocks.size(), 0);
  for (int pt : order) {
    int b = label[pt];
    if (open[b]) {
      if (stack.empty() || stack.back() != b) return false;
    } else {
      open[b] = 1;
      stack.push_back(b);
    }
    if (--remaining[b] == 0) stack.pop_back();
  }
  return true;
}

Partition tensor(const Partition& p, const Partition& q) {
  int k1 = p.upper_size(), l1 = p.lower_size();
  int k2 = q.upper_size();
  Word up = p.up + q.up, low = p.low + q.low;
  auto map_p = [&](int pt) { return p.is_upper(pt) ? pt : pt + k2; };
  auto map_q = [&](int pt) {
    return q.is_upper(pt) ? k1 + pt : k1 + l1 + pt;  // lower: (k1+k2) + l1 + (pt-k2)
  };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int pt : b) nb.push_back(map_p(pt));
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : q.blocks) {
    std::vector<int> nb;
    for (int pt : b) nb.push_back(map_q(pt));
    blocks.push_back(std::move(nb));
  }
  return make_partition(std::move(up), std::move(low), std::move(blocks));
}

ComposeResult compose(const Partition& q, const Partition& p) {
  if (p.low != q.up)
    throw std::invalid_argument("compose word mismatch: \"" + p.low + "\" vs \"" + q.up + "\"");
  int kp = p.upper_size(), m = p.lower_size(), lq = q.lower_size();
  int P = p.points();  // offset of q's points
  int total = P + q.points();
  UnionFind uf(total);
  for (const auto& b : p.blocks)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  for (const auto& b : q.blocks)
    for (size_t i = 1; i < b.size(); ++i) uf.unite(P + b[0], P + b[i]);
  for (int i = 0; i < m; ++i) uf.unite(kp + i, P + i);  // glue middle rows

  // Result point for each glued point, or -1 for middle points.
  std::vector<int> result_pt(total, -1);
  for (int i = 0; i < kp; ++i) result_pt[i] = i;
  for (int j = 0; j < lq; ++j) result_pt[P + m + j] = kp + j;

  std::vector<std::vector<int>> blocks;
  int loops = 0;
  for (const auto& cls : classes_of(uf, total)) {
    std::vector<int> nb;
    for (int pt : cls)
      if (result_pt[pt] >= 0) nb.push_back(result_pt[pt]);
    if (nb.empty())
      ++loops;
    else
      blocks.push_back(std::move(nb));
  }
  return {make_partition(p.up, q.low, std::move(blocks)), loops};
}

Partition involute(const Partition& p) {
  int k = p.upper_size(), l = p.lower_size();
  auto map = [&](int pt) { return p.is_upper(pt) ? l + pt : pt - k; };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int pt : b) nb.push_back(map(pt));
    blocks.push_back(std::move(nb));
  }
  return make_partition(p.low, p.up, std::move(blocks));
}

Partition rotate(const Partition& p, Side side, Dir dir, const ColourSet& cs) {
  int k = p.upper_size(), l = p.lower_size();
  int moved;          // old index of the moving point
  int moved_new;      // its new index
  Word up, low;
  // map for all other points, as a function of old index
  std::vector<int> map(p.points(), -1);
  if (dir == Dir::up) {
    if (l == 0) throw std::invalid_argument("rotate up with empty lower row");
    if (side == Side::left) {
      moved = k;
      moved_new = 0;
      up = std::string(1, cs.inverse(p.low[0])) + p.up;
      low = p.low.substr(1);
      for (int i = 0; i < k; ++i) map[i] = i + 1;
      for (int j = 1; j < l; ++j) map[k + j] = k + j;  // (k+1) + (j-1)
    } else {
      moved = k + l - 1;
      moved_new = k;
      up = p.up + cs.inverse(p.low[l - 1]);
      low = p.low.substr(0, l - 1);
      for (int i = 0; i < k; ++i) map[i] = i;
      for (int j = 0; j < l - 1; ++j) map[k + j] = k + 1 + j;
    }
  } else {
    if (k == 0) throw std::invalid_argument("rotate down with empty upper row");
    if (side == Side::left) {
      moved = 0;
      moved_new = k - 1;
      up = p.up.substr(1);
      low = std::string(1, cs.inverse(p.up[0])) + p.low;
      for (int i = 1; i < k; ++i) map[i] = i - 1;
      for (int j = 0; j < l; ++j) map[k + j] = k + j;  // (k-1) + 1 + j
    } else {
      moved = k - 1;
      moved_new = k - 1 + l;
      up = p.up.substr(0, k - 1);
      low = p.low + cs.inverse(p.up[k - 1]);
      for (int i = 0; i < k - 1; ++i) map[i] = i;
      for (int j = 0; j < l; ++j) map[k + j] = k - 1 + j;
    }
  }
  map[moved] = moved_new;
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int pt : b) nb.push_back(map[pt]);
    blocks.push_back(std::move(nb));
  }
  return make_partition(std::move(up), std::move(low), std::move(blocks));
}

Partition conjugate(const Partition& p, const ColourSet& cs) {
  int k = p.upper_size(), l = p.lower_size();
  Word up = cs.reverse_invert(p.low), low = cs.reverse_invert(p.up);
  auto map = [&](int pt) {
    if (p.is_upper(pt)) return l + (k - 1 - pt);  // new lower row has length k
    return l - 1 - (pt - k);
  };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks) {
    std::vector<int> nb;
    for (int pt : b) nb.push_back(map(pt));
    blocks.push_back(std::move(nb));
  }
  return make_partition(std::move(up), std::move(low), std::move(blocks));
}

int through_block_count(const Partition& p) {
  int t = 0;
  for (size_t i = 0; i < p.blocks.size(); ++i)
    if (block_view(p, static_cast<int>(i)).is_through) ++t;
  return t;
}

bool is_projective(const Partition& p) {
  if (p.up != p.low) return false;
  if (involute(p) != p) return false;
  return compose(p, p).part == p;
}

Partition empty_partition() { return make_partition("", "", {}); }

Partition identity(char c) {
  return make_partition(std::string(1, c), std::string(1, c), {{0, 1}});
}

Partition identity_word(const Word& w) {
  int k = static_cast<int>(w.size());
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < k; ++i) blocks.push_back({i, k + i});
  return make_partition(w, w, std::move(blocks));
}

Partition d_pair(char a, char b) {
  return make_partition(std::string{a, b}, "", {{0, 1}});
}

Partition singleton_word(const Word& w) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) blocks.push_back({i});
  return make_partition(w, "", std::move(blocks));
}

Partition pi(const Word& w, const Word& wp) {
  if (w.empty() && wp.empty()) return empty_partition();
  std::vector<int> all(w.size() + wp.size());
  std::iota(all.begin(), all.end(), 0);
  return make_partition(w, wp, {all});
}

Partition beta(const Word& w, const Word& wp) {
  std::vector<std::vector<int>> blocks;
  if (!w.empty()) {
    std::vector<int> b(w.size());
    std::iota(b.begin(), b.end(), 0);
    blocks.push_back(std::move(b));
  }
  if (!wp.empty()) {
    std::vector<int> b(wp.size());
    std::iota(b.begin(), b.end(), static_cast<int>(w.size()));
    blocks.push_back(std::move(b));
  }
  return make_partition(w, wp, std::move(blocks));
}

Partition beta_gamma(const Word& w) { return beta(w, w); }

namespace {
Partition yx_row_partition(int k, bool through) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int n = 2 * k + 1;  // row length: y x y x ... y
  Word row;
  for (int i = 0; i < n; ++i) row += (i % 2 == 0) ? 'y' : 'x';
  std::vector<std::vector<int>> blocks;
  std::vector<int> up_ys, low_ys;
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0) {
      up_ys.push_back(i);
      low_ys.push_back(n + i);
    } else {
      blocks.push_back({i});
      blocks.push_back({n + i});
    }
  }
  if (through) {
    up_ys.insert(up_ys.end(), low_ys.begin(), low_ys.end());
    blocks.push_back(std::move(up_ys));
  } else {
    blocks.push_back(std::move(up_ys));
    blocks.push_back(std::move(low_ys));
  }
  return make_partition(row, row, std::move(blocks));
}
}  // namespace

Partition p_k(int k) { return yx_row_partition(k, true); }
Partition q_k(int k) { return yx_row_partition(k, false); }

}  // namespace ncp
