// Independent brute-force oracles used only by the tests. These deliberately
// avoid the library's algorithms (union-find, stack-based crossing test,
// stack-based word reduction) so that agreement is meaningful.
#pragma once

#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncp/partition.hpp"

namespace oracle {

// All set partitions of {0..n-1} as block lists, via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> a(n, 0);
  for (;;) {
    int blocks = 0;
    for (int v : a) blocks = std::max(blocks, v + 1);
    std::vector<std::vector<int>> parts(blocks);
    for (int i = 0; i < n; ++i) parts[a[i]].push_back(i);
    out.push_back(parts);
    int i = n - 1;
    while (i > 0) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j] + 1);
      if (a[i] < cap) {
        ++a[i];
        break;
      }
      a[i--] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

// Crossing check straight from the four-point definition, in the cyclic
// boundary order (upper left to right, lower right to left).
inline bool noncrossing_bruteforce(const ncp::Partition& p) {
  int k = p.upper_size(), l = p.lower_size(), n = p.points();
  std::vector<int> seq;
  for (int i = 0; i < k; ++i) seq.push_back(i);
  for (int j = l - 1; j >= 0; --j) seq.push_back(k + j);
  std::vector<int> label(n);
  for (size_t b = 0; b < p.blocks.size(); ++b)
    for (int pt : p.blocks[b]) label[pt] = static_cast<int>(b);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int la = label[seq[a]], lb = label[seq[b]], lc = label[seq[c]], ld = label[seq[d]];
          if (la == lc && lb == ld && la != lb) return false;
        }
  return true;
}

// Loop count of a vertical composition via plain reachability.
inline int loops_bruteforce(const ncp::Partition& q, const ncp::Partition& p) {
  int kp = p.upper_size(), m = p.lower_size(), P = p.points();
  int total = P + q.points();
  std::vector<std::vector<int>> adj(total);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (const auto& b : p.blocks)
    for (size_t i = 1; i < b.size(); ++i) link(b[0], b[i]);
  for (const auto& b : q.blocks)
    for (size_t i = 1; i < b.size(); ++i) link(P + b[0], P + b[i]);
  for (int i = 0; i < m; ++i) link(kp + i, P + i);
  std::vector<char> outer(total, 0);
  for (int i = 0; i < kp; ++i) outer[i] = 1;
  for (int j = 0; j < q.lower_size(); ++j) outer[P + m + j] = 1;
  std::vector<int> comp(total, -1);
  int ncomp = 0;
  for (int s = 0; s < total; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> bfs;
    bfs.push(s);
    comp[s] = ncomp;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          bfs.push(w);
        }
    }
    ++ncomp;
  }
  std::vector<char> has_outer(ncomp, 0);
  for (int v = 0; v < total; ++v)
    if (outer[v]) has_outer[comp[v]] = 1;
  int loops = 0;
  for (int c = 0; c < ncomp; ++c)
    if (!has_outer[c]) ++loops;
  return loops;
}

// Every word reachable by deleting adjacent mutually-inverse pairs in any
// order, keeping only the terminal (irreducible) ones.
inline std::set<std::string> all_terminal_reductions(const std::string& w, const ncp::ColourSet& cs) {
  std::set<std::string> visited, terminal;
  std::queue<std::string> todo;
  todo.push(w);
  visited.insert(w);
  while (!todo.empty()) {
    std::string cur = todo.front();
    todo.pop();
    bool reducible = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cs.inverse(cur[i]) != cur[i + 1]) continue;
      reducible = true;
      std::string next = cur.substr(0, i) + cur.substr(i + 2);
      if (visited.insert(next).second) todo.push(next);
    }
    if (!reducible) terminal.insert(cur);
  }
  return terminal;
}

// All noncrossing partitions with the given row words.
inline std::vector<ncp::Partition> all_noncrossing(const ncp::Word& up, const ncp::Word& low) {
  std::vector<ncp::Partition> out;
  for (const auto& blocks : set_partitions(static_cast<int>(up.size() + low.size()))) {
    ncp::Partition p = ncp::make_partition(up, low, blocks);
    if (ncp::is_noncrossing(p)) out.push_back(p);
  }
  return out;
}

// Random noncrossing partition on random or fixed row words.
template <class Rng>
std::optional<ncp::Partition> random_noncrossing(const ncp::Word& up, const ncp::Word& low, Rng& rng,
                                                 int attempts = 200) {
  int n = static_cast<int>(up.size() + low.size());
  if (n == 0) return ncp::empty_partition();
  for (int t = 0; t < attempts; ++t) {
    std::vector<int> a(n, 0);
    int mx = 0;
    for (int i = 1; i < n; ++i) {
      a[i] = std::uniform_int_distribution<int>(0, mx + 1)(rng);
      mx = std::max(mx, a[i]);
    }
    std::vector<std::vector<int>> blocks(mx + 1);
    for (int i = 0; i < n; ++i) blocks[a[i]].push_back(i);
    ncp::Partition p = ncp::make_partition(up, low, blocks);
    if (ncp::is_noncrossing(p)) return p;
  }
  return std::nullopt;
}

template <class Rng>
ncp::Word random_word(int len, Rng& rng) {
  ncp::Word w;
  for (int i = 0; i < len; ++i) w += std::uniform_int_distribution<int>(0, 1)(rng) ? 'y' : 'x';
  return w;
}

}  // namespace oracle
