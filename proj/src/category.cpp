#include "ncp/category.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace ncp {
namespace {

struct Candidate {
  std::string key;
  Trace trace;
};

// A member key split into its three fields. Labels are canonical: blocks are
// numbered by first occurrence in point order, matching partition_key.
struct KeyView {
  std::string_view up, low, labels;
};

KeyView split_key(std::string_view key) {
  size_t a = key.find('|');
  size_t b = key.find('|', a + 1);
  return {key.substr(0, a), key.substr(a + 1, b - a - 1), key.substr(b + 1)};
}

// Key of tensor(a, b) straight from the member keys: concatenated words, with
// b's labels renumbered by first occurrence in the merged point order.
// Written into `out` (cleared first) to avoid per-candidate allocation.
void tensor_key(const KeyView& a, const KeyView& b, std::string& out) {
  out.clear();
  out.append(a.up).append(b.up).push_back('|');
  out.append(a.low).append(b.low).push_back('|');
  signed char remap_a[96], remap_b[96];
  std::fill(remap_a, remap_a + 96, -1);
  std::fill(remap_b, remap_b + 96, -1);
  char next = 0;
  auto put = [&](signed char* remap, char lab) {
    auto& slot = remap[lab - 'A'];
    if (slot < 0) slot = next++;
    out.push_back('A' + slot);
  };
  for (size_t i = 0; i < a.up.size(); ++i) put(remap_a, a.labels[i]);
  for (size_t i = 0; i < b.up.size(); ++i) put(remap_b, b.labels[i]);
  for (size_t i = a.up.size(); i < a.labels.size(); ++i) put(remap_a, a.labels[i]);
  for (size_t i = b.up.size(); i < b.labels.size(); ++i) put(remap_b, b.labels[i]);
}

// Key of compose(q, p) (p on top, p.low == q.up) via union-find on block
// labels; loops are irrelevant here.
void compose_key(const KeyView& p, const KeyView& q, std::string& out) {
  int parent[192];
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int pb = 0, qb = 0;
  for (char c : p.labels) pb = std::max(pb, c - 'A' + 1);
  for (char c : q.labels) qb = std::max(qb, c - 'A' + 1);
  for (int v = 0; v < pb + qb; ++v) parent[v] = v;
  const size_t m = p.low.size();  // == q.up.size(), the glued row
  const char* p_low_labels = p.labels.data() + p.up.size();
  for (size_t i = 0; i < m; ++i) {
    int a = find(p_low_labels[i] - 'A'), b = find(pb + q.labels[i] - 'A');
    if (a != b) parent[a] = b;
  }
  out.clear();
  out.append(p.up).push_back('|');
  out.append(q.low).push_back('|');
  signed char remap[192];
  std::fill(remap, remap + pb + qb, -1);
  char next = 0;
  auto put = [&](int v) {
    auto& slot = remap[find(v)];
    if (slot < 0) slot = next++;
    out.push_back('A' + slot);
  };
  for (size_t i = 0; i < p.up.size(); ++i) put(p.labels[i] - 'A');
  for (size_t j = q.up.size(); j < q.labels.size(); ++j) put(pb + q.labels[j] - 'A');
}

// Mutable closure state shared by the generation loop. Membership is tracked
// by an open-addressing table of member ids keyed by the key strings, which is
// read concurrently by worker threads and written only between slices.
struct Builder {
  static constexpr std::uint32_t EMPTY = 0xffffffffu;

  const ColourSet& cs;
  ClosureConfig cfg;
  std::vector<std::string> keys;
  std::vector<std::uint16_t> up_len, low_len;
  std::vector<std::uint64_t> hashes;  // parallel to keys
  std::vector<Trace> traces;
  std::vector<std::uint32_t> table;   // open addressing, power-of-two size
  std::unordered_map<std::string, std::vector<std::uint32_t>, KeyHash, std::equal_to<>> by_upper,
      by_lower;
  std::vector<std::vector<std::uint32_t>> by_points;

  explicit Builder(const ColourSet& c, const ClosureConfig& f)
      : cs(c), cfg(f), table(1u << 16, EMPTY) {
    by_points.resize(cfg.point_budget + 1);
  }

  KeyView view(std::uint32_t i) const {
    std::string_view key = keys[i];
    return {key.substr(0, up_len[i]), key.substr(up_len[i] + 1, low_len[i]),
            key.substr(up_len[i] + low_len[i] + 2)};
  }

  static std::uint64_t hash_of(std::string_view key) {
    return std::hash<std::string_view>{}(key);
  }

  bool present(std::string_view key, std::uint64_t h) const {
    std::size_t mask = table.size() - 1, slot = h & mask;
    while (table[slot] != EMPTY) {
      std::uint32_t id = table[slot];
      if (hashes[id] == h && keys[id] == key) return true;
      slot = (slot + 1) & mask;
    }
    return false;
  }

  void rehash() {
    std::vector<std::uint32_t> bigger(table.size() * 2, EMPTY);
    std::size_t mask = bigger.size() - 1;
    for (std::uint32_t id = 0; id < keys.size(); ++id) {
      std::size_t slot = hashes[id] & mask;
      while (bigger[slot] != EMPTY) slot = (slot + 1) & mask;
      bigger[slot] = id;
    }
    table.swap(bigger);
  }

  // Returns true if the key was new.
  bool add(std::string key, Trace t) {
    std::uint64_t h = hash_of(key);
    std::size_t mask = table.size() - 1, slot = h & mask;
    while (table[slot] != EMPTY) {
      std::uint32_t id = table[slot];
      if (hashes[id] == h && keys[id] == key) return false;
      slot = (slot + 1) & mask;
    }
    auto id = static_cast<std::uint32_t>(keys.size());
    table[slot] = id;
    KeyView v = split_key(key);
    by_upper[std::string(v.up)].push_back(id);
    by_lower[std::string(v.low)].push_back(id);
    by_points[v.labels.size()].push_back(id);
    up_len.push_back(static_cast<std::uint16_t>(v.up.size()));
    low_len.push_back(static_cast<std::uint16_t>(v.low.size()));
    hashes.push_back(h);
    keys.push_back(std::move(key));
    traces.push_back(std::move(t));
    if (keys.size() * 2 > table.size()) rehash();
    return true;
  }
};

// Emits every candidate derived from member i, skipping keys already indexed.
// Safe to run concurrently: the builder is read-only during a slice.
void emit_member(const Builder& b, std::uint32_t i, std::vector<Candidate>& out) {
  std::string buf;
  buf.reserve(64);
  auto push_buf = [&](Trace t) {
    if (!b.present(buf, Builder::hash_of(buf))) out.push_back({buf, t});
  };
  auto push = [&](const Partition& part, Trace t) {
    buf = partition_key(part);
    push_buf(t);
  };
  const KeyView pv = b.view(i);
  const int pts = static_cast<int>(pv.labels.size());

  Partition p = partition_from_key(b.keys[i]);
  push(involute(p), {OpKind::involute, i});
  push(conjugate(p, b.cs), {OpKind::conjugate, i});
  for (int s = 0; s < 2; ++s)
    for (int d = 0; d < 2; ++d) {
      Dir dir = d ? Dir::down : Dir::up;
      if (dir == Dir::up ? p.lower_size() == 0 : p.upper_size() == 0) continue;
      Side side = s ? Side::right : Side::left;
      push(rotate(p, side, dir, b.cs),
           {OpKind::rotate, i, 0, static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(d)});
    }
  // Full-subpartition extractions, computed at key level. A full arc in the
  // cyclic boundary order, read as a one-line partition q, extracts to
  // involute(q).q; the middle row is empty there, so the extraction is just
  // the arc word over both rows with the arc labels repeated shifted.
  if (b.cfg.full_sub_extraction && pts > 0) {
    const int n = pts;
    const int k = static_cast<int>(pv.up.size()), l = static_cast<int>(pv.low.size());
    const int max_len = std::min(n, b.cfg.point_budget / 2);
    char col[64], lab[64];
    for (int t = 0; t < k; ++t) {
      col[t] = pv.up[t];
      lab[t] = pv.labels[t];
    }
    for (int j = 0; j < l; ++j) {
      col[k + j] = b.cs.inverse(pv.low[l - 1 - j]);
      lab[k + j] = pv.labels[k + l - 1 - j];
    }
    int bsz[64] = {0};
    for (int t = 0; t < n; ++t) ++bsz[lab[t] - 'A'];
    int cnt[64];
    for (int s = 0; s < n; ++s) {
      std::fill(cnt, cnt + 64, 0);
      int incomplete = 0;
      for (int len = 1; len <= max_len; ++len) {
        int bi = lab[(s + len - 1) % n] - 'A';
        if (cnt[bi] == 0) ++incomplete;
        if (++cnt[bi] == bsz[bi]) --incomplete;
        if (incomplete) continue;
        buf.clear();
        for (int t = 0; t < len; ++t) buf.push_back(col[(s + t) % n]);
        buf.push_back('|');
        for (int t = 0; t < len; ++t) buf.push_back(col[(s + t) % n]);
        buf.push_back('|');
        signed char remap[64];
        std::fill(remap, remap + 64, -1);
        char next = 0;
        for (int t = 0; t < len; ++t) {
          auto& slot = remap[lab[(s + t) % n] - 'A'];
          if (slot < 0) slot = next++;
          buf.push_back('A' + slot);
        }
        for (int t = 0; t < len; ++t) buf.push_back('A' + remap[lab[(s + t) % n] - 'A'] + next);
        push_buf({OpKind::extracted, i});
      }
    }
  }

  // Binary partners are restricted to j <= i: a pair with j > i is emitted
  // when j itself is processed, since every member enters the queue once.
  // tensor with every member small enough
  for (int s = 0; s + pts <= b.cfg.point_budget; ++s) {
    for (std::uint32_t j : b.by_points[s]) {
      if (j > i) break;  // partner lists are in ascending id order
      KeyView qv = b.view(j);
      tensor_key(pv, qv, buf);
      push_buf({OpKind::tensor, i, j});
      if (j != i) {
        tensor_key(qv, pv, buf);
        push_buf({OpKind::tensor, j, i});
      }
    }
  }
  // i on top: partners q with q.up == p.low
  if (auto it = b.by_upper.find(pv.low); it != b.by_upper.end()) {
    for (std::uint32_t j : it->second) {
      if (j > i) break;
      KeyView qv = b.view(j);
      if (pv.up.size() + qv.low.size() > static_cast<size_t>(b.cfg.point_budget)) continue;
      compose_key(pv, qv, buf);
      push_buf({OpKind::compose, j, i});
    }
  }
  // i on the bottom: partners t with t.low == p.up
  if (auto it = b.by_lower.find(pv.up); it != b.by_lower.end()) {
    for (std::uint32_t j : it->second) {
      if (j > i) break;
      KeyView tv = b.view(j);
      if (j == i && pv.low == pv.up) continue;  // already covered above
      if (tv.up.size() + pv.low.size() > static_cast<size_t>(b.cfg.point_budget)) continue;
      compose_key(tv, pv, buf);
      push_buf({OpKind::compose, i, j});
    }
  }
}

void process_range(const Builder& b, const std::vector<std::uint32_t>& work, size_t lo, size_t hi,
                   std::vector<Candidate>& out) {
  for (size_t w = lo; w < hi; ++w) emit_member(b, work[w], out);
}

}  // namespace

void Category::register_implied(const Partition& p, const std::string& rule,
                                const std::vector<Partition>& premises) {
  std::string key = partition_key(p);
  auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(keys.size()));
  if (!inserted) return;
  Trace t;
  t.op = OpKind::implied;
  t.note = rule;
  if (!premises.empty()) {
    auto pit = index.find(partition_key(premises[0]));
    t.a = pit == index.end() ? it->second : pit->second;
    if (premises.size() > 1) {
      auto qit = index.find(partition_key(premises[1]));
      t.b = qit == index.end() ? it->second : qit->second;
    } else {
      t.b = t.a;
    }
  } else {
    t.a = t.b = it->second;
  }
  keys.push_back(std::move(key));
  traces.push_back(std::move(t));
}

Category closure_generate(const ColourSet& cs, const std::vector<Partition>& gens,
                          const ClosureConfig& cfg) {
  Builder b(cs, cfg);
  bool truncated = false;

  b.add(partition_key(empty_partition()), {OpKind::base});
  for (char c : cs.letters) b.add(partition_key(identity(c)), {OpKind::base});
  for (const auto& g : gens) {
    cs.validate_word(g.up);
    cs.validate_word(g.low);
    if (!is_noncrossing(g))
      throw std::invalid_argument("crossing generator: " + format_partition(g));
    if (g.points() > cfg.point_budget)
      throw std::invalid_argument("generator exceeds point budget: " + format_partition(g));
    b.add(partition_key(g), {OpKind::generator});
  }

  std::vector<std::uint32_t> queue(b.keys.size());
  for (std::uint32_t i = 0; i < queue.size(); ++i) queue[i] = i;

  std::mt19937 rng(cfg.shuffle_seed);
  int rounds = 0;
  const int nthreads = std::max(1, cfg.threads);
  // Single-threaded runs merge after every member so duplicate candidates
  // never pile up; threaded runs work in slices with a merge in between.
  const size_t slice = nthreads == 1 ? 1 : 1024;
  std::vector<std::vector<Candidate>> results(nthreads);
  while (!queue.empty() && !truncated) {
    if (++rounds > cfg.iteration_cap) {
      truncated = true;
      break;
    }
    std::vector<std::uint32_t> frontier;
    frontier.swap(queue);
    if (cfg.shuffle_seed) std::shuffle(frontier.begin(), frontier.end(), rng);
    for (size_t start = 0; start < frontier.size() && !truncated; start += slice) {
      size_t end = std::min(frontier.size(), start + slice);
      for (auto& vec : results) vec.clear();
      if (nthreads == 1) {
        process_range(b, frontier, start, end, results[0]);
      } else {
        std::vector<std::thread> workers;
        size_t chunk = (end - start + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
          size_t lo = start + t * chunk, hi = std::min(end, lo + chunk);
          if (lo >= hi) break;
          workers.emplace_back([&b, &frontier, lo, hi, &results, t] {
            process_range(b, frontier, lo, hi, results[t]);
          });
        }
        for (auto& w : workers) w.join();
      }
      for (auto& vec : results)
        for (auto& cand : vec) {
          if (b.keys.size() >= cfg.member_cap) {
            truncated = true;
            break;
          }
          if (b.add(std::move(cand.key), cand.trace))
            queue.push_back(static_cast<std::uint32_t>(b.keys.size() - 1));
        }
    }
  }

  Category cat;
  cat.cs = cs;
  cat.generators = gens;
  cat.cfg = cfg;
  cat.truncated = truncated;
  cat.keys = std::move(b.keys);
  cat.traces = std::move(b.traces);
  cat.index.reserve(cat.keys.size() * 2);
  for (std::uint32_t id = 0; id < cat.keys.size(); ++id) cat.index.emplace(cat.keys[id], id);
  return cat;
}

std::vector<std::string> derivation_trace(const Category& cat, const Partition& p) {
  auto it = cat.index.find(partition_key(p));
  if (it == cat.index.end()) return {};
  // Topological order of the dependency dag under the queried member.
  std::vector<std::uint32_t> order;
  std::unordered_map<std::uint32_t, int> local;  // member -> local id (1-based)
  std::vector<std::uint32_t> stack{it->second};
  // First pass: collect dependencies.
  std::unordered_set<std::uint32_t> seen{it->second};
  while (!stack.empty()) {
    std::uint32_t cur = stack.back();
    stack.pop_back();
    order.push_back(cur);
    const Trace& t = cat.traces[cur];
    switch (t.op) {
      case OpKind::generator:
      case OpKind::base:
        break;
      case OpKind::tensor:
      case OpKind::compose:
      case OpKind::implied:
        if (seen.insert(t.b).second) stack.push_back(t.b);
        [[fallthrough]];
      default:
        if (seen.insert(t.a).second) stack.push_back(t.a);
        break;
    }
  }
  std::reverse(order.begin(), order.end());
  // A member can appear before its dependencies in `order` when shared; fix by
  // stable re-sort on dependency depth.
  std::unordered_map<std::uint32_t, int> depth;
  std::function<int(std::uint32_t)> depth_of = [&](std::uint32_t m) -> int {
    auto d = depth.find(m);
    if (d != depth.end()) return d->second;
    const Trace& t = cat.traces[m];
    int v = 0;
    if (t.op != OpKind::generator && t.op != OpKind::base) {
      v = 1 + depth_of(t.a);
      if (t.op == OpKind::tensor || t.op == OpKind::compose || t.op == OpKind::implied)
        v = std::max(v, 1 + depth_of(t.b));
    }
    depth[m] = v;
    return v;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t c) { return depth_of(a) < depth_of(c); });

  std::vector<std::string> lines;
  for (std::uint32_t m : order) {
    int id = static_cast<int>(local.size()) + 1;
    local[m] = id;
    const Trace& t = cat.traces[m];
    std::string line = "p" + std::to_string(id) + " := ";
    auto ref = [&](std::uint32_t x) { return "p" + std::to_string(local.at(x)); };
    switch (t.op) {
      case OpKind::generator:
        line += "gen " + format_partition(cat.member(m));
        break;
      case OpKind::base:
        line += "base " + format_partition(cat.member(m));
        break;
      case OpKind::tensor:
        line += "tensor " + ref(t.a) + " " + ref(t.b);
        break;
      case OpKind::compose:
        line += "compose " + ref(t.a) + " " + ref(t.b);
        break;
      case OpKind::involute:
        line += "involute " + ref(t.a);
        break;
      case OpKind::conjugate:
        line += "conjugate " + ref(t.a);
        break;
      case OpKind::rotate:
        line += std::string("rotate ") + (t.side ? "right" : "left") + " " + (t.dir ? "down" : "up") +
                " " + ref(t.a);
        break;
      case OpKind::extracted:
        line += "extract " + ref(t.a) + " -> " + format_partition(cat.member(m));
        break;
      case OpKind::implied:
        line += "implied " + t.note + " " + ref(t.a);
        if (t.b != t.a) line += " " + ref(t.b);
        line += " -> " + format_partition(cat.member(m));
        break;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

Membership contains(const Category& cat, const Partition& p) {
  Membership m;
  m.bound = cat.cfg.point_budget;
  if (cat.index.count(partition_key(p))) {
    m.verdict = Verdict::YES;
    m.witness = derivation_trace(cat, p);
  } else {
    m.verdict = Verdict::NO_UP_TO_BOUND;
  }
  return m;
}

std::vector<Partition> enumerate_members(const Category& cat, const Word& w, const Word& wp) {
  std::vector<std::pair<std::string, Partition>> found;
  for (const auto& key : cat.keys) {
    // key layout: up|low|labels
    if (key.size() < w.size() + wp.size() + 2) continue;
    if (key.compare(0, w.size(), w) != 0 || key[w.size()] != '|') continue;
    if (key.compare(w.size() + 1, wp.size(), wp) != 0 || key[w.size() + 1 + wp.size()] != '|') continue;
    found.emplace_back(key, partition_from_key(key));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Partition> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

ProjectiveInfo projective_info(const Partition& p, const ColourSet& cs) {
  if (!is_projective(p)) throw std::invalid_argument("not projective: " + format_partition(p));
  ProjectiveInfo info;
  info.p = p;
  info.t = through_block_count(p);
  char cut = cs.has('x') ? 'x' : cs.letters[0];
  int k = p.upper_size();
  // Through-blocks in left-to-right order of their minimal upper point.
  std::vector<std::pair<int, int>> through;  // (min upper point, block index)
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (!block_view(p, static_cast<int>(i)).is_through) continue;
    int mn = p.points();
    for (int pt : p.blocks[i])
      if (p.is_upper(pt)) mn = std::min(mn, pt);
    through.emplace_back(mn, static_cast<int>(i));
  }
  std::sort(through.begin(), through.end());
  std::vector<std::vector<int>> blocks;
  std::vector<char> used(p.blocks.size(), 0);
  for (size_t ti = 0; ti < through.size(); ++ti) {
    int bi = through[ti].second;
    used[bi] = 1;
    std::vector<int> nb;
    for (int pt : p.blocks[bi])
      if (p.is_upper(pt)) nb.push_back(pt);
    nb.push_back(k + static_cast<int>(ti));
    blocks.push_back(std::move(nb));
  }
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> nb;
    for (int pt : p.blocks[i])
      if (p.is_upper(pt)) nb.push_back(pt);
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  info.half = make_partition(p.up, std::string(info.t, cut), std::move(blocks));
  return info;
}

std::vector<ProjectiveInfo> projectives(const Category& cat, const Word& w) {
  std::vector<ProjectiveInfo> out;
  for (const auto& p : enumerate_members(cat, w, w))
    if (is_projective(p)) out.push_back(projective_info(p, cat.cs));
  return out;
}

namespace {
bool witnesses_equivalence(const Partition& r, const Partition& p, const Partition& q) {
  if (r.up != p.up || r.low != q.up) return false;
  return compose(involute(r), r).part == p && compose(r, involute(r)).part == q;
}
}  // namespace

Membership is_equivalent(const Category& cat, const ProjectiveInfo& p, const ProjectiveInfo& q) {
  Membership m;
  m.bound = cat.cfg.point_budget;
  if (!cat.has(p.p) || !cat.has(q.p))
    throw std::invalid_argument("equivalence query on non-members");
  if (p.t != q.t) {
    m.verdict = Verdict::NO;
    m.witness = {"through-block counts differ: " + std::to_string(p.t) + " vs " + std::to_string(q.t)};
    return m;
  }
  auto accept = [&](const Partition& r, const std::string& how) {
    m.verdict = Verdict::YES;
    m.witness = {"witness (" + how + "): " + format_partition(r)};
    auto tr = derivation_trace(cat, r);
    m.witness.insert(m.witness.end(), tr.begin(), tr.end());
    return m;
  };
  if (p.p == q.p) return accept(p.p, "reflexive");
  if (p.t == 0 && p.p.up == q.p.up) {
    Partition r = compose(q.p, p.p).part;
    if (cat.has(r) && witnesses_equivalence(r, p.p, q.p)) return accept(r, "composition");
  }
  {
    Partition r = compose(involute(q.half), p.half).part;
    if (cat.has(r) && witnesses_equivalence(r, p.p, q.p)) return accept(r, "half-cut");
  }
  for (const auto& r : enumerate_members(cat, p.p.up, q.p.up))
    if (witnesses_equivalence(r, p.p, q.p)) return accept(r, "search");
  m.verdict = Verdict::NO_UP_TO_BOUND;
  return m;
}

std::vector<std::pair<Partition, Partition>> full_subpartitions(const Partition& p,
                                                               const ColourSet& cs) {
  std::vector<std::pair<Partition, Partition>> out;
  int n = p.points(), k = p.upper_size(), l = p.lower_size();
  if (n == 0) return out;
  std::vector<int> order;
  for (int i = 0; i < k; ++i) order.push_back(i);
  for (int j = l - 1; j >= 0; --j) order.push_back(k + j);
  std::vector<int> label(n);
  for (size_t i = 0; i < p.blocks.size(); ++i)
    for (int pt : p.blocks[i]) label[pt] = static_cast<int>(i);

  std::unordered_set<std::string> seen;
  for (int s = 0; s < n; ++s) {
    for (int len = 1; len <= n; ++len) {
      std::vector<int> arc(len);
      std::vector<char> in_arc(n, 0);
      for (int t = 0; t < len; ++t) {
        arc[t] = order[(s + t) % n];
        in_arc[arc[t]] = 1;
      }
      std::vector<int> count(p.blocks.size(), 0);
      for (int pt : arc) ++count[label[pt]];
      bool full = true;
      for (size_t bi = 0; bi < p.blocks.size() && full; ++bi)
        if (count[bi] != 0 && count[bi] != static_cast<int>(p.blocks[bi].size())) full = false;
      if (!full) continue;

      Word word;
      for (int pt : arc) word += p.is_upper(pt) ? p.colour_of(pt) : cs.inverse(p.colour_of(pt));
      std::vector<int> pos(n, -1);
      for (int t = 0; t < len; ++t) pos[arc[t]] = t;
      std::unordered_map<int, std::vector<int>> sub_blocks;
      for (int pt : arc) sub_blocks[label[pt]].push_back(pos[pt]);
      std::vector<std::vector<int>> blocks;
      for (auto& [bi, pts] : sub_blocks) blocks.push_back(std::move(pts));
      Partition q = make_partition(word, "", std::move(blocks));
      if (!seen.insert(partition_key(q)).second) continue;
      Partition extraction = compose(involute(q), q).part;
      out.emplace_back(std::move(q), std::move(extraction));
    }
  }
  return out;
}

Word reduce_alternating(const Word& w, const ColourSet& cs) {
  Word stack;
  for (char c : w) {
    if (!stack.empty() && cs.inverse(stack.back()) == c)
      stack.pop_back();
    else
      stack += c;
  }
  return stack;
}

Word reduce_alternating(const Partition& one_line, const ColourSet& cs) {
  if (!one_line.low.empty() && !one_line.up.empty())
    throw std::invalid_argument("reduce_alternating requires a one-line partition");
  return reduce_alternating(one_line.up.empty() ? one_line.low : one_line.up, cs);
}

std::vector<std::string> closure_dump(const Category& cat) {
  std::vector<std::string> keys = cat.keys;
  std::sort(keys.begin(), keys.end());
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(format_partition(partition_from_key(key)));
  return out;
}

std::pair<ColourSet, std::vector<Partition>> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file: " + path);
  std::string line;
  ColourSet cs;
  bool have_cs = false;
  std::vector<Partition> gens;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (!have_cs) {
      if (line.compare(0, 8, "colours=") != 0)
        throw std::runtime_error("generator file must start with a colours= line");
      cs = ColourSet::parse(line.substr(8));
      have_cs = true;
    } else {
      gens.push_back(parse_partition(line, cs));
    }
  }
  if (!have_cs) throw std::runtime_error("generator file missing colours= line");
  return {cs, gens};
}

Partition replay_trace(const std::vector<std::string>& script, const ColourSet& cs,
                       bool check_ops) {
  std::unordered_map<std::string, Partition> env;
  Partition last = empty_partition();
  for (const auto& line : script) {
    std::istringstream ss(line);
    std::string id, assign, op;
    if (!(ss >> id >> assign >> op) || assign != ":=")
      throw std::invalid_argument("bad trace line: " + line);
    auto arg = [&]() {
      std::string ref;
      ss >> ref;
      auto it = env.find(ref);
      if (it == env.end()) throw std::invalid_argument("undefined reference in trace: " + ref);
      return it->second;
    };
    Partition value = empty_partition();
    if (op == "gen" || op == "base") {
      std::string lit;
      ss >> lit;
      value = parse_partition(lit, cs);
    } else if (op == "tensor") {
      Partition a = arg(), b = arg();
      value = tensor(a, b);
    } else if (op == "compose") {
      Partition a = arg(), b = arg();
      value = compose(a, b).part;
    } else if (op == "involute") {
      value = involute(arg());
    } else if (op == "conjugate") {
      value = conjugate(arg(), cs);
    } else if (op == "rotate") {
      std::string side, dir;
      ss >> side >> dir;
      Partition a = arg();
      value = rotate(a, side == "right" ? Side::right : Side::left,
                     dir == "down" ? Dir::down : Dir::up, cs);
    } else if (op == "extract") {
      Partition a = arg();
      std::string arrow, lit;
      ss >> arrow >> lit;
      value = parse_partition(lit, cs);
      if (check_ops) {
        bool found = false;
        for (auto& [sub, extraction] : full_subpartitions(a, cs))
          if (extraction == value) {
            found = true;
            break;
          }
        if (!found) throw std::invalid_argument("extract line not an extraction of its parent: " + line);
      }
    } else if (op == "implied") {
      if (check_ops) throw std::invalid_argument("implied line in op-checked replay: " + line);
      // consume tokens until "->", then read the literal
      std::string tok, lit;
      while (ss >> tok && tok != "->") {
      }
      ss >> lit;
      value = parse_partition(lit, cs);
    } else {
      throw std::invalid_argument("unknown trace op: " + op);
    }
    env.emplace(id, value);
    last = value;
  }
  return last;
}

}  // namespace ncp
