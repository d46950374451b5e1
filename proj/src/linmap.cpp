#include "ncp/linmap.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncp {
namespace {

using bigint = boost::multiprecision::cpp_int;

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

TpMatrix tp_matrix(const Partition& p, int N, std::uint64_t nz_cap) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  int k = p.upper_size(), l = p.lower_size();
  int b = static_cast<int>(p.blocks.size());
  std::uint64_t nnz = upow(static_cast<std::uint64_t>(N), b);
  if (nnz > nz_cap) throw std::length_error("tp_matrix entry cap exceeded");

  TpMatrix m;
  m.p = p;
  m.N = N;
  m.rows = upow(N, l);
  m.cols = upow(N, k);
  std::vector<int> label(p.points());
  for (int i = 0; i < b; ++i)
    for (int pt : p.blocks[i]) label[pt] = i;

  std::vector<int> assign(b, 0);
  m.nz.reserve(nnz);
  for (;;) {
    std::uint64_t row = 0, col = 0;
    for (int i = 0; i < k; ++i) col = col * N + assign[label[i]];
    for (int j = 0; j < l; ++j) row = row * N + assign[label[k + j]];
    m.nz.emplace_back(row, col);
    int d = b - 1;
    while (d >= 0 && assign[d] == N - 1) assign[d--] = 0;
    if (d < 0) break;
    ++assign[d];
  }
  std::sort(m.nz.begin(), m.nz.end());
  return m;
}

bool check_composition(const Partition& q, const Partition& p, int N) {
  auto comp = compose(q, p);  // validates the words
  TpMatrix tp = tp_matrix(p, N), tq = tp_matrix(q, N), tqp = tp_matrix(comp.part, N);

  // The product entry at (r, c) counts middle indices m with (m, c) in T_p and
  // (r, m) in T_q. Checking it against N^loops * T_qp entry by entry would blow
  // up on wide pairs, so split into two exact comparisons instead: the total
  // mass of the product, and the count over each entry of the support of T_qp.
  // Since all product entries are nonnegative, equality of the mass with
  // N^loops * nnz(T_qp) then rules out any support outside T_qp.
  auto tp_by_col = tp.nz;  // (row=mid, col); resorted to group mids by column
  std::sort(tp_by_col.begin(), tp_by_col.end(),
            [](const auto& a, const auto& b) { return a.second < b.second || (a.second == b.second && a.first < b.first); });
  auto tq_by_col = tq.nz;  // (row, col=mid); resorted to group rows by mid
  std::sort(tq_by_col.begin(), tq_by_col.end(),
            [](const auto& a, const auto& b) { return a.second < b.second || (a.second == b.second && a.first < b.first); });

  std::uint64_t mass = 0;
  {
    size_t a = 0, c = 0;
    while (a < tp.nz.size() && c < tq_by_col.size()) {
      std::uint64_t mid_p = tp.nz[a].first, mid_q = tq_by_col[c].second;
      if (mid_p < mid_q) {
        ++a;
      } else if (mid_q < mid_p) {
        ++c;
      } else {
        size_t a2 = a, c2 = c;
        while (a2 < tp.nz.size() && tp.nz[a2].first == mid_p) ++a2;
        while (c2 < tq_by_col.size() && tq_by_col[c2].second == mid_p) ++c2;
        mass += static_cast<std::uint64_t>(a2 - a) * (c2 - c);
        a = a2;
        c = c2;
      }
    }
  }
  std::uint64_t factor = upow(N, comp.loops);
  if (mass != factor * tqp.nz.size()) return false;

  // ranges of mids per column of p and per row of q
  std::unordered_map<std::uint64_t, std::pair<size_t, size_t>> p_cols, q_rows;
  for (size_t i = 0; i < tp_by_col.size();) {
    size_t j = i;
    while (j < tp_by_col.size() && tp_by_col[j].second == tp_by_col[i].second) ++j;
    p_cols.emplace(tp_by_col[i].second, std::make_pair(i, j));
    i = j;
  }
  for (size_t i = 0; i < tq.nz.size();) {
    size_t j = i;
    while (j < tq.nz.size() && tq.nz[j].first == tq.nz[i].first) ++j;
    q_rows.emplace(tq.nz[i].first, std::make_pair(i, j));
    i = j;
  }
  for (const auto& [row, col] : tqp.nz) {
    auto pit = p_cols.find(col);
    auto qit = q_rows.find(row);
    if (pit == p_cols.end() || qit == q_rows.end()) return false;
    std::uint64_t count = 0;
    size_t a = pit->second.first, c = qit->second.first;
    while (a < pit->second.second && c < qit->second.second) {
      std::uint64_t ma = tp_by_col[a].first, mc = tq.nz[c].second;
      if (ma < mc)
        ++a;
      else if (mc < ma)
        ++c;
      else {
        ++count;
        ++a;
        ++c;
      }
    }
    if (count != factor) return false;
  }
  return true;
}

int join_block_count(const Partition& a, const Partition& b) {
  if (a.up.size() != b.up.size() || a.low.size() != b.low.size())
    throw std::invalid_argument("join of partitions with different shapes");
  int n = a.points();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int u, int v) { parent[find(u)] = find(v); };
  for (const auto* part : {&a, &b})
    for (const auto& blk : part->blocks)
      for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
  int classes = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++classes;
  return classes;
}

namespace {

// Rank by fraction-free (Bareiss) elimination with full pivoting; exact over
// the integers, hence certifies the rank over the rationals.
std::size_t bareiss_rank(std::vector<std::vector<bigint>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  bigint prev = 1;
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    std::size_t pr = rank, pc = cols;
    for (std::size_t i = rank; i < rows && pc == cols; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pc == cols) break;  // remaining submatrix is zero
    std::swap(m[rank], m[pr]);
    if (pc != rank)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][rank], m[i][pc]);
    const bigint pivot = m[rank][rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * pivot - m[i][rank] * m[rank][j]) / prev;
      m[i][rank] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t tp_span_rank(const std::vector<Partition>& ps, int N) {
  std::size_t n = ps.size();
  std::vector<std::vector<bigint>> gram(n, std::vector<bigint>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      bigint v = boost::multiprecision::pow(bigint(N), join_block_count(ps[i], ps[j]));
      gram[i][j] = v;
      gram[j][i] = v;
    }
  return bareiss_rank(std::move(gram));
}

MorDim mor_dimension(const Category& cat, const Word& w, const Word& wp, int N) {
  auto members = enumerate_members(cat, w, wp);
  MorDim out;
  out.count = members.size();
  out.rank = tp_span_rank(members, N);
  return out;
}

}  // namespace ncp
