#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncp/partition.hpp"

namespace ncp {

struct ClosureConfig {
  int point_budget = 12;     // max total points per stored partition
  int iteration_cap = 64;    // max fixpoint rounds
  std::size_t member_cap = 2000000;  // safety valve; closure flagged truncated if hit
  int threads = 1;           // worker threads per round
  unsigned shuffle_seed = 0; // nonzero: shuffle per-round work order
  bool full_sub_extraction = true;  // inject one-line full-subpartition extractions
};

enum class OpKind : std::uint8_t {
  generator,
  base,       // empty partition / colour identities
  tensor,
  compose,
  involute,
  rotate,
  conjugate,
  extracted,  // full-subpartition extraction q*q from a member
  implied,    // registered on abstract grounds; premises in args
};

struct Trace {
  OpKind op = OpKind::base;
  std::uint32_t a = 0, b = 0;  // member indices of the arguments
  std::uint8_t side = 0, dir = 0;  // rotate parameters (0 = left/up, 1 = right/down)
  std::string note;            // rule name for implied members
};

// Heterogeneous string hashing so lookups can take string_view without copying.
struct KeyHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};
using KeyIndex = std::unordered_map<std::string, std::uint32_t, KeyHash, std::equal_to<>>;

// A generator set together with its bounded closure under the category
// operations, with a derivation trace per member.
struct Category {
  ColourSet cs;
  std::vector<Partition> generators;
  ClosureConfig cfg;
  bool truncated = false;  // member_cap or iteration_cap hit: closure incomplete

  std::vector<std::string> keys;   // member canonical keys, in insertion order
  std::vector<Trace> traces;       // parallel to keys
  KeyIndex index;

  bool has(const Partition& p) const { return index.count(partition_key(p)) > 0; }
  std::size_t size() const { return keys.size(); }
  Partition member(std::uint32_t i) const { return partition_from_key(keys[i]); }

  // Registers p as a member on abstract grounds, recording the rule name and
  // premise members in its trace. No-op if already present.
  void register_implied(const Partition& p, const std::string& rule,
                        const std::vector<Partition>& premises);
};

enum class Verdict { YES, NO, NO_UP_TO_BOUND };

struct Membership {
  Verdict verdict = Verdict::NO_UP_TO_BOUND;
  std::vector<std::string> witness;  // replayable derivation script when YES
  int bound = 0;                     // point budget in force for the query
  bool yes() const { return verdict == Verdict::YES; }
};

struct ProjectiveInfo {
  Partition p;
  int t = 0;          // through-block count
  Partition half;     // upper half of the through-block cut, in P(w, c^t)
};

Category closure_generate(const ColourSet& cs, const std::vector<Partition>& gens,
                          const ClosureConfig& cfg);

Membership contains(const Category& cat, const Partition& p);

// All members with the given row words, in canonical (key) order.
std::vector<Partition> enumerate_members(const Category& cat, const Word& w, const Word& wp);

ProjectiveInfo projective_info(const Partition& p, const ColourSet& cs);

std::vector<ProjectiveInfo> projectives(const Category& cat, const Word& w);

// Equivalence of projective members: searches for r with r*r = p, rr* = q.
// Distinct through-block counts give a definitive NO.
Membership is_equivalent(const Category& cat, const ProjectiveInfo& p, const ProjectiveInfo& q);

// Every contiguous (in the cyclic boundary order) union of blocks of p, laid
// out on one line, paired with its extraction involute(q) . q.
std::vector<std::pair<Partition, Partition>> full_subpartitions(const Partition& p,
                                                                const ColourSet& cs);

// Repeatedly deletes adjacent mutually-inverse letter pairs; confluent.
Word reduce_alternating(const Word& w, const ColourSet& cs);
// Word of a one-line partition (empty row required on one side), reduced.
Word reduce_alternating(const Partition& one_line, const ColourSet& cs);

// Replayable script deriving a member from the generators, in topological
// order: lines "p<i> := <op> ..." ending with the queried member.
std::vector<std::string> derivation_trace(const Category& cat, const Partition& p);

// Sorted member literals; byte-identical across closure schedules.
std::vector<std::string> closure_dump(const Category& cat);

// Generator file format: first line "colours=<decl>", then one partition
// literal per line. '#' starts a comment.
std::pair<ColourSet, std::vector<Partition>> read_generator_file(const std::string& path);

// Executes a derivation script and returns the final partition. "implied"
// lines are accepted only when check_ops is false; with check_ops true the
// script must consist of generator, base, extract and operation lines, and the
// extract lines are verified against the parent's extraction list.
Partition replay_trace(const std::vector<std::string>& script, const ColourSet& cs,
                       bool check_ops = true);

}  // namespace ncp
