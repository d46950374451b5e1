#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncp/category.hpp"
#include "ncp/grouplike.hpp"
#include "ncp/profile.hpp"

namespace ncp {

enum class Family {
  SINGLE_COLOUR,          // both colours identified; one orthogonal easy factor
  FREE_PRODUCT,           // free product of two one-colour easy factors
  O_PLUS_PLUS,            // pair case with a two-coloured block; parameter k
  B_PLUS_PLUS,            // pair-with-singleton case with a two-point mixed block; coset K
  B_SHARP_TYPE,           // pair-with-singleton case with cross-colour commutation only
  EVEN_WREATH,            // even case; parameters (d, n)
  ODD_WREATH,             // odd case with a two-coloured block; parameters (d, n, m)
  FREE_PRODUCT_WITH_RELATIONS,  // odd case without a two-coloured block
  UNKNOWN,
};
std::string family_name(Family f);

enum class EasyFactor { O_PLUS, B_PLUS, B_PLUS_SHARP, B_PLUS_PRIME, H_PLUS, S_PLUS, S_PLUS_PRIME, UNKNOWN };
std::string factor_name(EasyFactor f);

enum class Confidence { EXACT, UP_TO_BOUND };

struct ClassificationReport {
  Family family = Family::UNKNOWN;
  std::map<std::string, int> params;            // k / d / n / m as applicable
  std::vector<std::string> coset_words;         // K, as reduced words ("" = identity)
  std::vector<std::string> factors;             // factor names for product families
  std::vector<std::pair<std::string, std::vector<std::string>>> witnesses;  // claim -> trace
  std::map<std::string, Confidence> confidence; // per-claim confidence
  GroupLikePresentation group;
  int budget = 0;
  bool colour_swapped = false;  // colours relabelled so x carries the singleton/odd block
  std::vector<std::string> notes;
};

std::string report_json(const ClassificationReport& r);

// Decides which one-colour noncrossing easy family the colour-c membership
// profile of cat matches.
EasyFactor classify_orthogonal_easy(const Category& cat, char c);

// Full decision tree for generator sets over the self-inverse colours {x, y}.
ClassificationReport classify(const ColourSet& cs, const std::vector<Partition>& gens,
                              const ClosureConfig& cfg);

struct QkDetection {
  std::vector<int> direct;    // k with q_k found in the closure itself
  std::vector<int> spectrum;  // arithmetic-progression law applied to min(direct)
  int k0 = 0;                 // 0 when nothing found
  bool consistent = true;     // direct findings obey the law
};

// Probes membership of q_k for k <= k_max, infers k_0 and the law-projected
// spectrum, and registers law-implied members within budget.
QkDetection detect_qk(Category& cat, int k_max);

// YES iff the partition P_t (x) rep (x) conjugate(involute(P_t)) is a member,
// which encodes commutation of the class word t with the representation of
// the projective rep.
Membership commutation_witness(const Category& cat, const Word& t_class,
                               const ProjectiveInfo& rep);

}  // namespace ncp
