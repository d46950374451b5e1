#include "ncp/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ncp {
namespace {

Word xy_power(int k) {
  Word w;
  for (int i = 0; i < k; ++i) w += "xy";
  return w;
}

bool purely(const Word& w, char c) {
  return std::all_of(w.begin(), w.end(), [c](char ch) { return ch == c; });
}

std::vector<Partition> swap_colours(const std::vector<Partition>& gens) {
  std::vector<Partition> out;
  for (const auto& g : gens) {
    auto flip = [](Word w) {
      for (char& c : w) c = (c == 'x') ? 'y' : 'x';
      return w;
    };
    out.push_back(make_partition(flip(g.up), flip(g.low), g.blocks));
  }
  return out;
}

}  // namespace

BlockProfile block_profile(const Category& cat) {
  BlockProfile prof;
  for (const auto& key : cat.keys) {
    Partition p = partition_from_key(key);
    bool only_x = !p.up.empty() || !p.low.empty() ? purely(p.up, 'x') && purely(p.low, 'x') : false;
    bool only_y = !p.up.empty() || !p.low.empty() ? purely(p.up, 'y') && purely(p.low, 'y') : false;
    OneColourProfile* oc = only_x ? &prof.cx : only_y ? &prof.cy : nullptr;
    if (oc) oc->any_member = true;
    for (size_t bi = 0; bi < p.blocks.size(); ++bi) {
      const auto& b = p.blocks[bi];
      int sz = static_cast<int>(b.size());
      prof.max_block_size = std::max(prof.max_block_size, sz);
      if (sz != 2) prof.all_pairs = false;
      if (sz % 2 != 0) prof.all_even = false;
      if (sz == 1) prof.singleton_present = true;
      if (sz % 2 == 1 && sz >= 3) prof.has_odd_ge3 = true;
      bool has_x = false, has_y = false;
      for (int pt : b) (p.colour_of(pt) == 'x' ? has_x : has_y) = true;
      if (has_x && has_y) prof.two_coloured_block_present = true;
      if (sz == 2 && has_x && has_y && p.is_upper(b[0]) == p.is_upper(b[1]))
        prof.d_xy_block_present = true;
      if (oc) {
        oc->max_block = std::max(oc->max_block, sz);
        if (sz == 1) oc->singleton = true;
        if (sz % 2 != 0) oc->all_even = false;
        if (sz % 2 == 1 && sz >= 3) oc->odd_ge3 = true;
      }
    }
  }
  return prof;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SINGLE_COLOUR: return "SINGLE_COLOUR";
    case Family::FREE_PRODUCT: return "FREE_PRODUCT";
    case Family::O_PLUS_PLUS: return "O_PLUS_PLUS";
    case Family::B_PLUS_PLUS: return "B_PLUS_PLUS";
    case Family::B_SHARP_TYPE: return "B_SHARP_TYPE";
    case Family::EVEN_WREATH: return "EVEN_WREATH";
    case Family::ODD_WREATH: return "ODD_WREATH";
    case Family::FREE_PRODUCT_WITH_RELATIONS: return "FREE_PRODUCT_WITH_RELATIONS";
    case Family::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string factor_name(EasyFactor f) {
  switch (f) {
    case EasyFactor::O_PLUS: return "O+";
    case EasyFactor::B_PLUS: return "B+";
    case EasyFactor::B_PLUS_SHARP: return "B+#";
    case EasyFactor::B_PLUS_PRIME: return "B+'";
    case EasyFactor::H_PLUS: return "H+";
    case EasyFactor::S_PLUS: return "S+";
    case EasyFactor::S_PLUS_PRIME: return "S+'";
    case EasyFactor::UNKNOWN: return "UNKNOWN";
  }
  return "UNKNOWN";
}

EasyFactor classify_orthogonal_easy(const Category& cat, char c) {
  Word cw(1, c);
  bool big = false, sing = false, all_even = true;
  for (const auto& key : cat.keys) {
    Partition p = partition_from_key(key);
    if (p.points() == 0 || !purely(p.up, c) || !purely(p.low, c)) continue;
    for (const auto& b : p.blocks) {
      if (b.size() >= 3) big = true;
      if (b.size() == 1) sing = true;
      if (b.size() % 2 != 0) all_even = false;
    }
  }
  Partition point = singleton_word(cw);
  Partition dbl = singleton_word(cw + cw);
  if (!big) {
    if (!sing) return EasyFactor::O_PLUS;
    if (cat.has(point)) return EasyFactor::B_PLUS;
    Partition central =
        tensor(tensor(point, identity_word(cw + cw)), point);  // singleton jumping a double string
    if (cat.has(central)) return EasyFactor::B_PLUS_PRIME;
    if (cat.has(dbl)) return EasyFactor::B_PLUS_SHARP;
    return EasyFactor::UNKNOWN;
  }
  if (all_even) return sing ? EasyFactor::UNKNOWN : EasyFactor::H_PLUS;
  if (cat.has(point)) return EasyFactor::S_PLUS;
  if (cat.has(dbl)) return EasyFactor::S_PLUS_PRIME;
  return EasyFactor::UNKNOWN;
}

Membership commutation_witness(const Category& cat, const Word& t_class,
                               const ProjectiveInfo& rep) {
  Partition left = singleton_word(t_class);
  Partition right = singleton_word(cat.cs.reverse_invert(t_class));
  return contains(cat, tensor(tensor(left, rep.p), right));
}

QkDetection detect_qk(Category& cat, int k_max) {
  QkDetection det;
  for (int k = 1; k <= k_max; ++k) {
    if (2 * (2 * k + 1) > cat.cfg.point_budget) break;
    if (cat.has(q_k(k))) det.direct.push_back(k);
  }
  if (det.direct.empty()) return det;
  det.k0 = det.direct.front();
  for (int n = 1;; ++n) {
    int k = n * (det.k0 + 1) - 1;
    if (k > k_max) break;
    det.spectrum.push_back(k);
  }
  for (int k : det.direct)
    if (!std::binary_search(det.spectrum.begin(), det.spectrum.end(), k)) det.consistent = false;
  if (det.consistent) {
    Partition seed = q_k(det.k0);
    for (int k : det.spectrum) {
      Partition q = q_k(k);
      if (q.points() <= cat.cfg.point_budget && !cat.has(q))
        cat.register_implied(q, "qk-spectrum", {seed});
    }
  }
  return det;
}

namespace {

struct Probe {
  std::string claim;
  Partition part;
};

// Partitions whose presence shows the two colour restrictions interact beyond
// a free product.
std::vector<Probe> cross_colour_probes(const Category& cat) {
  std::vector<Probe> probes;
  auto comm = [&](const Word& t, const Word& reps) {
    Partition rep = identity_word(reps);
    return tensor(tensor(singleton_word(t), rep), singleton_word(cat.cs.reverse_invert(t)));
  };
  probes.push_back({"commutation x | yy", comm("x", "yy")});
  probes.push_back({"commutation y | xx", comm("y", "xx")});
  probes.push_back({"pi(xy,xy)", pi("xy", "xy")});
  probes.push_back({"pi(x,y)", pi("x", "y")});
  for (int k = 1; 2 * k <= cat.cfg.point_budget; ++k)
    probes.push_back({"beta((xy)^" + std::to_string(k) + ", empty)", beta(xy_power(k), "")});
  for (int k = 1; 2 * (2 * k + 1) <= cat.cfg.point_budget; ++k) {
    probes.push_back({"q_" + std::to_string(k), q_k(k)});
    probes.push_back({"p_" + std::to_string(k), p_k(k)});
  }
  return probes;
}

std::vector<Word> alternating_words(int max_len) {
  std::vector<Word> out{""};
  for (char start : {'x', 'y'})
    for (int len = 1; len <= max_len; ++len) {
      Word w;
      char c = start;
      for (int i = 0; i < len; ++i) {
        w += c;
        c = (c == 'x') ? 'y' : 'x';
      }
      out.push_back(w);
    }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() < b.size() || (a.size() == b.size() && a < b);
  });
  return out;
}

}  // namespace

ClassificationReport classify(const ColourSet& cs, const std::vector<Partition>& gens,
                              const ClosureConfig& cfg) {
  if (cs.letters != "xy" || cs.inverse('x') != 'x' || cs.inverse('y') != 'y')
    throw std::invalid_argument("classify requires the self-inverse colour set {x, y}");
  for (const auto& g : gens)
    if (!is_noncrossing(g))
      throw std::invalid_argument("crossing generator: " + format_partition(g));

  Category cat = closure_generate(cs, gens, cfg);
  BlockProfile prof = block_profile(cat);

  ClassificationReport r;
  r.budget = cfg.point_budget;
  if ((prof.cy.singleton || prof.cy.odd_ge3) && !(prof.cx.singleton || prof.cx.odd_ge3)) {
    r.colour_swapped = true;
    r.notes.push_back("colours relabelled so that x carries the singleton / odd block");
    cat = closure_generate(cs, swap_colours(gens), cfg);
    prof = block_profile(cat);
  }
  if (cat.truncated) r.notes.push_back("closure truncated: caps hit before the fixpoint");

  auto claim_yes = [&](const std::string& claim, const Partition& w) {
    r.witnesses.emplace_back(claim, derivation_trace(cat, w));
    r.confidence[claim] = Confidence::EXACT;
  };
  auto claim_bound = [&](const std::string& claim) {
    r.confidence[claim] = Confidence::UP_TO_BOUND;
  };
  auto minimality_confidence = [&](const std::string& claim, bool is_least_possible) {
    r.confidence[claim] = is_least_possible ? Confidence::EXACT : Confidence::UP_TO_BOUND;
  };

  // (0) colours identified?
  if (cat.has(pi("x", "y"))) {
    r.family = Family::SINGLE_COLOUR;
    claim_yes("pi(x,y) member", pi("x", "y"));
    std::vector<Partition> merged;
    for (const auto& g : gens) {
      Word up = g.up, low = g.low;
      for (char& c : up) c = 'x';
      for (char& c : low) c = 'x';
      merged.push_back(make_partition(up, low, g.blocks));
    }
    Category mcat = closure_generate(ColourSet::self_inverse("x"), merged, cfg);
    r.factors.push_back(factor_name(classify_orthogonal_easy(mcat, 'x')));
    claim_bound("single-colour factor");
    return r;
  }

  // cross-colour interaction evidence beyond tensor products
  std::vector<Probe> found_cross;
  if (!prof.two_coloured_block_present) {
    for (auto& probe : cross_colour_probes(cat))
      if (cat.has(probe.part)) found_cross.push_back(probe);
  }

  // (1) pair case
  if (prof.all_pairs) {
    r.group = grouplike_group(cat, prof);
    if (!prof.two_coloured_block_present && found_cross.empty()) {
      r.family = Family::FREE_PRODUCT;
      r.factors = {factor_name(classify_orthogonal_easy(cat, 'x')),
                   factor_name(classify_orthogonal_easy(cat, 'y'))};
      claim_bound("free product");
      return r;
    }
    r.family = Family::O_PLUS_PLUS;
    int k = order_of_s(cat);
    r.params["k"] = k;
    minimality_confidence("k", k == 1);
    for (const auto& rel : r.group.relations) claim_yes(rel.name, rel.witness);
    return r;
  }

  // (2) blocks of size at most 2 with singletons
  if (prof.max_block_size <= 2) {
    r.group = grouplike_group(cat, prof);
    for (const auto& rel : r.group.relations) claim_yes(rel.name, rel.witness);
    if (prof.d_xy_block_present) {
      r.family = Family::B_PLUS_PLUS;
      int max_t = (cfg.point_budget - 4) / 2;
      for (const Word& t : alternating_words(max_t)) {
        Partition core = tensor(pi("x", "y"), pi("x", "y"));
        Partition w1 = tensor(tensor(singleton_word(t), core),
                              singleton_word(cs.reverse_invert(t)));
        Partition w2 = tensor(tensor(singleton_word(t), core), involute(singleton_word(t)));
        if (w1.points() > cfg.point_budget) continue;
        if (cat.has(w1) || cat.has(w2)) {
          r.coset_words.push_back(t);
          claim_yes("coset word \"" + t + "\"", cat.has(w1) ? w1 : w2);
        }
      }
      int d = minimal_d(cat);
      r.params["d"] = d;
      minimality_confidence("d", d == 1);
      claim_bound("coset K (extensional, up to bound)");
      return r;
    }
    if (!found_cross.empty() || prof.two_coloured_block_present) {
      r.family = Family::B_SHARP_TYPE;
      for (const auto& probe : found_cross) claim_yes(probe.claim, probe.part);
      int d = minimal_d(cat), n = minimal_n(cat), m = minimal_m(cat);
      r.params["d"] = d;
      r.params["n"] = n;
      r.params["m"] = m;
      claim_bound("(d, n, m) parameters");
      return r;
    }
    r.family = Family::FREE_PRODUCT;
    r.factors = {factor_name(classify_orthogonal_easy(cat, 'x')),
                 factor_name(classify_orthogonal_easy(cat, 'y'))};
    claim_bound("free product");
    return r;
  }

  // (3) even case: a block of size >= 4, everything even
  if (prof.all_even) {
    r.group = grouplike_group(cat, prof);
    if (!prof.two_coloured_block_present && found_cross.empty()) {
      r.family = Family::FREE_PRODUCT;
      r.factors = {factor_name(classify_orthogonal_easy(cat, 'x')),
                   factor_name(classify_orthogonal_easy(cat, 'y'))};
      claim_bound("free product");
      return r;
    }
    r.family = Family::EVEN_WREATH;
    int d = minimal_d(cat), n = minimal_n(cat);
    r.params["d"] = d;
    r.params["n"] = n;
    minimality_confidence("d", d == 1);
    minimality_confidence("n", n == 1);
    if (d > 0) claim_yes("beta((xy)^d, empty) member", beta(xy_power(d), ""));
    if (n > 0) claim_yes("beta((xy)^n, (xy)^n) member", beta_gamma(xy_power(n)));
    if (n > 0 && d > 0 && d % n != 0)
      r.notes.push_back("divisibility n | d violated; closure bound too small");
    return r;
  }

  // (4) odd case
  r.group = grouplike_group(cat, prof);
  if (prof.two_coloured_block_present) {
    r.family = Family::ODD_WREATH;
    int d = minimal_d(cat), n = minimal_n(cat), m = minimal_m(cat);
    r.params["d"] = d;
    r.params["n"] = n;
    r.params["m"] = m;
    minimality_confidence("d", d == 1);
    minimality_confidence("n", n == 1);
    minimality_confidence("m", m == 0);
    // After normalization x carries the odd blocks, so P_xx must be present.
    // P_yy only belongs to the category when s_y survives in the subgroup of
    // one-dimensional representations, so its absence is not an error.
    std::vector<std::pair<std::string, Partition>> expected;
    expected.emplace_back("P_xx member", singleton_word("xx"));
    expected.emplace_back("pi(xy,xy) member", pi("xy", "xy"));
    for (const auto& [claim, part] : expected) {
      if (cat.has(part))
        claim_yes(claim, part);
      else
        r.notes.push_back("expected member missing: " + claim);
    }
    if (cat.has(singleton_word("yy"))) claim_yes("P_yy member", singleton_word("yy"));
    if (n > 0 && d > 0 && d % n != 0)
      r.notes.push_back("divisibility n | d violated; closure bound too small");
    return r;
  }
  r.family = Family::FREE_PRODUCT_WITH_RELATIONS;
  r.factors = {factor_name(classify_orthogonal_easy(cat, 'x')),
               factor_name(classify_orthogonal_easy(cat, 'y'))};
  QkDetection det = detect_qk(cat, 8);
  r.params["k0"] = det.k0;
  if (!det.consistent) r.notes.push_back("q_k findings violate the spectrum law; bound too small");
  for (int k : det.direct) claim_yes("q_" + std::to_string(k) + " member", q_k(k));
  for (const auto& probe : found_cross) claim_yes(probe.claim, probe.part);
  claim_bound("factor pair and relation list");
  return r;
}

std::string report_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["family"] = family_name(r.family);
  j["budget"] = r.budget;
  j["colour_swapped"] = r.colour_swapped;
  j["params"] = r.params;
  j["coset_words"] = r.coset_words;
  j["factors"] = r.factors;
  j["group"] = r.group.serialize();
  nlohmann::json w = nlohmann::json::array();
  for (const auto& [claim, trace] : r.witnesses) w.push_back({{"claim", claim}, {"trace", trace}});
  j["witnesses"] = w;
  nlohmann::json c;
  for (const auto& [claim, conf] : r.confidence)
    c[claim] = conf == Confidence::EXACT ? "EXACT" : "UP_TO_BOUND";
  j["confidence"] = c;
  j["notes"] = r.notes;
  return j.dump(2);
}

}  // namespace ncp
