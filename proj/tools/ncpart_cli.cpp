#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncp/category.hpp"
#include "ncp/classifier.hpp"
#include "ncp/grouplike.hpp"
#include "ncp/linmap.hpp"
#include "ncp/partition.hpp"

namespace {

using namespace ncp;

nlohmann::json partition_json(const Partition& p) {
  nlohmann::json j;
  j["up"] = p.up;
  j["low"] = p.low;
  auto blocks = nlohmann::json::array();
  for (const auto& b : p.blocks) {
    auto blk = nlohmann::json::array();
    for (int pt : b)
      blk.push_back(p.is_upper(pt) ? "u" + std::to_string(pt + 1)
                                   : "l" + std::to_string(pt - p.upper_size() + 1));
    blocks.push_back(blk);
  }
  j["blocks"] = blocks;
  return j;
}

Partition parse_any(const std::string& text, const ColourSet& cs) {
  if (!text.empty() && text.front() == '{') {
    auto j = nlohmann::json::parse(text);
    Word up = j.at("up").get<std::string>(), low = j.at("low").get<std::string>();
    cs.validate_word(up);
    cs.validate_word(low);
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) {
      std::vector<int> b;
      for (const auto& lab : blk) {
        std::string s = lab.get<std::string>();
        int idx = std::stoi(s.substr(1));
        b.push_back(s[0] == 'u' ? idx - 1 : static_cast<int>(up.size()) + idx - 1);
      }
      blocks.push_back(std::move(b));
    }
    return make_partition(up, low, blocks);
  }
  return parse_partition(text, cs);
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"exact engine for two-colour noncrossing partition categories"};
  app.require_subcommand(1);

  std::string colours = "x:x,y:y";
  std::string format = "text";
  std::string out_path;
  int budget = 12;
  int threads = 1;
  unsigned seed = 0;
  app.add_option("--colours", colours, "colour set declaration, e.g. x:x,y:y");
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--budget", budget, "point budget for closures")->check(CLI::Range(4, 64));
  app.add_option("--threads", threads, "worker threads for closure generation");
  app.add_option("--seed", seed, "shuffle seed for the closure schedule (0 = in order)");

  auto* op = app.add_subcommand("op", "apply a single category operation");
  std::string op_name, op_side = "left", op_dir = "up";
  std::vector<std::string> op_args;
  op->add_option("name", op_name, "tensor|compose|involute|rotate|conjugate")->required();
  op->add_option("partitions", op_args, "partition literals")->required();
  op->add_option("--side", op_side)->check(CLI::IsMember({"left", "right"}));
  op->add_option("--dir", op_dir)->check(CLI::IsMember({"up", "down"}));

  auto* closure_cmd = app.add_subcommand("closure", "generate and dump a bounded closure");
  std::string genfile;
  closure_cmd->add_option("genfile", genfile, "generator file")->required();

  auto* member_cmd = app.add_subcommand("member", "membership query with derivation trace");
  std::string member_lit;
  member_cmd->add_option("genfile", genfile, "generator file")->required();
  member_cmd->add_option("partition", member_lit, "queried partition literal")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a generator set");
  classify_cmd->add_option("genfile", genfile, "generator file")->required();

  auto* tp_cmd = app.add_subcommand("tp", "print the 0/1 matrix of a partition");
  std::string tp_lit;
  int tp_n = 2;
  tp_cmd->add_option("partition", tp_lit)->required();
  tp_cmd->add_option("N", tp_n)->required()->check(CLI::Range(2, 1000));

  auto* mordim_cmd = app.add_subcommand("mordim", "count and rank of C(w, w') at dimension N");
  std::string mw, mwp;
  int mn = 4;
  mordim_cmd->add_option("genfile", genfile)->required();
  mordim_cmd->add_option("w", mw, "upper word (use - for the empty word)")->required();
  mordim_cmd->add_option("wp", mwp, "lower word (use - for the empty word)")->required();
  mordim_cmd->add_option("N", mn)->required()->check(CLI::Range(2, 1000));

  CLI11_PARSE(app, argc, argv);
  Output out{out_path};

  auto make_cfg = [&]() {
    ClosureConfig cfg;
    cfg.point_budget = budget;
    cfg.threads = threads;
    cfg.shuffle_seed = seed;
    return cfg;
  };

  if (op->parsed()) {
    ColourSet cs = ColourSet::parse(colours);
    std::vector<Partition> ps;
    for (const auto& a : op_args) ps.push_back(parse_any(a, cs));
    auto need = [&](size_t n) {
      if (ps.size() != n)
        throw std::invalid_argument("op " + op_name + " takes " + std::to_string(n) + " partition(s)");
    };
    Partition result = empty_partition();
    int loops = -1;
    if (op_name == "tensor") {
      need(2);
      result = tensor(ps[0], ps[1]);
    } else if (op_name == "compose") {
      need(2);
      auto res = compose(ps[0], ps[1]);
      result = res.part;
      loops = res.loops;
    } else if (op_name == "involute") {
      need(1);
      result = involute(ps[0]);
    } else if (op_name == "conjugate") {
      need(1);
      result = conjugate(ps[0], cs);
    } else if (op_name == "rotate") {
      need(1);
      result = rotate(ps[0], op_side == "right" ? Side::right : Side::left,
                      op_dir == "down" ? Dir::down : Dir::up, cs);
    } else {
      throw std::invalid_argument("unknown op: " + op_name);
    }
    std::string text;
    if (format == "json") {
      nlohmann::json j = partition_json(result);
      if (loops >= 0) j["loops"] = loops;
      text = j.dump(2) + "\n";
    } else {
      text = format_partition(result) + "\n";
      if (loops >= 0) text += "loops=" + std::to_string(loops) + "\n";
    }
    out.write(text);
    return 0;
  }

  if (closure_cmd->parsed()) {
    auto [cs, gens] = read_generator_file(genfile);
    Category cat = closure_generate(cs, gens, make_cfg());
    std::string text;
    if (format == "json") {
      nlohmann::json j;
      j["colours"] = cs.decl();
      j["budget"] = budget;
      j["truncated"] = cat.truncated;
      auto members = nlohmann::json::array();
      for (const auto& lit : closure_dump(cat)) members.push_back(lit);
      j["members"] = members;
      text = j.dump(2) + "\n";
    } else {
      text = "colours=" + cs.decl() + "\n";
      for (const auto& lit : closure_dump(cat)) text += lit + "\n";
    }
    out.write(text);
    return 0;
  }

  if (member_cmd->parsed()) {
    auto [cs, gens] = read_generator_file(genfile);
    Category cat = closure_generate(cs, gens, make_cfg());
    Partition p = parse_any(member_lit, cs);
    Membership m = contains(cat, p);
    std::string verdict = m.yes() ? "YES" : "NO_UP_TO_BOUND";
    std::string text;
    if (format == "json") {
      nlohmann::json j;
      j["verdict"] = verdict;
      j["bound"] = m.bound;
      j["trace"] = m.witness;
      text = j.dump(2) + "\n";
    } else {
      text = "verdict=" + verdict + " bound=" + std::to_string(m.bound) + "\n";
      for (const auto& line : m.witness) text += line + "\n";
    }
    out.write(text);
    return 0;
  }

  if (classify_cmd->parsed()) {
    auto [cs, gens] = read_generator_file(genfile);
    out.write(report_json(classify(cs, gens, make_cfg())) + "\n");
    return 0;
  }

  if (tp_cmd->parsed()) {
    ColourSet cs = ColourSet::parse(colours);
    Partition p = parse_any(tp_lit, cs);
    TpMatrix m = tp_matrix(p, tp_n);
    std::string text = "rows=" + std::to_string(m.rows) + " cols=" + std::to_string(m.cols) + "\n";
    for (const auto& [row, col] : m.nz)
      text += std::to_string(row) + " " + std::to_string(col) + " 1\n";
    out.write(text);
    return 0;
  }

  if (mordim_cmd->parsed()) {
    auto [cs, gens] = read_generator_file(genfile);
    Category cat = closure_generate(cs, gens, make_cfg());
    Word w = mw == "-" ? "" : mw, wp = mwp == "-" ? "" : mwp;
    MorDim dim = mor_dimension(cat, w, wp, mn);
    out.write("count=" + std::to_string(dim.count) + " rank=" + std::to_string(dim.rank) + "\n");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
