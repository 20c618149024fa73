#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcg/barrier.hpp"
#include "mcg/canonical.hpp"
#include "mcg/family.hpp"
#include "mcg/matching.hpp"
#include "mcg/multigraph.hpp"
#include "mcg/recognize.hpp"
#include "mcg/structure.hpp"
#include "mcg/tightcut.hpp"

namespace {

using nlohmann::json;

struct Options {
  int max_barrier_size = 3;
  int exhaustive_threshold = 16;
  unsigned long long seed = 0;
  int jobs = 1;
  bool as_json = false;
};

// exit 0: completed, property satisfied; 1: property falsified; 2: bad input
struct Report {
  std::string command;
  std::string input;
  std::string digest;
  unsigned long long seed = 0;
  std::vector<std::pair<std::string, json>> findings;
  int exit_code = 0;
  std::string extra_text;  // appended verbatim in text mode (decomposition tree)

  void add(const std::string& key, json value) { findings.emplace_back(key, std::move(value)); }

  std::string text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "input: " << input << "\n";
    out << "digest: " << digest << "\n";
    out << "seed: " << seed << "\n";
    for (const auto& [k, v] : findings) {
      out << k << ": ";
      if (v.is_string())
        out << v.get<std::string>();
      else
        out << v.dump();
      out << "\n";
    }
    if (!extra_text.empty()) out << extra_text;
    out << "exit: " << exit_code << "\n";
    return out.str();
  }

  std::string to_json() const {
    json j;
    j["schema"] = "mcg-report/1";
    j["command"] = command;
    j["input"] = input;
    j["digest"] = digest;
    j["seed"] = seed;
    json f = json::object();
    for (const auto& [k, v] : findings) f[k] = v;
    j["findings"] = f;
    j["exit"] = exit_code;
    return j.dump();
  }
};

std::string join_ids(const std::vector<int>& ids) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
  out << "]";
  return out.str();
}

Report analyze_one(const std::string& path, const Options& opt) {
  Report rep;
  rep.command = "analyze " + path;
  rep.input = path;
  rep.seed = opt.seed;
  mcg::MultiGraph g = mcg::read_mg_file(path);
  rep.digest = mcg::digest_hex(g);
  rep.add("n", g.vertex_count());
  rep.add("m", g.edge_count());
  bool connected = mcg::is_connected(g);
  rep.add("connected", connected);
  rep.add("claw_free", mcg::is_claw_free(g));
  bool mc = mcg::is_matching_covered(g);
  rep.add("matching_covered", mc);
  if (!mc) {
    if (auto e = mcg::first_inadmissible(g))
      rep.add("inadmissible_edge", *e);
  }
  if (g.vertex_count() >= 4 && mcg::has_perfect_matching(g))
    rep.add("bicritical", mcg::is_bicritical(g));
  if (mc) {
    auto re = mcg::removable_edges(g);
    rep.add("removable_count", static_cast<int>(re.size()));
    rep.add("removable", join_ids(re));
  }
  if (mcg::has_perfect_matching(g)) {
    mcg::BarrierScanOptions bopts;
    if (g.vertex_count() <= bopts.vertex_ceiling) {
      auto barriers = mcg::all_barriers(g, opt.max_barrier_size, bopts);
      rep.add("barrier_scan_max_size", opt.max_barrier_size);
      rep.add("barrier_count", static_cast<int>(barriers.size()));
      std::ostringstream bs;
      bs << "[";
      for (std::size_t i = 0; i < barriers.size(); ++i)
        bs << (i ? " " : "") << join_ids(barriers[i].vertices);
      bs << "]";
      rep.add("barriers", bs.str());
    } else {
      rep.add("barrier_scan", "skipped (vertex ceiling)");
    }
  }
  rep.exit_code = mc ? 0 : 1;
  return rep;
}

Report decompose_one(const std::string& path, const Options& opt) {
  Report rep;
  rep.command = "decompose " + path;
  rep.input = path;
  rep.seed = opt.seed;
  mcg::MultiGraph g = mcg::read_mg_file(path);
  rep.digest = mcg::digest_hex(g);
  mcg::TightCutOptions topts;
  topts.exhaustive_threshold = opt.exhaustive_threshold;
  auto tree = mcg::decompose(g, static_cast<unsigned>(opt.seed), topts);
  rep.add("bricks", tree.brick_count);
  rep.add("braces", tree.brace_count);
  rep.add("b_star", tree.b_star);
  rep.add("leaf_orders", join_ids(tree.leaf_orders));
  if (opt.as_json) {
    rep.add("decomposition", json::parse(mcg::decomposition_json(tree)));
  } else {
    rep.extra_text = mcg::decomposition_text(tree);
  }
  rep.exit_code = 0;
  return rep;
}

Report recognize_one(const std::string& path, const Options& opt) {
  Report rep;
  rep.command = "recognize " + path;
  rep.input = path;
  rep.seed = opt.seed;
  mcg::MultiGraph g = mcg::read_mg_file(path);
  rep.digest = mcg::digest_hex(g);
  auto res = mcg::recognize(g);
  rep.add("verdict", mcg::verdict_name(res.verdict));
  rep.add("removable_count", static_cast<int>(res.oracle_removable.size()));
  rep.add("removable", join_ids(res.oracle_removable));
  if (res.certificate) rep.add("certificate", mcg::to_sexpr(*res.certificate));
  if (res.failure_witness) {
    rep.add("witness_kind", res.failure_witness->kind);
    if (!res.failure_witness->vertices.empty())
      rep.add("witness_vertices", join_ids(res.failure_witness->vertices));
    if (res.failure_witness->edge >= 0) rep.add("witness_edge", res.failure_witness->edge);
  }
  if (!res.diagnostic.empty()) rep.add("diagnostic", res.diagnostic);
  bool minimal = res.verdict == mcg::Verdict::MinimalSpecial ||
                 res.verdict == mcg::Verdict::MinimalWithCertificate;
  rep.exit_code = minimal ? 0 : 1;
  return rep;
}

Report verify_thm13_one(const std::string& path, const Options& opt) {
  Report rep;
  rep.command = "verify-thm13 " + path;
  rep.input = path;
  rep.seed = opt.seed;
  mcg::MultiGraph g = mcg::read_mg_file(path);
  rep.digest = mcg::digest_hex(g);
  auto r = mcg::verify_thm13(g);
  rep.add("minimal", r.minimal);
  rep.add("b_star", r.b_star);
  rep.add("leaf_orders", join_ids(r.leaf_orders));
  rep.add("re_count", r.re_count);
  rep.add("sum_ni", r.sum_ni);
  rep.add("equality_ok", r.equality_ok);
  rep.add("bound_ok", r.bound_ok);
  rep.exit_code = (r.equality_ok && r.bound_ok) ? 0 : 1;
  return rep;
}

int run_batch(const std::vector<std::string>& files, const Options& opt,
              Report (*runner)(const std::string&, const Options&)) {
  int count = static_cast<int>(files.size());
  std::vector<std::string> outputs(count);
  std::vector<int> codes(count, 0);
#ifdef _OPENMP
  omp_set_num_threads(std::max(1, opt.jobs));
#endif
#pragma omp parallel for schedule(dynamic) if (opt.jobs > 1)
  for (int i = 0; i < count; ++i) {
    try {
      Report rep = runner(files[i], opt);
      outputs[i] = opt.as_json ? rep.to_json() + "\n" : rep.text();
      codes[i] = rep.exit_code;
    } catch (const std::exception& ex) {
      outputs[i] = "";
      codes[i] = 2;
      std::string msg = "mcg: " + files[i] + ": " + ex.what() + "\n";
#pragma omp critical
      std::cerr << msg;
    }
  }
  int exit_code = 0;
  for (int i = 0; i < count; ++i) {
    if (i && !opt.as_json && !outputs[i].empty()) std::cout << "\n";
    std::cout << outputs[i];
    exit_code = std::max(exit_code, codes[i]);
  }
  return exit_code;
}

std::string family_tag(mcg::Family f) {
  switch (f) {
    case mcg::Family::G:
      return "g";
    case mcg::Family::F:
      return "f";
    case mcg::Family::ExpansionsOfF:
      return "xf";
  }
  return "?";
}

int run_generate(const std::string& family_name, int max_n, const std::string& out_dir,
                 int count, const Options& opt) {
  mcg::Family family;
  if (family_name == "g")
    family = mcg::Family::G;
  else if (family_name == "f")
    family = mcg::Family::F;
  else if (family_name == "xf" || family_name == "expansions")
    family = mcg::Family::ExpansionsOfF;
  else {
    std::cerr << "mcg: unknown family '" << family_name << "' (use g, f, or xf)\n";
    return 2;
  }
  mcg::FamilyOptions fopts;
  fopts.exhaustive_threshold = std::min(opt.exhaustive_threshold, 14);
  if (count > 0) fopts.sample_count = count;
  auto members = mcg::generate_family(family, max_n, opt.seed, fopts);

  std::filesystem::create_directories(out_dir);
  json index = json::array();
  int idx = 0;
  for (const auto& [recipe, graph] : members) {
    std::ostringstream base;
    base << family_tag(family) << "_" << std::setw(3) << std::setfill('0') << idx;
    std::string mg_name = base.str() + ".mg";
    std::string recipe_name = base.str() + ".recipe";
    mcg::write_mg_file(graph, out_dir + "/" + mg_name);
    std::ofstream rf(out_dir + "/" + recipe_name);
    rf << mcg::to_sexpr(recipe) << "\n";
    json entry;
    entry["file"] = mg_name;
    entry["recipe_file"] = recipe_name;
    entry["recipe"] = mcg::to_sexpr(recipe);
    entry["n"] = graph.vertex_count();
    entry["m"] = graph.edge_count();
    entry["digest"] = mcg::digest_hex(graph);
    index.push_back(entry);
    ++idx;
  }
  std::ofstream ixf(out_dir + "/index.json");
  ixf << index.dump(2) << "\n";

  Report rep;
  rep.command = "generate " + family_name + " " + std::to_string(max_n);
  rep.input = family_name;
  rep.digest = "-";
  rep.seed = opt.seed;
  rep.add("family", family_name);
  rep.add("max_n", max_n);
  rep.add("count", idx);
  rep.add("out_dir", out_dir);
  rep.exit_code = 0;
  std::cout << (opt.as_json ? rep.to_json() + "\n" : rep.text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure tool for matching covered graphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--max-barrier-size", opt.max_barrier_size,
                 "largest barrier size listed by analyze (default 3)");
  app.add_option("--exhaustive-threshold", opt.exhaustive_threshold,
                 "vertex bound for exhaustive scans (default 16)");
  app.add_option("--seed", opt.seed, "seed echoed in reports; permutes decompose tie-breaking");
  app.add_option("--jobs", opt.jobs, "parallel fan-out over input files (default 1)");
  app.add_flag("--json", opt.as_json, "emit one JSON report per input");

  std::vector<std::string> files;
  auto* analyze = app.add_subcommand("analyze", "structural predicates and removable edges");
  analyze->add_option("files", files, "input .mg files")->required();
  auto* decomp = app.add_subcommand("decompose", "tight cut decomposition into bricks/braces");
  decomp->add_option("files", files, "input .mg files")->required();
  auto* recog = app.add_subcommand("recognize",
                                   "claw-free minimal matching covered recognition");
  recog->add_option("files", files, "input .mg files")->required();
  auto* thm = app.add_subcommand("verify-thm13",
                                 "removable-edge count accounting for cubic claw-free inputs");
  thm->add_option("files", files, "input .mg files")->required();

  std::string family_name;
  int max_n = 8;
  int count = 0;
  std::string out_dir = "generated";
  auto* gen = app.add_subcommand("generate", "emit family members as .mg + recipe files");
  gen->add_option("family", family_name, "g, f, or xf (expansions of f)")->required();
  gen->add_option("max_n", max_n, "largest vertex count")->required();
  gen->add_option("--out", out_dir, "output directory (default ./generated)");
  gen->add_option("--count", count, "sampled member budget beyond the exhaustive range");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_batch(files, opt, analyze_one);
    if (*decomp) return run_batch(files, opt, decompose_one);
    if (*recog) return run_batch(files, opt, recognize_one);
    if (*thm) return run_batch(files, opt, verify_thm13_one);
    if (*gen) return run_generate(family_name, max_n, out_dir, count, opt);
  } catch (const std::exception& ex) {
    std::cerr << "mcg: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
