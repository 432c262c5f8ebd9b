// Batch front-end over the C API: solve, audit, generate, bench, table.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>
#include <chrono>

#include "CLI11.hpp"
#include "gmis/gmis.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitIdentity = 4;

int exit_code_of(int err) {
  switch (err) {
    case GMIS_OK: return kExitOk;
    case GMIS_ERR_PARSE:
    case GMIS_ERR_OUT_OF_RANGE:
    case GMIS_ERR_INVALID_ARGUMENT: return kExitInput;
    case GMIS_ERR_IDENTITY:
    case GMIS_ERR_INTERNAL: return kExitIdentity;
    default: return kExitConstraint;
  }
}

struct Failure {
  int code;
  std::string message;
};

void check(int err) {
  if (err != GMIS_OK) throw Failure{err, std::string(gmis_error_name(err)) + ": " + gmis_last_error()};
}

struct GraphDeleter {
  void operator()(gmis_graph* g) const { gmis_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gmis_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { gmis_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{GMIS_ERR_PARSE, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{GMIS_ERR_INVALID_ARGUMENT, "cannot write " + path.string()};
}

GraphPtr load_graph(const std::string& path) {
  std::string text = read_file(path);
  gmis_graph* g = nullptr;
  check(gmis_graph_parse(text.data(), text.size(), &g, nullptr));
  return GraphPtr(g);
}

int algo_id(const std::string& name) {
  int a = 0;
  check(gmis_algo_from_name(name.c_str(), &a));
  return a;
}

std::vector<int> solve(const gmis_graph* g, int algo) {
  std::vector<int> out(std::max(1, gmis_graph_n(g)));
  int size = 0;
  check(gmis_solve(g, algo, out.data(), &size));
  out.resize(size);
  return out;
}

// Whitespace-separated 1-based ids; lines starting with 'c' or '#' skipped.
std::vector<int> read_vertex_list(const std::string& path, int n) {
  std::istringstream in(read_file(path));
  std::vector<int> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      try {
        size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Failure{GMIS_ERR_PARSE, path + ": bad vertex id '" + tok + "'"};
      }
      if (v < 1 || v > n) throw Failure{GMIS_ERR_OUT_OF_RANGE, path + ": vertex " + tok + " out of range"};
      ids.push_back(v - 1);
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::string vertex_list(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += std::to_string(v + 1) + "\n";
  return out;
}

// DIMACS CNF: "p cnf V C", then clauses terminated by 0.
json read_cnf(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  int vars = -1;
  json clauses = json::array();
  std::vector<int> cur;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      int c = 0;
      if (!(ls >> fmt >> vars >> c) || fmt != "cnf") throw Failure{GMIS_ERR_PARSE, path + ": bad problem line"};
      continue;
    }
    if (vars < 0) throw Failure{GMIS_ERR_PARSE, path + ": clause before problem line"};
    std::istringstream all(line);
    int lit = 0;
    while (all >> lit) {
      if (lit == 0) {
        clauses.push_back(cur);
        cur.clear();
      } else {
        if (std::abs(lit) > vars) throw Failure{GMIS_ERR_OUT_OF_RANGE, path + ": literal out of range"};
        cur.push_back(lit);
      }
    }
    if (!all.eof()) throw Failure{GMIS_ERR_PARSE, path + ": bad literal"};
  }
  if (vars < 0) throw Failure{GMIS_ERR_PARSE, path + ": missing problem line"};
  if (!cur.empty()) clauses.push_back(cur);
  return {{"vars", vars}, {"clauses", clauses}};
}

uint64_t default_seed() {
  const char* env = std::getenv("GREEDY_MIS_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Failure{GMIS_ERR_INVALID_ARGUMENT, std::string("bad GREEDY_MIS_SEED '") + env + "'"};
  }
}

struct Fraction {
  int64_t num = 0, den = 1;
};

Fraction reduce(int64_t a, int64_t b) {
  int64_t g = std::gcd(a, b);
  return g ? Fraction{a / g, b / g} : Fraction{a, b};
}

std::string fraction_str(Fraction f) {
  return f.den == 1 ? std::to_string(f.num) : std::to_string(f.num) + "/" + std::to_string(f.den);
}

// Approximation ratio >= 1: α / size for independent sets, size / τ for covers.
std::optional<Fraction> ratio_of(bool cover, int n, int size, std::optional<int> alpha) {
  if (!alpha) return std::nullopt;
  if (cover) {
    int tau = n - *alpha;
    if (tau == 0) return size == 0 ? std::optional<Fraction>(Fraction{1, 1}) : std::nullopt;
    return reduce(size, tau);
  }
  if (size == 0) return *alpha == 0 ? std::optional<Fraction>(Fraction{1, 1}) : std::nullopt;
  return reduce(*alpha, size);
}

std::optional<int> oracle_alpha(const gmis_graph* g, int64_t max_nodes) {
  int alpha = 0;
  int err = gmis_exact_mis(g, max_nodes, &alpha, nullptr, nullptr);
  if (err == GMIS_ERR_BUDGET) return std::nullopt;
  check(err);
  return alpha;
}

// ---- solve ----

struct SolveArgs {
  std::string path, algo = "greedy-star", witness;
  bool oracle = false, timing = false;
  int64_t max_nodes = 0;
};

int cmd_solve(const SolveArgs& a) {
  auto g = load_graph(a.path);
  int algo = algo_id(a.algo);
  auto t0 = std::chrono::steady_clock::now();
  auto s = solve(g.get(), algo);
  auto t1 = std::chrono::steady_clock::now();
  json r{{"v", 1},
         {"type", "run"},
         {"instance", a.path},
         {"algo", a.algo},
         {"n", gmis_graph_n(g.get())},
         {"m", gmis_graph_m(g.get())},
         {"size", s.size()}};
  if (a.oracle) {
    auto alpha = oracle_alpha(g.get(), a.max_nodes);
    if (alpha) {
      r["alpha"] = *alpha;
      if (auto q = ratio_of(gmis_algo_is_cover(algo), gmis_graph_n(g.get()), s.size(), alpha))
        r["ratio"] = fraction_str(*q);
    }
  }
  if (a.timing) r["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (!a.witness.empty()) write_file(a.witness, vertex_list(s));
  std::cout << r.dump() << "\n";
  return kExitOk;
}

// ---- audit ----

struct AuditArgs {
  std::string path, algo = "greedy-star", independent_set, preset;
  std::vector<std::string> params;
  int delta = 3;
  bool duality = false;
};

int cmd_audit(const AuditArgs& a) {
  auto g = load_graph(a.path);
  int algo = algo_id(a.algo);
  std::string params;
  if (!a.params.empty()) {
    json p{{"gamma", a.params[0]}, {"sigma", a.params[1]}};
    try {
      p["delta"] = std::stoi(a.params[2]);
    } catch (const std::exception&) {
      throw Failure{GMIS_ERR_INVALID_ARGUMENT, "bad delta '" + a.params[2] + "'"};
    }
    params = p.dump();
  } else if (!a.preset.empty()) {
    params = json{{"preset", a.preset}, {"delta", a.delta}}.dump();
  }
  std::vector<int> black;
  bool have_black = !a.independent_set.empty();
  if (have_black) black = read_vertex_list(a.independent_set, gmis_graph_n(g.get()));
  char* out = nullptr;
  check(gmis_audit(g.get(), algo, have_black ? black.data() : nullptr, static_cast<int>(black.size()),
                   params.empty() ? nullptr : params.c_str(), &out));
  CString text(out);
  std::cout << text.get();
  if (a.duality) {
    char* d = nullptr;
    check(gmis_duality_audit(g.get(), have_black ? black.data() : nullptr, static_cast<int>(black.size()), &d));
    CString dj(d);
    json j = json::parse(dj.get());
    j["type"] = "duality";
    j.erase("records");
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

// ---- generate ----

struct GenArgs {
  std::string family, out = ".", name, kind = "subcubic", base = "h0p", input, cnf;
  int n = 0, delta = 3, groups = 0, i = 0, k = 4, count = 1;
  std::optional<uint64_t> seed;
  bool connected = false, no_oracles = false;
};

std::string default_name(const GenArgs& a, uint64_t seed) {
  const std::string& f = a.family;
  if (f == "random") return "random-" + a.kind + "-n" + std::to_string(a.n) + "-d" + std::to_string(a.delta) + "-s" +
                            std::to_string(seed);
  if (f == "hy") return "hy-" + a.base + "-i" + std::to_string(a.i);
  if (f == "delta-chain") return "delta-chain-d" + std::to_string(a.delta) + "-g" + std::to_string(a.groups);
  if (f == "hard-general") return "hard-general-k" + std::to_string(a.k);
  if (f == "hard-bipartite") return "hard-bipartite-g" + std::to_string(a.groups) + "-k" + std::to_string(a.k);
  if (f == "gadget") return "gadget-" + fs::path(a.input).stem().string();
  if (f == "sat-anchor") return "sat-anchor-" + fs::path(a.cnf).stem().string();
  if (f == "cycle") return "cycle-n" + std::to_string(a.n);
  return f;
}

int cmd_generate(const GenArgs& a) {
  static const std::vector<std::string> kFamilies = {"random", "hy", "delta-chain", "hard-general",
                                                     "hard-bipartite", "gadget", "sat-anchor", "cycle"};
  if (std::find(kFamilies.begin(), kFamilies.end(), a.family) == kFamilies.end())
    throw Failure{GMIS_ERR_INVALID_ARGUMENT, "unknown family '" + a.family + "'"};
  GraphPtr input;
  if (a.family == "gadget") {
    if (a.input.empty()) throw Failure{GMIS_ERR_INVALID_ARGUMENT, "gadget needs --input"};
    input = load_graph(a.input);
  }
  json cnf;
  if (a.family == "sat-anchor") {
    if (a.cnf.empty()) throw Failure{GMIS_ERR_INVALID_ARGUMENT, "sat-anchor needs --cnf"};
    cnf = read_cnf(a.cnf);
  }
  fs::create_directories(a.out);
  uint64_t seed0 = a.seed ? *a.seed : default_seed();
  int count = a.family == "random" ? a.count : 1;
  for (int c = 0; c < count; ++c) {
    uint64_t seed = seed0 + static_cast<uint64_t>(c);
    json spec{{"family", a.family}, {"oracles", !a.no_oracles}};
    if (a.family == "random") spec.update({{"kind", a.kind}, {"n", a.n}, {"delta", a.delta}, {"seed", seed},
                                           {"connected", a.connected}});
    if (a.family == "hy") spec.update({{"base", a.base}, {"i", a.i}});
    if (a.family == "delta-chain") spec.update({{"delta", a.delta}, {"groups", a.groups}});
    if (a.family == "hard-general") spec["k"] = a.k;
    if (a.family == "hard-bipartite") spec.update({{"groups", a.groups}, {"k", a.k}});
    if (a.family == "sat-anchor") spec.update({{"vars", cnf["vars"]}, {"clauses", cnf["clauses"]}, {"k", a.k}});
    if (a.family == "cycle") spec["n"] = a.n;
    gmis_graph* raw = nullptr;
    char* side = nullptr;
    check(gmis_generate(spec.dump().c_str(), input.get(), &raw, &side));
    GraphPtr g(raw);
    CString sidecar(side);
    char* text = nullptr;
    check(gmis_graph_write(g.get(), &text));
    CString dimacs(text);
    std::string name = a.name.empty() || count > 1 ? default_name(a, seed) : a.name;
    fs::path gp = fs::path(a.out) / (name + ".dimacs");
    fs::path sp = fs::path(a.out) / (name + ".json");
    json sj = json::parse(sidecar.get());
    if (a.family == "sat-anchor") sj["params"]["clauses"] = cnf["clauses"].size();
    write_file(gp, dimacs.get());
    write_file(sp, sj.dump(2) + "\n");
    json line{{"v", 1}, {"type", "generated"}, {"graph", gp.string()}, {"sidecar", sp.string()},
              {"n", sj["n"]}, {"m", sj["m"]}, {"known", sj["known"]}};
    std::cout << line.dump() << "\n";
  }
  return kExitOk;
}

// ---- bench ----

struct BenchRow {
  std::string path, family;
  std::vector<std::string> algos;
};

// Lines: <instance> <algo>[,<algo>...] [family]; '#' starts a comment.
// Relative instance paths resolve against the manifest's directory.
std::vector<BenchRow> read_manifest(const std::string& path) {
  std::istringstream in(read_file(path));
  fs::path dir = fs::path(path).parent_path();
  std::vector<BenchRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    BenchRow r;
    std::string algos;
    if (!(ls >> r.path)) continue;
    if (!(ls >> algos)) throw Failure{GMIS_ERR_PARSE, path + ":" + std::to_string(lineno) + ": missing algorithm"};
    ls >> r.family;
    if (fs::path(r.path).is_relative()) r.path = (dir / r.path).string();
    std::stringstream as(algos);
    for (std::string s; std::getline(as, s, ',');)
      if (!s.empty()) r.algos.push_back(s);
    rows.push_back(std::move(r));
  }
  return rows;
}

struct RunResult {
  std::string family, algo;
  std::optional<Fraction> ratio;
  json record;
};

std::vector<RunResult> run_row(int index, const BenchRow& row, int64_t max_nodes, bool timing) {
  std::vector<RunResult> out;
  auto fail = [&](const std::string& algo, const std::string& msg) {
    out.push_back({row.family, algo, std::nullopt,
                   {{"v", 1}, {"type", "error"}, {"row", index + 1}, {"instance", row.path}, {"algo", algo},
                    {"error", msg}}});
  };
  GraphPtr g;
  json known = json::object();
  std::string family = row.family;
  try {
    g = load_graph(row.path);
    fs::path sp = fs::path(row.path).replace_extension(".json");
    if (fs::exists(sp)) {
      json sj = json::parse(read_file(sp.string()));
      known = sj.value("known", json::object());
      if (family.empty()) family = sj.value("family", std::string());
    }
  } catch (const Failure& f) {
    fail(row.algos.empty() ? "" : row.algos.front(), f.message);
    return out;
  } catch (const json::exception& e) {
    fail(row.algos.empty() ? "" : row.algos.front(), e.what());
    return out;
  }
  if (family.empty()) family = "default";
  std::optional<int> alpha;
  if (known.contains("alpha")) alpha = known["alpha"].get<int>();
  else {
    try {
      alpha = oracle_alpha(g.get(), max_nodes);
    } catch (const Failure&) {
    }
  }
  int n = gmis_graph_n(g.get());
  for (const auto& name : row.algos) {
    try {
      int algo = algo_id(name);
      auto t0 = std::chrono::steady_clock::now();
      auto s = solve(g.get(), algo);
      auto t1 = std::chrono::steady_clock::now();
      auto q = ratio_of(gmis_algo_is_cover(algo), n, s.size(), alpha);
      json r{{"v", 1},        {"type", "run"}, {"row", index + 1},         {"instance", row.path},
             {"family", family}, {"algo", name},  {"n", n},                   {"m", gmis_graph_m(g.get())},
             {"size", s.size()}};
      if (alpha) r["alpha"] = *alpha;
      if (q) r["ratio"] = fraction_str(*q);
      if (timing) r["wall_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
      out.push_back({family, name, q, r});
    } catch (const Failure& f) {
      fail(name, f.message);
    }
  }
  return out;
}

struct BenchArgs {
  std::string manifest;
  int jobs = 1;
  int64_t max_nodes = 0;
  bool timing = false;
};

int cmd_bench(const BenchArgs& a) {
  auto rows = read_manifest(a.manifest);
  std::vector<std::vector<RunResult>> results(rows.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < rows.size();)
      results[i] = run_row(static_cast<int>(i), rows[i], a.max_nodes, a.timing);
  };
  int jobs = std::clamp(a.jobs, 1, 256);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  struct Agg {
    int runs = 0, rated = 0;
    Fraction worst{0, 1};
    double sum = 0;
  };
  std::map<std::pair<std::string, std::string>, Agg> agg;
  for (const auto& row : results)
    for (const auto& r : row) {
      std::cout << r.record.dump() << "\n";
      if (r.record["type"] != "run") continue;
      Agg& g = agg[{r.family, r.algo}];
      ++g.runs;
      if (!r.ratio) continue;
      ++g.rated;
      g.sum += static_cast<double>(r.ratio->num) / static_cast<double>(r.ratio->den);
      if (static_cast<__int128>(r.ratio->num) * g.worst.den > static_cast<__int128>(g.worst.num) * r.ratio->den)
        g.worst = *r.ratio;
    }
  for (const auto& [key, g] : agg) {
    json r{{"v", 1}, {"type", "aggregate"}, {"family", key.first}, {"algo", key.second},
           {"runs", g.runs}, {"rated", g.rated}};
    if (g.rated) {
      r["worst_ratio"] = fraction_str(g.worst);
      r["mean_ratio"] = g.sum / g.rated;
    }
    std::cout << r.dump() << "\n";
  }
  return kExitOk;
}

int cmd_table(int max_length) {
  char* out = nullptr;
  check(gmis_potential_table(max_length, &out));
  CString t(out);
  std::cout << t.get() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy maximum independent set: solvers, potential audits and instance generators"};
  app.require_subcommand(1);

  const std::vector<std::string> algos = {"greedy", "more-edges", "greedy-star", "vc-complementary", "vc-65"};

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on a DIMACS graph");
  solve_cmd->add_option("graph", sa.path, "DIMACS edge file")->required();
  solve_cmd->add_option("--algo", sa.algo)->check(CLI::IsMember(algos))->capture_default_str();
  solve_cmd->add_option("--witness", sa.witness, "Write the solution as sorted 1-based ids");
  solve_cmd->add_flag("--oracle", sa.oracle, "Compute alpha and the ratio with the exact oracle");
  solve_cmd->add_option("--max-nodes", sa.max_nodes, "Oracle node budget (0 = default)");
  solve_cmd->add_flag("--timing", sa.timing, "Add wall time to the record");

  AuditArgs aa;
  auto* audit_cmd = app.add_subcommand("audit", "Potential audit of an execution");
  audit_cmd->add_option("graph", aa.path)->required();
  audit_cmd->add_option("--algo", aa.algo)->check(CLI::IsMember({"greedy", "more-edges", "greedy-star"}))
      ->capture_default_str();
  auto* params_opt = audit_cmd->add_option("--params", aa.params, "gamma sigma delta (rationals as p/q)")
                         ->expected(3);
  audit_cmd->add_option("--preset", aa.preset)->check(CLI::IsMember({"subcubic", "general", "triangle-free"}))
      ->excludes(params_opt);
  audit_cmd->add_option("--delta", aa.delta, "Degree bound for --preset")->capture_default_str();
  audit_cmd->add_option("--independent-set", aa.independent_set,
                        "Reference independent set (1-based ids); default: an oracle maximum set");
  audit_cmd->add_flag("--duality", aa.duality, "Append the vertex cover duality summary (greedy-star)");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("generate", "Write an instance and its JSON sidecar");
  gen_cmd->add_option("family", ga.family,
                      "random | hy | delta-chain | hard-general | hard-bipartite | gadget | sat-anchor | cycle")
      ->required();
  gen_cmd->add_option("--out", ga.out, "Output directory")->capture_default_str();
  gen_cmd->add_option("--name", ga.name, "File stem");
  gen_cmd->add_option("--kind", ga.kind, "random: subcubic | max-degree | triangle-free | cubic")
      ->capture_default_str();
  gen_cmd->add_option("--n", ga.n);
  gen_cmd->add_option("--delta", ga.delta)->capture_default_str();
  gen_cmd->add_option("--seed", ga.seed, "Default: GREEDY_MIS_SEED or 0");
  gen_cmd->add_option("--count", ga.count, "random: seeds seed .. seed+count-1")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--connected", ga.connected);
  gen_cmd->add_option("--base", ga.base, "hy: h0 | h0p")->capture_default_str();
  gen_cmd->add_option("--i", ga.i);
  gen_cmd->add_option("--groups", ga.groups);
  gen_cmd->add_option("--k", ga.k)->capture_default_str();
  gen_cmd->add_option("--input", ga.input, "gadget: cubic DIMACS graph");
  gen_cmd->add_option("--cnf", ga.cnf, "sat-anchor: DIMACS CNF file");
  gen_cmd->add_flag("--no-oracles", ga.no_oracles, "Skip oracle values in the sidecar");

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run a manifest and aggregate ratios per family");
  bench_cmd->add_option("manifest", ba.manifest)->required();
  bench_cmd->add_option("--jobs,-j", ba.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--max-nodes", ba.max_nodes, "Oracle node budget (0 = default)");
  bench_cmd->add_flag("--timing", ba.timing, "Add wall times (output is no longer deterministic)");

  int max_length = 9;
  auto* table_cmd = app.add_subcommand("table", "Minimum reduction potentials at (5, 4, 3)");
  table_cmd->add_option("--max-length", max_length)->check(CLI::Range(3, 15))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(sa);
    if (*audit_cmd) return cmd_audit(aa);
    if (*gen_cmd) return cmd_generate(ga);
    if (*bench_cmd) return cmd_bench(ba);
    if (*table_cmd) return cmd_table(max_length);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code_of(f.code);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
