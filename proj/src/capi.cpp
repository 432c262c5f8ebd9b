#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gmis/error.hpp"
#include "gmis/forge.hpp"
#include "gmis/gmis.h"
#include "gmis/graph.hpp"
#include "gmis/greedy.hpp"
#include "gmis/oracles.hpp"
#include "gmis/potential.hpp"
#include "gmis/vertex_cover.hpp"
#include "json.hpp"

struct gmis_graph {
  gmis::Graph g;
};

namespace {

using gmis::Error;
using gmis::ErrorCode;
using nlohmann::json;

thread_local std::string g_error;

int code_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return GMIS_ERR_PARSE;
    case ErrorCode::OutOfRange: return GMIS_ERR_OUT_OF_RANGE;
    case ErrorCode::Contract: return GMIS_ERR_CONTRACT;
    case ErrorCode::DegreeBound: return GMIS_ERR_DEGREE_BOUND;
    case ErrorCode::Budget: return GMIS_ERR_BUDGET;
    case ErrorCode::Identity: return GMIS_ERR_IDENTITY;
    case ErrorCode::InvalidArgument: return GMIS_ERR_INVALID_ARGUMENT;
  }
  return GMIS_ERR_INTERNAL;
}

template <class F>
int guard(F f) {
  g_error.clear();
  try {
    f();
    return GMIS_OK;
  } catch (const Error& e) {
    g_error = e.what();
    return code_of(e.code());
  } catch (const json::exception& e) {
    g_error = std::string("bad json: ") + e.what();
    return GMIS_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return GMIS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return GMIS_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* const kAlgoNames[] = {"greedy", "more-edges", "greedy-star", "vc-complementary", "vc-65"};

void check_algo(int algo) {
  if (algo < 0 || algo > GMIS_ALGO_VC_SIX_FIFTHS)
    throw Error(ErrorCode::InvalidArgument, "unknown algorithm id " + std::to_string(algo));
}

gmis::ExecutionTrace mis_trace(const gmis::Graph& g, int algo) {
  switch (algo) {
    case GMIS_ALGO_GREEDY: return gmis::basic_greedy(g);
    case GMIS_ALGO_MORE_EDGES: return gmis::more_edges(g);
    case GMIS_ALGO_GREEDY_STAR: return gmis::greedy_star(g);
    default: throw Error(ErrorCode::InvalidArgument, "audits need an independent set algorithm");
  }
}

gmis::OracleBudget budget(int64_t max_nodes, int max_vertices) {
  gmis::OracleBudget b;
  b.max_vertices = max_vertices;
  if (max_nodes > 0) b.max_nodes = max_nodes;
  return b;
}

gmis::Coloring black_of(const gmis::Graph& g, const int* black, int size) {
  if (!black) {
    auto r = gmis::exact_mis(g, budget(0, 400));
    return gmis::coloring_of(g.n(), r.witness);
  }
  if (size < 0) throw Error(ErrorCode::InvalidArgument, "negative set size");
  gmis::VertexSet s(black, black + size);
  std::sort(s.begin(), s.end());
  gmis::check_vertex_set(g, s);
  if (!gmis::is_independent(g, s)) throw Error(ErrorCode::Contract, "reference set is not independent");
  return gmis::coloring_of(g.n(), s);
}

gmis::Rational rational_of(const json& j) {
  if (j.is_number_integer()) return gmis::Rational(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return gmis::Rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad rational '" + j.get<std::string>() + "'");
    }
  }
  throw Error(ErrorCode::InvalidArgument, "rational must be an integer or a \"p/q\" string");
}

gmis::PotentialParams params_of(const char* text) {
  if (!text) return gmis::PotentialParams::subcubic();
  json j = json::parse(text);
  if (j.contains("preset")) {
    std::string p = j["preset"];
    int d = j.value("delta", 3);
    if (p == "subcubic") return gmis::PotentialParams::subcubic();
    if (p == "general") return gmis::PotentialParams::general(d);
    if (p == "triangle-free") return gmis::PotentialParams::triangle_free(d);
    throw Error(ErrorCode::InvalidArgument, "unknown params preset '" + p + "'");
  }
  gmis::PotentialParams p;
  p.gamma = rational_of(j.at("gamma"));
  p.sigma = rational_of(j.at("sigma"));
  p.delta = j.at("delta").get<int>();
  p.b = j.value("b", 0);
  if (p.delta < 1 || p.gamma < 0 || p.sigma < 0)
    throw Error(ErrorCode::InvalidArgument, "params need gamma, sigma >= 0 and delta >= 1");
  return p;
}

json rational_json(const gmis::Rational& r) {
  if (gmis::is_integer(r)) return boost::multiprecision::numerator(r).convert_to<int64_t>();
  return gmis::rational_str(r);
}

// ---- generation ----

gmis::RandomKind random_kind(const std::string& s) {
  if (s == "subcubic") return gmis::RandomKind::Subcubic;
  if (s == "max-degree") return gmis::RandomKind::MaxDegree;
  if (s == "triangle-free") return gmis::RandomKind::TriangleFree;
  if (s == "cubic") return gmis::RandomKind::Cubic;
  throw Error(ErrorCode::InvalidArgument, "unknown random kind '" + s + "'");
}

// Oracle values for the sidecar, skipped when out of budget.
void add_oracles(const gmis::Graph& g, json& known) {
  if (!known.contains("alpha")) {
    try {
      known["alpha"] = gmis::exact_mis(g, {400, 5'000'000, 0}).alpha;
      known["alpha_source"] = "oracle";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
    }
  }
  if (!known.contains("alpha_plus") && g.n() <= 22) {
    try {
      auto mg = gmis::max_greedy(g, {22, 5'000'000, 0});
      known["alpha_plus"] = mg.alpha_plus;
      known["alpha_minus"] = mg.alpha_minus;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
    }
  }
}

gmis::Graph generate(const json& spec, const gmis::Graph* input, json& side) {
  std::string family = spec.at("family");
  json known = json::object();
  gmis::Graph g;
  if (family == "random") {
    gmis::RandomSpec r;
    r.kind = random_kind(spec.value("kind", std::string("subcubic")));
    r.n = spec.at("n").get<int>();
    r.delta = spec.value("delta", 3);
    r.seed = spec.value("seed", uint64_t{0});
    r.connected = spec.value("connected", false);
    g = gmis::gen_random(r);
    side["seed"] = r.seed;
  } else if (family == "hy") {
    std::string base = spec.value("base", std::string("h0p"));
    if (base != "h0" && base != "h0p") throw Error(ErrorCode::InvalidArgument, "hy base must be h0 or h0p");
    auto b = base == "h0" ? gmis::HyBase::H0 : gmis::HyBase::H0Prime;
    int i = spec.at("i").get<int>();
    g = gmis::gen_hy(i, b);
    auto c = gmis::hy_counts(i, b);
    known["alpha"] = c.alpha;
    known["alpha_source"] = "closed-form";
    known["greedy_top_first"] = c.greedy;
  } else if (family == "delta-chain") {
    int d = spec.at("delta").get<int>(), groups = spec.at("groups").get<int>();
    g = gmis::gen_delta_chain(d, groups);
    auto c = gmis::delta_chain_counts(d, groups);
    known["alpha"] = c.independent_total;
    known["alpha_source"] = "closed-form";
    known["alpha_plus"] = c.cliques;
    known["alpha_minus"] = c.cliques;
  } else if (family == "hard-general") {
    int k = spec.at("k").get<int>();
    g = gmis::gen_hard_general(k);
    known["alpha"] = k;
    known["alpha_source"] = "closed-form";
    known["alpha_plus"] = 2;
    known["root"] = 1;
  } else if (family == "hard-bipartite") {
    int groups = spec.at("groups").get<int>(), k = spec.at("k").get<int>();
    g = gmis::gen_hard_bipartite(groups, k);
    known["alpha"] = groups * k;
    known["alpha_source"] = "closed-form";
    known["alpha_plus"] = groups + k;
  } else if (family == "gadget") {
    need(input, "gadget input graph");
    g = gmis::gadget_planar_cubic(*input);
    try {
      known["alpha"] = gmis::exact_mis(*input, {400, 5'000'000, 0}).alpha + 9 * input->m();
      known["alpha_source"] = "closed-form";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
    }
  } else if (family == "sat-anchor") {
    gmis::CnfFormula f;
    f.vars = spec.at("vars").get<int>();
    f.clauses = spec.at("clauses").get<std::vector<std::vector<int>>>();
    gmis::CnfFormula nf = gmis::is_normalized(f) || !spec.value("normalize", true) ? f : gmis::normalize_sat(f);
    auto a = gmis::gen_sat_anchor(nf, gmis::gen_hard_general(spec.value("k", 4)));
    g = std::move(a.graph);
    if (f.vars <= 24) known["satisfiable"] = gmis::brute_force_sat(f);
    known["normalized_vars"] = nf.vars;
    known["root"] = a.r + 1;
    known["anchor"] = a.r_prime + 1;
  } else if (family == "cycle") {
    int n = spec.at("n").get<int>();
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycles need n >= 3");
    std::vector<gmis::Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    g = gmis::Graph::from_edges(n, e);
    known["alpha"] = n / 2;
    known["alpha_source"] = "closed-form";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
  }
  if (spec.value("oracles", true)) add_oracles(g, known);
  side["family"] = family;
  side["params"] = spec;
  side["n"] = g.n();
  side["m"] = g.m();
  side["max_degree"] = g.max_degree();
  side["known"] = known;
  return g;
}

}  // namespace

extern "C" {

const char* gmis_last_error(void) { return g_error.c_str(); }

const char* gmis_error_name(int code) {
  switch (code) {
    case GMIS_OK: return "ok";
    case GMIS_ERR_PARSE: return "parse";
    case GMIS_ERR_OUT_OF_RANGE: return "out-of-range";
    case GMIS_ERR_CONTRACT: return "contract";
    case GMIS_ERR_DEGREE_BOUND: return "degree-bound";
    case GMIS_ERR_BUDGET: return "budget";
    case GMIS_ERR_IDENTITY: return "identity";
    case GMIS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    default: return "internal";
  }
}

int gmis_algo_from_name(const char* name, int* algo) {
  return guard([&] {
    need(name, "name");
    need(algo, "algo");
    for (int i = 0; i <= GMIS_ALGO_VC_SIX_FIFTHS; ++i)
      if (std::strcmp(name, kAlgoNames[i]) == 0) {
        *algo = i;
        return;
      }
    throw Error(ErrorCode::InvalidArgument, std::string("unknown algorithm '") + name + "'");
  });
}

const char* gmis_algo_name(int algo) {
  return algo >= 0 && algo <= GMIS_ALGO_VC_SIX_FIFTHS ? kAlgoNames[algo] : "?";
}

int gmis_algo_is_cover(int algo) {
  return algo == GMIS_ALGO_VC_COMPLEMENTARY || algo == GMIS_ALGO_VC_SIX_FIFTHS;
}

int gmis_graph_parse(const char* text, size_t len, gmis_graph** out, int* duplicate_edges) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    std::vector<std::string> warnings;
    auto* h = new gmis_graph{gmis::parse_graph(std::string_view(text, len), &warnings)};
    *out = h;
    if (duplicate_edges) *duplicate_edges = static_cast<int>(warnings.size());
  });
}

int gmis_graph_from_edges(int n, const int* endpoints, size_t m, gmis_graph** out) {
  return guard([&] {
    need(out, "out");
    if (m > 0) need(endpoints, "endpoints");
    std::vector<gmis::Edge> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
    *out = new gmis_graph{gmis::Graph::from_edges(n, std::move(e))};
  });
}

void gmis_graph_free(gmis_graph* g) { delete g; }
int gmis_graph_n(const gmis_graph* g) { return g ? g->g.n() : 0; }
int64_t gmis_graph_m(const gmis_graph* g) { return g ? g->g.m() : 0; }
int gmis_graph_max_degree(const gmis_graph* g) { return g ? g->g.max_degree() : 0; }

int gmis_graph_write(const gmis_graph* g, char** text) {
  return guard([&] {
    need(g, "graph");
    need(text, "text");
    *text = dup(gmis::write_graph(g->g));
  });
}

void gmis_string_free(char* s) { std::free(s); }

int gmis_solve(const gmis_graph* g, int algo, int* out, int* size) {
  return guard([&] {
    need(g, "graph");
    need(size, "size");
    check_algo(algo);
    if (g->g.n() > 0) need(out, "out");
    gmis::VertexSet s;
    switch (algo) {
      case GMIS_ALGO_VC_COMPLEMENTARY: s = gmis::complementary_greedy(g->g); break;
      case GMIS_ALGO_VC_SIX_FIFTHS: s = gmis::mvc_six_fifths(g->g); break;
      default: s = mis_trace(g->g, algo).solution;
    }
    std::sort(s.begin(), s.end());
    std::copy(s.begin(), s.end(), out);
    *size = static_cast<int>(s.size());
  });
}

int gmis_exact_mis(const gmis_graph* g, int64_t max_nodes, int* alpha, int* witness, int* witness_size) {
  return guard([&] {
    need(g, "graph");
    need(alpha, "alpha");
    auto r = gmis::exact_mis(g->g, budget(max_nodes, 400));
    *alpha = r.alpha;
    if (witness) std::copy(r.witness.begin(), r.witness.end(), witness);
    if (witness_size) *witness_size = static_cast<int>(r.witness.size());
  });
}

int gmis_max_greedy(const gmis_graph* g, int64_t max_nodes, int* alpha_plus, int* alpha_minus) {
  return guard([&] {
    need(g, "graph");
    auto r = gmis::max_greedy(g->g, budget(max_nodes, 22));
    if (alpha_plus) *alpha_plus = r.alpha_plus;
    if (alpha_minus) *alpha_minus = r.alpha_minus;
  });
}

int gmis_greedy_can_avoid(const gmis_graph* g, int v, int64_t max_nodes, int* avoidable) {
  return guard([&] {
    need(g, "graph");
    need(avoidable, "avoidable");
    *avoidable = gmis::greedy_can_avoid(g->g, v, budget(max_nodes, 400)).avoidable ? 1 : 0;
  });
}

int gmis_audit(const gmis_graph* g, int algo, const int* black, int black_size, const char* params_json,
               char** jsonl) {
  return guard([&] {
    need(g, "graph");
    need(jsonl, "jsonl");
    check_algo(algo);
    gmis::PotentialParams p = params_of(params_json);
    gmis::Coloring c = black_of(g->g, black, black_size);
    auto trace = mis_trace(g->g, algo);
    auto rep = gmis::audit_execution(g->g, trace, c, p);
    json s{{"v", 1},
           {"type", "summary"},
           {"algo", kAlgoNames[algo]},
           {"n", g->g.n()},
           {"reductions", rep.records.size()},
           {"picks", rep.picks},
           {"black", rep.black_total},
           {"phi", rational_json(rep.phi)},
           {"phi_exact", rational_json(rep.phi_exact)},
           {"total_loan", rep.total_loan},
           {"total_debt_lb", rep.total_debt_lb},
           {"total_debt_exact", rep.total_debt_exact},
           {"loan_debt_residual", rep.loan_debt_residual},
           {"sum_residual", rational_json(rep.sum_residual)},
           {"slack_residual", rational_json(rep.slack_residual)}};
    if (p.delta == 3 && p.gamma == 5 && p.sigma == 4 && g->g.max_degree() <= 3 && g->g.n() > 0 &&
        gmis::is_connected(g->g)) {
      auto low = gmis::check_low_debt(g->g, trace, c);
      s["phi_at_least_minus_one"] = low.above_floor();
      if (low.at_minus_one) s["minus_one_explained"] = low.explained();
    }
    *jsonl = dup(rep.to_jsonl() + s.dump() + "\n");
  });
}

int gmis_duality_audit(const gmis_graph* g, const int* black, int black_size, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    gmis::Coloring c = black_of(g->g, black, black_size);
    auto rep = gmis::duality_audit(g->g, gmis::greedy_star(g->g), c);
    json recs = json::array();
    for (const auto& r : rep.records)
      recs.push_back({{"step", r.step},
                      {"kind", std::string(gmis::kind_name(r.kind))},
                      {"phi", rational_json(r.phi)},
                      {"phi_exact", rational_json(r.phi_exact)},
                      {"psi", r.psi},
                      {"psi_exact", r.psi_exact},
                      {"checked", r.checked},
                      {"ok", r.ok}});
    json j{{"v", 1},
           {"violations", rep.violations},
           {"phi_exact_total", rational_json(rep.phi_exact_total)},
           {"psi_exact_total", rep.psi_exact_total},
           {"total_ok", rep.total_ok},
           {"records", recs}};
    *out = dup(j.dump());
  });
}

int gmis_potential_table(int max_length, char** out) {
  return guard([&] {
    need(out, "out");
    json j{{"v", 1}, {"max_length", max_length}};
    json rows = json::object();
    for (const auto& e : gmis::min_potential_table(gmis::PotentialParams::subcubic(), max_length)) {
      json by_len = json::object();
      for (const auto& [len, v] : e.min_by_length) by_len[std::to_string(len)] = rational_json(v);
      rows[std::string(gmis::kind_name(e.kind))] = {{"min", rational_json(e.min)},
                                                    {"shapes", e.shapes},
                                                    {"argmins", e.argmins.size()},
                                                    {"stable", e.stable},
                                                    {"min_by_length", by_len}};
    }
    j["table"] = rows;
    *out = dup(j.dump());
  });
}

int gmis_nt_partition(const gmis_graph* g, int* part) {
  return guard([&] {
    need(g, "graph");
    if (g->g.n() > 0) need(part, "part");
    auto p = gmis::nt_partition(g->g);
    for (int v : p.out) part[v] = 0;
    for (int v : p.in) part[v] = 1;
    for (int v : p.kernel) part[v] = 2;
  });
}

int gmis_generate(const char* spec_json, const gmis_graph* input, gmis_graph** out, char** sidecar) {
  return guard([&] {
    need(spec_json, "spec");
    need(out, "out");
    json spec = json::parse(spec_json);
    json side{{"v", 1}};
    gmis::Graph g = generate(spec, input ? &input->g : nullptr, side);
    auto* h = new gmis_graph{std::move(g)};
    if (sidecar) {
      try {
        *sidecar = dup(side.dump());
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

}  // extern "C"
