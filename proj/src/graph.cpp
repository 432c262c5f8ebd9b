#include "gmis/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gmis/error.hpp"

namespace gmis {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::Contract: return "contract";
    case ErrorCode::DegreeBound: return "degree-bound";
    case ErrorCode::Budget: return "budget";
    case ErrorCode::Identity: return "identity";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Graph Graph::from_edges(int n, std::vector<Edge> edges, int* duplicates) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error(ErrorCode::Contract, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (duplicates) *duplicates = static_cast<int>(before - edges.size());

  Graph g;
  g.n_ = n;
  g.off_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++g.off_[u + 1];
    ++g.off_[v + 1];
  }
  for (int i = 0; i < n; ++i) g.off_[i + 1] += g.off_[i];
  g.adj_.resize(edges.size() * 2);
  std::vector<int> pos(g.off_.begin(), g.off_.end() - 1);
  for (auto [u, v] : edges) {
    g.adj_[pos[u]++] = v;
    g.adj_[pos[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + g.off_[v], g.adj_.begin() + g.off_[v + 1]);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(adj_.size() / 2);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Subgraph s;
  s.to_new.assign(g.n(), -1);
  for (int v : keep) {
    if (v < 0 || v >= g.n())
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    if (s.to_new[v] != -1) continue;
    s.to_new[v] = 0;
  }
  for (int v = 0; v < g.n(); ++v)
    if (s.to_new[v] != -1) {
      s.to_new[v] = static_cast<int>(s.to_old.size());
      s.to_old.push_back(v);
    }
  std::vector<Edge> es;
  for (int nv = 0; nv < static_cast<int>(s.to_old.size()); ++nv)
    for (int w : g.neighbors(s.to_old[nv]))
      if (s.to_new[w] > nv) es.emplace_back(nv, s.to_new[w]);
  s.graph = Graph::from_edges(static_cast<int>(s.to_old.size()), std::move(es));
  return s;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    ++p.histogram[d];
    p.max_degree = std::max(p.max_degree, d);
    if (!p.min_degree || d < *p.min_degree) p.min_degree = d;
  }
  return p;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line_no) {
  long long x = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
  return x;
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  long long n = -1, m_declared = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "p") {
      if (n >= 0) throw Error(ErrorCode::Parse, where + "duplicate header");
      if (tok.size() != 4 || tok[1] != "edge")
        throw Error(ErrorCode::Parse, where + "malformed header, expected 'p edge <n> <m>'");
      n = parse_int(tok[2], line_no);
      m_declared = parse_int(tok[3], line_no);
      if (n < 0 || m_declared < 0 || n > (1 << 30))
        throw Error(ErrorCode::Parse, where + "header counts out of range");
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw Error(ErrorCode::Parse, where + "malformed edge line");
      long long u = parse_int(tok[1], line_no), v = parse_int(tok[2], line_no);
      if (u == v) throw Error(ErrorCode::Parse, where + "self-loop on vertex " + std::to_string(u));
      if (n < 0) throw Error(ErrorCode::Parse, where + "edge before header");
      if (u < 1 || v < 1 || u > n || v > n)
        throw Error(ErrorCode::Parse, where + "vertex id out of range");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw Error(ErrorCode::Parse, where + "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (nl == text.size()) break;
  }
  if (n < 0) throw Error(ErrorCode::Parse, "missing header");
  size_t lines = edges.size();
  int dups = 0;
  Graph g = Graph::from_edges(static_cast<int>(n), std::move(edges), &dups);
  if (warnings) {
    if (dups > 0) warnings->push_back(std::to_string(dups) + " duplicate edge line(s) collapsed");
    if (static_cast<long long>(lines) != m_declared)
      warnings->push_back("header declares " + std::to_string(m_declared) + " edges, found " +
                          std::to_string(lines));
  }
  return g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::vector<char> to_mask(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
    m[v] = 1;
  }
  return m;
}

VertexSet from_mask(const std::vector<char>& mask) {
  VertexSet s;
  for (int v = 0; v < static_cast<int>(mask.size()); ++v)
    if (mask[v]) s.push_back(v);
  return s;
}

VertexSet complement(int n, const VertexSet& s) {
  auto m = to_mask(n, s);
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (!m[v]) out.push_back(v);
  return out;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n())
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw Error(ErrorCode::Contract, "vertex set not sorted or has duplicates");
  }
}

bool is_independent(const Graph& g, const VertexSet& s) {
  auto m = to_mask(g.n(), s);
  for (int v : s)
    for (int w : g.neighbors(v))
      if (m[w]) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  auto m = to_mask(g.n(), s);
  for (int v = 0; v < g.n(); ++v) {
    if (m[v]) continue;
    bool dominated = false;
    for (int w : g.neighbors(v))
      if (m[w]) dominated = true;
    if (!dominated) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  auto m = to_mask(g.n(), s);
  for (auto [u, v] : g.edges())
    if (!m[u] && !m[v]) return false;
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return Graph::from_edges(a.n() + b.n(), std::move(es));
}

}  // namespace gmis
