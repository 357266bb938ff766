#include "zetacode/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "zetacode/rng.hpp"

namespace zetacode {

UndirectedMultigraph::UndirectedMultigraph(
    std::size_t num_vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)), incident_(num_vertices) {
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    auto [u, v] = edges_[id];
    if (u >= num_vertices_ || v >= num_vertices_)
      throw std::invalid_argument("edge endpoint " + std::to_string(std::max(u, v)) +
                                  " out of range for " + std::to_string(num_vertices_) +
                                  " vertices");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto eid = static_cast<std::uint32_t>(id);
    incident_[u].emplace_back(v, eid);
    incident_[v].emplace_back(u, eid);
  }
}

std::size_t UndirectedMultigraph::min_degree() const {
  std::size_t d = 0;
  bool first = true;
  for (std::uint32_t v = 0; v < num_vertices_; ++v) {
    if (first || incident_[v].size() < d) d = incident_[v].size();
    first = false;
  }
  return d;
}

bool UndirectedMultigraph::is_simple() const {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto [u, v] : edges_) {
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

std::vector<std::uint32_t> UndirectedMultigraph::component_labels() const {
  std::vector<std::uint32_t> label(num_vertices_, UINT32_MAX);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < num_vertices_; ++s) {
    if (label[s] != UINT32_MAX) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (auto [w, eid] : incident_[v]) {
        (void)eid;
        if (label[w] == UINT32_MAX) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t UndirectedMultigraph::num_components() const {
  auto labels = component_labels();
  std::uint32_t mx = 0;
  if (labels.empty()) return 0;
  for (auto l : labels) mx = std::max(mx, l);
  return mx + 1;
}

bool UndirectedMultigraph::connected() const { return num_components() <= 1; }

DirectedEdgeSet::DirectedEdgeSet(const UndirectedMultigraph& g) {
  std::size_t e = g.num_edges();
  tails_.resize(2 * e);
  heads_.resize(2 * e);
  for (std::size_t k = 0; k < e; ++k) {
    auto [u, v] = g.edge(k);
    tails_[k] = u;
    heads_[k] = v;
    tails_[e + k] = v;
    heads_[e + k] = u;
  }
}

EdgeAdjacencyMatrix::EdgeAdjacencyMatrix(const UndirectedMultigraph& g)
    : base_(g), directed_(g) {
  std::size_t n = directed_.size();
  succ_.resize(n);
  pred_.resize(n);
  // group directed edges by tail so successor lookup is linear
  std::vector<std::vector<std::uint32_t>> by_tail(g.num_vertices());
  for (std::uint32_t e = 0; e < n; ++e) by_tail[directed_.tail(e)].push_back(e);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j : by_tail[directed_.head(i)]) {
      if (j == directed_.inverse(i)) continue;
      succ_[i].push_back(j);
      pred_[j].push_back(i);
    }
  }
}

bool EdgeAdjacencyMatrix::at(std::size_t i, std::size_t j) const {
  const auto& s = succ_[i];
  return std::find(s.begin(), s.end(), static_cast<std::uint32_t>(j)) != s.end();
}

Mat<double> EdgeAdjacencyMatrix::dense() const {
  Mat<double> m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (auto j : succ_[i]) m(i, j) = 1.0;
  return m;
}

Mat<mpz_class> EdgeAdjacencyMatrix::dense_int() const {
  Mat<mpz_class> m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (auto j : succ_[i]) m(i, j) = 1;
  return m;
}

EdgeAdjacencyMatrix hashimoto_matrix(const UndirectedMultigraph& g) {
  if (g.num_edges() == 0) throw std::domain_error("edge adjacency of a graph with no edges");
  return EdgeAdjacencyMatrix(g);
}

CoverGraph m_cover(const UndirectedMultigraph& g, std::size_t M,
                   std::vector<std::vector<std::uint32_t>> permutations) {
  if (M == 0) throw std::invalid_argument("cover degree must be positive");
  if (permutations.size() != g.num_edges())
    throw std::invalid_argument("need one permutation per base edge");
  for (const auto& p : permutations) {
    if (p.size() != M) throw std::invalid_argument("permutation size differs from cover degree");
    std::vector<bool> seen(M, false);
    for (auto x : p) {
      if (x >= M || seen[x]) throw std::invalid_argument("not a permutation of 0..M-1");
      seen[x] = true;
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lifted_edges;
  lifted_edges.reserve(g.num_edges() * M);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    for (std::size_t k = 0; k < M; ++k) {
      lifted_edges.emplace_back(static_cast<std::uint32_t>(u * M + k),
                                static_cast<std::uint32_t>(v * M + permutations[e][k]));
    }
  }
  CoverGraph c;
  c.base = g;
  c.degree = M;
  c.permutations = std::move(permutations);
  c.lifted = UndirectedMultigraph(g.num_vertices() * M, std::move(lifted_edges));
  return c;
}

std::vector<std::vector<std::uint32_t>> random_cover_permutations(std::size_t num_edges,
                                                                  std::size_t M,
                                                                  std::uint64_t seed) {
  std::vector<std::vector<std::uint32_t>> perms(num_edges);
  for (std::size_t e = 0; e < num_edges; ++e) {
    RngStream rng(seed, e);
    std::vector<std::uint32_t> p(M);
    for (std::size_t k = 0; k < M; ++k) p[k] = static_cast<std::uint32_t>(k);
    rng.shuffle(p);
    perms[e] = std::move(p);
  }
  return perms;
}

}  // namespace zetacode
