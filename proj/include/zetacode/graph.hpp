#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetacode/matrix.hpp"

namespace zetacode {

// Undirected multigraph. Parallel edges are allowed, self-loops are not.
// Edge ids follow construction order and stay stable.
class UndirectedMultigraph {
 public:
  UndirectedMultigraph() = default;
  UndirectedMultigraph(std::size_t num_vertices,
                       std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  std::pair<std::uint32_t, std::uint32_t> edge(std::size_t id) const { return edges_[id]; }

  std::size_t degree(std::uint32_t v) const { return incident_[v].size(); }
  std::size_t min_degree() const;
  // (neighbor, edge id) pairs in construction order
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& incident(std::uint32_t v) const {
    return incident_[v];
  }

  bool is_simple() const;  // no parallel edges
  std::vector<std::uint32_t> component_labels() const;
  std::size_t num_components() const;
  bool connected() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> incident_;
};

// Directed doubling of the edge set: for 0 <= k < |E| edge k runs tail->head
// as constructed and edge |E|+k is its reversal.
class DirectedEdgeSet {
 public:
  explicit DirectedEdgeSet(const UndirectedMultigraph& g);

  std::size_t size() const { return tails_.size(); }  // 2|E|
  std::uint32_t tail(std::uint32_t e) const { return tails_[e]; }
  std::uint32_t head(std::uint32_t e) const { return heads_[e]; }
  std::uint32_t inverse(std::uint32_t e) const {
    auto half = static_cast<std::uint32_t>(tails_.size() / 2);
    return e < half ? e + half : e - half;
  }
  std::uint32_t undirected(std::uint32_t e) const {
    auto half = static_cast<std::uint32_t>(tails_.size() / 2);
    return e < half ? e : e - half;
  }

 private:
  std::vector<std::uint32_t> tails_, heads_;
};

// Non-backtracking edge adjacency: entry (i,j) is 1 iff head(e_i) = tail(e_j)
// and e_j is not the inversion of e_i. Stored as successor/predecessor lists.
class EdgeAdjacencyMatrix {
 public:
  explicit EdgeAdjacencyMatrix(const UndirectedMultigraph& g);

  std::size_t dim() const { return succ_.size(); }
  bool at(std::size_t i, std::size_t j) const;
  const std::vector<std::uint32_t>& successors(std::size_t i) const { return succ_[i]; }
  const std::vector<std::uint32_t>& predecessors(std::size_t j) const { return pred_[j]; }
  const DirectedEdgeSet& directed() const { return directed_; }
  const UndirectedMultigraph& base() const { return base_; }

  Mat<double> dense() const;
  Mat<mpz_class> dense_int() const;

 private:
  UndirectedMultigraph base_;
  DirectedEdgeSet directed_;
  std::vector<std::vector<std::uint32_t>> succ_, pred_;
};

// Throws std::domain_error when the graph has no edges.
EdgeAdjacencyMatrix hashimoto_matrix(const UndirectedMultigraph& g);

// M-fold cover described by one permutation of {0..M-1} per base edge.
// Base edge e = (u,v) with permutation pi lifts to edges ((u,k),(v,pi(k))).
// Lifted vertex (v,k) has id v*M + k; lifted edge copies of e are e*M..e*M+M-1.
struct CoverGraph {
  UndirectedMultigraph base;
  std::size_t degree = 0;  // M
  std::vector<std::vector<std::uint32_t>> permutations;
  UndirectedMultigraph lifted;

  std::size_t lifted_vertex(std::uint32_t v, std::size_t level) const { return v * degree + level; }
  std::uint32_t base_vertex(std::size_t lifted_v) const {
    return static_cast<std::uint32_t>(lifted_v / degree);
  }
  std::size_t level(std::size_t lifted_v) const { return lifted_v % degree; }
  std::uint32_t base_edge(std::size_t lifted_e) const {
    return static_cast<std::uint32_t>(lifted_e / degree);
  }
};

CoverGraph m_cover(const UndirectedMultigraph& g, std::size_t M,
                   std::vector<std::vector<std::uint32_t>> permutations);

std::vector<std::vector<std::uint32_t>> random_cover_permutations(std::size_t num_edges,
                                                                  std::size_t M,
                                                                  std::uint64_t seed);

}  // namespace zetacode
