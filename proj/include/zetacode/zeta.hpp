#pragma once

#include <cstdint>
#include <vector>

#include "zetacode/graph.hpp"
#include "zetacode/series.hpp"

namespace zetacode {

// One equivalence class of prime cycles: backtrackless, tailless, not a power
// of a shorter cycle, up to cyclic rotation. The representative is the
// lexicographically least rotation of its directed edge id sequence. A class
// and its orientation reversal are distinct.
struct PrimeCycleClass {
  std::vector<std::uint32_t> edges;  // directed edge ids along the cycle
  std::size_t length() const { return edges.size(); }
};

// All prime cycle classes of length <= max_len, sorted by (length, sequence).
// Requires max_len >= 2; a graph with no cycles yields an empty list.
std::vector<PrimeCycleClass> prime_cycles(const UndirectedMultigraph& g, std::size_t max_len);

// counts[m] = number of classes of length m, for m in 0..max_len
std::vector<std::size_t> prime_cycle_length_counts(const std::vector<PrimeCycleClass>& classes,
                                                   std::size_t max_len);

// Assignment of polynomial variables to undirected edges. Both orientations
// of an edge share its variable.
struct EdgeVariableMap {
  std::size_t num_vars = 0;
  std::vector<std::size_t> var_of_edge;  // indexed by undirected edge id
};

EdgeVariableMap per_edge_variables(std::size_t num_edges);
EdgeVariableMap single_variable(std::size_t num_edges);
// group edges into classes sharing one variable each; class ids must cover 0..k-1
EdgeVariableMap grouped_variables(const std::vector<std::size_t>& class_of_edge);

// Product over classes of (1 - monomial(class)), truncated at `truncation`.
// Classes longer than the truncation cannot contribute and are skipped, so a
// list complete up to `truncation` gives the exact truncated series.
MultiPoly zeta_inverse_from_primes(const std::vector<PrimeCycleClass>& classes,
                                   const EdgeVariableMap& vm, std::uint32_t truncation);

// det(I - U B) as a truncated multivariate series via exp of the trace-log,
// computed in exact rational arithmetic. Throws std::logic_error if the final
// coefficients fail the integrality check.
MultiPoly edge_zeta_inverse_det(const UndirectedMultigraph& g, const EdgeVariableMap& vm,
                                std::uint32_t truncation);

// Same determinant route with all variables identified to one u. The result
// is truncated at `truncation`; with truncation >= 2|E| it is the full
// polynomial det(I - uB).
UniPoly edge_zeta_inverse_det_univariate(const UndirectedMultigraph& g, std::uint32_t truncation);

// Vertex-based form (1-u^2)^(r-1) det(I - Au + Qu^2) with r = |E|-|V|+1,
// assembled per connected component by exact evaluation and interpolation.
// Components with r <= 0 contribute the factor 1; a graph with no cycles
// yields the constant polynomial 1.
UniPoly ihara_zeta_inverse_bass(const UndirectedMultigraph& g);

// N_m = Tr(B^m) for m = 1..m_max (index m-1), exact.
std::vector<mpz_class> closed_walk_counts(const UndirectedMultigraph& g, std::size_t m_max);

// N_m via the prime cycle list: sum of d * (#classes of length d) over d | m.
// Valid when the list is complete up to m_max.
std::vector<mpz_class> closed_walk_counts_from_primes(const std::vector<PrimeCycleClass>& classes,
                                                      std::size_t m_max);

}  // namespace zetacode
