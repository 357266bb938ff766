#include "zetacode/parity.hpp"

#include <stdexcept>
#include <string>

namespace zetacode {

ParityCheckMatrix ParityCheckMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows[0].size();
  ParityCheckMatrix H(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("ragged parity check rows");
    for (std::size_t c = 0; c < n; ++c) H.set(r, c, rows[r][c] != 0);
  }
  return H;
}

std::size_t ParityCheckMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w += at(r, c);
  return w;
}

std::size_t ParityCheckMatrix::col_weight(std::size_t c) const {
  std::size_t w = 0;
  for (std::size_t r = 0; r < rows_; ++r) w += at(r, c);
  return w;
}

bool ParityCheckMatrix::any() const {
  for (auto v : a_)
    if (v) return true;
  return false;
}

bool check_codeword(const ParityCheckMatrix& H, const std::vector<std::uint8_t>& word) {
  if (word.size() != H.cols()) throw std::invalid_argument("word length differs from column count");
  for (std::size_t r = 0; r < H.rows(); ++r) {
    unsigned parity = 0;
    for (std::size_t c = 0; c < H.cols(); ++c) parity ^= (H.at(r, c) & word[c]);
    if (parity) return false;
  }
  return true;
}

TannerGraph tanner_from_parity(const ParityCheckMatrix& H) {
  if (!H.any()) throw std::domain_error("all-zero parity check matrix has no Tanner graph");
  TannerGraph T;
  T.num_bits = H.cols();
  T.num_checks = H.rows();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  // bit-major scan: edges of bit i are contiguous
  for (std::size_t i = 0; i < H.cols(); ++i)
    for (std::size_t j = 0; j < H.rows(); ++j)
      if (H.at(j, i)) edges.emplace_back(T.bit_vertex(i), T.check_vertex(j));
  T.graph = UndirectedMultigraph(H.cols() + H.rows(), std::move(edges));
  return T;
}

bool is_cycle_code(const ParityCheckMatrix& H, bool strict) {
  for (std::size_t c = 0; c < H.cols(); ++c)
    if (H.col_weight(c) != 2) return false;
  if (strict) {
    for (std::size_t r = 0; r < H.rows(); ++r)
      if (H.row_weight(r) != 2) return false;
  }
  return true;
}

std::pair<UndirectedMultigraph, std::vector<std::size_t>> collapse_normal_graph(
    const TannerGraph& T) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::size_t> bit_to_edge(T.num_bits);
  for (std::size_t i = 0; i < T.num_bits; ++i) {
    const auto& inc = T.graph.incident(T.bit_vertex(i));
    if (inc.size() != 2)
      throw std::domain_error("bit " + std::to_string(i) + " has degree " +
                              std::to_string(inc.size()) + ", not a cycle code");
    auto c0 = inc[0].first - static_cast<std::uint32_t>(T.num_bits);
    auto c1 = inc[1].first - static_cast<std::uint32_t>(T.num_bits);
    bit_to_edge[i] = edges.size();
    edges.emplace_back(c0, c1);
  }
  return {UndirectedMultigraph(T.num_checks, std::move(edges)), std::move(bit_to_edge)};
}

TannerCover tanner_cover(const ParityCheckMatrix& H, std::size_t M,
                         std::vector<std::vector<std::uint32_t>> permutations) {
  TannerCover tc;
  tc.base = tanner_from_parity(H);
  tc.base_matrix = H;
  tc.M = M;
  tc.cover = m_cover(tc.base.graph, M, std::move(permutations));
  std::size_t n = tc.base.num_bits, m = tc.base.num_checks;
  ParityCheckMatrix lifted(m * M, n * M);
  for (std::size_t e = 0; e < tc.cover.lifted.num_edges(); ++e) {
    auto [a, b] = tc.cover.lifted.edge(e);
    // endpoints project to (bit, check) in that vertex order by construction
    std::size_t bit = tc.cover.base_vertex(a);
    std::size_t bit_level = tc.cover.level(a);
    std::size_t check = tc.cover.base_vertex(b) - n;
    std::size_t check_level = tc.cover.level(b);
    lifted.set(check * M + check_level, bit * M + bit_level, 1);
  }
  tc.lifted = std::move(lifted);
  return tc;
}

}  // namespace zetacode
