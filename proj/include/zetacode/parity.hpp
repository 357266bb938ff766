#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetacode/graph.hpp"

namespace zetacode {

// Binary parity check matrix, row-major.
class ParityCheckMatrix {
 public:
  ParityCheckMatrix() = default;
  ParityCheckMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static ParityCheckMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint8_t v) { a_[r * cols_ + c] = v ? 1 : 0; }

  std::size_t row_weight(std::size_t r) const;
  std::size_t col_weight(std::size_t c) const;
  bool any() const;

  bool operator==(const ParityCheckMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint8_t> a_;
};

// H c = 0 over GF(2)
bool check_codeword(const ParityCheckMatrix& H, const std::vector<std::uint8_t>& word);

// Bipartite incidence graph of H. Bit i is vertex i, check j is vertex
// num_bits + j; edges are the 1-entries of H scanned row by row.
struct TannerGraph {
  UndirectedMultigraph graph;
  std::size_t num_bits = 0;
  std::size_t num_checks = 0;

  std::uint32_t bit_vertex(std::size_t i) const { return static_cast<std::uint32_t>(i); }
  std::uint32_t check_vertex(std::size_t j) const {
    return static_cast<std::uint32_t>(num_bits + j);
  }
};

// Throws std::domain_error if H has no 1-entries.
TannerGraph tanner_from_parity(const ParityCheckMatrix& H);

// Every column weight exactly 2. With strict=true, zero-weight rows (checks
// touching no bit) also disqualify.
bool is_cycle_code(const ParityCheckMatrix& H, bool strict = false);

// Collapse the Tanner graph of a cycle code: vertices are the checks and bit
// i becomes an edge joining its two checks. Returns the graph and the map
// bit index -> edge id (the identity by construction). Rejects any bit whose
// degree differs from 2.
std::pair<UndirectedMultigraph, std::vector<std::size_t>> collapse_normal_graph(
    const TannerGraph& T);

// M-fold cover of a Tanner graph together with the lifted parity checks.
// Lifted bit (i,k) is column i*M + k, lifted check (j,k) is row j*M + k.
struct TannerCover {
  TannerGraph base;
  ParityCheckMatrix base_matrix;
  CoverGraph cover;
  ParityCheckMatrix lifted;
  std::size_t M = 0;
};

TannerCover tanner_cover(const ParityCheckMatrix& H, std::size_t M,
                         std::vector<std::vector<std::uint32_t>> permutations);

}  // namespace zetacode
