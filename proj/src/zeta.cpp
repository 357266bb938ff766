#include "zetacode/zeta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace zetacode {

namespace {

std::vector<std::uint32_t> least_rotation(const std::vector<std::uint32_t>& w) {
  std::vector<std::uint32_t> best = w;
  std::vector<std::uint32_t> rot = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

bool is_primitive(const std::vector<std::uint32_t>& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      if (w[i] != w[i - d]) periodic = false;
    if (periodic) return false;
  }
  return true;
}

}  // namespace

std::vector<PrimeCycleClass> prime_cycles(const UndirectedMultigraph& g, std::size_t max_len) {
  if (max_len < 2) throw std::invalid_argument("prime cycle search needs max_len >= 2");
  std::vector<PrimeCycleClass> out;
  if (g.num_edges() == 0) return out;
  EdgeAdjacencyMatrix adj(g);
  const auto& dir = adj.directed();
  std::size_t n = adj.dim();

  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> path;
  // Each class is discovered from its smallest directed edge id, so branches
  // never descend below the start id.
  for (std::uint32_t start = 0; start < n; ++start) {
    path.assign(1, start);
    auto dfs = [&](auto&& self) -> void {
      std::uint32_t last = path.back();
      if (path.size() >= 2 && dir.head(last) == dir.tail(start) && dir.inverse(last) != start) {
        if (is_primitive(path)) found.insert(least_rotation(path));
      }
      if (path.size() == max_len) return;
      for (std::uint32_t next : adj.successors(last)) {
        if (next < start) continue;
        path.push_back(next);
        self(self);
        path.pop_back();
      }
    };
    dfs(dfs);
  }
  out.reserve(found.size());
  for (auto& w : found) out.push_back(PrimeCycleClass{w});
  std::sort(out.begin(), out.end(), [](const PrimeCycleClass& a, const PrimeCycleClass& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });
  return out;
}

std::vector<std::size_t> prime_cycle_length_counts(const std::vector<PrimeCycleClass>& classes,
                                                   std::size_t max_len) {
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (const auto& c : classes)
    if (c.length() <= max_len) ++counts[c.length()];
  return counts;
}

EdgeVariableMap per_edge_variables(std::size_t num_edges) {
  EdgeVariableMap vm;
  vm.num_vars = num_edges;
  vm.var_of_edge.resize(num_edges);
  for (std::size_t e = 0; e < num_edges; ++e) vm.var_of_edge[e] = e;
  return vm;
}

EdgeVariableMap single_variable(std::size_t num_edges) {
  EdgeVariableMap vm;
  vm.num_vars = num_edges == 0 ? 0 : 1;
  vm.var_of_edge.assign(num_edges, 0);
  return vm;
}

EdgeVariableMap grouped_variables(const std::vector<std::size_t>& class_of_edge) {
  EdgeVariableMap vm;
  vm.var_of_edge = class_of_edge;
  std::size_t k = 0;
  for (auto c : class_of_edge) k = std::max(k, c + 1);
  vm.num_vars = k;
  for (std::size_t c = 0; c < k; ++c) {
    if (std::find(class_of_edge.begin(), class_of_edge.end(), c) == class_of_edge.end())
      throw std::invalid_argument("variable class ids must cover 0..k-1");
  }
  return vm;
}

MultiPoly zeta_inverse_from_primes(const std::vector<PrimeCycleClass>& classes,
                                   const EdgeVariableMap& vm, std::uint32_t truncation) {
  std::size_t num_edges = vm.var_of_edge.size();
  // classes sharing a variable monomial contribute (1 - u^mono)^count
  std::map<Exponents, unsigned long> counts;
  Exponents mono(vm.num_vars, 0);
  for (const auto& cls : classes) {
    if (cls.length() > truncation) continue;
    std::fill(mono.begin(), mono.end(), 0);
    for (auto e : cls.edges) {
      std::size_t und = e < num_edges ? e : e - num_edges;
      ++mono[vm.var_of_edge[und]];
    }
    ++counts[mono];
  }
  MultiPoly acc = MultiPoly::constant(vm.num_vars, truncation, 1);
  Exponents shift(vm.num_vars, 0);
  for (const auto& [m, c] : counts) {
    std::uint32_t deg = 0;
    for (auto x : m) deg += x;
    std::uint32_t jmax = deg > 0 ? truncation / deg : 0;
    MultiPoly next = acc;
    mpz_class binom = 1;
    for (std::uint32_t j = 1; j <= jmax; ++j) {
      binom *= c + 1 - j;
      binom /= j;
      if (binom == 0) break;
      for (std::size_t v = 0; v < m.size(); ++v) shift[v] = m[v] * j;
      next.add_shifted(acc, shift, mpq_class(j % 2 ? -binom : binom));
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

// Collects the trace series sum_m Tr((U B)^m) u-monomials, degree 1..D, by
// propagating one row of (U B)^m at a time to bound memory.
MultiPoly trace_log_sum(const EdgeAdjacencyMatrix& adj, const EdgeVariableMap& vm,
                        std::uint32_t truncation) {
  std::size_t dim = adj.dim();
  std::size_t num_edges = vm.var_of_edge.size();
  const auto var_of_directed = [&](std::uint32_t e) {
    return vm.var_of_edge[e < num_edges ? e : e - num_edges];
  };
  // S = -sum_m Tr((U B)^m)/m, the log of det(I - U B)
  MultiPoly S(vm.num_vars, truncation);
  std::vector<MultiPoly> row, next;
  for (std::size_t start = 0; start < dim; ++start) {
    row.assign(dim, MultiPoly(vm.num_vars, truncation));
    // row = e_start^T (U B): entry j gets u_{var(start)} when B(start, j)
    for (auto j : adj.successors(static_cast<std::uint32_t>(start)))
      row[j] = MultiPoly::variable(vm.num_vars, truncation, var_of_directed(static_cast<std::uint32_t>(start)));
    for (std::uint32_t m = 1; m <= truncation; ++m) {
      S.add_shifted(row[start], Exponents(vm.num_vars, 0), mpq_class(-1, m));
      if (m == truncation) break;
      bool alive = false;
      next.assign(dim, MultiPoly(vm.num_vars, truncation));
      for (std::size_t j = 0; j < dim; ++j) {
        MultiPoly acc(vm.num_vars, truncation);
        for (auto k : adj.predecessors(static_cast<std::uint32_t>(j)))
          acc += row[k].times_variable(var_of_directed(k));
        if (!acc.is_zero()) alive = true;
        next[j] = std::move(acc);
      }
      row.swap(next);
      if (!alive) break;
    }
  }
  return S;
}

}  // namespace

MultiPoly edge_zeta_inverse_det(const UndirectedMultigraph& g, const EdgeVariableMap& vm,
                                std::uint32_t truncation) {
  if (vm.var_of_edge.size() != g.num_edges())
    throw std::invalid_argument("variable map does not match the edge count");
  EdgeAdjacencyMatrix adj = hashimoto_matrix(g);
  MultiPoly S = trace_log_sum(adj, vm, truncation);
  MultiPoly F = exp_series(S);
  if (!F.integer_coefficients())
    throw std::logic_error("determinant expansion produced a non-integer coefficient");
  return F;
}

UniPoly edge_zeta_inverse_det_univariate(const UndirectedMultigraph& g, std::uint32_t truncation) {
  // With one variable the trace of (uB)^m is N_m u^m, so the log collapses to
  // the walk count series.
  std::vector<mpz_class> walks = closed_walk_counts(g, truncation);
  QSeries S(truncation + 1);
  for (std::uint32_t m = 1; m <= truncation; ++m)
    S[m] = mpq_class(-walks[m - 1]) / static_cast<unsigned long>(m);
  QSeries F = series_exp(S);
  return unipoly_from_series(F);
}

UniPoly ihara_zeta_inverse_bass(const UndirectedMultigraph& g) {
  UniPoly result = UniPoly::constant(1);
  auto labels = g.component_labels();
  std::size_t ncomp = g.num_components();
  for (std::size_t comp = 0; comp < ncomp; ++comp) {
    std::vector<std::uint32_t> verts;
    std::vector<std::size_t> local(g.num_vertices(), SIZE_MAX);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      if (labels[v] == comp) {
        local[v] = verts.size();
        verts.push_back(v);
      }
    }
    std::size_t nv = verts.size();
    std::size_t ne = 0;
    Mat<mpq_class> A(nv, nv);
    std::vector<std::size_t> deg(nv, 0);
    for (auto [u, v] : g.edges()) {
      if (labels[u] != comp) continue;
      ++ne;
      A(local[u], local[v]) += 1;
      A(local[v], local[u]) += 1;
      ++deg[local[u]];
      ++deg[local[v]];
    }
    if (ne + 1 <= nv) continue;  // r = ne - nv + 1 <= 0: no cycles here
    long r = static_cast<long>(ne) - static_cast<long>(nv) + 1;
    std::size_t target_deg = 2 * ne;
    // exact evaluation at 0, 1, -1, 2, -2, ... then Lagrange interpolation
    std::vector<mpq_class> xs, ys;
    for (std::size_t k = 0; xs.size() < target_deg + 1; ++k) {
      mpq_class x = k == 0 ? mpq_class(0)
                           : (k % 2 == 1 ? mpq_class((k + 1) / 2) : -mpq_class(k / 2));
      Mat<mpq_class> mat(nv, nv);
      for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
          mpq_class entry = -A(i, j) * x;
          if (i == j) entry += 1 + mpq_class(static_cast<long>(deg[i]) - 1) * x * x;
          mat(i, j) = entry;
        }
      mpq_class one_minus_x2 = 1 - x * x;
      mpq_class factor = 1;  // (1-x^2)^(r-1); r >= 1 here
      for (long t = 0; t < r - 1; ++t) factor *= one_minus_x2;
      xs.push_back(x);
      ys.push_back(factor * det_exact(mat));
    }
    // Lagrange basis accumulation over Q
    std::vector<mpq_class> coeffs(target_deg + 1, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<mpq_class> basis{1};  // polynomial prod_{j != i} (x - x_j)
      mpq_class denom = 1;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        std::vector<mpq_class> nb(basis.size() + 1, 0);
        for (std::size_t t = 0; t < basis.size(); ++t) {
          nb[t + 1] += basis[t];
          nb[t] -= basis[t] * xs[j];
        }
        basis = std::move(nb);
        denom *= xs[i] - xs[j];
      }
      mpq_class w = ys[i] / denom;
      for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * w;
    }
    std::vector<mpz_class> ic(coeffs.size());
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      if (coeffs[t].get_den() != 1)
        throw std::logic_error("vertex determinant interpolation gave a non-integer coefficient");
      ic[t] = coeffs[t].get_num();
    }
    result = result * UniPoly(std::move(ic));
  }
  return result;
}

std::vector<mpz_class> closed_walk_counts(const UndirectedMultigraph& g, std::size_t m_max) {
  std::vector<mpz_class> out(m_max, 0);
  if (g.num_edges() == 0 || m_max == 0) return out;
  EdgeAdjacencyMatrix adj(g);
  Mat<mpz_class> B = adj.dense_int();
  Mat<mpz_class> P = B;
  for (std::size_t m = 1; m <= m_max; ++m) {
    out[m - 1] = P.trace();
    if (m < m_max) P = P * B;
  }
  return out;
}

std::vector<mpz_class> closed_walk_counts_from_primes(const std::vector<PrimeCycleClass>& classes,
                                                      std::size_t m_max) {
  std::vector<std::size_t> counts = prime_cycle_length_counts(classes, m_max);
  std::vector<mpz_class> out(m_max, 0);
  for (std::size_t m = 1; m <= m_max; ++m) {
    mpz_class acc = 0;
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) acc += mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(counts[d]);
    out[m - 1] = acc;
  }
  return out;
}

}  // namespace zetacode
