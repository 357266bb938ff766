#include "zetacode/codes.hpp"

#include <algorithm>
#include <stdexcept>

#include "zetacode/zeta.hpp"

namespace zetacode {

std::vector<std::vector<std::uint8_t>> codewords_bruteforce(const ParityCheckMatrix& H) {
  std::size_t n = H.cols();
  if (n > 24)
    throw std::domain_error("brute force limited to 24 bits; use the zeta route for larger codes");
  std::size_t m = H.rows();
  // per-row bitmask with bit i at position n-1-i, so word order tracks lex order
  std::vector<std::uint32_t> masks(m, 0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (H.at(r, c)) masks[r] |= 1u << (n - 1 - c);
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t x = 0; x < (1ull << n); ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < m && ok; ++r)
      ok = (__builtin_popcount(static_cast<std::uint32_t>(x) & masks[r]) & 1) == 0;
    if (!ok) continue;
    std::vector<std::uint8_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (x >> (n - 1 - i)) & 1;
    out.push_back(std::move(c));
  }
  return out;
}

PseudoCodeword pseudo_from_cover(const TannerCover& cover,
                                 const std::vector<std::uint8_t>& c_tilde) {
  if (c_tilde.size() != cover.lifted.cols())
    throw std::invalid_argument("lifted word length differs from lifted bit count");
  if (!check_codeword(cover.lifted, c_tilde))
    throw std::invalid_argument("word fails the lifted parity checks");
  std::size_t n = cover.base.num_bits;
  std::size_t M = cover.M;
  PseudoCodeword w;
  w.omega.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned long s = 0;
    for (std::size_t k = 0; k < M; ++k) s += c_tilde[i * M + k];
    w.omega[i] = mpq_class(s, static_cast<unsigned long>(M));
    w.omega[i].canonicalize();
  }
  return w;
}

std::pair<std::vector<std::uint8_t>, bool> mod2_projection(const PseudoCodeword& omega,
                                                           std::size_t M,
                                                           const ParityCheckMatrix& H) {
  if (omega.omega.size() != H.cols())
    throw std::invalid_argument("pseudo-codeword length differs from bit count");
  std::vector<std::uint8_t> proj(omega.omega.size());
  for (std::size_t i = 0; i < omega.omega.size(); ++i) {
    mpq_class scaled = omega.omega[i] * static_cast<unsigned long>(M);
    if (scaled.get_den() != 1 || scaled < 0 || scaled > static_cast<unsigned long>(M))
      throw std::invalid_argument("M*omega must be an integer vector within [0, M]");
    proj[i] = mpz_class(scaled.get_num() % 2).get_ui() & 1;
  }
  bool ok = check_codeword(H, proj);
  return {std::move(proj), ok};
}

bool ZetaPseudocodewordSet::contains(const Exponents& p) const {
  auto it = std::lower_bound(
      members.begin(), members.end(), p,
      [](const std::pair<Exponents, mpz_class>& a, const Exponents& b) {
        return GradedLexLess{}(a.first, b);
      });
  return it != members.end() && it->first == p;
}

ZetaPseudocodewordSet pseudocodewords_from_zeta(const ParityCheckMatrix& H, std::uint32_t D) {
  if (!is_cycle_code(H, false))
    throw std::domain_error("pseudo-codeword extraction needs a cycle code (all column weights 2)");
  TannerGraph T = tanner_from_parity(H);
  auto [normal, bit_to_edge] = collapse_normal_graph(T);
  // variable i is bit i; bit_to_edge is the identity, kept for clarity
  EdgeVariableMap vm;
  vm.num_vars = H.cols();
  vm.var_of_edge.resize(normal.num_edges());
  for (std::size_t i = 0; i < H.cols(); ++i) vm.var_of_edge[bit_to_edge[i]] = i;
  MultiPoly zinv = edge_zeta_inverse_det(normal, vm, D);
  MultiPoly zeta = reciprocal_series(zinv);
  ZetaPseudocodewordSet out;
  out.num_bits = H.cols();
  out.truncation = D;
  out.members.reserve(zeta.terms().size());
  for (const auto& [e, c] : zeta.terms()) {
    if (c.get_den() != 1)
      throw std::logic_error("zeta expansion produced a non-integer coefficient");
    out.members.emplace_back(e, c.get_num());
  }
  return out;
}

bool exponent_mod2_is_codeword(const Exponents& p, const ParityCheckMatrix& H) {
  if (p.size() != H.cols()) throw std::invalid_argument("exponent arity differs from bit count");
  std::vector<std::uint8_t> word(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) word[i] = p[i] & 1;
  return check_codeword(H, word);
}

}  // namespace zetacode
