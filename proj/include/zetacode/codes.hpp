#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "zetacode/parity.hpp"
#include "zetacode/series.hpp"

namespace zetacode {

// All codewords of H by exhaustive search, sorted lexicographically.
// Rejects n > 24.
std::vector<std::vector<std::uint8_t>> codewords_bruteforce(const ParityCheckMatrix& H);

// Cover-form pseudo-codeword: omega_i = (fiber sum of bit i) / M.
struct PseudoCodeword {
  std::vector<mpq_class> omega;
};

// Validates c_tilde against the lifted parity checks, then averages fibers.
PseudoCodeword pseudo_from_cover(const TannerCover& cover,
                                 const std::vector<std::uint8_t>& c_tilde);

// (M*omega mod 2, is_codeword). Rejects entries where M*omega is not an
// integer in [0, M].
std::pair<std::vector<std::uint8_t>, bool> mod2_projection(const PseudoCodeword& omega,
                                                           std::size_t M,
                                                           const ParityCheckMatrix& H);

// Exponent vectors of the nonzero monomials of the edge zeta function of the
// collapsed normal graph, one variable per bit, expanded to total degree D.
struct ZetaPseudocodewordSet {
  std::size_t num_bits = 0;
  std::uint32_t truncation = 0;
  // graded-lex order; coefficient of the zeta series attached to each vector
  std::vector<std::pair<Exponents, mpz_class>> members;

  bool contains(const Exponents& p) const;
};

// Rejects non-cycle codes. Default budget D = 2n (see pseudocodewords_default_truncation).
ZetaPseudocodewordSet pseudocodewords_from_zeta(const ParityCheckMatrix& H, std::uint32_t D);

inline std::uint32_t pseudocodewords_default_truncation(const ParityCheckMatrix& H) {
  return static_cast<std::uint32_t>(2 * H.cols());
}

// p mod 2 satisfies H c = 0
bool exponent_mod2_is_codeword(const Exponents& p, const ParityCheckMatrix& H);

}  // namespace zetacode
