#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/poly.hpp"

namespace brsieve {

// V(F) in the affine line over Q, F squarefree, with a (possibly coarser than
// irreducible) factorization.
struct ZeroDimScheme {
  ZPoly F;
  std::vector<ZPoly> factors;

  std::vector<int> degrees() const;
};

// Validates squarefreeness and the product; rational roots are split off as
// linear factors of the declared pieces.
ZeroDimScheme make_zero_dim_scheme(const std::vector<ZPoly>& declared_factors);

enum class Solubility { kSoluble, kInsoluble, kIndeterminate };

std::string to_string(Solubility s);

struct LocalEvidence {
  std::string place;  // "7" or "real"
  Solubility result = Solubility::kIndeterminate;
  std::string witness;  // e.g. "x = 2 mod 7, v(F) = 1 > 2 v(F') = 0"
  unsigned depth = 0;   // lifting depth reached
  unsigned depth_bound = 0;
};

// Hensel search for a root of F in Q_p. The lifting depth is bounded by
// 2 v_p(disc F) + 1; candidates surviving the bound give kIndeterminate.
LocalEvidence local_solubility(const ZeroDimScheme& T, std::uint64_t p);
LocalEvidence local_solubility_real(const ZeroDimScheme& T);

}  // namespace brsieve
