#pragma once

#include "phasedyn/operator.hpp"
#include "phasedyn/spin.hpp"

namespace phasedyn {

/// Standard (2j+1)-dimensional irrep. Basis ascending in m: index i = m + j.
/// Normalisation: <j,m+1|J+|j,m> = sqrt((j-m)(j+m+1)), so [J+, J-] = 2 J0.
struct Su2Rep {
  Spin j;
  Operator Jp;
  Operator Jm;
  Operator J0;

  Index dim() const { return j.dim(); }
};

Su2Rep build_su2(Spin j);

/// J- J+ + J0(J0 + 1). Throws Error("postcondition") if the other ordering
/// J+ J- + J0(J0 - 1) or j(j+1) I disagree beyond tol.
Operator casimir(const Su2Rep& rep, const Tolerance& tol = {});

inline constexpr const char* kSpinBasis = "ascending m from -j to +j (index i = m + j)";

} // namespace phasedyn
