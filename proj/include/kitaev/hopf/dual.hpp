#pragma once

#include "kitaev/hopf/hopf_algebra.hpp"

namespace kitaev::hopf {

// Dual Hopf algebra on the dual basis: multiplication is the transpose of
// the comultiplication and vice versa, unit and counit swap, the antipode
// transposes.  Applying it twice reproduces the original constants.
inline HopfAlgebra dual(const HopfAlgebra& H) {
  const int n = H.dim;
  HopfAlgebra D;
  D.field = H.field;
  D.dim = n;
  for (const std::string& l : H.basis) D.basis.push_back(l + "*");
  D.mul.assign(n, std::vector<Vec>(n, Vec(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) D.mul[i][j][k] = H.comul[k].at(i, j);
  D.unit = H.counit;
  D.comul.assign(n, Matrix(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) D.comul[k].at(i, j) = H.mul[i][j][k];
  D.counit = H.unit;
  D.antipode = exact::transpose(H.antipode);
  D.antipode_inv = exact::transpose(H.antipode_inv);
  return D;
}

}  // namespace kitaev::hopf
