#pragma once

#include <cstddef>
#include <vector>

#include "homology.hpp"
#include "trace.hpp"

namespace crosscap {

// phi(alpha_i) = alpha_i + sum_j c[i-1][j-1] beta_j,
// phi(beta_j) = eps[j-1] beta_{sigma[j-1]}.
struct ResidualForm {
  SurfaceSignature signature;
  std::vector<std::vector<Integer>> c;  // n rows, m columns
  std::vector<int> eps;
  std::vector<int> sigma;

  IntMatrix matrix() const;
};

// Throws NotResidual unless every alpha column is alpha_i plus boundary
// classes, up to multiples of r. Validates the input first.
ResidualForm split_residual(const PuncturedAutomorphism& a);

struct ResidualFactorization {
  MoveWord word;                     // product equals the residual modulo r
  std::size_t boundary_slides = 0;
  Integer initial_complexity;        // sum |c_ij| once sigma is the identity
  Trace trace;
};

ResidualFactorization factor_residual(const ResidualForm& form);

}  // namespace crosscap
