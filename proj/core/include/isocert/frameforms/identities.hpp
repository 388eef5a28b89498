#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isocert/frameforms/forms.hpp"

namespace isocert::frameforms {

/// omega_ij expanded in the coframe: sum_k h_ijk / (lam_i - lam_j) omega_k.
DiffForm connection_form(int i, int j, bool reduce_diagonal = false);

/// R_ijkl for a diagonal shape operator: 1 + lam_i lam_j on {i,j} = {k,l} up to sign, else 0.
RatFn gauss_component(int i, int j, int k, int l);

/// h_11i, h_22i, h_33i as coefficient * h_44i.
struct DiagonalRelations {
  int i = 0;
  RatFn c1{exactalg::frame_symbols()};  // multipliers of h_44i
  RatFn c2{exactalg::frame_symbols()};
  RatFn c3{exactalg::frame_symbols()};
  RatFn h11i() const;
  RatFn h22i() const;
  RatFn h33i() const;
};
DiagonalRelations diagonal_derivative_relations(int i);

/// d of a polynomial in lam1..lam4 after eliminating the diagonal derivatives.
DiffForm scalar_differential(const MultiPoly& expr);

/// d of a generator expression, expanded and canonicalized.
DiffForm exterior_derivative(const FormExpr& form, CurvatureMode mode = CurvatureMode::Symbolic);

struct IdentityReport {
  std::string name;
  std::string anchor;  // label of the printed formula being checked
  CurvatureMode mode = CurvatureMode::Symbolic;
  RatFn engine{exactalg::frame_symbols()};
  RatFn stated{exactalg::frame_symbols()};
  RatFn residual{exactalg::frame_symbols()};
  bool pass = false;
  /// Named coefficient functions read off the computation.
  std::vector<std::pair<std::string, RatFn>> extracted;
  /// Side conditions; pass requires all of them.
  std::vector<std::pair<std::string, bool>> checks;
};

/// dtheta12..dtheta34, dPhi, omega1_wedge_Phi..omega4_wedge_Phi, dg_wedge_Phi, df_wedge_Phi.
const std::vector<std::string>& identity_names();

IdentityReport verify_identity(const std::string& name, CurvatureMode mode = CurvatureMode::Symbolic);

/// All identities in the order of identity_names(); threads <= 1 runs serially.
std::vector<IdentityReport> verify_all(CurvatureMode mode, unsigned threads = 1);

std::string to_string(CurvatureMode mode);

}  // namespace isocert::frameforms
