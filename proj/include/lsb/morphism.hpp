#ifndef LSB_MORPHISM_HPP
#define LSB_MORPHISM_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsb/bialgebra.hpp"

namespace lsb {

struct InvalidTransformation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// New basis X'_i = M_ia X_a: f'^k_ij = M_ia M_jb f^c_ab (M^-1)_ck.
LieSuperAlgebra transport(const LieSuperAlgebra& g, const SuperMatrix& M);

struct MorphismCheck {
  bool ok = false;
  Residual<GScalar> residual;  // transported minus target, nonzero entries as (i,j,k,0)
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

// Throws InvalidTransformation when A fails is_transformation_matrix.
MorphismCheck verify_automorphism(const LieSuperAlgebra& g, const SuperMatrix& A);

// Transport of src through C equals dst. Throws InvalidTransformation for a
// singular or invalid C and std::invalid_argument for mismatched dims.
MorphismCheck verify_isomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, const SuperMatrix& C);
MorphismCheck verify_isomorphism(const DualStructure& src, const DualStructure& dst, const SuperMatrix& C);

// Dual constants after X~' = A^{-st} X~. With `primal`, A is first checked to be
// an automorphism of it (InvalidTransformation otherwise).
DualStructure transform_dual(const DualStructure& d, const SuperMatrix& A, const LieSuperAlgebra* primal = nullptr);

struct AutFamily {
  std::string algebra;
  GradedDims dims;
  std::vector<std::string> params;
  MatP shape;
  std::vector<MultiPoly> nonzero;  // each must not vanish

  SuperMatrix at(const Assignment& a) const;
  bool admissible(const Assignment& a) const;
  // entry (r, c) equal to the bare parameter, or nullopt
  std::optional<std::pair<int, int>> pivot(const std::string& param) const;
};

// Parameters read off the pivot entries, then every entry and condition checked.
std::optional<Assignment> aut_membership(const AutFamily& fam, const SuperMatrix& M);

struct NonWitness : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EquivalenceResult {
  bool equivalent = false;
  SuperMatrix relation;                // B2 B1^-1
  SuperMatrix candidate;               // its inverse supertranspose, tested against Aut(g)
  std::optional<Assignment> membership;
};

// B1, B2 carry a common reference dual onto d1 and d2 (checked, NonWitness otherwise).
EquivalenceResult bialgebra_equivalent(const LieSuperAlgebra& g, const DualStructure& d1, const DualStructure& d2,
                                       const SuperMatrix& B1, const SuperMatrix& B2, const AutFamily& fam);

// Heuristic: block-diagonal C with entries p/q, |p|,|q| <= bound, first hit in a fixed
// enumeration order, giving up after `budget` candidates.
std::optional<SuperMatrix> search_isomorphism(const LieSuperAlgebra& src, const LieSuperAlgebra& dst, int bound = 4,
                                              long budget = 2000000);

}  // namespace lsb

#endif
