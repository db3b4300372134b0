#ifndef LSB_SOLVER_HPP
#define LSB_SOLVER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsb/bialgebra.hpp"
#include "lsb/linsolve.hpp"

namespace lsb {

// One independent real unknown ft^{ij}_k (i <= j); imaginary components are
// carried as the real coefficient of i.
struct Unknown {
  int i, j, k;
  bool imaginary;
  std::string label() const;  // "ft23_1" (1-based)
};

std::vector<Unknown> enumerate_unknowns(GradedDims dims);

// Coefficient matrix over Q[params of g]; columns follow enumerate_unknowns, rows
// are the real and imaginary parts of every mixed residual component.
MatP msj_linear_system(const SymbolicAlgebra& g);
MatP msj_linear_system(const LieSuperAlgebra& g);

// Dual with the given unknown coordinates (coefficient of i for imaginary unknowns).
SymbolicDual dual_from_coords(GradedDims dims, const std::vector<Unknown>& unknowns, const VecP& coords);
// Inverse of dual_from_coords; nullopt when the dual breaks grading, antisymmetry or reality.
std::optional<VecP> coords_of(const SymbolicDual& d, const std::vector<Unknown>& unknowns);

// A linear component of the quadratic constraint set: substitutions var -> affine form.
struct Branch {
  std::map<std::string, MultiPoly> solution;
  std::vector<MultiPoly> residual;  // nonempty: unsplittable variety left for inspection
  bool is_variety() const { return !residual.empty(); }
  std::string str() const;
};

// Splits a system of polynomial equations whose members factor into linear forms.
// Variables earlier in `priority` are solved for first.
std::vector<Branch> split_branches(const std::vector<MultiPoly>& constraints,
                                   const std::vector<std::string>& priority);

// Linear factors of p over Q (each listed once); nullopt if p does not split.
std::optional<std::vector<MultiPoly>> linear_factors(const MultiPoly& p);

struct SpecialLocus;

struct DualSolutionFamily {
  std::string algebra;
  GradedDims dims;
  std::vector<Unknown> unknowns;
  std::vector<VecP> basis;        // coordinates over unknowns
  std::vector<int> basis_pivots;  // coordinate where each basis vector is the sole contributor
  std::vector<std::string> free_params;
  std::vector<std::string> primal_params;
  std::vector<MultiPoly> quad_constraints;
  std::vector<Branch> branches;
  std::vector<SpecialLocus> special;

  int nullity() const { return static_cast<int>(basis.size()); }
  SymbolicDual basis_dual(int b) const;
  // sum_b param_b * basis_b
  SymbolicDual general() const;
  std::string str() const;
};

struct SpecialLocus {
  std::string param;
  mpq_class value;
  std::string reason;
  std::shared_ptr<DualSolutionFamily> family;
};

DualSolutionFamily solve_duals(const SymbolicAlgebra& g);
DualSolutionFamily solve_duals(const LieSuperAlgebra& g);

struct ConstraintViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Concrete dual at an assignment of free (and primal) parameters; throws
// ConstraintViolation if a quadratic constraint does not vanish.
DualStructure family_specialize(const DualSolutionFamily& fam, const Assignment& at);

// Coefficients c with d = sum c_b basis_b, polynomial in d's own parameters, also
// satisfying the quadratic constraints identically; nullopt otherwise.
std::optional<std::vector<MultiPoly>> family_contains(const DualSolutionFamily& fam, const SymbolicDual& d);

std::vector<std::string> parameter_names(int count, const std::vector<std::string>& avoid);

}  // namespace lsb

#endif
