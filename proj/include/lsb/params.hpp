#ifndef LSB_PARAMS_HPP
#define LSB_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lsb/gscalar.hpp"
#include "lsb/multipoly.hpp"

namespace lsb {

// Admissible values of a rational parameter: an interval minus finitely many
// points, or a finite set.
struct ParamDomain {
  enum class Kind { Interval, Set };
  Kind kind = Kind::Interval;
  std::optional<mpq_class> lo, hi;  // nullopt = infinite
  bool lo_open = true, hi_open = true;
  std::vector<mpq_class> excluded;
  std::vector<mpq_class> members;

  static ParamDomain reals() { return {}; }
  static ParamDomain nonzero();
  static ParamDomain set(std::vector<mpq_class> values);

  bool contains(const mpq_class& x) const;
  std::string str() const;
  friend bool operator==(const ParamDomain&, const ParamDomain&) = default;
};

struct ParamDecl {
  std::string name;
  ParamDomain domain;
  std::vector<mpq_class> samples;  // empty: use the domain's default samples

  // explicit samples, else members of a finite set, else the defaults filtered by the domain
  std::vector<mpq_class> effective_samples() const;
  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

// Default rational probes used when a declaration gives none.
std::vector<mpq_class> default_samples(const ParamDomain& d);

// Cartesian product of effective samples; one empty assignment when decls is empty.
std::vector<Assignment> sample_grid(const std::vector<ParamDecl>& decls);

const ParamDecl* find_param(const std::vector<ParamDecl>& decls, const std::string& name);

}  // namespace lsb

#endif
