#ifndef LSB_MULTIPOLY_HPP
#define LSB_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsb/gscalar.hpp"

namespace lsb {

// Sorted (variable, exponent) list; exponents > 0.
using Monomial = std::vector<std::pair<std::string, int>>;

int total_degree(const Monomial& m);
std::string monomial_str(const Monomial& m);

// graded lexicographic order
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Assignment = std::map<std::string, GScalar>;

// Sparse multivariate polynomial with Gaussian-rational coefficients. Variables are
// assumed real, so re()/im() split coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, GScalar, MonomialLess>;

  MultiPoly() = default;
  MultiPoly(const GScalar& c);  // NOLINT
  MultiPoly(int c) : MultiPoly(GScalar(c)) {}  // NOLINT
  static MultiPoly var(const std::string& name);
  static MultiPoly term(const GScalar& c, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GScalar constant() const;  // constant term
  std::set<std::string> variables() const;
  int total_degree() const;
  int degree(const std::string& v) const;
  std::vector<std::string> ordered_variables() const;
  // The polynomial has no free variables and equals c?
  std::optional<GScalar> as_constant() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator/=(const GScalar& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator/(MultiPoly a, const GScalar& c) { return a /= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b);

  GScalar eval(const Assignment& at) const;
  MultiPoly substitute(const std::map<std::string, MultiPoly>& at) const;
  MultiPoly substitute(const Assignment& at) const;

  MultiPoly re() const;
  MultiPoly im() const;
  MultiPoly conj() const;

  // leading term under grlex; poly must be nonzero
  std::pair<Monomial, GScalar> leading() const;
  // coefficient of v^k viewed as a polynomial in v
  MultiPoly coeff(const std::string& v, int k) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const GScalar& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly pow(const MultiPoly& p, int e);

// Multivariate division with remainder in grlex order.
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& d);
std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d);

// Largest monomial dividing every term.
Monomial monomial_content(const MultiPoly& p);
MultiPoly strip_monomial_content(const MultiPoly& p);

// Univariate gcd in v (all other variables must be absent); result monic, gcd(0,0)=0.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, const std::string& v);

// Scales p so the leading coefficient is 1.
MultiPoly monic(const MultiPoly& p);

}  // namespace lsb

#endif
