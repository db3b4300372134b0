#include "lsb/params.hpp"

#include <algorithm>

namespace lsb {

ParamDomain ParamDomain::nonzero() {
  ParamDomain d;
  d.excluded.push_back(0);
  return d;
}

ParamDomain ParamDomain::set(std::vector<mpq_class> values) {
  ParamDomain d;
  d.kind = Kind::Set;
  d.members = std::move(values);
  return d;
}

bool ParamDomain::contains(const mpq_class& x) const {
  if (kind == Kind::Set) return std::find(members.begin(), members.end(), x) != members.end();
  if (lo && (lo_open ? x <= *lo : x < *lo)) return false;
  if (hi && (hi_open ? x >= *hi : x > *hi)) return false;
  return std::find(excluded.begin(), excluded.end(), x) == excluded.end();
}

std::string ParamDomain::str() const {
  auto list = [](const std::vector<mpq_class>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + "}";
  };
  if (kind == Kind::Set) return list(members);
  std::string s = lo_open ? "(" : "[";
  s += lo ? lo->get_str() : "-inf";
  s += ",";
  s += hi ? hi->get_str() : "inf";
  s += hi_open ? ")" : "]";
  if (!excluded.empty()) s += " \\ " + list(excluded);
  return s;
}

std::vector<mpq_class> default_samples(const ParamDomain& d) {
  if (d.kind == ParamDomain::Kind::Set) return d.members;
  std::vector<mpq_class> probes = {mpq_class(-1), mpq_class(-1, 2), mpq_class(1, 2), mpq_class(1)};
  std::vector<mpq_class> out;
  for (auto& p : probes)
    if (d.contains(p)) out.push_back(p);
  if (out.empty()) {
    for (auto p : {mpq_class(2), mpq_class(-2), mpq_class(0), mpq_class(3), mpq_class(-3)})
      if (d.contains(p)) out.push_back(p);
  }
  return out;
}

std::vector<mpq_class> ParamDecl::effective_samples() const {
  if (!samples.empty()) return samples;
  return default_samples(domain);
}

std::vector<Assignment> sample_grid(const std::vector<ParamDecl>& decls) {
  std::vector<Assignment> grid{Assignment{}};
  for (auto& d : decls) {
    std::vector<Assignment> next;
    for (auto& a : grid)
      for (auto& v : d.effective_samples()) {
        Assignment b = a;
        b[d.name] = GScalar(v);
        next.push_back(std::move(b));
      }
    grid = std::move(next);
  }
  return grid;
}

const ParamDecl* find_param(const std::vector<ParamDecl>& decls, const std::string& name) {
  for (auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace lsb
