#include "lsb/bialgebra.hpp"

namespace lsb {

DualStructure specialize(const SymbolicDual& d, const Assignment& at) {
  return DualStructure(d.name(), d.dims(), d.tensor().map([&](const MultiPoly& p) { return p.eval(at); }));
}

SymbolicDual lift(const DualStructure& d) {
  SymbolicDual out(d.name(), d.dims(), d.tensor().map([](const GScalar& s) { return MultiPoly(s); }));
  out.params = d.params;
  return out;
}

std::optional<DualStructure> as_numeric(const SymbolicDual& d) {
  auto g = as_numeric(dual_algebra(d));
  if (!g) return std::nullopt;
  return as_dual(*g);
}

}  // namespace lsb
