#include "lsb/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace lsb {

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (auto& [v, e] : m) {
    if (!out.empty()) out += '*';
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // lex: walk variables in name order, larger exponent on the earliest variable wins
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) return false;
    if (i == a.size()) return true;
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) return a[i].second < b[j].second;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      return false;  // a has the earlier variable
    } else {
      return true;
    }
  }
  return false;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

// a / b if b divides a
static std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0;
  for (auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return out;
}

MultiPoly::MultiPoly(const GScalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(const std::string& name) {
  MultiPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, GScalar(1));
  return p;
}

MultiPoly MultiPoly::term(const GScalar& c, Monomial m) {
  std::sort(m.begin(), m.end());
  Monomial merged;
  for (auto& [v, e] : m) {
    if (e == 0) continue;
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  MultiPoly p;
  p.add_term(merged, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const GScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GScalar MultiPoly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? GScalar(0) : it->second;
}

std::optional<GScalar> MultiPoly::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant();
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> out;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m) out.insert(v);
  return out;
}

std::vector<std::string> MultiPoly::ordered_variables() const {
  auto s = variables();
  return {s.begin(), s.end()};
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, lsb::total_degree(m));
  return d;
}

int MultiPoly::degree(const std::string& v) const {
  int d = 0;
  for (auto& [m, c] : terms_)
    for (auto& [w, e] : m)
      if (w == v) d = std::max(d, e);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  MultiPoly out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator/=(const GScalar& c) {
  GScalar inv = c.inverse();
  for (auto& [m, v] : terms_) v *= inv;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        MonomialLess less;
        if (less(x.first, y.first)) return true;
        if (less(y.first, x.first)) return false;
        return x.second < y.second;
      });
}

GScalar MultiPoly::eval(const Assignment& at) const {
  GScalar sum;
  for (auto& [m, c] : terms_) {
    GScalar t = c;
    for (auto& [v, e] : m) {
      auto it = at.find(v);
      if (it == at.end()) throw std::invalid_argument("no value for parameter '" + v + "'");
      t *= pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& at) const {
  MultiPoly out;
  for (auto& [m, c] : terms_) {
    MultiPoly t(c);
    Monomial rest;
    for (auto& [v, e] : m) {
      auto it = at.find(v);
      if (it == at.end())
        rest.emplace_back(v, e);
      else
        t *= lsb::pow(it->second, e);
    }
    t *= MultiPoly::term(GScalar(1), rest);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::substitute(const Assignment& at) const {
  std::map<std::string, MultiPoly> m;
  for (auto& [k, v] : at) m.emplace(k, MultiPoly(v));
  return substitute(m);
}

MultiPoly MultiPoly::re() const {
  MultiPoly out;
  for (auto& [m, c] : terms_) out.add_term(m, c.real_part());
  return out;
}

MultiPoly MultiPoly::im() const {
  MultiPoly out;
  for (auto& [m, c] : terms_) out.add_term(m, c.imag_part());
  return out;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly out;
  for (auto& [m, c] : terms_) out.add_term(m, c.conj());
  return out;
}

std::pair<Monomial, GScalar> MultiPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::coeff(const std::string& v, int k) const {
  MultiPoly out;
  for (auto& [m, c] : terms_) {
    int e = 0;
    Monomial rest;
    for (auto& [w, x] : m) {
      if (w == v)
        e = x;
      else
        rest.emplace_back(w, x);
    }
    if (e == k) out.add_term(rest, c);
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool negative = cs[0] == '-';
    bool compound = !c.is_real() && !c.is_pure_imaginary();
    std::string body;
    if (m.empty()) {
      if (compound) {
        body = "(" + cs + ")";
        negative = false;
      } else {
        body = negative ? cs.substr(1) : cs;
      }
    } else if (compound) {
      body = "(" + cs + ")*" + monomial_str(m);
      negative = false;
    } else {
      std::string mag = negative ? cs.substr(1) : cs;
      body = (mag == "1" ? "" : mag + "*") + monomial_str(m);
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly pow(const MultiPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative power of a polynomial");
  MultiPoly r(1), b = p;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  auto [dm, dc] = d.leading();
  MultiPoly q, r, rest = p;
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading();
    if (auto quo = mono_div(m, dm)) {
      MultiPoly t = MultiPoly::term(c / dc, *quo);
      q += t;
      rest -= t * d;
    } else {
      MultiPoly t = MultiPoly::term(c, m);
      r += t;
      rest -= t;
    }
  }
  return {q, r};
}

std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Monomial monomial_content(const MultiPoly& p) {
  if (p.is_zero()) return {};
  Monomial g = p.terms().begin()->first;
  for (auto& [m, c] : p.terms()) {
    Monomial next;
    for (auto& [v, e] : g)
      for (auto& [w, x] : m)
        if (v == w) next.emplace_back(v, std::min(e, x));
    g = std::move(next);
  }
  return g;
}

MultiPoly strip_monomial_content(const MultiPoly& p) {
  Monomial g = monomial_content(p);
  if (g.empty()) return p;
  MultiPoly out;
  for (auto& [m, c] : p.terms()) out += MultiPoly::term(c, *mono_div(m, g));
  return out;
}

MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p / p.leading().second;
}

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b, const std::string& v) {
  for (const MultiPoly* x : {&a, &b})
    for (auto& w : x->variables())
      if (w != v) throw std::invalid_argument("gcd_univariate: stray variable " + w);
  MultiPoly x = a, y = b;
  while (!y.is_zero()) {
    MultiPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

}  // namespace lsb
