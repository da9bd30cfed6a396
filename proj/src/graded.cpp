#include "cusp/graded.hpp"

#include "cusp/errors.hpp"

namespace cusp {

void GradedRing::declare(const std::string& name, std::int64_t weight) {
  auto it = w_.find(name);
  if (it != w_.end() && it->second != weight) throw ParameterError("generator '" + name + "' redeclared with another weight");
  w_[name] = weight;
}

std::int64_t GradedRing::weight(const std::string& name) const {
  auto it = w_.find(name);
  if (it == w_.end()) throw ParameterError("undeclared generator '" + name + "'");
  return it->second;
}

std::int64_t GradedRing::weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (auto& [g, e] : m) w += e * weight(g);
  return w;
}

GradedElem GradedElem::constant(const Rat& c) { return term(c, {}); }
GradedElem GradedElem::gen(const std::string& name, std::int64_t exp) { return term(1, {{name, exp}}); }

GradedElem GradedElem::term(const Rat& c, Monomial m) {
  GradedElem r;
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  if (c != 0) r.t_[std::move(m)] = c;
  return r;
}

GradedElem GradedElem::operator+(const GradedElem& o) const {
  GradedElem r = *this;
  for (auto& [m, c] : o.t_) {
    Rat& x = r.t_[m];
    x += c;
    if (x == 0) r.t_.erase(m);
  }
  return r;
}

GradedElem GradedElem::operator-(const GradedElem& o) const { return *this + o.scale(-1); }

GradedElem GradedElem::operator*(const GradedElem& o) const {
  GradedElem r;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) {
      Monomial m = m1;
      for (auto& [g, e] : m2) m[g] += e;
      r = r + term(c1 * c2, std::move(m));
    }
  return r;
}

GradedElem GradedElem::scale(const Rat& c) const {
  GradedElem r;
  if (c == 0) return r;
  for (auto& [m, x] : t_) r.t_[m] = x * c;
  return r;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (auto& [g, e] : m) {
    if (!s.empty()) s += "*";
    s += g;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string GradedElem::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : t_) {
    if (!s.empty()) s += " + ";
    s += (c == 1 && !m.empty()) ? monomial_str(m) : "(" + c.str() + ")" + (m.empty() ? "" : "*" + monomial_str(m));
  }
  return s;
}

std::variant<std::int64_t, Inhomogeneous> graded_weight_check(const GradedRing& R, const GradedElem& e) {
  if (e.is_zero()) return std::int64_t{0};
  Inhomogeneous rep;
  rep.reference_weight = R.weight(e.terms().begin()->first);
  for (auto& [m, c] : e.terms()) {
    std::int64_t w = R.weight(m);
    if (w != rep.reference_weight) rep.offending.push_back({m, w});
  }
  if (rep.offending.empty()) return rep.reference_weight;
  return rep;
}

}  // namespace cusp
