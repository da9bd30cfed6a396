#include "cusp/rational.hpp"

#include <cctype>

#include "cusp/errors.hpp"

namespace cusp {

Int ipow(const Int& b, std::uint64_t e) {
  Int r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

Rat rpow(const Rat& b, std::int64_t e) {
  if (e >= 0) {
    return Rat(ipow(boost::multiprecision::numerator(b), static_cast<std::uint64_t>(e)),
               ipow(boost::multiprecision::denominator(b), static_cast<std::uint64_t>(e)));
  }
  if (b == 0) throw DomainError("negative power of zero");
  return Rat(1) / rpow(b, -e);
}

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw DomainError("zero denominator");
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw ParameterError("bad rational '" + s + "'");
  }
}

bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

QPoly QPoly::monomial(const Rat& c, int n) {
  std::vector<Rat> v(n + 1, Rat(0));
  v[n] = c;
  return QPoly(std::move(v));
}

int QPoly::low() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (c_.empty() || o.c_.empty()) return QPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scale(const Rat& c) const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= c;
  return QPoly(std::move(r));
}

QPoly QPoly::shift(int n) const {
  if (c_.empty()) return *this;
  std::vector<Rat> r(n, Rat(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (deg() < d.deg()) return {QPoly(), *this};
  std::vector<Rat> r = c_;
  std::vector<Rat> qt(c_.size() - d.c_.size() + 1, Rat(0));
  const std::size_t n = d.c_.size();
  for (std::size_t k = r.size(); k-- > n - 1;) {
    Rat c = r[k] / d.lead();
    std::size_t s = k - (n - 1);
    qt[s] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) r[s + i] -= c * d.c_[i];
  }
  r.resize(n - 1);
  return {QPoly(std::move(qt)), QPoly(std::move(r))};
}

Rat QPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string QPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    std::string body;
    if (i == 0) {
      body = a.str();
    } else {
      std::string x = var + (i > 1 ? "^" + std::to_string(i) : "");
      body = (a == 1 ? "" : a.str() + "*") + x;
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? "-" : "+") + body;
  }
  return out;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scale(Rat(1) / a.lead());
}

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.deg() > 0) {
    num = num / g;
    den = den / g;
  }
  Rat l = den[den.low()];
  num_ = num.scale(Rat(1) / l);
  den_ = den.scale(Rat(1) / l);
}

RatFunc RatFunc::monomial(const Rat& c, std::int64_t n) {
  if (n >= 0) return RatFunc(QPoly::monomial(c, static_cast<int>(n)));
  return RatFunc(QPoly::constant(c), QPoly::monomial(1, static_cast<int>(-n)));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::shift(std::int64_t n) const {
  if (n >= 0) return RatFunc(num_.shift(static_cast<int>(n)), den_);
  return RatFunc(num_, den_.shift(static_cast<int>(-n)));
}

RatFunc RatFunc::pow(std::int64_t n) const {
  if (n < 0) return (RatFunc::constant(1) / *this).pow(-n);
  RatFunc r = RatFunc::constant(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.eval(x) / d;
}

std::vector<std::pair<std::int64_t, Rat>> RatFunc::expand(std::int64_t upto) const {
  const int k = den_.low();  // den = S^k * u with u(0) = 1
  std::vector<std::pair<std::int64_t, Rat>> out;
  std::int64_t start = num_.is_zero() ? 0 : num_.low() - k;
  if (upto < start) return out;
  const std::int64_t n = upto + k + 1;  // coefficients of num/u needed: exponents 0..upto+k
  std::vector<Rat> s(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), Rat(0));
  for (std::int64_t i = 0; i < n; ++i) {
    Rat acc = num_[static_cast<int>(i)];
    for (int j = 1; j <= den_.deg() - k && j <= i; ++j) acc -= den_[k + j] * s[i - j];
    s[i] = acc;  // u(0) = 1
  }
  for (std::int64_t e = start; e <= upto; ++e) out.push_back({e, s[e + k]});
  return out;
}

Rat RatFunc::coeff(std::int64_t n) const {
  auto ex = expand(n);
  if (ex.empty() || ex.back().first != n) return Rat(0);
  return ex.back().second;
}

std::string RatFunc::str(const std::string& var) const {
  std::string n = num_.str(var);
  if (den_.deg() == 0) return n;
  if (num_.deg() > 0 && n.find_first_of("+-", 1) != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.str(var) + ")";
}

}  // namespace cusp
