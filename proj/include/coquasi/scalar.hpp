// Exact arithmetic in the cyclotomic fields Q(zeta_n).
//
// An element is stored over the power basis 1, z, ..., z^(phi(n)-1) reduced
// modulo the n-th cyclotomic polynomial.  Elements of different orders are
// combined in Q(zeta_lcm).  Pure rationals are always stored with order 1,
// and zero is the empty coefficient vector, so equality of two values of
// the same order is plain coefficient comparison.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coquasi {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("DivisionByZero: division by the zero scalar") {}
  explicit DivisionByZero(const std::string& where)
      : std::domain_error("DivisionByZero: division by the zero scalar at " + where) {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Cyclotomic {
  int order = 1;
  int degree = 1;
  std::vector<mpz_class> phi;  // monic, low degree first, size degree+1
};

inline std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                                const std::vector<mpz_class>& den) {
  // den is monic; the division is known to be exact
  std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    mpz_class c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

inline const Cyclotomic& cyclotomic(int n) {
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<Cyclotomic>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic(d).phi);
  }
  auto c = std::make_unique<Cyclotomic>();
  c->order = n;
  c->degree = static_cast<int>(num.size()) - 1;
  c->phi = std::move(num);
  auto& ref = *c;
  cache.emplace(n, std::move(c));
  return ref;
}

// reduce a polynomial with rational coefficients modulo Phi_n, in place
inline void reduce_mod(std::vector<mpq_class>& p, const Cyclotomic& cy) {
  std::size_t d = static_cast<std::size_t>(cy.degree);
  for (std::size_t k = p.size(); k-- > d;) {
    if (sgn(p[k]) == 0) continue;
    mpq_class c = p[k];
    for (std::size_t j = 0; j < d; ++j)
      if (cy.phi[j] != 0) p[k - d + j] -= c * cy.phi[j];
    p[k] = 0;
  }
  if (p.size() > d) p.resize(d);
  while (p.size() < d) p.emplace_back(0);
}

}  // namespace detail

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) {
    if (v != 0) coeffs_.emplace_back(v);
  }
  Scalar(int v) : Scalar(static_cast<long>(v)) {}
  Scalar(const mpq_class& v) {
    if (sgn(v) != 0) coeffs_.push_back(v);
  }
  static Scalar rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  // element sum_k coeffs[k] z^k of Q(zeta_n); coeffs may be any length
  static Scalar from_coeffs(int n, std::vector<mpq_class> coeffs) {
    Scalar s;
    s.order_ = n;
    const auto& cy = detail::cyclotomic(n);
    for (auto& c : coeffs) c.canonicalize();
    detail::reduce_mod(coeffs, cy);
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }

  // zeta_n; for n = 2 this is -1
  static Scalar primitive_root(int n) {
    if (n == 1) return Scalar(1);
    std::vector<mpq_class> c(2, 0);
    c[1] = 1;
    return from_coeffs(n, std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return order_ == 1 && coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return order_ == 1; }
  int order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class rational_value() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
  }

  // the same element as a member of Q(zeta_m); requires order() | m
  std::vector<mpq_class> coeffs_in(int m) const {
    const auto& cy = detail::cyclotomic(m);
    std::vector<mpq_class> out;
    if (is_zero()) {
      out.assign(cy.degree, 0);
      return out;
    }
    if (m % order_ != 0) throw std::invalid_argument("scalar order does not divide target order");
    int step = m / order_;
    out.assign(std::max<std::size_t>(cy.degree, (coeffs_.size() - 1) * step + 1), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k * step] = coeffs_[k];
    detail::reduce_mod(out, cy);
    return out;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.order_ == 1 && b.order_ == 1) return Scalar(mpq_class(a.coeffs_[0] + b.coeffs_[0]));
    int m = std::lcm(a.order_, b.order_);
    auto x = a.order_ == m ? a.coeffs_ : a.coeffs_in(m);
    auto y = b.order_ == m ? b.coeffs_ : b.coeffs_in(m);
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t k = 0; k < y.size(); ++k) x[k] += y[k];
    return from_reduced(m, std::move(x));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.order_ == 1) return b.scaled(a.coeffs_[0]);
    if (b.order_ == 1) return a.scaled(b.coeffs_[0]);
    int m = std::lcm(a.order_, b.order_);
    auto x = a.order_ == m ? a.coeffs_ : a.coeffs_in(m);
    auto y = b.order_ == m ? b.coeffs_ : b.coeffs_in(m);
    std::vector<mpq_class> p(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (sgn(y[j]) != 0) p[i + j] += x[i] * y[j];
    }
    detail::reduce_mod(p, detail::cyclotomic(m));
    return from_reduced(m, std::move(p));
  }

  Scalar inverse() const;

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.is_zero() || b.is_zero()) return false;  // nonzero values are never zero
    int m = std::lcm(a.order_, b.order_);
    return a.coeffs_in(m) == b.coeffs_in(m);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // a total order used only for deterministic tie-breaking
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    int m = std::lcm(a.order_, b.order_);
    auto x = a.coeffs_in(m), y = b.coeffs_in(m);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] < y[k]) return true;
      if (y[k] < x[k]) return false;
    }
    return false;
  }

  // "c0 + c1*z + c2*z^2" over Q(zeta_m); m must be a multiple of order()
  std::string to_string(int m = 0) const {
    if (m == 0) m = order_;
    if (is_zero()) return "0";
    auto c = coeffs_in(m);
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (sgn(c[k]) == 0) continue;
      mpq_class v = c[k];
      bool neg = sgn(v) < 0;
      if (neg) v = -v;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string num = v.get_str();
      if (k == 0) {
        out += num;
      } else {
        if (v != 1) out += num + "*";
        out += "z";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  // parses the output of to_string (also accepts "z^k" with k >= degree and
  // repeated terms), interpreting z as zeta_n
  static Scalar parse(const std::string& text, int n);

 private:
  static Scalar from_reduced(int m, std::vector<mpq_class> c) {
    Scalar s;
    s.order_ = m;
    s.coeffs_ = std::move(c);
    s.normalize();
    return s;
  }
  Scalar scaled(const mpq_class& q) const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }
  void normalize() {
    std::size_t last = coeffs_.size();
    while (last > 0 && sgn(coeffs_[last - 1]) == 0) --last;
    if (last == 0) {
      coeffs_.clear();
      order_ = 1;
    } else if (last == 1) {
      coeffs_.resize(1);
      order_ = 1;
    }
  }

  int order_ = 1;
  std::vector<mpq_class> coeffs_;
};

inline Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) return Scalar(mpq_class(1 / coeffs_[0]));
  // solve (a * y = 1) as a linear system in the coefficients of y
  const auto& cy = detail::cyclotomic(order_);
  int d = cy.degree;
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, 0));
  std::vector<mpq_class> col(coeffs_);
  col.resize(d, 0);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
    // col <- col * z mod Phi
    col.insert(col.begin(), mpq_class(0));
    detail::reduce_mod(col, cy);
  }
  m[0][d] = 1;
  for (int c = 0, r = 0; c < d; ++c, ++r) {
    int p = r;
    while (p < d && sgn(m[p][c]) == 0) ++p;
    if (p == d) throw DivisionByZero();  // unreachable in a field
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (int k = c; k <= d; ++k) m[r][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      mpq_class f = m[i][c];
      for (int k = c; k <= d; ++k) m[i][k] -= f * m[r][k];
    }
  }
  std::vector<mpq_class> y(d);
  for (int i = 0; i < d; ++i) y[i] = m[i][d];
  return from_reduced(order_, std::move(y));
}

namespace detail {

inline mpq_class parse_rational(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  if (s.empty()) throw ParseError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("malformed rational \"" + raw + "\"");
    return mpq_class(mpz_class(strip_plus(s)));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b)) throw ParseError("malformed rational \"" + raw + "\"");
  mpz_class den(strip_plus(b));
  if (den == 0) throw DivisionByZero();
  mpq_class q(mpz_class(strip_plus(a)), den);
  q.canonicalize();
  return q;
}

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text, int n) {
  // split into signed terms
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw ParseError("empty scalar");
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '/' && s[i - 1] != '^') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  terms.push_back(cur);
  std::vector<mpq_class> c(1, 0);
  for (auto t : terms) {
    if (t.empty() || t == "+" || t == "-") throw ParseError("malformed scalar \"" + text + "\"");
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      t = t.substr(1);
    }
    mpq_class coef = 1;
    std::size_t power = 0;
    auto zpos = t.find('z');
    if (zpos == std::string::npos) {
      coef = detail::parse_rational(t);
    } else {
      std::string head = t.substr(0, zpos), tail = t.substr(zpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("malformed scalar \"" + text + "\"");
        coef = detail::parse_rational(head.substr(0, head.size() - 1));
      }
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2) throw ParseError("malformed scalar \"" + text + "\"");
        std::string e = tail.substr(1);
        for (char ch : e)
          if (ch < '0' || ch > '9') throw ParseError("malformed exponent in \"" + text + "\"");
        power = std::stoul(e);
      }
      if (n == 1) power = 0;
    }
    if (neg) coef = -coef;
    if (c.size() <= power) c.resize(power + 1, 0);
    c[power] += coef;
  }
  return from_coeffs(n, std::move(c));
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coquasi
