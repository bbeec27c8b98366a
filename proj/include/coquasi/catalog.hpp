// Built-in structures: the coquasi-Hopf algebras H(2) and H(3), cyclic group
// algebras, and their twisted group algebras over elementary abelian 2-groups.
#pragma once

#include "coquasi/coquasi.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace coquasi {

struct UnknownName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace catalog {

inline std::vector<std::string> cyclic_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  return l;
}

// group algebra of a finite group given by its multiplication table
inline CoquasiBialgebra group_bialgebra(const std::vector<std::string>& labels,
                                        const std::vector<std::vector<int>>& table, int identity) {
  int n = static_cast<int>(labels.size());
  Matrix m(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(table[i][j], i * n + j) = Scalar(1);
  Coalgebra c = Coalgebra::grouplike(Space(labels));
  Functional w = Functional::counit_power(c, 3);
  return CoquasiBialgebra(c, std::move(m), unit_vec(n, identity), w, w);
}

// a grouplike-spanned coquasi-Hopf algebra with S = group inverse
inline CoquasiHopf grouplike_hopf(CoquasiBialgebra base, const std::vector<int>& inverse_of,
                                  const Vec& alpha, const Vec& beta) {
  int n = base.dim();
  Matrix S(n, n);
  for (int i = 0; i < n; ++i) S(inverse_of[i], i) = Scalar(1);
  Functional a(1, n), b(1, n);
  for (int i = 0; i < n; ++i) {
    a.values(0, i) = alpha[i];
    b.values(0, i) = beta[i];
  }
  return CoquasiHopf(std::move(base), std::move(S), std::move(a), std::move(b));
}

inline CoquasiHopf with_solved_f(CoquasiHopf H) {
  auto f = solve_twist_f(H);
  if (!f) throw std::logic_error("builtin structure has no twist f: " + f.diagnostic);
  return H.with_twist_f(std::move(*f.value));
}

inline CoquasiHopf cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return with_solved_f(grouplike_hopf(group_bialgebra(cyclic_labels(n), t, 0), inv, Vec(n, Scalar(1)),
                                      Vec(n, Scalar(1))));
}

// H(2): k[C_2] with omega(x,x,x) = -1, S = id, alpha(x) = -1, beta = eps
inline CoquasiHopf h2() {
  std::vector<std::vector<int>> t{{0, 1}, {1, 0}};
  CoquasiBialgebra g = group_bialgebra(cyclic_labels(2), t, 0);
  Functional w = g.omega();
  w.at({1, 1, 1}) = Scalar(-1);
  CoquasiBialgebra base(g.coalgebra(), g.mult(), g.unit(), w);
  return with_solved_f(grouplike_hopf(std::move(base), {0, 1}, Vec{Scalar(1), Scalar(-1)}, Vec{Scalar(1), Scalar(1)}));
}

// the cube root of unity q inside Q(zeta_n), 3 | n
inline Scalar cube_root(int field_order) {
  if (field_order % 3 != 0)
    throw std::invalid_argument("H3 needs a cyclotomic field whose order is divisible by 3, got " +
                                std::to_string(field_order));
  return Scalar::primitive_root(field_order).pow(field_order / 3);
}

// H(3): k[C_3] with
//   omega(x,x²,x) = omega(x²,x,x) = omega(x²,x²,x) = q^-1,
//   omega(x,x²,x²) = omega(x²,x,x²) = omega(x²,x²,x²) = q,
// trivial elsewhere; S(x) = x², alpha = eps, beta(x) = q, beta(x²) = q^-1
inline CoquasiHopf h3(int field_order = 3) {
  Scalar q = cube_root(field_order), qi = q.inverse();
  std::vector<std::vector<int>> t{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CoquasiBialgebra g = group_bialgebra(cyclic_labels(3), t, 0);
  Functional w = g.omega();
  w.at({1, 2, 1}) = qi;
  w.at({2, 1, 1}) = qi;
  w.at({2, 2, 1}) = qi;
  w.at({1, 2, 2}) = q;
  w.at({2, 1, 2}) = q;
  w.at({2, 2, 2}) = q;
  CoquasiBialgebra base(g.coalgebra(), g.mult(), g.unit(), w);
  return with_solved_f(grouplike_hopf(std::move(base), {0, 2, 1}, Vec(3, Scalar(1)), Vec{Scalar(1), q, qi}));
}

// the elementary abelian group C_2^n with elements labelled by their support
inline std::vector<std::string> c2n_labels(int n) {
  std::vector<std::string> l;
  for (int m = 0; m < (1 << n); ++m) {
    if (m == 0) {
      l.push_back("1");
      continue;
    }
    std::string s = "e";
    for (int i = 0; i < n; ++i)
      if (m & (1 << i)) s += std::to_string(i + 1);
    l.push_back(s);
  }
  return l;
}

inline CoquasiHopf elementary_abelian(int n) {
  int N = 1 << n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<int> inv(N);
  for (int i = 0; i < N; ++i) {
    inv[i] = i;
    for (int j = 0; j < N; ++j) t[i][j] = i ^ j;
  }
  return with_solved_f(grouplike_hopf(group_bialgebra(c2n_labels(n), t, 0), inv, Vec(N, Scalar(1)), Vec(N, Scalar(1))));
}

// the Clifford-type twist tau(a, b) = (-1)^{sum_{i <= j} a_i b_j} on C_2^n
inline Functional clifford_twist(int n) {
  int N = 1 << n;
  Functional tau(2, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s += ((a >> i) & 1) * ((b >> j) & 1);
      tau.at({a, b}) = Scalar(s % 2 ? -1 : 1);
    }
  return tau;
}

// parses "H2", "H3", "C<n>" / "group_C<n>", "group_C2^<n>" into a coquasi-Hopf algebra
inline CoquasiHopf builtin_hopf(const std::string& name, int field_order = 0) {
  if (name == "H2") return h2();
  if (name == "H3") return h3(field_order ? field_order : 3);
  std::string n = name;
  if (n.rfind("group_", 0) == 0) n = n.substr(6);
  if (n.rfind("C2^", 0) == 0 && n.size() == 4 && n[3] >= '1' && n[3] <= '6') return elementary_abelian(n[3] - '0');
  if (n.size() > 1 && n[0] == 'C' && n.find('^') == std::string::npos) {
    std::string digits = n.substr(1);
    bool ok = !digits.empty() && digits.size() < 4;
    for (char ch : digits) ok = ok && ch >= '0' && ch <= '9';
    if (ok && std::stoi(digits) >= 1) return cyclic_group(std::stoi(digits));
  }
  throw UnknownName("UnknownName: no built-in coquasi-Hopf algebra called \"" + name + "\"");
}

}  // namespace catalog
}  // namespace coquasi
