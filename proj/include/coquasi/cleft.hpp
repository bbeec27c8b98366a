// Cleaving systems (γ, δ) for a comodule algebra over a coquasi-Hopf algebra,
// the passage cleft <-> crossed product with invertible cocycle in both
// directions, and the change of cleaving system by a B-valued 𝔞.
#pragma once

#include "coquasi/crossed.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace coquasi {

struct InvalidCleaving : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MissingSigmaInverse : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// γ, δ : H -> A stored as dim A × dim H matrices
struct CleavingSystem {
  ComoduleAlgebra A;
  Matrix gamma, delta;
};

namespace detail {

inline const CoquasiHopf& hopf_of(const ComoduleAlgebra& A) { return A.host().hopf(); }

// the host with its twist f, solving for f when the host does not carry one
inline TwistF twist_f_of(const CoquasiHopf& H) {
  if (H.twist_f()) return *H.twist_f();
  auto f = solve_twist_f(H);
  if (!f) throw std::logic_error("no twist f for this host: " + f.diagnostic);
  return *f.value;
}

}  // namespace detail

inline Report check_cleaving(const CleavingSystem& cs) {
  Report r;
  r.subject = "cleaving system";
  const ComoduleAlgebra& A = cs.A;
  const CoquasiHopf& H = detail::hopf_of(A);
  int n = A.dim(), d = H.dim();
  if (cs.gamma.rows() != n || cs.gamma.cols() != d || cs.delta.rows() != n || cs.delta.cols() != d)
    throw std::invalid_argument("check_cleaving: gamma and delta must be dim A × dim H");
  auto gam = [&](int h) { return cs.gamma.column(h); };
  auto del = [&](int h) { return cs.delta.column(h); };
  for (int h = 0; h < d; ++h) {
    std::vector<std::string> w{H.label(h)};
    // ργ(h) = γ(h1)⊗h2
    Vec lhs = A.rho(gam(h)), rhs(n * d);
    for (const auto& t : H.terms(h, 2)) axpy(rhs, t.coeff, kron(gam(t.legs[0]), H.basis(t.legs[1])));
    ++r.checked;
    if (lhs != rhs) r.fail("gamma colinear", w);
    // ρδ(h) = δ(h2)⊗S(h1)
    lhs = A.rho(del(h));
    rhs = Vec(n * d);
    for (const auto& t : H.terms(h, 2)) axpy(rhs, t.coeff, kron(del(t.legs[1]), H.S(t.legs[0])));
    ++r.checked;
    if (lhs != rhs) r.fail("delta S-colinear", w);
    // δ(h1)γ(h2) = α(h)1
    Vec dg(n);
    for (const auto& t : H.terms(h, 2)) axpy(dg, t.coeff, A.mul(del(t.legs[0]), gam(t.legs[1])));
    ++r.checked;
    if (dg != H.alpha(h) * A.unit()) r.fail("delta gamma = alpha", w);
    // γ(h1)β(h2)δ(h3) = ε(h)1
    Vec gbd(n);
    for (const auto& t : H.terms(h, 3)) {
      Scalar c = t.coeff * H.beta(t.legs[1]);
      if (!c.is_zero()) axpy(gbd, c, A.mul(gam(t.legs[0]), del(t.legs[2])));
    }
    ++r.checked;
    if (gbd != H.eps(h) * A.unit()) r.fail("gamma beta delta = epsilon", w);
  }
  // γ(1) is a unit of B
  Vec g1 = cs.gamma.apply(H.unit());
  ++r.checked;
  if (A.rho(g1) != kron(g1, H.unit()) || !A.algebra().inverse(g1)) r.fail("gamma(1) invertible in B", {"1"});
  return r;
}

// γ̄(h) = γ(h)γ(1)^-1, δ̄(h) = γ(1)δ(h)
inline CleavingSystem normalize_cleaving(const CleavingSystem& cs) {
  const CoquasiHopf& H = detail::hopf_of(cs.A);
  Vec g1 = cs.gamma.apply(H.unit());
  if (g1 == cs.A.unit()) return cs;
  auto inv = cs.A.algebra().inverse(g1);
  if (!inv) throw InvalidCleaving("InvalidCleaving: gamma(1) is not invertible");
  CleavingSystem out = cs;
  for (int h = 0; h < H.dim(); ++h) {
    out.gamma.set_column(h, cs.A.mul(cs.gamma.column(h), *inv));
    out.delta.set_column(h, cs.A.mul(g1, cs.delta.column(h)));
  }
  return out;
}

struct CleftToCrossed {
  CrossedSystem system;   // over B = A^coH, with σ^-1 from the explicit formula
  Coinvariants B;
  CleavingSystem cleaving;  // the normalized (γ(1) = 1) system used
  Matrix nu;              // B⊗H -> A, b⊗h ↦ bγ(h)
  Matrix nu_inv;          // a ↦ a0 δ(a1↼β) ⊗ a2
  Report report;          // σ⋆σ^-1, crossed-system axioms, ν an isomorphism of comodule algebras
};

// h·b = γ(h1) b δ(h2↼β), σ(h,g) = [γ(h1)γ(g1)] δ((h2g2)↼β),
// σ^-1(h,g) = γ(β⇀(h1g1)) f^-1(h2,g2) [δ(g3)δ(h3)]
inline CleftToCrossed cleft_to_crossed(const CleavingSystem& input) {
  Report pre = check_cleaving(input);
  if (!pre.ok()) throw InvalidCleaving("InvalidCleaving: " + pre.text());
  CleftToCrossed out;
  out.cleaving = normalize_cleaving(input);
  const CleavingSystem& cs = out.cleaving;
  const ComoduleAlgebra& A = cs.A;
  const CoquasiHopf& H = detail::hopf_of(A);
  TwistF tf = detail::twist_f_of(H);
  int n = A.dim(), d = H.dim();
  out.B = coinvariants(A);
  const Coinvariants& B = out.B;
  int m = B.dim();
  auto gam = [&](const Vec& h) { return cs.gamma.apply(h); };
  auto del = [&](const Vec& h) { return cs.delta.apply(h); };
  auto to_B = [&](const Vec& a, const std::string& what) {
    auto c = B.subspace.coordinates(a);
    if (!c) throw std::logic_error("cleft_to_crossed: " + what + " is not coinvariant");
    return *c;
  };
  // δ(h↼β) = β(h1)δ(h2)
  auto del_beta = [&](const Vec& h) {
    Vec acc(n);
    for (int i = 0; i < d; ++i) {
      if (h[i].is_zero()) continue;
      for (const auto& t : H.terms(i, 2)) {
        Scalar c = h[i] * t.coeff * H.beta(t.legs[0]);
        if (!c.is_zero()) axpy(acc, c, cs.delta.column(t.legs[1]));
      }
    }
    return acc;
  };

  Matrix action(m, d * m);
  for (int h = 0; h < d; ++h)
    for (int b = 0; b < m; ++b) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 2))
        axpy(acc, t.coeff, A.mul(A.mul(gam(H.basis(t.legs[0])), B.subspace.basis()[b]), del_beta(H.basis(t.legs[1]))));
      action.set_column(h * m + b, to_B(acc, "h·b"));
    }
  Functional sigma(2, d, m), sigma_inv(2, d, m);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g) {
      Vec acc(n);
      for (const auto& th : H.terms(h, 2))
        for (const auto& tg : H.terms(g, 2))
          axpy(acc, th.coeff * tg.coeff,
               A.mul(A.mul(gam(H.basis(th.legs[0])), gam(H.basis(tg.legs[0]))), del_beta(H.mul(th.legs[1], tg.legs[1]))));
      sigma.values.set_column(h * d + g, to_B(acc, "sigma"));
      Vec inv(n);
      for (const auto& th : H.terms(h, 4))
        for (const auto& tg : H.terms(g, 4)) {
          Scalar c = th.coeff * tg.coeff * H.beta(H.mul(th.legs[1], tg.legs[1])) * tf.f_inv.at({th.legs[2], tg.legs[2]});
          if (c.is_zero()) continue;
          axpy(inv, c,
               A.mul(gam(H.mul(th.legs[0], tg.legs[0])), A.mul(del(H.basis(tg.legs[3])), del(H.basis(th.legs[3])))));
        }
      sigma_inv.values.set_column(h * d + g, to_B(inv, "sigma^-1"));
    }
  out.system = CrossedSystem{B.algebra, A.host(), std::move(action), std::move(sigma), std::move(sigma_inv)};
  out.report = check_crossed_system(out.system);
  out.report.subject = "cleft to crossed";
  {
    // inverses in an associative convolution algebra are unique
    std::string diag;
    auto conv = convolution_inverse(out.system.sigma, H.coalgebra(), B.algebra, &diag);
    ++out.report.checked;
    if (!conv || !(conv->values == out.system.sigma_inv->values))
      out.report.fail("explicit sigma inverse = convolution inverse", {"sigma"}, diag);
  }

  // ν and ν^-1
  out.nu = Matrix(n, m * d);
  for (int b = 0; b < m; ++b)
    for (int h = 0; h < d; ++h) out.nu.set_column(b * d + h, A.mul(B.subspace.basis()[b], cs.gamma.column(h)));
  out.nu_inv = Matrix(m * d, n);
  for (int a = 0; a < n; ++a) {
    Vec acc(m * d);
    for (const auto& t : A.coaction_terms(a, 3)) {
      Scalar c = t.coeff * H.beta(t.legs[0]);
      if (c.is_zero()) continue;
      Vec x = A.mul(A.basis(t.elem), del(H.basis(t.legs[1])));
      axpy(acc, c, kron(to_B(x, "a0 delta(a1↼beta)"), H.basis(t.legs[2])));
    }
    out.nu_inv.set_column(a, acc);
  }
  Report& r = out.report;
  ++r.checked;
  if (out.nu * out.nu_inv != Matrix::identity(n) || out.nu_inv * out.nu != Matrix::identity(m * d))
    r.fail("nu inverse", {"nu"});
  ComoduleAlgebra P = crossed_product_algebra(out.system);
  for (int x = 0; x < m * d; ++x)
    for (int y = 0; y < m * d; ++y) {
      ++r.checked;
      if (out.nu.apply(P.mul(x, y)) != A.mul(out.nu.column(x), out.nu.column(y)))
        r.fail("nu multiplicative", {P.label(x), P.label(y)});
    }
  ++r.checked;
  if (A.coaction() * out.nu != kron(out.nu, Matrix::identity(d)) * P.coaction()) r.fail("nu colinear", {"nu"});
  return out;
}

// γ(h) = 1#h, δ(h) = σ^-1(S(h2), h3↼α) # S(h1)
inline CleavingSystem crossed_to_cleft(const CrossedProduct& cp) {
  const CrossedSystem& cs = cp.system;
  if (!cs.sigma_inv) throw MissingSigmaInverse("MissingSigmaInverse: the crossed system carries no sigma^-1");
  const CoquasiHopf& H = cs.host.hopf();
  int d = H.dim(), n = cp.algebra.dim();
  Matrix gamma(n, d), delta(n, d);
  for (int h = 0; h < d; ++h) {
    gamma.set_column(h, kron(cs.R.unit(), H.basis(h)));
    Vec acc(n);
    for (const auto& t : H.terms(h, 4)) {
      Scalar c = t.coeff * H.alpha(t.legs[2]);
      if (c.is_zero()) continue;
      axpy(acc, c, kron(cs.sig_inv(H.S(t.legs[1]), H.basis(t.legs[3])), H.S(t.legs[0])));
    }
    delta.set_column(h, acc);
  }
  return CleavingSystem{cp.algebra, std::move(gamma), std::move(delta)};
}

// γ'(h) = 𝔞^-1(h1)γ(h2), δ'(h) = δ(h1)𝔞(h2); 𝔞 is given in coordinates of B = A^coH
inline CleavingSystem change_cleaving(const CleavingSystem& cs, const Matrix& a) {
  const ComoduleAlgebra& A = cs.A;
  const CoquasiHopf& H = detail::hopf_of(A);
  Coinvariants B = coinvariants(A);
  auto inv = convolution_inverse(a, H.coalgebra(), B.algebra);
  if (!inv.inverse) throw NotInvertible("change_cleaving: " + inv.diagnostic);
  Matrix ai = B.inclusion * *inv.inverse, aa = B.inclusion * a;
  int d = H.dim();
  CleavingSystem out{A, Matrix(A.dim(), d), Matrix(A.dim(), d)};
  for (int h = 0; h < d; ++h) {
    Vec g(A.dim()), dl(A.dim());
    for (const auto& t : H.terms(h, 2)) {
      axpy(g, t.coeff, A.mul(ai.column(t.legs[0]), cs.gamma.column(t.legs[1])));
      axpy(dl, t.coeff, A.mul(cs.delta.column(t.legs[0]), aa.column(t.legs[1])));
    }
    out.gamma.set_column(h, g);
    out.delta.set_column(h, dl);
  }
  return out;
}

// the 𝔞 with γ' = 𝔞^-1⋆γ, δ' = δ⋆𝔞, i.e. 𝔞(h) = γ(h1)β(h2)δ'(h3), in
// coordinates of B. The other contraction γ'(h1)β(h2)δ(h3) gives 𝔞^-1.
inline Matrix extract_witness(const CleavingSystem& cs, const CleavingSystem& changed) {
  const ComoduleAlgebra& A = cs.A;
  const CoquasiHopf& H = detail::hopf_of(A);
  Coinvariants B = coinvariants(A);
  int d = H.dim();
  Matrix a(B.dim(), d);
  for (int h = 0; h < d; ++h) {
    Vec acc(A.dim());
    for (const auto& t : H.terms(h, 3)) {
      Scalar c = t.coeff * H.beta(t.legs[1]);
      if (!c.is_zero()) axpy(acc, c, A.mul(cs.gamma.column(t.legs[0]), changed.delta.column(t.legs[2])));
    }
    auto coords = B.subspace.coordinates(acc);
    if (!coords) throw InvalidCleaving("InvalidCleaving: gamma(h1)beta(h2)delta'(h3) is not coinvariant");
    a.set_column(h, *coords);
  }
  return a;
}

}  // namespace coquasi
