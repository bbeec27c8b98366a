// Right coquasi-Hopf modules over a crossed system (R, ·, σ): a right
// R-module and H-comodule M with m∘h, the isomorphism with relative Hopf
// modules over R#σH, the projection Π onto M^coH and the equivalence with
// right R-modules given by N ↦ N⊗H and M ↦ M^coH.
#pragma once

#include "coquasi/cleft.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coquasi {

// a right R-module, action dim N × (dim N · dim R)
struct RModule {
  Space space;
  Matrix action;
  int dim() const { return space.dim(); }
  Vec act(const Vec& n, const Vec& r) const { return action.apply(kron(n, r)); }
};

inline Report check_r_module(const RModule& N, const Algebra& R) {
  Report r;
  r.subject = "R-module";
  int n = N.dim(), dr = R.dim();
  for (int i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    ++r.checked;
    if (N.act(e, R.unit()) != e) r.fail("R-module unit", {N.space.label(i)});
    for (int a = 0; a < dr; ++a)
      for (int b = 0; b < dr; ++b) {
        ++r.checked;
        if (N.act(N.act(e, R.basis(a)), R.basis(b)) != N.act(e, R.mul(a, b)))
          r.fail("R-module associative", {N.space.label(i), R.label(a), R.label(b)});
      }
  }
  return r;
}

// R^k with the right regular action
inline RModule free_r_module(const Algebra& R, int rank = 1) {
  int dr = R.dim(), n = dr * rank;
  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i)
    for (int a = 0; a < dr; ++a) labels.push_back(rank == 1 ? R.label(a) : R.label(a) + "_" + std::to_string(i));
  Matrix act(n, n * dr);
  for (int i = 0; i < rank; ++i)
    for (int a = 0; a < dr; ++a)
      for (int b = 0; b < dr; ++b) {
        Vec p = R.mul(a, b);
        for (int c = 0; c < dr; ++c) act(i * dr + c, (i * dr + a) * dr + b) = p[c];
      }
  return RModule{Space(labels), act};
}

struct CoquasiHopfModule {
  Space space;
  Matrix r_action;  // dim M × (dim M · dim R)
  Matrix coaction;  // (dim M · dim H) × dim M
  Matrix h_action;  // dim M × (dim M · dim H), m∘h
  CrossedSystem system;

  int dim() const { return space.dim(); }
  Vec act(const Vec& m, const Vec& r) const { return r_action.apply(kron(m, r)); }
  Vec circ(const Vec& m, const Vec& h) const { return h_action.apply(kron(m, h)); }
  // m0 ⊗ m1 ⊗ ... ⊗ mk
  std::vector<CoactionTerm> terms(int m, int k) const {
    const CoquasiBialgebra& H = system.H();
    int d = H.dim();
    std::vector<CoactionTerm> out;
    for (int b = 0; b < dim(); ++b)
      for (int h = 0; h < d; ++h) {
        const Scalar& c = coaction(b * d + h, m);
        if (c.is_zero()) continue;
        if (k == 1) {
          out.push_back({c, b, {h}});
          continue;
        }
        for (const auto& t : H.terms(h, k)) out.push_back({c * t.coeff, b, t.legs});
      }
    return out;
  }
};

inline Report check_hopf_module(const CoquasiHopfModule& M) {
  Report r;
  r.subject = "coquasi-Hopf module";
  const CrossedSystem& cs = M.system;
  const CoquasiBialgebra& H = cs.H();
  const Algebra& R = cs.R;
  int n = M.dim(), d = H.dim(), dr = R.dim();
  auto L = [&](int i) { return M.space.label(i); };
  detail::check_coaction(r, M.coaction, M.space, H);
  r.merge(check_r_module(RModule{M.space, M.r_action}, R));
  for (int m = 0; m < n; ++m) {
    Vec em = unit_vec(n, m);
    auto t1 = M.terms(m, 1);
    // ρ(mr) = m0 r ⊗ m1
    for (int a = 0; a < dr; ++a) {
      Vec rhs(n * d);
      for (const auto& t : t1) axpy(rhs, t.coeff, kron(M.act(unit_vec(n, t.elem), R.basis(a)), H.basis(t.legs[0])));
      ++r.checked;
      if (M.coaction.apply(M.act(em, R.basis(a))) != rhs) r.fail("R-action colinear", {L(m), R.label(a)});
    }
    ++r.checked;
    if (M.circ(em, H.unit()) != em) r.fail("circ unital", {L(m)});
    for (int h = 0; h < d; ++h) {
      // ρ(m∘h) = m0∘h1 ⊗ m1h2
      Vec lhs = M.coaction.apply(M.circ(em, H.basis(h))), rhs(n * d);
      for (const auto& t : t1)
        for (const auto& th : H.terms(h, 2))
          axpy(rhs, t.coeff * th.coeff, kron(M.circ(unit_vec(n, t.elem), H.basis(th.legs[0])), H.mul(t.legs[0], th.legs[1])));
      ++r.checked;
      if (lhs != rhs) r.fail("circ colinear", {L(m), H.label(h)});
      // (m∘h)r = [m(h1·r)]∘h2
      for (int a = 0; a < dr; ++a) {
        Vec l = M.act(M.circ(em, H.basis(h)), R.basis(a)), rr(n);
        for (const auto& th : H.terms(h, 2))
          axpy(rr, th.coeff, M.circ(M.act(em, cs.act(th.legs[0], a)), H.basis(th.legs[1])));
        ++r.checked;
        if (l != rr) r.fail("circ R-compatible", {L(m), H.label(h), R.label(a)});
      }
      // (m∘h)∘g = [m0σ(h1,g1)]∘(h2g2) ω(m1,h3,g3)
      for (int g = 0; g < d; ++g) {
        Vec l = M.circ(M.circ(em, H.basis(h)), H.basis(g)), rr(n);
        for (const auto& t : t1)
          for (const auto& th : H.terms(h, 3))
            for (const auto& tg : H.terms(g, 3)) {
              Scalar w = t.coeff * th.coeff * tg.coeff * H.om(t.legs[0], th.legs[2], tg.legs[2]);
              if (w.is_zero()) continue;
              Vec x = M.act(unit_vec(n, t.elem), cs.sig(th.legs[0], tg.legs[0]));
              axpy(rr, w, M.circ(x, H.mul(th.legs[1], tg.legs[1])));
            }
        ++r.checked;
        if (l != rr) r.fail("circ omega-associative", {L(m), H.label(h), H.label(g)});
      }
    }
  }
  return r;
}

// N⊗H with (n⊗h)r = n(h1·r)⊗h2, ρ(n⊗h) = n⊗h1⊗h2, (n⊗h)∘g = nσ(h1,g1)⊗h2g2
inline CoquasiHopfModule free_hopf_module(const RModule& N, const CrossedSystem& cs) {
  const CoquasiBialgebra& H = cs.H();
  int nn = N.dim(), d = H.dim(), dr = cs.dR(), n = nn * d;
  std::vector<std::string> labels;
  for (int i = 0; i < nn; ++i)
    for (int h = 0; h < d; ++h) labels.push_back(N.space.label(i) + "⊗" + H.label(h));
  CoquasiHopfModule M{Space(labels), Matrix(n, n * dr), Matrix(n * d, n), Matrix(n, n * d), cs};
  for (int i = 0; i < nn; ++i)
    for (int h = 0; h < d; ++h) {
      int col = i * d + h;
      for (const auto& t : H.terms(h, 2)) {
        M.coaction((i * d + t.legs[0]) * d + t.legs[1], col) += t.coeff;
        for (int a = 0; a < dr; ++a) {
          Vec x = kron(N.act(unit_vec(nn, i), cs.act(t.legs[0], a)), H.basis(t.legs[1]));
          for (int k = 0; k < n; ++k) M.r_action(k, col * dr + a) += t.coeff * x[k];
        }
      }
      for (int g = 0; g < d; ++g) {
        Vec acc(n);
        for (const auto& th : H.terms(h, 2))
          for (const auto& tg : H.terms(g, 2))
            axpy(acc, th.coeff * tg.coeff,
                 kron(N.act(unit_vec(nn, i), cs.sig(th.legs[0], tg.legs[0])), H.mul(th.legs[1], tg.legs[1])));
        M.h_action.set_column(col * d + g, acc);
      }
    }
  return M;
}

// m⋇(r#h) = (mr)∘h
inline RelativeHopfModule to_relative_hopf(const CoquasiHopfModule& M) {
  const CrossedSystem& cs = M.system;
  int n = M.dim(), d = cs.dH(), dr = cs.dR(), na = dr * d;
  Matrix action(n, n * na);
  for (int m = 0; m < n; ++m)
    for (int a = 0; a < dr; ++a)
      for (int h = 0; h < d; ++h)
        action.set_column(m * na + a * d + h, M.circ(M.act(unit_vec(n, m), cs.R.basis(a)), cs.H().basis(h)));
  return RelativeHopfModule{M.space, std::move(action), M.coaction};
}

// mr = m⋇(r#1), m∘h = m⋇(1#h)
inline CoquasiHopfModule from_relative_hopf(const RelativeHopfModule& X, const CrossedSystem& cs) {
  const CoquasiBialgebra& H = cs.H();
  int n = X.dim(), d = cs.dH(), dr = cs.dR();
  CoquasiHopfModule M{X.space, Matrix(n, n * dr), X.coaction, Matrix(n, n * d), cs};
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < dr; ++a) M.r_action.set_column(m * dr + a, X.act(unit_vec(n, m), kron(cs.R.basis(a), H.unit())));
    for (int h = 0; h < d; ++h) M.h_action.set_column(m * d + h, X.act(unit_vec(n, m), kron(cs.R.unit(), H.basis(h))));
  }
  return M;
}

// N⊗_R (R#σH), written on N⊗H through n⊗(1#h); the action is multiplication
// in the crossed product
inline RelativeHopfModule induced_relative_module(const RModule& N, const CrossedProduct& cp) {
  const CrossedSystem& cs = cp.system;
  const ComoduleAlgebra& A = cp.algebra;
  const CoquasiBialgebra& H = cs.H();
  int nn = N.dim(), d = cs.dH(), dr = cs.dR(), n = nn * d, na = A.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < nn; ++i)
    for (int h = 0; h < d; ++h) labels.push_back(N.space.label(i) + "⊗" + H.label(h));
  // n ⊗ (Σ r_k # h_k) ↦ Σ n r_k ⊗ h_k
  auto fold = [&](int i, const Vec& a) {
    Vec out(n);
    for (int r = 0; r < dr; ++r)
      for (int h = 0; h < d; ++h) {
        const Scalar& c = a[r * d + h];
        if (!c.is_zero()) axpy(out, c, kron(N.act(unit_vec(nn, i), cs.R.basis(r)), H.basis(h)));
      }
    return out;
  };
  Matrix action(n, n * na), rho(n * d, n);
  for (int i = 0; i < nn; ++i)
    for (int h = 0; h < d; ++h) {
      Vec one_h = kron(cs.R.unit(), H.basis(h));
      for (int a = 0; a < na; ++a) action.set_column((i * d + h) * na + a, fold(i, A.mul(one_h, A.basis(a))));
      Vec c = A.rho(one_h);  // (1#h1)⊗h2
      Vec col(n * d);
      for (int x = 0; x < na; ++x)
        for (int g = 0; g < d; ++g)
          if (!c[x * d + g].is_zero()) axpy(col, c[x * d + g], kron(fold(i, A.basis(x)), H.basis(g)));
      rho.set_column(i * d + h, col);
    }
  return RelativeHopfModule{Space(labels), std::move(action), std::move(rho)};
}

// ---- coinvariants and the projection ----

struct CoinvariantModule {
  Subspace subspace;  // M^coH inside M
  RModule module;     // on subspace coordinates
  int dim() const { return subspace.dim(); }
};

inline CoinvariantModule coinvariant_module(const CoquasiHopfModule& M) {
  CoinvariantModule c;
  c.subspace = coinvariant_subspace(M.coaction, M.dim(), M.system.H());
  int k = c.dim(), dr = M.system.dR();
  Matrix act(k, k * dr);
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < dr; ++a) {
      auto co = c.subspace.coordinates(M.act(c.subspace.basis()[i], M.system.R.basis(a)));
      if (!co) throw std::logic_error("coinvariants are not closed under the R-action");
      act.set_column(i * dr + a, *co);
    }
  c.module = RModule{Space::numbered("m", k), std::move(act)};
  return c;
}

namespace detail {

inline const CoquasiHopf& hopf_of(const CrossedSystem& cs) { return cs.host.hopf(); }

}  // namespace detail

// Π(m) = m0∘S(m1↼β) = β(m1) m0∘S(m2)
inline Matrix projection_pi(const CoquasiHopfModule& M) {
  const CoquasiHopf& H = detail::hopf_of(M.system);
  int n = M.dim();
  Matrix pi(n, n);
  for (int m = 0; m < n; ++m) {
    Vec acc(n);
    for (const auto& t : M.terms(m, 2)) {
      Scalar c = t.coeff * H.beta(t.legs[0]);
      if (!c.is_zero()) axpy(acc, c, M.circ(unit_vec(n, t.elem), H.S(t.legs[1])));
    }
    pi.set_column(m, acc);
  }
  return pi;
}

// Π² = Π, ρΠ(m) = Π(m)⊗1, Π(m)r = Π(m0(S(m1)·r)), Π(M) = M^coH.  The literal
// ρΠ(m) = m⊗1 only holds on M^coH; the report notes where it fails.
inline Report check_projection(const CoquasiHopfModule& M) {
  Report r;
  r.subject = "projection";
  const CrossedSystem& cs = M.system;
  const CoquasiHopf& H = detail::hopf_of(cs);
  int n = M.dim(), d = H.dim(), dr = cs.dR();
  Matrix pi = projection_pi(M);
  ++r.checked;
  if (pi * pi != pi) r.fail("projection idempotent", {"Pi"});
  int literal = 0;
  for (int m = 0; m < n; ++m) {
    Vec p = pi.column(m);
    ++r.checked;
    if (M.coaction.apply(p) != kron(p, H.unit())) r.fail("projection coinvariant", {M.space.label(m)});
    if (M.coaction.apply(p) != kron(unit_vec(n, m), H.unit())) ++literal;
    for (int a = 0; a < dr; ++a) {
      Vec rhs(n);
      for (const auto& t : M.terms(m, 1)) axpy(rhs, t.coeff, M.act(unit_vec(n, t.elem), cs.act(H.S(t.legs[0]), cs.R.basis(a))));
      ++r.checked;
      if (M.act(p, cs.R.basis(a)) != pi.apply(rhs)) r.fail("projection R-semilinear", {M.space.label(m), cs.R.label(a)});
    }
  }
  if (literal > 0)
    r.notes.push_back("rho Pi(m) = m⊗1 read literally fails on " + std::to_string(literal) +
                      " basis elements; Pi(m)⊗1 holds (statement vs proof of the projection properties)");
  Subspace co = coinvariant_subspace(M.coaction, n, H.base());
  std::vector<Vec> cols;
  for (int m = 0; m < n; ++m) cols.push_back(pi.column(m));
  Subspace img(n, cols);
  ++r.checked;
  bool same = img.dim() == co.dim();
  for (const auto& v : img.basis()) same = same && co.contains(v);
  if (!same) r.fail("projection image = coinvariants", {"Pi"});
  for (const auto& v : co.basis()) {
    ++r.checked;
    if (pi.apply(v) != v) r.fail("projection fixes coinvariants", {"Pi"});
  }
  (void)d;
  return r;
}

// ---- the equivalence with right R-modules ----

struct EquivalenceMaps {
  CoinvariantModule coinv;
  Matrix eps;    // M^coH⊗H -> M, m⊗h ↦ m∘h, on coordinates i*dimH + h
  Matrix kappa;  // M -> M^coH⊗H
  Report report;
};

// ϰ(m) = Π(m0 σ^-1(S(m1), m2↼α)) ⊗ m3
inline EquivalenceMaps equivalence_maps(const CoquasiHopfModule& M) {
  const CrossedSystem& cs = M.system;
  if (!cs.sigma_inv) throw MissingSigmaInverse("MissingSigmaInverse: the crossed system carries no sigma^-1");
  const CoquasiHopf& H = detail::hopf_of(cs);
  int n = M.dim(), d = H.dim();
  EquivalenceMaps out;
  out.coinv = coinvariant_module(M);
  const Subspace& C = out.coinv.subspace;
  int c = C.dim();
  Matrix pi = projection_pi(M);
  out.eps = Matrix(n, c * d);
  for (int i = 0; i < c; ++i)
    for (int h = 0; h < d; ++h) out.eps.set_column(i * d + h, M.circ(C.basis()[i], H.basis(h)));
  Report& r = out.report;
  r.subject = "equivalence maps";
  out.kappa = Matrix(c * d, n);
  for (int m = 0; m < n; ++m) {
    Vec acc(c * d);
    for (const auto& t : M.terms(m, 4)) {
      Scalar s = t.coeff * H.alpha(t.legs[2]);
      if (s.is_zero()) continue;
      Vec x = pi.apply(M.act(unit_vec(n, t.elem), cs.sig_inv(H.S(t.legs[0]), H.basis(t.legs[1]))));
      auto co = C.coordinates(x);
      if (!co) throw std::logic_error("equivalence_maps: Pi(...) is not coinvariant");
      axpy(acc, s, kron(*co, H.basis(t.legs[3])));
    }
    out.kappa.set_column(m, acc);
  }
  ++r.checked;
  if (out.kappa * out.eps != Matrix::identity(c * d)) r.fail("kappa eps = id", {"kappa", "eps"});
  ++r.checked;
  if (out.eps * out.kappa != Matrix::identity(n)) r.fail("eps kappa = id", {"eps", "kappa"});
  ++r.checked;
  if (n != c * d) r.fail("dim M = dim M^coH · dim H", {std::to_string(n), std::to_string(c), std::to_string(d)});
  // ε_M u_{M^coH} = id: m∘1 = m on coinvariants
  for (int i = 0; i < c; ++i) {
    ++r.checked;
    if (M.circ(C.basis()[i], H.unit()) != C.basis()[i]) r.fail("eps u = id", {"m" + std::to_string(i)});
  }
  return out;
}

// u_N(n) = n⊗1 into (N⊗H)^coH and υ_N(Σ n_i⊗h_i) = Σ n_i ε(h_i), plus
// ε_{N⊗H}(u_N⊗I) = id on N⊗H
inline Report check_unit_maps(const RModule& N, const CrossedSystem& cs) {
  Report r;
  r.subject = "unit maps";
  const CoquasiBialgebra& H = cs.H();
  int nn = N.dim(), d = H.dim();
  CoquasiHopfModule M = free_hopf_module(N, cs);
  CoinvariantModule co = coinvariant_module(M);
  Matrix u(co.dim(), nn), v(nn, co.dim());
  for (int i = 0; i < nn; ++i) {
    auto x = co.subspace.coordinates(kron(unit_vec(nn, i), H.unit()));
    ++r.checked;
    if (!x) {
      r.fail("u lands in coinvariants", {N.space.label(i)});
      return r;
    }
    u.set_column(i, *x);
  }
  for (int j = 0; j < co.dim(); ++j) {
    const Vec& w = co.subspace.basis()[j];
    Vec acc(nn);
    for (int i = 0; i < nn; ++i)
      for (int h = 0; h < d; ++h)
        if (!w[i * d + h].is_zero()) acc[i] += w[i * d + h] * H.eps(h);
    v.set_column(j, acc);
  }
  ++r.checked;
  if (v * u != Matrix::identity(nn) || u * v != Matrix::identity(co.dim())) r.fail("u and upsilon inverse", {"u"});
  // u is R-linear
  for (int i = 0; i < nn; ++i)
    for (int a = 0; a < cs.dR(); ++a) {
      ++r.checked;
      if (u.apply(N.act(unit_vec(nn, i), cs.R.basis(a))) != co.module.act(u.column(i), cs.R.basis(a)))
        r.fail("u R-linear", {N.space.label(i), cs.R.label(a)});
    }
  // Σ (n_i⊗1)∘h_i = Σ n_i⊗h_i
  for (int i = 0; i < nn; ++i)
    for (int h = 0; h < d; ++h) {
      ++r.checked;
      if (M.circ(kron(unit_vec(nn, i), H.unit()), H.basis(h)) != kron(unit_vec(nn, i), H.basis(h)))
        r.fail("eps (u⊗I) = id", {N.space.label(i), H.label(h)});
    }
  return r;
}

}  // namespace coquasi
