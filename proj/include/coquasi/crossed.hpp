// Crossed systems (R, ·, σ) over a coquasi-bialgebra and the crossed product
// R#σH, with the twist and 𝔞-deformations, equivalence of crossed products,
// the Heisenberg double and the ⊛ algebra on Hom(H, A).
#pragma once

#include "coquasi/comodule_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coquasi {

struct InvalidSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CrossedSystem {
  Algebra R;
  Host host;
  Matrix action;  // H⊗R -> R, column h*dimR + r
  Functional sigma;  // H⊗H -> R
  std::optional<Functional> sigma_inv;

  const CoquasiBialgebra& H() const { return host.H(); }
  int dR() const { return R.dim(); }
  int dH() const { return host.dim(); }

  Vec act(int h, int r) const { return action.column(h * dR() + r); }
  Vec act(int h, const Vec& r) const {
    Vec out(dR());
    for (int i = 0; i < dR(); ++i)
      if (!r[i].is_zero()) axpy(out, r[i], act(h, i));
    return out;
  }
  Vec act(const Vec& h, const Vec& r) const {
    Vec out(dR());
    for (int i = 0; i < dH(); ++i)
      if (!h[i].is_zero()) axpy(out, h[i], act(i, r));
    return out;
  }
  Vec sig(int h, int g) const { return sigma.values.column(h * dH() + g); }
  Vec sig(const Vec& h, const Vec& g) const { return apply_functional_vec(sigma, {h, g}); }
  Vec sig_inv(int h, int g) const { return sigma_inv->values.column(h * dH() + g); }
  Vec sig_inv(const Vec& h, const Vec& g) const { return apply_functional_vec(*sigma_inv, {h, g}); }

  friend bool operator==(const CrossedSystem& a, const CrossedSystem& b) {
    return a.R.mult() == b.R.mult() && a.R.unit() == b.R.unit() && a.action == b.action && a.sigma == b.sigma &&
           a.H() == b.H();
  }
};

// the trivial action h·r = ε(h)r
inline Matrix trivial_action(const Algebra& R, const CoquasiBialgebra& H) {
  int dr = R.dim(), dh = H.dim();
  Matrix m(dr, dh * dr);
  for (int h = 0; h < dh; ++h)
    for (int r = 0; r < dr; ++r)
      if (!H.eps(h).is_zero()) m(r, h * dr + r) = H.eps(h);
  return m;
}

// σ = ε⊗ε 1_R
inline Functional trivial_cocycle(const Algebra& R, const CoquasiBialgebra& H) {
  return Functional::counit_power(H.coalgebra(), 2, R.unit());
}

inline Report check_crossed_system(const CrossedSystem& cs) {
  Report r;
  r.subject = "crossed system";
  const CoquasiBialgebra& H = cs.H();
  const Algebra& R = cs.R;
  int dh = cs.dH(), dr = cs.dR();
  auto LH = [&](int i) { return H.label(i); };
  auto LR = [&](int i) { return R.label(i); };
  Vec one = H.unit();

  // R itself must be an associative unital algebra
  Report ra = check_algebra(R);
  r.checked += ra.checked;
  for (const auto& f : ra.failures) r.fail("R " + f.identity, f.witness, f.detail);

  for (int h = 0; h < dh; ++h) {
    // h·1 = ε(h)1
    ++r.checked;
    if (cs.act(h, R.unit()) != H.eps(h) * R.unit()) r.fail("weak action unital", {LH(h)});
    // h·(rs) = (h1·r)(h2·s)
    for (int a = 0; a < dr; ++a)
      for (int b = 0; b < dr; ++b) {
        Vec lhs = cs.act(h, R.mul(a, b)), rhs(dr);
        for (const auto& t : H.terms(h, 2)) axpy(rhs, t.coeff, R.mul(cs.act(t.legs[0], a), cs.act(t.legs[1], b)));
        ++r.checked;
        if (lhs != rhs) r.fail("weak action multiplicative", {LH(h), LR(a), LR(b)});
      }
    // σ(h,1) = σ(1,h) = ε(h)1
    ++r.checked;
    Vec eh = H.eps(h) * R.unit();
    if (cs.sig(H.basis(h), one) != eh || cs.sig(one, H.basis(h)) != eh) r.fail("cocycle normalization", {LH(h)});
  }
  // 1·r = r
  for (int a = 0; a < dr; ++a) {
    ++r.checked;
    if (cs.act(one, R.basis(a)) != R.basis(a)) r.fail("unit acts trivially", {LR(a)});
  }
  // [h1·(g1·r)]σ(h2,g2) = σ(h1,g1)[(h2g2)·r]
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g)
      for (int a = 0; a < dr; ++a) {
        Vec lhs(dr), rhs(dr);
        for (const auto& th : H.terms(h, 2))
          for (const auto& tg : H.terms(g, 2)) {
            Scalar c = th.coeff * tg.coeff;
            axpy(lhs, c, R.mul(cs.act(th.legs[0], cs.act(tg.legs[0], a)), cs.sig(th.legs[1], tg.legs[1])));
            axpy(rhs, c, R.mul(cs.sig(th.legs[0], tg.legs[0]), cs.act(H.mul(th.legs[1], tg.legs[1]), R.basis(a))));
          }
        ++r.checked;
        if (lhs != rhs) r.fail("twisted module condition", {LH(h), LH(g), LR(a)});
      }
  // [h1·σ(g1,l1)]σ(h2,g2l2) = σ(h1,g1)σ(h2g2,l1)ω^-1(h3,g3,l2)
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g)
      for (int l = 0; l < dh; ++l) {
        Vec lhs(dr), rhs(dr);
        for (const auto& th : H.terms(h, 2))
          for (const auto& tg : H.terms(g, 2))
            for (const auto& tl : H.terms(l, 2)) {
              Scalar c = th.coeff * tg.coeff * tl.coeff;
              Vec s = cs.sig(tg.legs[0], tl.legs[0]);
              if (is_zero(s)) continue;
              axpy(lhs, c, R.mul(cs.act(th.legs[0], s), cs.sig(H.basis(th.legs[1]), H.mul(tg.legs[1], tl.legs[1]))));
            }
        for (const auto& th : H.terms(h, 3))
          for (const auto& tg : H.terms(g, 3))
            for (const auto& tl : H.terms(l, 2)) {
              Scalar c = th.coeff * tg.coeff * tl.coeff * H.om_inv(th.legs[2], tg.legs[2], tl.legs[1]);
              if (c.is_zero()) continue;
              axpy(rhs, c,
                   R.mul(cs.sig(th.legs[0], tg.legs[0]), cs.sig(H.mul(th.legs[1], tg.legs[1]), H.basis(tl.legs[0]))));
            }
        ++r.checked;
        if (lhs != rhs) r.fail("2-cocycle condition", {LH(h), LH(g), LH(l)});
      }

  if (cs.sigma_inv) {
    Functional u = Functional::counit_power(H.coalgebra(), 2, R.unit());
    Functional left = convolve(cs.sigma, *cs.sigma_inv, H.coalgebra(), R);
    Functional right = convolve(*cs.sigma_inv, cs.sigma, H.coalgebra(), R);
    for (int h = 0; h < dh; ++h)
      for (int g = 0; g < dh; ++g) {
        ++r.checked;
        if (left.value({h, g}) != u.value({h, g}) || right.value({h, g}) != u.value({h, g}))
          r.fail("sigma inverse", {LH(h), LH(g)});
      }
    // h·σ^-1(g,l) = σ(h1,g1l1)ω(h2,g2,l2)σ^-1(h3g3,l3)σ^-1(h4,g4)
    for (int h = 0; h < dh; ++h)
      for (int g = 0; g < dh; ++g)
        for (int l = 0; l < dh; ++l) {
          Vec lhs = cs.act(h, cs.sig_inv(g, l)), rhs(dr);
          for (const auto& th : H.terms(h, 4))
            for (const auto& tg : H.terms(g, 4))
              for (const auto& tl : H.terms(l, 3)) {
                Scalar c = th.coeff * tg.coeff * tl.coeff * H.om(th.legs[1], tg.legs[1], tl.legs[1]);
                if (c.is_zero()) continue;
                Vec x = cs.sig(H.basis(th.legs[0]), H.mul(tg.legs[0], tl.legs[0]));
                x = R.mul(x, cs.sig_inv(H.mul(th.legs[2], tg.legs[2]), H.basis(tl.legs[2])));
                x = R.mul(x, cs.sig_inv(th.legs[3], tg.legs[3]));
                axpy(rhs, c, x);
              }
          ++r.checked;
          if (lhs != rhs) r.fail("sigma inverse action identity", {LH(h), LH(g), LH(l)});
        }
  }
  return r;
}

// ---- the crossed product ----

struct CrossedProduct {
  ComoduleAlgebra algebra;
  CrossedSystem system;
  int index(int r, int h) const { return r * system.dH() + h; }
  Vec element(const Vec& r, const Vec& h) const { return kron(r, h); }
};

// (r#h)(s#g) = r(h1·s)σ(h2,g1) # h3g2, with coaction I⊗Δ
inline ComoduleAlgebra crossed_product_algebra(const CrossedSystem& cs) {
  const CoquasiBialgebra& H = cs.H();
  const Algebra& R = cs.R;
  int dh = cs.dH(), dr = cs.dR(), n = dr * dh;
  std::vector<std::string> labels;
  for (int a = 0; a < dr; ++a)
    for (int h = 0; h < dh; ++h) labels.push_back(R.label(a) + "#" + H.label(h));
  Matrix mult(n, n * n);
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g) {
      // (1#h)(s#g) without the left factor r, for every s
      for (int s = 0; s < dr; ++s) {
        Vec partial(n);
        for (const auto& th : H.terms(h, 3))
          for (const auto& tg : H.terms(g, 2)) {
            Vec x = R.mul(cs.act(th.legs[0], s), cs.sig(th.legs[1], tg.legs[0]));
            if (is_zero(x)) continue;
            axpy(partial, th.coeff * tg.coeff, kron(x, H.mul(th.legs[2], tg.legs[1])));
          }
        for (int a = 0; a < dr; ++a) {
          Vec col(n);
          for (int b = 0; b < dr; ++b) {
            Vec rb = R.mul(a, b);
            for (int k = 0; k < dh; ++k) {
              const Scalar& c = partial[b * dh + k];
              if (c.is_zero()) continue;
              for (int t = 0; t < dr; ++t)
                if (!rb[t].is_zero()) col[t * dh + k] += c * rb[t];
            }
          }
          mult.set_column((a * dh + h) * n + (s * dh + g), col);
        }
      }
    }
  Matrix rho(n * dh, n);
  for (int a = 0; a < dr; ++a)
    for (int h = 0; h < dh; ++h)
      for (const auto& t : H.terms(h, 2)) rho((a * dh + t.legs[0]) * dh + t.legs[1], a * dh + h) += t.coeff;
  return ComoduleAlgebra(Space(labels), std::move(mult), kron(R.unit(), H.unit()), std::move(rho), cs.host);
}

inline CrossedProduct build_crossed_product(const CrossedSystem& cs) {
  Report r = check_crossed_system(cs);
  if (!r.ok()) throw InvalidSystem("InvalidSystem: " + r.text());
  return CrossedProduct{crossed_product_algebra(cs), cs};
}

inline CrossedSystem sigma_inverse(CrossedSystem cs) {
  std::string diag;
  auto inv = convolution_inverse(cs.sigma, cs.H().coalgebra(), cs.R, &diag);
  if (!inv) throw NotInvertible(diag.empty() ? "NotInvertible: sigma" : diag);
  cs.sigma_inv = std::move(*inv);
  return cs;
}

// (R, ·, στ^-1) over H_τ
inline CrossedSystem twist_crossed_system(const CrossedSystem& cs, const Twist& t) {
  const CoquasiBialgebra& H = cs.H();
  int dh = cs.dH(), dr = cs.dR();
  auto scalar_conv = [&](const Functional& f, const Functional& scal, bool scalar_left) {
    Functional out(2, dh, dr);
    for (int h = 0; h < dh; ++h)
      for (int g = 0; g < dh; ++g) {
        Vec acc(dr);
        for (const auto& th : H.terms(h, 2))
          for (const auto& tg : H.terms(g, 2)) {
            int fh = scalar_left ? th.legs[1] : th.legs[0], fg = scalar_left ? tg.legs[1] : tg.legs[0];
            int sh = scalar_left ? th.legs[0] : th.legs[1], sg = scalar_left ? tg.legs[0] : tg.legs[1];
            Scalar c = th.coeff * tg.coeff * scal.at({sh, sg});
            if (!c.is_zero()) axpy(acc, c, f.value({fh, fg}));
          }
        out.values.set_column(h * dh + g, acc);
      }
    return out;
  };
  CrossedSystem out{cs.R, cs.host.twisted(t), cs.action, scalar_conv(cs.sigma, t.tau_inv, false), std::nullopt};
  if (cs.sigma_inv) out.sigma_inv = scalar_conv(*cs.sigma_inv, t.tau, true);
  return out;
}

// ---- deformation by a convolution invertible 𝔞 : H -> R ----

struct EquivalenceWitness {
  Matrix a;      // dim R × dim H
  Matrix a_inv;

  static EquivalenceWitness make(const Matrix& a, const CrossedSystem& cs) {
    auto inv = convolution_inverse(a, cs.H().coalgebra(), cs.R);
    if (!inv.inverse) throw NotInvertible(inv.diagnostic);
    return EquivalenceWitness{a, *inv.inverse};
  }
  static EquivalenceWitness identity(const CrossedSystem& cs) {
    Matrix u = convolution_unit(cs.H().coalgebra(), cs.R);
    return EquivalenceWitness{u, u};
  }
  // deforming by 𝔞 and then by 𝔞^-1 gives back the original system
  EquivalenceWitness inverse() const { return EquivalenceWitness{a_inv, a}; }
  Vec at(int h) const { return a.column(h); }
  Vec inv_at(int h) const { return a_inv.column(h); }
};

namespace detail {

inline Vec map_at(const Matrix& m, const Vec& h) { return m.apply(h); }

}  // namespace detail

// h·_𝔞 r = 𝔞^-1(h1)(h2·r)𝔞(h3)
// σ_𝔞(h,g) = 𝔞^-1(h1)[h2·𝔞^-1(g1)]σ(h3,g2)𝔞(h4g3)
inline CrossedSystem deformed_system(const CrossedSystem& cs, const EquivalenceWitness& w) {
  const CoquasiBialgebra& H = cs.H();
  const Algebra& R = cs.R;
  int dh = cs.dH(), dr = cs.dR();
  Matrix action(dr, dh * dr);
  for (int h = 0; h < dh; ++h)
    for (int a = 0; a < dr; ++a) {
      Vec acc(dr);
      for (const auto& t : H.terms(h, 3))
        axpy(acc, t.coeff, R.mul(R.mul(w.inv_at(t.legs[0]), cs.act(t.legs[1], a)), w.at(t.legs[2])));
      action.set_column(h * dr + a, acc);
    }
  Functional sigma(2, dh, dr);
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g) {
      Vec acc(dr);
      for (const auto& th : H.terms(h, 4))
        for (const auto& tg : H.terms(g, 3)) {
          Vec x = R.mul(w.inv_at(th.legs[0]), cs.act(th.legs[1], w.inv_at(tg.legs[0])));
          x = R.mul(x, cs.sig(th.legs[2], tg.legs[1]));
          x = R.mul(x, detail::map_at(w.a, H.mul(th.legs[3], tg.legs[2])));
          axpy(acc, th.coeff * tg.coeff, x);
        }
      sigma.values.set_column(h * dh + g, acc);
    }
  return CrossedSystem{R, cs.host, std::move(action), std::move(sigma), std::nullopt};
}

// θ(r#h) = r𝔞(h1) # h2 as a matrix on R⊗H
inline Matrix theta_matrix(const CrossedSystem& cs, const EquivalenceWitness& w) {
  const CoquasiBialgebra& H = cs.H();
  int dh = cs.dH(), dr = cs.dR(), n = dr * dh;
  Matrix m(n, n);
  for (int a = 0; a < dr; ++a)
    for (int h = 0; h < dh; ++h) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 2))
        axpy(acc, t.coeff, kron(cs.R.mul(cs.R.basis(a), w.at(t.legs[0])), H.basis(t.legs[1])));
      m.set_column(a * dh + h, acc);
    }
  return m;
}

// the deformed action and cocycle of cs1 through 𝔞 equal those of cs2, plus θ being a
// left R-linear, H-colinear algebra isomorphism
inline Report check_equivalence_witness(const CrossedSystem& cs1, const CrossedSystem& cs2,
                                        const EquivalenceWitness& w) {
  Report r;
  r.subject = "equivalence witness";
  const CoquasiBialgebra& H = cs1.H();
  int dh = cs1.dH(), dr = cs1.dR();
  ++r.checked;
  Matrix u = convolution_unit(H.coalgebra(), cs1.R);
  if (convolution_product(w.a, w.a_inv, H.coalgebra(), cs1.R) != u ||
      convolution_product(w.a_inv, w.a, H.coalgebra(), cs1.R) != u)
    r.fail("witness invertible", {"a"});
  CrossedSystem d = deformed_system(cs1, w);
  for (int h = 0; h < dh; ++h)
    for (int a = 0; a < dr; ++a) {
      ++r.checked;
      if (d.act(h, a) != cs2.act(h, a)) r.fail("deformed action matches", {H.label(h), cs1.R.label(a)});
    }
  for (int h = 0; h < dh; ++h)
    for (int g = 0; g < dh; ++g) {
      ++r.checked;
      if (d.sig(h, g) != cs2.sig(h, g)) r.fail("deformed cocycle matches", {H.label(h), H.label(g)});
    }
  if (!r.ok()) return r;
  ComoduleAlgebra A1 = crossed_product_algebra(cs1), A2 = crossed_product_algebra(cs2);
  Matrix th = theta_matrix(cs1, w);
  int n = A1.dim();
  ++r.checked;
  if (!inverse(th)) r.fail("theta bijective", {"theta"});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checked;
      if (th.apply(A1.mul(x, y)) != A2.mul(th.column(x), th.column(y)))
        r.fail("theta multiplicative", {A1.label(x), A1.label(y)});
    }
  ++r.checked;
  if (th.apply(A1.unit()) != A2.unit()) r.fail("theta unital", {"1"});
  ++r.checked;
  if (A2.coaction() * th != kron(th, Matrix::identity(dh)) * A1.coaction()) r.fail("theta colinear", {"theta"});
  return r;
}

inline CrossedSystem deform_by_a(const CrossedSystem& cs, const EquivalenceWitness& w) {
  const CoquasiBialgebra& H = cs.H();
  if (w.a.apply(H.unit()) != cs.R.unit()) throw std::invalid_argument("deform_by_a: need a(1) = 1");
  CrossedSystem d = deformed_system(cs, w);
  Report r = check_equivalence_witness(cs, d, w);
  if (!r.ok()) throw std::logic_error("deformation failed its own verification: " + r.text());
  return d;
}

// ---- deciding equivalence ----

struct EquivalenceResult {
  std::optional<EquivalenceWitness> witness;
  bool complete = true;   // false when the search could not cover every candidate
  std::string verdict;    // "Equivalent" or "NotEquivalent: ..."
  Report report;
  explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

// the group table when every basis element of H is grouplike and products of
// basis elements are basis elements
inline std::optional<std::vector<std::vector<int>>> group_table(const CoquasiBialgebra& H) {
  int d = H.dim();
  for (int i = 0; i < d; ++i)
    if (!H.coalgebra().is_grouplike(i)) return std::nullopt;
  std::vector<std::vector<int>> t(d, std::vector<int>(d, -1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec p = H.mul(i, j);
      for (int k = 0; k < d; ++k)
        if (p == H.basis(k)) t[i][j] = k;
      if (t[i][j] < 0) return std::nullopt;
    }
  return t;
}

// small coefficients for the unit search: 0, ±1 and ±powers of the field's root
inline std::vector<Scalar> search_coefficients(int field_order) {
  std::vector<Scalar> c{Scalar(0), Scalar(1), Scalar(-1)};
  if (field_order > 2) {
    Scalar z = Scalar::primitive_root(field_order);
    for (int k = 1; k < field_order; ++k) {
      Scalar p = z.pow(k);
      for (const Scalar& s : {p, -p})
        if (std::find(c.begin(), c.end(), s) == c.end()) c.push_back(s);
    }
  }
  return c;
}

inline int field_order_of(const CrossedSystem& cs) {
  long n = 1;
  auto see = [&](const Scalar& s) {
    if (!s.is_zero()) n = std::lcm(n, static_cast<long>(s.order()));
  };
  const Matrix* ms[] = {&cs.R.mult(), &cs.action, &cs.sigma.values, &cs.H().mult(), &cs.H().omega().values};
  for (const Matrix* m : ms)
    for (const auto& s : m->data()) see(s);
  return static_cast<int>(n);
}

}  // namespace detail

// Solves for 𝔞 deforming the action and the cocycle of cs1 into those of cs2.  For grouplike-spanned H the search is
// per grouplike: 𝔞(g) must lie in the linear space {u : u(g·₂r) = (g·₁r)u}, is
// searched among small combinations of a basis of that space on a generating
// set of the group, and is propagated to products by the cocycle relation.
inline EquivalenceResult equivalent_crossed_products(const CrossedSystem& cs1, const CrossedSystem& cs2,
                                                     long search_bound = 200000) {
  EquivalenceResult res;
  if (cs1.R.mult() != cs2.R.mult() || !(cs1.H() == cs2.H()))
    throw std::invalid_argument("equivalent_crossed_products: systems need the same R and the same host");
  if (cs1 == cs2) {
    res.witness = EquivalenceWitness::identity(cs1);
    res.verdict = "Equivalent";
    res.report = check_equivalence_witness(cs1, cs2, *res.witness);
    return res;
  }
  const CoquasiBialgebra& H = cs1.H();
  const Algebra& R = cs1.R;
  int dh = H.dim(), dr = R.dim();
  auto table = detail::group_table(H);
  if (!table) {
    res.complete = false;
    res.verdict = "NotEquivalent: solver-incomplete (H is not spanned by grouplikes)";
    res.report.flag("solver-incomplete");
    return res;
  }
  const auto& T = *table;
  int e = -1;
  for (int i = 0; i < dh; ++i)
    if (H.basis(i) == H.unit()) e = i;

  // U_g = {u : u(g·₂r) - (g·₁r)u = 0 for all r}
  std::vector<std::vector<Vec>> U(dh);
  for (int g = 0; g < dh; ++g) {
    Matrix m(dr * dr, dr);
    for (int j = 0; j < dr; ++j)
      for (int a = 0; a < dr; ++a) {
        Vec v = R.mul(R.basis(j), cs2.act(g, a)) - R.mul(cs1.act(g, a), R.basis(j));
        for (int t = 0; t < dr; ++t) m(a * dr + t, j) = v[t];
      }
    U[g] = nullspace(m);
    if (U[g].empty()) {
      res.verdict = "NotEquivalent: no element intertwines the two actions of " + H.label(g);
      return res;
    }
  }
  // generating set
  std::vector<int> gens;
  std::vector<bool> reached(dh, false);
  reached[e] = true;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < dh; ++a)
        for (int b = 0; b < dh; ++b)
          if (reached[a] && reached[b] && !reached[T[a][b]]) reached[T[a][b]] = grew = true;
    }
  };
  for (int g = 0; g < dh; ++g)
    if (!reached[g]) {
      gens.push_back(g);
      reached[g] = true;
      close();
    }

  auto coeffs = detail::search_coefficients(detail::field_order_of(cs1) * detail::field_order_of(cs2) /
                                             std::gcd(detail::field_order_of(cs1), detail::field_order_of(cs2)));
  // candidate units per generator, fewest nonzero coefficients first
  std::vector<std::vector<Vec>> cand(gens.size());
  long budget = search_bound;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& basis = U[gens[gi]];
    int k = static_cast<int>(basis.size()), q = static_cast<int>(coeffs.size());
    std::vector<std::pair<int, Vec>> found;
    std::vector<int> digit(k, 0);
    long total = 1;
    for (int i = 0; i < k; ++i) {
      total *= q;
      if (total > budget) break;
    }
    total = std::min(total, budget);
    for (long code = 0; code < total; ++code) {
      long c = code;
      int nnz = 0;
      Vec v(dr);
      for (int i = 0; i < k; ++i) {
        int dgt = static_cast<int>(c % q);
        c /= q;
        if (dgt == 0) continue;
        ++nnz;
        axpy(v, coeffs[dgt], basis[i]);
      }
      if (nnz == 0 || !R.inverse(v)) continue;
      found.emplace_back(nnz, std::move(v));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& f : found) cand[gi].push_back(std::move(f.second));
    if (cand[gi].empty()) {
      res.complete = false;
      res.verdict = "NotEquivalent: solver-incomplete (no small unit intertwines the actions of " +
                    H.label(gens[gi]) + ")";
      res.report.flag("solver-incomplete");
      return res;
    }
  }

  // cartesian product over generators, with propagation by the cocycle relation:
  // 𝔞(hg) = σ₁(h,g)^-1 (h·₁𝔞(g)) 𝔞(h) σ₂(h,g)
  std::vector<std::size_t> pos(gens.size(), 0);
  long tried = 0;
  while (true) {
    if (++tried > budget) break;
    std::vector<std::optional<Vec>> a(dh);
    a[e] = R.unit();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) a[gens[gi]] = cand[gi][pos[gi]];
    bool grew = true, stuck = false;
    while (grew && !stuck) {
      grew = false;
      for (int h = 0; h < dh && !stuck; ++h)
        for (int g = 0; g < dh && !stuck; ++g) {
          int hg = T[h][g];
          if (!a[h] || !a[g] || a[hg]) continue;
          auto si = R.inverse(cs1.sig(h, g));
          if (!si) continue;
          a[hg] = R.mul(R.mul(R.mul(*si, cs1.act(h, *a[g])), *a[h]), cs2.sig(h, g));
          grew = true;
        }
    }
    bool full = std::all_of(a.begin(), a.end(), [](const auto& x) { return x.has_value(); });
    if (full) {
      Matrix am(dr, dh);
      bool invertible = true;
      Matrix ai(dr, dh);
      for (int g = 0; g < dh; ++g) {
        am.set_column(g, *a[g]);
        auto inv = R.inverse(*a[g]);
        if (!inv) {
          invertible = false;
          break;
        }
        ai.set_column(g, *inv);
      }
      if (invertible) {
        EquivalenceWitness w{am, ai};
        Report rep = check_equivalence_witness(cs1, cs2, w);
        if (rep.ok()) {
          res.witness = w;
          res.verdict = "Equivalent";
          res.report = rep;
          return res;
        }
      }
    }
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      if (++pos[i] < cand[i].size()) break;
      pos[i] = 0;
    }
    if (i == gens.size()) break;
  }
  // a complete answer needs every intertwiner space searched exhaustively,
  // which only happens when each one is spanned by units we enumerated
  res.complete = false;
  res.verdict = "NotEquivalent: solver-incomplete (no witness among the searched units)";
  res.report.flag("solver-incomplete");
  return res;
}

// ---- worked examples ----

// R = H* with the convolution product, (h⇀φ)(g) = φ(gh), σ(h,g)(k) = ω^-1(k,h,g)
inline CrossedSystem heisenberg_system(const Host& host) {
  const CoquasiBialgebra& H = host.H();
  int d = H.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) labels.push_back(H.label(i) + "*");
  // dual basis: (φ_i ψ_j)(k) = Σ φ_i(k1) ψ_j(k2), so φ_i φ_j = Σ_k [coeff of e_i⊗e_j in Δ(e_k)] φ_k
  Matrix mult(d, d * d);
  for (int k = 0; k < d; ++k)
    for (const auto& s : H.coalgebra().delta(k)) mult(k, s.left * d + s.right) += s.coeff;
  Algebra R(Space(labels), std::move(mult), H.coalgebra().counit());
  Matrix action(d, d * d);
  for (int h = 0; h < d; ++h)
    for (int i = 0; i < d; ++i)
      for (int g = 0; g < d; ++g) {
        // (h⇀φ_i)(g) = φ_i(gh)
        Scalar c = H.mul(g, h)[i];
        if (!c.is_zero()) action(g, h * d + i) = c;
      }
  Functional sigma(2, d, d);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k) sigma.values(k, h * d + g) = H.om_inv(k, h, g);
  Functional sigma_inv(2, d, d);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k) sigma_inv.values(k, h * d + g) = H.om(k, h, g);
  CrossedSystem cs{std::move(R), host, std::move(action), std::move(sigma), std::nullopt};
  cs.sigma_inv = std::move(sigma_inv);
  return cs;
}

inline CrossedProduct heisenberg_double(const Host& host) { return build_crossed_product(heisenberg_system(host)); }

// Hom(H, A) with
// (φ⊛ψ)(h) = φ(ψ(h3)_2 h2)_0 ψ(h3)_0 ω^-1(φ(ψ(h3)_2 h2)_1, ψ(h3)_1, h1)
// on the basis e_{a,h} (h' ↦ δ_{h,h'} a), index a*dimH + h
struct CircledastAlgebra {
  Algebra algebra;
  Report report;       // associativity and unit
  CrossedSystem system;
  Report system_report;
};

inline Matrix circledast_product(const Matrix& phi, const Matrix& psi, const ComoduleAlgebra& A) {
  const CoquasiBialgebra& H = A.H();
  int d = H.dim(), n = A.dim();
  Matrix out(n, d);
  for (int h = 0; h < d; ++h) {
    Vec acc(n);
    for (const auto& th : H.terms(h, 3)) {
      Vec p = psi.column(th.legs[2]);
      for (int b = 0; b < n; ++b) {
        if (p[b].is_zero()) continue;
        for (const auto& tb : A.coaction_terms(b, 2)) {
          Scalar c = th.coeff * p[b] * tb.coeff;
          Vec k = H.mul(tb.legs[1], th.legs[1]);
          Vec f = phi.apply(k);
          for (int a = 0; a < n; ++a) {
            if (f[a].is_zero()) continue;
            for (const auto& ta : A.coaction_terms(a, 1)) {
              Scalar w = H.om_inv(ta.legs[0], tb.legs[0], th.legs[0]);
              if (w.is_zero()) continue;
              axpy(acc, c * f[a] * ta.coeff * w, A.mul(ta.elem, tb.elem));
            }
          }
        }
      }
    }
    out.set_column(h, acc);
  }
  return out;
}

inline CircledastAlgebra circledast_algebra(const ComoduleAlgebra& A) {
  const CoquasiBialgebra& H = A.H();
  int d = H.dim(), n = A.dim(), N = n * d;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < d; ++h) labels.push_back(A.label(a) + "|" + H.label(h) + "*");
  auto basis_map = [&](int idx) {
    Matrix m(n, d);
    m(idx / d, idx % d) = Scalar(1);
    return m;
  };
  Matrix mult(N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) mult.set_column(i * N + j, detail::flatten_map(circledast_product(basis_map(i), basis_map(j), A)));
  Matrix unit_map = convolution_unit(H.coalgebra(), A.algebra());
  CircledastAlgebra out;
  out.algebra = Algebra(Space(labels), std::move(mult), detail::flatten_map(unit_map));
  out.report = check_algebra(out.algebra);
  out.report.subject = "circledast algebra";
  // (h·φ)(g) = φ(gh), σ(h,g)(k) = ω^-1(k,h,g)1_A
  Matrix action(N, d * N);
  for (int h = 0; h < d; ++h)
    for (int a = 0; a < n; ++a)
      for (int g2 = 0; g2 < d; ++g2)
        for (int g = 0; g < d; ++g) {
          Scalar c = H.mul(g, h)[g2];
          if (!c.is_zero()) action(a * d + g, h * N + (a * d + g2)) = c;
        }
  Functional sigma(2, d, N);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k)
        for (int a = 0; a < n; ++a) {
          sigma.values(a * d + k, h * d + g) = H.om_inv(k, h, g) * A.unit()[a];
        }
  out.system = CrossedSystem{out.algebra, A.host(), std::move(action), std::move(sigma), std::nullopt};
  out.system_report = check_crossed_system(out.system);
  return out;
}

}  // namespace coquasi
