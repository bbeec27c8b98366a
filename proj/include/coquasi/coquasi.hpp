// Coquasi-bialgebras and coquasi-Hopf algebras given by structure constants:
// axiom checkers, gauge twists, the antipode twist f, duality with
// quasi-bialgebras and the regular actions of H and H*.
#pragma once

#include "coquasi/linear_core.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coquasi {

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CoquasiBialgebra {
 public:
  CoquasiBialgebra() = default;
  // omega_inv is computed by convolution inversion when not supplied
  CoquasiBialgebra(Coalgebra coalgebra, Matrix mult, Vec unit, Functional omega,
                   std::optional<Functional> omega_inv = std::nullopt)
      : coalg_(std::move(coalgebra)), mult_(std::move(mult)), unit_(std::move(unit)), omega_(std::move(omega)) {
    int d = coalg_.dim();
    if (mult_.rows() != d || mult_.cols() != d * d || static_cast<int>(unit_.size()) != d)
      throw std::invalid_argument("CoquasiBialgebra: multiplication shape mismatch");
    if (omega_.arity != 3 || omega_.base_dim != d || omega_.target_dim() != 1)
      throw ArityMismatch("CoquasiBialgebra: omega must be a scalar functional of arity 3");
    if (omega_inv) {
      omega_inv_ = std::move(*omega_inv);
    } else {
      std::string diag;
      auto inv = convolution_inverse(omega_, coalg_, Algebra::ground_field(), &diag);
      if (!inv) throw NotInvertible("omega is not convolution invertible: " + diag);
      omega_inv_ = std::move(*inv);
    }
  }

  const Coalgebra& coalgebra() const { return coalg_; }
  int dim() const { return coalg_.dim(); }
  const Space& space() const { return coalg_.space(); }
  const std::string& label(int i) const { return coalg_.label(i); }
  const Matrix& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const Functional& omega() const { return omega_; }
  const Functional& omega_inv() const { return omega_inv_; }

  Vec basis(int i) const { return unit_vec(dim(), i); }
  const std::vector<SweedlerTerm>& terms(int i, int k) const { return coalg_.terms(i, k); }
  Scalar eps(int i) const { return coalg_.counit()[i]; }
  Scalar eps(const Vec& x) const { return coalg_.counit(x); }

  Vec mul(int i, int j) const { return mult_.column(i * dim() + j); }
  Vec mul(const Vec& x, const Vec& y) const {
    int d = dim();
    Vec out(d);
    for (int i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (int t = 0; t < d; ++t)
          if (!mult_(t, i * d + j).is_zero()) out[t] += c * mult_(t, i * d + j);
      }
    }
    return out;
  }

  Scalar om(int h, int g, int k) const { return omega_.at({h, g, k}); }
  Scalar om_inv(int h, int g, int k) const { return omega_inv_.at({h, g, k}); }
  Scalar om(const Vec& h, const Vec& g, const Vec& k) const { return apply_functional(omega_, {h, g, k}); }
  Scalar om_inv(const Vec& h, const Vec& g, const Vec& k) const {
    return apply_functional(omega_inv_, {h, g, k});
  }

  // the (not necessarily associative) multiplication packaged as an Algebra
  Algebra as_algebra() const { return Algebra(space(), mult_, unit_); }

  bool omega_trivial() const { return omega_ == Functional::counit_power(coalg_, 3); }

  // tensor-level equality (labels are not compared)
  friend bool operator==(const CoquasiBialgebra& a, const CoquasiBialgebra& b) {
    return a.coalg_.comult() == b.coalg_.comult() && a.coalg_.counit() == b.coalg_.counit() && a.mult_ == b.mult_ &&
           a.unit_ == b.unit_ && a.omega_ == b.omega_ && a.omega_inv_ == b.omega_inv_;
  }

 private:
  Coalgebra coalg_;
  Matrix mult_;
  Vec unit_;
  Functional omega_, omega_inv_;
};

struct TwistF {
  Functional f, f_inv;
};

class CoquasiHopf {
 public:
  CoquasiHopf() = default;
  CoquasiHopf(CoquasiBialgebra base, Matrix antipode, Functional alpha_fn, Functional beta_fn,
              std::optional<TwistF> tf = std::nullopt)
      : base_(std::move(base)), S_(std::move(antipode)), alpha_(std::move(alpha_fn)), beta_(std::move(beta_fn)),
        f_(std::move(tf)) {
    int d = base_.dim();
    if (S_.rows() != d || S_.cols() != d) throw std::invalid_argument("CoquasiHopf: antipode shape mismatch");
    if (alpha_.arity != 1 || beta_.arity != 1 || alpha_.base_dim != d || beta_.base_dim != d)
      throw ArityMismatch("CoquasiHopf: alpha and beta must be functionals of arity 1");
    // rescale so that alpha(1) = beta(1) = 1 when alpha(1)beta(1) = 1
    Scalar a1 = alpha(base_.unit()), b1 = beta(base_.unit());
    if (!a1.is_zero() && a1 * b1 == Scalar(1) && a1 != Scalar(1)) {
      Scalar inv = a1.inverse();
      for (int i = 0; i < d; ++i) {
        alpha_.values(0, i) *= inv;
        beta_.values(0, i) *= a1;
      }
    }
  }

  const CoquasiBialgebra& base() const { return base_; }
  int dim() const { return base_.dim(); }
  const std::string& label(int i) const { return base_.label(i); }
  const Matrix& antipode() const { return S_; }
  const Functional& alpha_functional() const { return alpha_; }
  const Functional& beta_functional() const { return beta_; }
  const std::optional<TwistF>& twist_f() const { return f_; }
  CoquasiHopf with_twist_f(TwistF f) const {
    CoquasiHopf h = *this;
    h.f_ = std::move(f);
    return h;
  }

  friend bool operator==(const CoquasiHopf& a, const CoquasiHopf& b) {
    return a.base_ == b.base_ && a.S_ == b.S_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

  Vec S(int i) const { return S_.column(i); }
  Vec S(const Vec& x) const { return S_.apply(x); }
  Scalar alpha(int i) const { return alpha_.values(0, i); }
  Scalar beta(int i) const { return beta_.values(0, i); }
  Scalar alpha(const Vec& x) const { return apply_functional(alpha_, {x}); }
  Scalar beta(const Vec& x) const { return apply_functional(beta_, {x}); }

  // shorthand forwarding to the base
  Vec mul(const Vec& x, const Vec& y) const { return base_.mul(x, y); }
  Vec mul(int i, int j) const { return base_.mul(i, j); }
  Vec basis(int i) const { return base_.basis(i); }
  const Vec& unit() const { return base_.unit(); }
  const std::vector<SweedlerTerm>& terms(int i, int k) const { return base_.terms(i, k); }
  Scalar eps(int i) const { return base_.eps(i); }
  Scalar eps(const Vec& x) const { return base_.eps(x); }
  const Coalgebra& coalgebra() const { return base_.coalgebra(); }

 private:
  CoquasiBialgebra base_;
  Matrix S_;
  Functional alpha_, beta_;
  std::optional<TwistF> f_;
};

// ---- checkers ----

inline Report check_coquasi_bialgebra(const CoquasiBialgebra& H) {
  Report r = check_coalgebra(H.coalgebra());
  r.subject = "coquasi-bialgebra";
  int d = H.dim();
  const Coalgebra& C = H.coalgebra();
  auto L = [&](int i) { return H.label(i); };

  // unit grouplike
  ++r.checked;
  {
    Vec dd = C.sweedler(H.unit(), 2);
    if (dd != kron(H.unit(), H.unit()) || H.eps(H.unit()) != Scalar(1)) r.fail("grouplike unit", {"1"});
  }
  for (int h = 0; h < d; ++h) {
    Vec e = H.basis(h);
    ++r.checked;
    if (H.mul(H.unit(), e) != e || H.mul(e, H.unit()) != e) r.fail("unit law", {L(h)});
    for (int g = 0; g < d; ++g) {
      // m is a morphism of coalgebras
      Vec hg = H.mul(h, g);
      Vec lhs = C.sweedler(hg, 2), rhs(d * d);
      for (const auto& th : H.terms(h, 2))
        for (const auto& tg : H.terms(g, 2))
          axpy(rhs, th.coeff * tg.coeff, kron(H.mul(th.legs[0], tg.legs[0]), H.mul(th.legs[1], tg.legs[1])));
      ++r.checked;
      if (lhs != rhs) r.fail("multiplicative coproduct", {L(h), L(g)});
      ++r.checked;
      if (H.eps(hg) != H.eps(h) * H.eps(g)) r.fail("multiplicative counit", {L(h), L(g)});
      // omega(h, 1, g) = eps(h) eps(g)
      ++r.checked;
      if (H.om(e, H.unit(), H.basis(g)) != H.eps(h) * H.eps(g)) r.fail("omega normalization", {L(h), "1", L(g)});
    }
  }

  // h1(g1k1) omega(h2,g2,k2) = omega(h1,g1,k1)(h2g2)k2
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k) {
        Vec lhs(d), rhs(d);
        for (const auto& th : H.terms(h, 2))
          for (const auto& tg : H.terms(g, 2))
            for (const auto& tk : H.terms(k, 2)) {
              Scalar c = th.coeff * tg.coeff * tk.coeff;
              Scalar wl = H.om(th.legs[1], tg.legs[1], tk.legs[1]);
              if (!wl.is_zero()) axpy(lhs, c * wl, H.mul(H.basis(th.legs[0]), H.mul(tg.legs[0], tk.legs[0])));
              Scalar wr = H.om(th.legs[0], tg.legs[0], tk.legs[0]);
              if (!wr.is_zero()) axpy(rhs, c * wr, H.mul(H.mul(th.legs[1], tg.legs[1]), H.basis(tk.legs[1])));
            }
        ++r.checked;
        if (lhs != rhs) r.fail("quasi-associativity", {L(h), L(g), L(k)});
      }

  // omega(h1,g1,k1l1) omega(h2g2,k2,l2) = omega(g1,k1,l1) omega(h1,g2k2,l2) omega(h2,g3,k3)
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Scalar lhs, rhs;
          for (const auto& th : H.terms(h, 2))
            for (const auto& tg : H.terms(g, 2))
              for (const auto& tk : H.terms(k, 2))
                for (const auto& tl : H.terms(l, 2)) {
                  Scalar a = H.om(H.basis(th.legs[0]), H.basis(tg.legs[0]), H.mul(tk.legs[0], tl.legs[0]));
                  if (a.is_zero()) continue;
                  Scalar b = H.om(H.mul(th.legs[1], tg.legs[1]), H.basis(tk.legs[1]), H.basis(tl.legs[1]));
                  lhs += th.coeff * tg.coeff * tk.coeff * tl.coeff * a * b;
                }
          for (const auto& th : H.terms(h, 2))
            for (const auto& tg : H.terms(g, 3))
              for (const auto& tk : H.terms(k, 3))
                for (const auto& tl : H.terms(l, 2)) {
                  Scalar a = H.om(tg.legs[0], tk.legs[0], tl.legs[0]);
                  if (a.is_zero()) continue;
                  Scalar b = H.om(H.basis(th.legs[0]), H.mul(tg.legs[1], tk.legs[1]), H.basis(tl.legs[1]));
                  if (b.is_zero()) continue;
                  Scalar c = H.om(th.legs[1], tg.legs[2], tk.legs[2]);
                  rhs += th.coeff * tg.coeff * tk.coeff * tl.coeff * a * b * c;
                }
          ++r.checked;
          if (lhs != rhs)
            r.fail("omega 3-cocycle", {L(h), L(g), L(k), L(l)}, lhs.to_string() + " vs " + rhs.to_string());
        }

  // omega * omega_inv = omega_inv * omega = eps^3
  {
    Algebra k = Algebra::ground_field();
    Functional u = Functional::counit_power(C, 3);
    Functional left = convolve(H.omega(), H.omega_inv(), C, k), right = convolve(H.omega_inv(), H.omega(), C, k);
    for (int idx = 0; idx < u.size(); ++idx) {
      ++r.checked;
      if (left.values(0, idx) != u.values(0, idx) || right.values(0, idx) != u.values(0, idx)) {
        auto l = unflatten(idx, d, 3);
        r.fail("omega inverse", {L(l[0]), L(l[1]), L(l[2])});
      }
    }
  }
  if (r.ok() && H.omega_trivial()) r.flag("ordinary bialgebra");
  return r;
}

inline Report check_twist_f(const CoquasiHopf& H, const TwistF& tf) {
  Report r;
  r.subject = "twist f";
  int d = H.dim();
  const CoquasiBialgebra& B = H.base();
  auto L = [&](int i) { return H.label(i); };
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g) {
      // f(h1,g1)S(h2g2) = S(g1)S(h1)f(h2,g2)
      Vec lhs(d), rhs(d);
      for (const auto& th : H.terms(h, 2))
        for (const auto& tg : H.terms(g, 2)) {
          Scalar c = th.coeff * tg.coeff;
          Scalar a = tf.f.at({th.legs[0], tg.legs[0]});
          if (!a.is_zero()) axpy(lhs, c * a, H.S(H.mul(th.legs[1], tg.legs[1])));
          Scalar b = tf.f.at({th.legs[1], tg.legs[1]});
          if (!b.is_zero()) axpy(rhs, c * b, H.mul(H.S(tg.legs[0]), H.S(th.legs[0])));
        }
      ++r.checked;
      if (lhs != rhs) r.fail("f antipode identity", {L(h), L(g)});

      // beta(h1g1) f^-1(h2,g2) = omega(h1g1,S(g5),S(h4)) omega^-1(h2,g2,S(g4)) beta(h3) beta(g3)
      Scalar l, rr;
      for (const auto& th : H.terms(h, 2))
        for (const auto& tg : H.terms(g, 2))
          l += th.coeff * tg.coeff * H.beta(H.mul(th.legs[0], tg.legs[0])) * tf.f_inv.at({th.legs[1], tg.legs[1]});
      for (const auto& th : H.terms(h, 4))
        for (const auto& tg : H.terms(g, 5)) {
          Scalar c = th.coeff * tg.coeff * H.beta(th.legs[2]) * H.beta(tg.legs[2]);
          if (c.is_zero()) continue;
          Scalar a = B.om(H.mul(th.legs[0], tg.legs[0]), H.S(tg.legs[4]), H.S(th.legs[3]));
          if (a.is_zero()) continue;
          rr += c * a * B.om_inv(H.basis(th.legs[1]), H.basis(tg.legs[1]), H.S(tg.legs[3]));
        }
      ++r.checked;
      if (l != rr) r.fail("f beta identity", {L(h), L(g)}, l.to_string() + " vs " + rr.to_string());
    }
  // normalization and invertibility
  Algebra k = Algebra::ground_field();
  Functional u = Functional::counit_power(H.coalgebra(), 2);
  ++r.checked;
  if (convolve(tf.f, tf.f_inv, H.coalgebra(), k) != u || convolve(tf.f_inv, tf.f, H.coalgebra(), k) != u)
    r.fail("f inverse", {"f", "f_inv"});
  for (int h = 0; h < d; ++h) {
    ++r.checked;
    if (apply_functional(tf.f, {H.unit(), H.basis(h)}) != H.eps(h) ||
        apply_functional(tf.f, {H.basis(h), H.unit()}) != H.eps(h))
      r.fail("f normalization", {L(h)});
  }
  return r;
}

inline Report check_coquasi_hopf(const CoquasiHopf& H) {
  Report r = check_coquasi_bialgebra(H.base());
  r.subject = "coquasi-Hopf algebra";
  int d = H.dim();
  const CoquasiBialgebra& B = H.base();
  auto L = [&](int i) { return H.label(i); };
  for (int h = 0; h < d; ++h) {
    // S(h1) alpha(h2) h3 = alpha(h) 1
    Vec lhs(d);
    for (const auto& t : H.terms(h, 3)) {
      Scalar a = H.alpha(t.legs[1]);
      if (!a.is_zero()) axpy(lhs, t.coeff * a, H.mul(H.S(t.legs[0]), H.basis(t.legs[2])));
    }
    ++r.checked;
    if (lhs != H.alpha(h) * H.unit()) r.fail("antipode-alpha identity", {L(h)});
    // h1 beta(h2) S(h3) = beta(h) 1
    Vec lhs2(d);
    for (const auto& t : H.terms(h, 3)) {
      Scalar b = H.beta(t.legs[1]);
      if (!b.is_zero()) axpy(lhs2, t.coeff * b, H.mul(H.basis(t.legs[0]), H.S(t.legs[2])));
    }
    ++r.checked;
    if (lhs2 != H.beta(h) * H.unit()) r.fail("antipode-beta identity", {L(h)});
    // omega(h1 beta(h2), S(h3), alpha(h4) h5) = eps(h)
    // omega^-1(S(h1), alpha(h2) h3 beta(h4), S(h5)) = eps(h)
    Scalar w, wi;
    for (const auto& t : H.terms(h, 5)) {
      Scalar c = t.coeff * H.beta(t.legs[1]) * H.alpha(t.legs[3]);
      if (!c.is_zero()) w += c * B.om(H.basis(t.legs[0]), H.S(t.legs[2]), H.basis(t.legs[4]));
      Scalar c2 = t.coeff * H.alpha(t.legs[1]) * H.beta(t.legs[3]);
      if (!c2.is_zero()) wi += c2 * B.om_inv(H.S(t.legs[0]), H.basis(t.legs[2]), H.S(t.legs[4]));
    }
    ++r.checked;
    if (w != H.eps(h) || wi != H.eps(h))
      r.fail("omega-antipode identity", {L(h)}, w.to_string() + ", " + wi.to_string());
    // S is an anti-morphism of coalgebras
    Vec ds = H.coalgebra().sweedler(H.S(h), 2), flip(d * d);
    for (const auto& t : H.terms(h, 2)) axpy(flip, t.coeff, kron(H.S(t.legs[1]), H.S(t.legs[0])));
    ++r.checked;
    if (ds != flip || H.eps(H.S(h)) != H.eps(h)) r.fail("antipode anti-comultiplicative", {L(h)});
  }
  ++r.checked;
  if (H.S(H.unit()) != H.unit()) r.fail("antipode unital", {"1"});
  ++r.checked;
  if (H.alpha(H.unit()) * H.beta(H.unit()) != Scalar(1)) r.fail("alpha(1)beta(1) = 1", {"1"});
  if (H.twist_f()) r.merge(check_twist_f(H, *H.twist_f()));
  return r;
}

// ---- gauge twists ----

struct Twist {
  Functional tau, tau_inv;

  static Twist make(const Functional& tau, const Coalgebra& c) {
    std::string diag;
    auto inv = convolution_inverse(tau, c, Algebra::ground_field(), &diag);
    if (!inv) throw NotInvertible("twist is not convolution invertible: " + diag);
    return Twist{tau, *inv};
  }
  static Twist trivial(const Coalgebra& c) {
    Functional u = Functional::counit_power(c, 2);
    return Twist{u, u};
  }
  Twist inverse() const { return Twist{tau_inv, tau}; }
};

inline Report check_twist(const Twist& t, const CoquasiBialgebra& H) {
  Report r;
  r.subject = "twist";
  for (int h = 0; h < H.dim(); ++h) {
    ++r.checked;
    if (apply_functional(t.tau, {H.unit(), H.basis(h)}) != H.eps(h) ||
        apply_functional(t.tau, {H.basis(h), H.unit()}) != H.eps(h))
      r.fail("twist normalization", {H.label(h)});
  }
  Functional u = Functional::counit_power(H.coalgebra(), 2);
  Algebra k = Algebra::ground_field();
  ++r.checked;
  if (convolve(t.tau, t.tau_inv, H.coalgebra(), k) != u || convolve(t.tau_inv, t.tau, H.coalgebra(), k) != u)
    r.fail("twist inverse", {"tau", "tau_inv"});
  return r;
}

inline CoquasiBialgebra twist_bialgebra(const CoquasiBialgebra& H, const Twist& t) {
  int d = H.dim();
  const auto& tau = t.tau;
  const auto& ti = t.tau_inv;
  // h ._tau g = tau(h1,g1) h2g2 tau^-1(h3,g3)
  Matrix m(d, d * d);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g) {
      Vec acc(d);
      for (const auto& th : H.terms(h, 3))
        for (const auto& tg : H.terms(g, 3)) {
          Scalar c = th.coeff * tg.coeff * tau.at({th.legs[0], tg.legs[0]}) * ti.at({th.legs[2], tg.legs[2]});
          if (!c.is_zero()) axpy(acc, c, H.mul(th.legs[1], tg.legs[1]));
        }
      m.set_column(h * d + g, acc);
    }
  // omega_tau(h,g,k) = tau(g1,k1) tau(h1,g2k2) omega(h2,g3,k3) tau^-1(h3g4,k4) tau^-1(h4,g5)
  Functional w(3, d);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g)
      for (int k = 0; k < d; ++k) {
        Scalar acc;
        for (const auto& th : H.terms(h, 4))
          for (const auto& tg : H.terms(g, 5))
            for (const auto& tk : H.terms(k, 4)) {
              Scalar c = th.coeff * tg.coeff * tk.coeff * tau.at({tg.legs[0], tk.legs[0]});
              if (c.is_zero()) continue;
              c *= apply_functional(tau, {H.basis(th.legs[0]), H.mul(tg.legs[1], tk.legs[1])});
              if (c.is_zero()) continue;
              c *= H.om(th.legs[1], tg.legs[2], tk.legs[2]);
              if (c.is_zero()) continue;
              c *= apply_functional(ti, {H.mul(th.legs[2], tg.legs[3]), H.basis(tk.legs[3])});
              if (c.is_zero()) continue;
              acc += c * ti.at({th.legs[3], tg.legs[4]});
            }
        w.at({h, g, k}) = acc;
      }
  return CoquasiBialgebra(H.coalgebra(), std::move(m), H.unit(), std::move(w));
}

inline CoquasiHopf twist_bialgebra(const CoquasiHopf& H, const Twist& t) {
  CoquasiBialgebra base = twist_bialgebra(H.base(), t);
  int d = H.dim();
  Functional alpha(1, d), beta(1, d);
  for (int h = 0; h < d; ++h) {
    // alpha_tau(h) = tau^-1(S(h1), alpha(h2) h3)
    Scalar a;
    for (const auto& th : H.terms(h, 3)) {
      Scalar c = th.coeff * H.alpha(th.legs[1]);
      if (!c.is_zero()) a += c * apply_functional(t.tau_inv, {H.S(th.legs[0]), H.basis(th.legs[2])});
    }
    alpha.at({h}) = a;
    // beta_tau(h) = tau(h1 beta(h2), S(h3))
    Scalar b;
    for (const auto& th : H.terms(h, 3)) {
      Scalar c = th.coeff * H.beta(th.legs[1]);
      if (!c.is_zero()) b += c * apply_functional(t.tau, {H.basis(th.legs[0]), H.S(th.legs[2])});
    }
    beta.at({h}) = b;
  }
  return CoquasiHopf(std::move(base), H.antipode(), std::move(alpha), std::move(beta));
}

// ---- the twist f ----

struct TwistFResult {
  std::optional<TwistF> value;
  std::string diagnostic;
  explicit operator bool() const { return value.has_value(); }
};

namespace detail {

// linear conditions on the coordinates of f: the antipode identity and the
// normalization f(1,h) = f(h,1) = eps(h)
inline std::pair<Matrix, Vec> twist_f_system(const CoquasiHopf& H) {
  int d = H.dim(), n = d * d;
  std::vector<Vec> rows;
  Vec rhs;
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g) {
      // coefficient of f(a,b) in the t-th coordinate of LHS - RHS
      std::vector<Vec> eq(d, Vec(n));
      for (const auto& th : H.terms(h, 2))
        for (const auto& tg : H.terms(g, 2)) {
          Scalar c = th.coeff * tg.coeff;
          Vec l = H.S(H.mul(th.legs[1], tg.legs[1]));
          Vec r = H.mul(H.S(tg.legs[0]), H.S(th.legs[0]));
          int il = th.legs[0] * d + tg.legs[0], ir = th.legs[1] * d + tg.legs[1];
          for (int t = 0; t < d; ++t) {
            if (!l[t].is_zero()) eq[t][il] += c * l[t];
            if (!r[t].is_zero()) eq[t][ir] -= c * r[t];
          }
        }
      for (auto& e : eq) {
        rows.push_back(std::move(e));
        rhs.emplace_back();
      }
    }
  for (int h = 0; h < d; ++h) {
    Vec a(n), b(n);
    for (int i = 0; i < d; ++i) {
      a[i * d + h] += H.unit()[i];
      b[h * d + i] += H.unit()[i];
    }
    rows.push_back(std::move(a));
    rhs.push_back(H.eps(h));
    rows.push_back(std::move(b));
    rhs.push_back(H.eps(h));
  }
  Matrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return {std::move(m), std::move(rhs)};
}

inline bool lex_less_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (lex_less(a[i], b[i])) return true;
    if (lex_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace detail

// Solves the antipode identity for f with counital normalization and keeps
// a solution that is convolution invertible and satisfies the beta identity.
// When beta∘m is invertible the beta identity pins f^-1 down directly;
// otherwise a bounded {0, ±1} search over the solution space is used and the
// lexicographically smallest valid coefficient vector wins.
inline TwistFResult solve_twist_f(const CoquasiHopf& H, int search_bound = 4096) {
  TwistFResult res;
  int d = H.dim(), n = d * d;
  const Coalgebra& C = H.coalgebra();
  Algebra k = Algebra::ground_field();
  auto [A, b] = detail::twist_f_system(H);
  auto sol = solve_affine(A, b);
  if (!sol) {
    res.diagnostic = "NoSolution: the antipode identity has no normalized solution";
    return res;
  }
  auto valid = [&](const Vec& coords) -> std::optional<TwistF> {
    Functional f(2, d, detail::unflatten_map(coords, 1, n));
    auto fi = convolution_inverse(f, C, k);
    if (!fi) return std::nullopt;
    TwistF tf{f, *fi};
    if (!check_twist_f(H, tf).ok()) return std::nullopt;
    return tf;
  };

  // beta identity solved for f^-1 when beta∘m is invertible
  Functional bm(2, d), D(2, d);
  for (int h = 0; h < d; ++h)
    for (int g = 0; g < d; ++g) {
      bm.at({h, g}) = H.beta(H.mul(h, g));
      Scalar rr;
      for (const auto& th : H.terms(h, 4))
        for (const auto& tg : H.terms(g, 5)) {
          Scalar c = th.coeff * tg.coeff * H.beta(th.legs[2]) * H.beta(tg.legs[2]);
          if (c.is_zero()) continue;
          Scalar a = H.base().om(H.mul(th.legs[0], tg.legs[0]), H.S(tg.legs[4]), H.S(th.legs[3]));
          if (a.is_zero()) continue;
          rr += c * a * H.base().om_inv(H.basis(th.legs[1]), H.basis(tg.legs[1]), H.S(tg.legs[3]));
        }
      D.at({h, g}) = rr;
    }
  if (auto bmi = convolution_inverse(bm, C, k)) {
    Functional finv = convolve(*bmi, D, C, k);
    auto f = convolution_inverse(finv, C, k);
    if (!f) {
      res.diagnostic = "NoSolution: the beta identity forces a non-invertible f";
      return res;
    }
    Vec coords = f->values.row(0);
    if (A.apply(coords) != b) {
      res.diagnostic = "NoSolution: the f forced by the beta identity violates the antipode identity";
      return res;
    }
    if (auto tf = valid(coords)) {
      res.value = std::move(*tf);
      return res;
    }
    res.diagnostic = "NoSolution: candidate failed verification";
    return res;
  }

  // bounded enumeration over particular + sum c_i dir_i, c_i in {0, 1, -1}
  std::size_t m = sol->directions.size();
  std::optional<TwistF> best;
  Vec best_coords;
  long total = 1;
  for (std::size_t i = 0; i < m && total <= search_bound; ++i) total *= 3;
  if (total > search_bound) res.diagnostic = "search truncated at bound " + std::to_string(search_bound);
  long limit = std::min<long>(total, search_bound);
  for (long code = 0; code < limit; ++code) {
    Vec coords = sol->particular;
    long c = code;
    for (std::size_t i = 0; i < m; ++i) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit == 1) coords = coords + sol->directions[i];
      if (digit == 2) coords = coords - sol->directions[i];
    }
    if (best && !detail::lex_less_vec(coords, best_coords)) continue;
    if (auto tf = valid(coords)) {
      best = std::move(tf);
      best_coords = coords;
    }
  }
  if (!best) {
    res.diagnostic = "NoSolution: no candidate in the searched solution space is invertible and satisfies the beta "
                     "identity" + (res.diagnostic.empty() ? std::string() : " (" + res.diagnostic + ")");
    return res;
  }
  res.value = std::move(best);
  return res;
}

// ---- duality with finite-dimensional quasi-bialgebras ----

// A quasi-bialgebra (A, m, 1, Δ, ε, Φ) with Φ ∈ A⊗A⊗A invertible and
// (id⊗Δ)Δ(a) Φ = Φ (Δ⊗id)Δ(a).
struct QuasiBialgebra {
  Space space;
  Matrix mult;    // dim × dim²
  Vec unit;
  Matrix comult;  // dim² × dim
  Vec counit;
  Vec phi;        // dim³
  Vec phi_inv;    // dim³
};

inline CoquasiBialgebra dualize(const QuasiBialgebra& q) {
  int d = q.space.dim();
  std::vector<std::string> labels;
  for (const auto& l : q.space.labels()) labels.push_back(l.rfind("dual:", 0) == 0 ? l.substr(5) : "dual:" + l);
  Coalgebra c(Space(labels), q.mult.transpose(), q.unit);
  Functional w(3, d), wi(3, d);
  for (int i = 0; i < d * d * d; ++i) {
    w.values(0, i) = q.phi[i];
    wi.values(0, i) = q.phi_inv[i];
  }
  return CoquasiBialgebra(std::move(c), q.comult.transpose(), q.counit, std::move(w), std::move(wi));
}

inline QuasiBialgebra to_quasi_dual(const CoquasiBialgebra& H) {
  QuasiBialgebra q;
  std::vector<std::string> labels;
  for (const auto& l : H.space().labels()) labels.push_back(l.rfind("dual:", 0) == 0 ? l.substr(5) : "dual:" + l);
  q.space = Space(labels);
  q.mult = H.coalgebra().comult().transpose();
  q.unit = H.coalgebra().counit();
  q.comult = H.mult().transpose();
  q.counit = H.unit();
  q.phi = H.omega().values.row(0);
  q.phi_inv = H.omega_inv().values.row(0);
  return q;
}

// ---- regular actions ----

// h*⇀h = h1 h*(h2), h↼h* = h*(h1) h2 on H; (h⇀h*)(g) = h*(gh),
// (h*↼h)(g) = h*(hg) on H*.  Elements of H* are coordinate vectors on the
// dual basis.
struct RegularActions {
  const CoquasiBialgebra* H;

  Vec dual_hits(const Vec& hstar, const Vec& h) const {
    Vec out(H->dim());
    for (int i = 0; i < H->dim(); ++i) {
      if (h[i].is_zero()) continue;
      for (const auto& t : H->terms(i, 2))
        if (!hstar[t.legs[1]].is_zero()) out[t.legs[0]] += h[i] * t.coeff * hstar[t.legs[1]];
    }
    return out;
  }
  Vec hit_by_dual(const Vec& h, const Vec& hstar) const {
    Vec out(H->dim());
    for (int i = 0; i < H->dim(); ++i) {
      if (h[i].is_zero()) continue;
      for (const auto& t : H->terms(i, 2))
        if (!hstar[t.legs[0]].is_zero()) out[t.legs[1]] += h[i] * t.coeff * hstar[t.legs[0]];
    }
    return out;
  }
  Vec hits_dual(const Vec& h, const Vec& hstar) const {
    Vec out(H->dim());
    for (int g = 0; g < H->dim(); ++g) out[g] = dot(hstar, H->mul(H->basis(g), h));
    return out;
  }
  Vec dual_hit_by(const Vec& hstar, const Vec& h) const {
    Vec out(H->dim());
    for (int g = 0; g < H->dim(); ++g) out[g] = dot(hstar, H->mul(h, H->basis(g)));
    return out;
  }

  // the four actions as tensors: first two are H*⊗H → H, last two H⊗H* → H*
  // resp. H*⊗H → H*, all in the lexicographic tensor basis
  std::vector<Matrix> tensors() const {
    int d = H->dim();
    std::vector<Matrix> out(4, Matrix(d, d * d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        out[0].set_column(a * d + b, dual_hits(H->basis(a), H->basis(b)));
        out[1].set_column(a * d + b, hit_by_dual(H->basis(b), H->basis(a)));
        out[2].set_column(a * d + b, hits_dual(H->basis(a), H->basis(b)));
        out[3].set_column(a * d + b, dual_hit_by(H->basis(a), H->basis(b)));
      }
    return out;
  }

  static Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
  }
};

inline RegularActions regular_actions(const CoquasiBialgebra& H) { return RegularActions{&H}; }

}  // namespace coquasi
