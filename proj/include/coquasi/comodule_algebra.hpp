// Right comodule algebras over a coquasi-bialgebra, relative Hopf modules,
// coinvariants, the twisted algebra A_{τ^-1}, and the Galois map
// can: A⊗_B A → A⊗H with its inverse.
#pragma once

#include "coquasi/coquasi.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace coquasi {

// The coquasi-bialgebra a comodule algebra lives over, with the Hopf
// structure when one is available.
class Host {
 public:
  Host() = default;
  static Host of(CoquasiHopf h) {
    Host r;
    r.hopf_ = std::make_shared<const CoquasiHopf>(std::move(h));
    r.bialg_ = std::shared_ptr<const CoquasiBialgebra>(r.hopf_, &r.hopf_->base());
    return r;
  }
  static Host of(CoquasiBialgebra b) {
    Host r;
    r.bialg_ = std::make_shared<const CoquasiBialgebra>(std::move(b));
    return r;
  }
  bool is_hopf() const { return hopf_ != nullptr; }
  const CoquasiBialgebra& H() const { return *bialg_; }
  const CoquasiHopf& hopf() const {
    if (!hopf_) throw std::logic_error("this construction needs a coquasi-Hopf host (antipode, alpha, beta)");
    return *hopf_;
  }
  int dim() const { return bialg_->dim(); }

  Host twisted(const Twist& t) const {
    if (hopf_) return of(twist_bialgebra(*hopf_, t));
    return of(twist_bialgebra(*bialg_, t));
  }

 private:
  std::shared_ptr<const CoquasiHopf> hopf_;
  std::shared_ptr<const CoquasiBialgebra> bialg_;
};

// one summand a0 ⊗ a1 ⊗ ... ⊗ ak of an iterated coaction
struct CoactionTerm {
  Scalar coeff;
  int elem;
  std::vector<int> legs;
};

class ComoduleAlgebra {
 public:
  ComoduleAlgebra() = default;
  ComoduleAlgebra(Space space, Matrix mult, Vec unit, Matrix coaction, Host host)
      : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)), rho_(std::move(coaction)),
        host_(std::move(host)) {
    int n = space_.dim(), d = host_.dim();
    if (mult_.rows() != n || mult_.cols() != n * n || static_cast<int>(unit_.size()) != n)
      throw std::invalid_argument("ComoduleAlgebra: multiplication shape mismatch");
    if (rho_.rows() != n * d || rho_.cols() != n) throw std::invalid_argument("ComoduleAlgebra: coaction shape mismatch");
    terms_.resize(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int h = 0; h < d; ++h)
          if (!rho_(b * d + h, a).is_zero()) terms_[a].push_back({rho_(b * d + h, a), b, {h}});
  }

  const Space& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::string& label(int i) const { return space_.label(i); }
  const Matrix& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const Matrix& coaction() const { return rho_; }
  const Host& host() const { return host_; }
  const CoquasiBialgebra& H() const { return host_.H(); }

  Vec basis(int i) const { return unit_vec(dim(), i); }
  Algebra algebra() const { return Algebra(space_, mult_, unit_); }
  Vec mul(int i, int j) const { return mult_.column(i * dim() + j); }
  Vec mul(const Vec& x, const Vec& y) const {
    int n = dim();
    Vec out(n);
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (int t = 0; t < n; ++t)
          if (!mult_(t, i * n + j).is_zero()) out[t] += c * mult_(t, i * n + j);
      }
    }
    return out;
  }
  Vec rho(const Vec& x) const { return rho_.apply(x); }

  // a0 ⊗ a1 ⊗ ... ⊗ ak, obtained as (id⊗Δ^{(k-1)})ρ(e_a)
  std::vector<CoactionTerm> coaction_terms(int a, int k) const {
    if (k == 1) return terms_[a];
    std::vector<CoactionTerm> out;
    for (const auto& t : terms_[a])
      for (const auto& s : H().terms(t.legs[0], k)) out.push_back({t.coeff * s.coeff, t.elem, s.legs});
    return out;
  }

  friend bool operator==(const ComoduleAlgebra& a, const ComoduleAlgebra& b) {
    return a.mult_ == b.mult_ && a.unit_ == b.unit_ && a.rho_ == b.rho_;
  }

 private:
  Space space_;
  Matrix mult_;
  Vec unit_;
  Matrix rho_;
  Host host_;
  std::vector<std::vector<CoactionTerm>> terms_;
};

namespace detail {

// checks that rho: V -> V⊗H is a coassociative counital coaction
inline void check_coaction(Report& r, const Matrix& rho, const Space& V, const CoquasiBialgebra& H) {
  int n = V.dim(), d = H.dim();
  for (int a = 0; a < n; ++a) {
    Vec ra = rho.column(a);
    // (rho⊗id)rho(a) and (id⊗Δ)rho(a) in V⊗H⊗H
    Vec left(n * d * d), right(n * d * d);
    Vec counit(n);
    for (int b = 0; b < n; ++b)
      for (int h = 0; h < d; ++h) {
        const Scalar& c = ra[b * d + h];
        if (c.is_zero()) continue;
        for (int b2 = 0; b2 < n; ++b2)
          for (int h2 = 0; h2 < d; ++h2)
            if (!rho(b2 * d + h2, b).is_zero()) left[(b2 * d + h2) * d + h] += c * rho(b2 * d + h2, b);
        for (const auto& t : H.terms(h, 2)) right[(b * d + t.legs[0]) * d + t.legs[1]] += c * t.coeff;
        counit[b] += c * H.eps(h);
      }
    ++r.checked;
    if (left != right) r.fail("coaction coassociative", {V.label(a)});
    ++r.checked;
    if (counit != unit_vec(n, a)) r.fail("coaction counital", {V.label(a)});
  }
}

}  // namespace detail

inline Report check_comodule_algebra(const ComoduleAlgebra& A) {
  Report r;
  r.subject = "comodule algebra";
  const CoquasiBialgebra& H = A.H();
  int n = A.dim(), d = H.dim();
  detail::check_coaction(r, A.coaction(), A.space(), H);
  auto L = [&](int i) { return A.label(i); };
  ++r.checked;
  if (A.rho(A.unit()) != kron(A.unit(), H.unit())) r.fail("unit colinear", {"1"});
  for (int a = 0; a < n; ++a) {
    Vec ea = A.basis(a);
    ++r.checked;
    if (A.mul(A.unit(), ea) != ea || A.mul(ea, A.unit()) != ea) r.fail("unit law", {L(a)});
    for (int b = 0; b < n; ++b) {
      // rho(ab) = a0b0 ⊗ a1b1
      Vec lhs = A.rho(A.mul(a, b)), rhs(n * d);
      for (const auto& ta : A.coaction_terms(a, 1))
        for (const auto& tb : A.coaction_terms(b, 1))
          axpy(rhs, ta.coeff * tb.coeff, kron(A.mul(ta.elem, tb.elem), H.mul(ta.legs[0], tb.legs[0])));
      ++r.checked;
      if (lhs != rhs) r.fail("multiplication colinear", {L(a), L(b)});
    }
  }
  // (ab)c = a0(b0c0) omega(a1,b1,c1)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec ab = A.mul(a, b);
      for (int c = 0; c < n; ++c) {
        Vec lhs = A.mul(ab, A.basis(c)), rhs(n);
        for (const auto& ta : A.coaction_terms(a, 1))
          for (const auto& tb : A.coaction_terms(b, 1))
            for (const auto& tc : A.coaction_terms(c, 1)) {
              Scalar w = H.om(ta.legs[0], tb.legs[0], tc.legs[0]);
              if (w.is_zero()) continue;
              axpy(rhs, ta.coeff * tb.coeff * tc.coeff * w, A.mul(A.basis(ta.elem), A.mul(tb.elem, tc.elem)));
            }
        ++r.checked;
        if (lhs != rhs) r.fail("omega-associativity", {L(a), L(b), L(c)});
      }
    }
  return r;
}

// H itself as a comodule algebra over itself via Δ
inline ComoduleAlgebra regular_comodule_algebra(const Host& host) {
  const CoquasiBialgebra& H = host.H();
  return ComoduleAlgebra(H.space(), H.mult(), H.unit(), H.coalgebra().comult(), host);
}

// an algebra with the trivial coaction a -> a⊗1
inline ComoduleAlgebra trivial_comodule_algebra(const Algebra& R, const Host& host) {
  int n = R.dim(), d = host.dim();
  Matrix rho(n * d, n);
  for (int a = 0; a < n; ++a)
    for (int h = 0; h < d; ++h)
      if (!host.H().unit()[h].is_zero()) rho(a * d + h, a) = host.H().unit()[h];
  return ComoduleAlgebra(R.space(), R.mult(), R.unit(), rho, host);
}

// ---- relative Hopf modules ----

struct RelativeHopfModule {
  Space space;
  Matrix action;    // dim M × (dim M · dim A)
  Matrix coaction;  // (dim M · dim H) × dim M

  int dim() const { return space.dim(); }
  Vec act(const Vec& m, const Vec& a) const { return action.apply(kron(m, a)); }
};

inline Report check_relative_hopf_module(const RelativeHopfModule& M, const ComoduleAlgebra& A) {
  Report r;
  r.subject = "relative Hopf module";
  const CoquasiBialgebra& H = A.H();
  int nm = M.dim(), na = A.dim(), d = H.dim();
  detail::check_coaction(r, M.coaction, M.space, H);
  auto mterms = [&](int m) {
    std::vector<CoactionTerm> t;
    for (int b = 0; b < nm; ++b)
      for (int h = 0; h < d; ++h)
        if (!M.coaction(b * d + h, m).is_zero()) t.push_back({M.coaction(b * d + h, m), b, {h}});
    return t;
  };
  for (int m = 0; m < nm; ++m) {
    Vec em = unit_vec(nm, m);
    ++r.checked;
    if (M.act(em, A.unit()) != em) r.fail("module unit", {M.space.label(m)});
    auto tm = mterms(m);
    for (int a = 0; a < na; ++a) {
      // rho(ma) = m0a0 ⊗ m1a1
      Vec lhs = M.coaction.apply(M.act(em, A.basis(a))), rhs(nm * d);
      for (const auto& x : tm)
        for (const auto& y : A.coaction_terms(a, 1))
          axpy(rhs, x.coeff * y.coeff, kron(M.act(unit_vec(nm, x.elem), A.basis(y.elem)), H.mul(x.legs[0], y.legs[0])));
      ++r.checked;
      if (lhs != rhs) r.fail("module action colinear", {M.space.label(m), A.label(a)});
      for (int b = 0; b < na; ++b) {
        // (ma)b = m0(a0b0) omega(m1,a1,b1)
        Vec l = M.act(M.act(em, A.basis(a)), A.basis(b)), rr(nm);
        for (const auto& x : tm)
          for (const auto& y : A.coaction_terms(a, 1))
            for (const auto& z : A.coaction_terms(b, 1)) {
              Scalar w = H.om(x.legs[0], y.legs[0], z.legs[0]);
              if (w.is_zero()) continue;
              axpy(rr, x.coeff * y.coeff * z.coeff * w, M.act(unit_vec(nm, x.elem), A.mul(y.elem, z.elem)));
            }
        ++r.checked;
        if (l != rr) r.fail("module omega-associativity", {M.space.label(m), A.label(a), A.label(b)});
      }
    }
  }
  return r;
}

// A as a relative Hopf module over itself
inline RelativeHopfModule regular_relative_module(const ComoduleAlgebra& A) {
  return RelativeHopfModule{A.space(), A.mult(), A.coaction()};
}

// ---- coinvariants ----

struct Coinvariants {
  Subspace subspace;   // inside A
  Algebra algebra;     // B with the induced multiplication, on subspace coordinates
  Matrix inclusion;    // dim A × dim B
  int dim() const { return subspace.dim(); }
};

// {v : rho(v) = v⊗1} for a coaction V -> V⊗H
inline Subspace coinvariant_subspace(const Matrix& rho, int dimV, const CoquasiBialgebra& H) {
  int d = H.dim();
  Matrix m = rho;
  for (int a = 0; a < dimV; ++a)
    for (int h = 0; h < d; ++h)
      if (!H.unit()[h].is_zero()) m(a * d + h, a) -= H.unit()[h];
  return Subspace(dimV, nullspace(m));
}

inline Coinvariants coinvariants(const ComoduleAlgebra& A) {
  Coinvariants c;
  c.subspace = coinvariant_subspace(A.coaction(), A.dim(), A.H());
  int k = c.subspace.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    const Vec& v = c.subspace.basis()[i];
    int single = -1, nnz = 0;
    for (int j = 0; j < A.dim(); ++j)
      if (!v[j].is_zero()) {
        ++nnz;
        single = j;
      }
    labels.push_back(nnz == 1 && v[single].is_one() ? A.label(single) : "b" + std::to_string(i));
  }
  Matrix mult(k, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto coords = c.subspace.coordinates(A.mul(c.subspace.basis()[i], c.subspace.basis()[j]));
      if (!coords) throw std::logic_error("coinvariants are not closed under multiplication");
      mult.set_column(i * k + j, *coords);
    }
  auto unit = c.subspace.coordinates(A.unit());
  if (!unit) throw std::logic_error("the unit is not coinvariant");
  c.algebra = Algebra(Space(labels), std::move(mult), *unit);
  c.inclusion = c.subspace.basis_matrix();
  return c;
}

// ---- twisting ----

// A_{τ^-1}: a·b = a0b0 τ^-1(a1,b1), a comodule algebra over H_τ
inline ComoduleAlgebra twist_comodule_algebra(const ComoduleAlgebra& A, const Twist& t) {
  int n = A.dim();
  Matrix m(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec acc(n);
      for (const auto& ta : A.coaction_terms(a, 1))
        for (const auto& tb : A.coaction_terms(b, 1)) {
          Scalar c = ta.coeff * tb.coeff * t.tau_inv.at({ta.legs[0], tb.legs[0]});
          if (!c.is_zero()) axpy(acc, c, A.mul(ta.elem, tb.elem));
        }
      m.set_column(a * n + b, acc);
    }
  return ComoduleAlgebra(A.space(), std::move(m), A.unit(), A.coaction(), A.host().twisted(t));
}

// ---- relative Hopf module morphisms ----

// dim Hom_A^H(A, M): right A-linear H-colinear maps A -> M
inline int relative_hom_dimension(const ComoduleAlgebra& A, const RelativeHopfModule& M) {
  int na = A.dim(), nm = M.dim(), d = A.H().dim(), n = nm * na;  // unknown f(t, a) at t*na + a
  std::vector<Vec> rows;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      // f(ab) - f(a)b = 0
      Vec ab = A.mul(a, b);
      std::vector<Vec> eq(nm, Vec(n));
      for (int c = 0; c < na; ++c)
        if (!ab[c].is_zero())
          for (int t = 0; t < nm; ++t) eq[t][t * na + c] += ab[c];
      for (int s = 0; s < nm; ++s) {
        Vec sb = M.act(unit_vec(nm, s), A.basis(b));
        for (int t = 0; t < nm; ++t)
          if (!sb[t].is_zero()) eq[t][s * na + a] -= sb[t];
      }
      for (auto& e : eq) rows.push_back(std::move(e));
    }
  for (int a = 0; a < na; ++a) {
    // rho_M f(a) - (f⊗id) rho_A(a) = 0
    std::vector<Vec> eq(nm * d, Vec(n));
    for (int s = 0; s < nm; ++s)
      for (int j = 0; j < nm * d; ++j)
        if (!M.coaction(j, s).is_zero()) eq[j][s * na + a] += M.coaction(j, s);
    for (const auto& t : A.coaction_terms(a, 1))
      for (int s = 0; s < nm; ++s) eq[s * d + t.legs[0]][s * na + t.elem] -= t.coeff;
    for (auto& e : eq) rows.push_back(std::move(e));
  }
  Matrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return n - rank(m);
}

// ---- A⊗_B A and the Galois map ----

// A⊗_B A as the quotient of A⊗A by span{ab⊗c - a⊗bc : b ∈ B}, with a fixed
// complement of standard basis vectors giving representatives.
class BalancedTensor {
 public:
  BalancedTensor() = default;
  BalancedTensor(const ComoduleAlgebra& A, const Coinvariants& B) : n_(A.dim()) {
    int nn = n_ * n_;
    std::vector<Vec> rel;
    for (const auto& b : B.subspace.basis())
      for (int a = 0; a < n_; ++a)
        for (int c = 0; c < n_; ++c) {
          Vec v = kron(A.mul(A.basis(a), b), A.basis(c)) - kron(A.basis(a), A.mul(b, A.basis(c)));
          if (!is_zero(v)) rel.push_back(std::move(v));
        }
    kernel_ = Subspace(nn, rel);
    // complete the kernel basis with standard vectors
    std::vector<Vec> cols = kernel_.basis();
    for (int i = 0; i < nn; ++i) cols.push_back(unit_vec(nn, i));
    Echelon e = row_reduce(Matrix::from_columns(nn, cols));
    int k = kernel_.dim();
    for (int p : e.pivots)
      if (p >= k) complement_.push_back(p - k);
    std::vector<Vec> full = kernel_.basis();
    for (int i : complement_) full.push_back(unit_vec(nn, i));
    Matrix inv = *inverse(Matrix::from_columns(nn, full));
    projection_ = Matrix(dim(), nn);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < nn; ++j) projection_(i, j) = inv(k + i, j);
  }

  int dim() const { return static_cast<int>(complement_.size()); }
  int factor_dim() const { return n_; }
  const Subspace& kernel() const { return kernel_; }
  const std::vector<int>& complement() const { return complement_; }
  Vec project(const Vec& v) const { return projection_.apply(v); }
  const Matrix& projection() const { return projection_; }
  Vec lift(const Vec& q) const {
    Vec v(n_ * n_);
    for (int i = 0; i < dim(); ++i) v[complement_[i]] = q[i];
    return v;
  }
  // (π⊗id) on (A⊗A)⊗W
  Vec project_with(const Vec& v, int w) const {
    Vec out(dim() * w);
    for (int j = 0; j < w; ++j) {
      Vec slice(n_ * n_);
      for (int i = 0; i < n_ * n_; ++i) slice[i] = v[i * w + j];
      Vec p = project(slice);
      for (int i = 0; i < dim(); ++i) out[i * w + j] = p[i];
    }
    return out;
  }

 private:
  int n_ = 0;
  Subspace kernel_;
  std::vector<int> complement_;
  Matrix projection_;
};

// can^-1(1⊗h) = sum_j l_j(h) ⊗_B r_j(h), stored as a representative in A⊗A
struct CanInverse {
  std::vector<Vec> element;  // one vector of A⊗A per basis element of H

  // the summands (coefficient, l index, r index) of the representative
  std::vector<std::tuple<Scalar, int, int>> pairs(int h, int n) const {
    std::vector<std::tuple<Scalar, int, int>> out;
    for (int i = 0; i < n * n; ++i)
      if (!element[h][i].is_zero()) out.emplace_back(element[h][i], i / n, i % n);
    return out;
  }
};

struct GaloisResult {
  Coinvariants B;
  BalancedTensor tensor;
  Matrix can_on_representatives;  // (dim A · dim H) × (dim A)²
  Matrix can;                     // (dim A · dim H) × dim(A⊗_B A)
  bool well_defined = false;
  bool bijective = false;
  std::string verdict;            // "Bijective" or "NotBijective: ..."
  std::optional<Matrix> can_inverse;
  std::optional<CanInverse> inverse;
  Report report;                  // verification of the l_j/r_j identities
};

// can(a⊗b) = a0b0 ⊗ b4 omega^-1(a1, b1 beta(b2), S(b3))
inline Matrix can_matrix(const ComoduleAlgebra& A) {
  const CoquasiHopf& H = A.host().hopf();
  int n = A.dim(), d = H.dim();
  Matrix m(n * d, n * n);
  for (int a = 0; a < n; ++a) {
    auto ta = A.coaction_terms(a, 1);
    for (int b = 0; b < n; ++b) {
      Vec acc(n * d);
      for (const auto& x : ta)
        for (const auto& y : A.coaction_terms(b, 4)) {
          Scalar c = x.coeff * y.coeff * H.beta(y.legs[1]);
          if (c.is_zero()) continue;
          c *= H.base().om_inv(H.basis(x.legs[0]), H.basis(y.legs[0]), H.S(y.legs[2]));
          if (c.is_zero()) continue;
          axpy(acc, c, kron(A.mul(x.elem, y.elem), H.basis(y.legs[3])));
        }
      m.set_column(a * n + b, acc);
    }
  }
  return m;
}

inline GaloisResult galois_can(const ComoduleAlgebra& A) {
  GaloisResult g;
  const CoquasiHopf& H = A.host().hopf();
  int n = A.dim(), d = H.dim();
  g.B = coinvariants(A);
  g.tensor = BalancedTensor(A, g.B);
  g.can_on_representatives = can_matrix(A);
  g.report.subject = "Galois map";

  g.well_defined = true;
  for (const auto& k : g.tensor.kernel().basis())
    if (!is_zero(g.can_on_representatives.apply(k))) g.well_defined = false;
  ++g.report.checked;
  if (!g.well_defined) g.report.fail("can balanced over B", {"A⊗A"});

  int q = g.tensor.dim();
  g.can = Matrix(n * d, q);
  for (int i = 0; i < q; ++i) g.can.set_column(i, g.can_on_representatives.column(g.tensor.complement()[i]));

  if (q != n * d) {
    g.verdict = "NotBijective: dim A⊗_B A = " + std::to_string(q) + " but dim A⊗H = " + std::to_string(n * d);
    return g;
  }
  auto inv = inverse(g.can);
  if (!inv) {
    g.verdict = "NotBijective: can has rank " + std::to_string(rank(g.can)) + " < " + std::to_string(n * d);
    return g;
  }
  g.bijective = true;
  g.verdict = "Bijective";
  g.can_inverse = *inv;

  CanInverse ci;
  Vec oneA = A.unit();
  for (int h = 0; h < d; ++h) ci.element.push_back(g.tensor.lift(inv->apply(kron(oneA, H.basis(h)))));
  Report& r = g.report;
  const BalancedTensor& T = g.tensor;

  for (int h = 0; h < d; ++h) {
    std::string lh = H.label(h);
    auto pairs = ci.pairs(h, n);
    // l_j(h)0 ⊗_B r_j(h) ⊗ l_j(h)1 = l_j(h2) ⊗_B r_j(h2) ⊗ S(h1)
    {
      Vec lhs(n * n * d), rhs(n * n * d);
      for (const auto& [c, l, rr] : pairs)
        for (const auto& t : A.coaction_terms(l, 1)) lhs[(t.elem * n + rr) * d + t.legs[0]] += c * t.coeff;
      for (const auto& t : H.terms(h, 2)) axpy(rhs, t.coeff, kron(ci.element[t.legs[1]], H.S(t.legs[0])));
      ++r.checked;
      if (T.project_with(lhs, d) != T.project_with(rhs, d)) r.fail("l(h) colinearity", {lh});
    }
    // l_j(h1) ⊗_B r_j(h1) ⊗ h2 = l_j(h) ⊗_B r_j(h)0 ⊗ r_j(h)1
    {
      Vec lhs(n * n * d), rhs(n * n * d);
      for (const auto& t : H.terms(h, 2)) axpy(lhs, t.coeff, kron(ci.element[t.legs[0]], H.basis(t.legs[1])));
      for (const auto& [c, l, rr] : pairs)
        for (const auto& t : A.coaction_terms(rr, 1)) rhs[(l * n + t.elem) * d + t.legs[0]] += c * t.coeff;
      ++r.checked;
      if (T.project_with(lhs, d) != T.project_with(rhs, d)) r.fail("r(h) colinearity", {lh});
    }
    // sum_j l_j(h) r_j(h) = alpha(h) 1_A
    {
      Vec s(n);
      for (const auto& [c, l, rr] : pairs) axpy(s, c, A.mul(l, rr));
      ++r.checked;
      if (s != H.alpha(h) * oneA) r.fail("l r product", {lh});
    }
    // sum_j a l_j(h) ⊗_B r_j(h) = can^-1(a⊗h)
    for (int a = 0; a < n; ++a) {
      Vec v(n * n);
      for (const auto& [c, l, rr] : pairs) axpy(v, c, kron(A.mul(A.basis(a), A.basis(l)), A.basis(rr)));
      ++r.checked;
      if (T.project(v) != inv->apply(kron(A.basis(a), H.basis(h)))) r.fail("left multiple of can inverse", {A.label(a), lh});
    }
  }
  // can(1 ⊗_B a) = a0 ⊗ beta(a1) a2
  for (int a = 0; a < n; ++a) {
    Vec lhs = g.can_on_representatives.apply(kron(oneA, A.basis(a))), rhs(n * d);
    for (const auto& t : A.coaction_terms(a, 2)) {
      Scalar c = t.coeff * H.beta(t.legs[0]);
      if (!c.is_zero()) rhs[t.elem * d + t.legs[1]] += c;
    }
    ++r.checked;
    if (lhs != rhs) r.fail("can on 1 tensor a", {A.label(a)});
  }
  // can ∘ can^-1 = id and can^-1 ∘ can = id
  ++r.checked;
  if (g.can * *inv != Matrix::identity(n * d) || *inv * g.can != Matrix::identity(q)) r.fail("can inverse", {"can"});
  g.inverse = std::move(ci);
  return g;
}

}  // namespace coquasi
