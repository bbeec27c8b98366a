// The Morita context attached to a comodule algebra A over a coquasi-Hopf
// algebra H:
//
//   ring1 = Hom^H(H̄, A)   ring2 = Hom(H, B)
//   P = Hom^H(H, A)        Q = Hom^H(H^S, A)
//
// Every space is a subspace of Hom(H, A) (flattened as a*dimH + h), computed
// once by solving the colinearity conditions. Products are stored as
// structure constants over those bases and the axioms are checked on all
// basis tuples.
#pragma once

#include "coquasi/cleft.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace coquasi {

// ---- the adjoint coalgebra H̄ ----

// H̄ = H as a vector space with
//   ρ̄(h) = h2 ⊗ S(h1)h3
//   Δ̄(h) = h3 ⊗ h9 ω(S(h2)h4, S(h8), h10) β(h6) ω^-1(S(h1), h5, S(h7))
//   ε̄ = α
struct AdjointCoalgebra {
  int dim = 0;
  Matrix coaction;  // (d·d) × d, row k*d + g for k ⊗ g
  Matrix comult;    // (d·d) × d, row k*d + l for k ⊗ l
  Vec counit;
};

inline AdjointCoalgebra adjoint_coalgebra(const CoquasiHopf& H) {
  const CoquasiBialgebra& Hb = H.base();
  int d = H.dim();
  AdjointCoalgebra c;
  c.dim = d;
  c.coaction = Matrix(d * d, d);
  c.comult = Matrix(d * d, d);
  c.counit = Vec(d);
  for (int h = 0; h < d; ++h) {
    c.counit[h] = H.alpha(h);
    Vec rho(d * d);
    for (const auto& t : H.terms(h, 3)) axpy(rho, t.coeff, kron(H.basis(t.legs[1]), H.mul(H.S(t.legs[0]), H.basis(t.legs[2]))));
    c.coaction.set_column(h, rho);
    Vec del(d * d);
    for (const auto& t : H.terms(h, 10)) {
      const auto& l = t.legs;
      Scalar s = t.coeff * H.beta(l[5]);
      if (s.is_zero()) continue;
      s *= Hb.om_inv(H.S(l[0]), H.basis(l[4]), H.S(l[6]));
      if (s.is_zero()) continue;
      s *= Hb.om(H.mul(H.S(l[1]), H.basis(l[3])), H.S(l[7]), H.basis(l[9]));
      if (!s.is_zero()) del[l[2] * d + l[8]] += s;
    }
    c.comult.set_column(h, del);
  }
  return c;
}

inline Report check_adjoint_coalgebra(const AdjointCoalgebra& c, const CoquasiHopf& H) {
  Report r;
  r.subject = "adjoint coalgebra";
  const CoquasiBialgebra& Hb = H.base();
  int d = c.dim;
  auto L = [&](int i) { return H.label(i); };
  auto pair_terms = [&](const Vec& v) {
    std::vector<std::tuple<Scalar, int, int>> out;
    for (int i = 0; i < d * d; ++i)
      if (!v[i].is_zero()) out.emplace_back(v[i], i / d, i % d);
    return out;
  };
  for (int h = 0; h < d; ++h) {
    Vec rho = c.coaction.column(h), del = c.comult.column(h);
    // the coaction is coassociative and counital
    Vec l(d * d * d), rr(d * d * d), cu(d);
    for (auto [s, k, g] : pair_terms(rho)) {
      axpy(l, s, kron(c.coaction.column(k), H.basis(g)));
      axpy(rr, s, kron(H.basis(k), Hb.coalgebra().comult().column(g)));
      cu[k] += s * H.eps(g);
    }
    ++r.checked;
    if (l != rr) r.fail("adjoint coaction coassociative", {L(h)});
    ++r.checked;
    if (cu != H.basis(h)) r.fail("adjoint coaction counital", {L(h)});
    // ᾱ(h)1 = ᾱ(h0)h1
    Vec ac(d);
    for (auto [s, k, g] : pair_terms(rho)) axpy(ac, s * c.counit[k], H.basis(g));
    ++r.checked;
    if (ac != c.counit[h] * H.unit()) r.fail("counit colinear", {L(h)});
    // counit laws
    Vec left(d), right(d);
    for (auto [s, k, g] : pair_terms(del)) {
      left[g] += s * c.counit[k];
      right[k] += s * c.counit[g];
    }
    ++r.checked;
    if (left != H.basis(h) || right != H.basis(h)) r.fail("counit law", {L(h)});
    // Δ̄ colinear: (k⊗l)0 ⊗ k1 l1 = h0 ⊗ h0 ⊗ h1 on the Δ̄ side
    Vec lhs(d * d * d), rhs(d * d * d);
    for (auto [s, k, l2] : pair_terms(del))
      for (auto [a, k0, k1] : pair_terms(c.coaction.column(k)))
        for (auto [b, l0, l1] : pair_terms(c.coaction.column(l2))) axpy(lhs, s * a * b, kron(kron(H.basis(k0), H.basis(l0)), H.mul(k1, l1)));
    for (auto [s, h0, h1] : pair_terms(rho)) axpy(rhs, s, kron(c.comult.column(h0), H.basis(h1)));
    ++r.checked;
    if (lhs != rhs) r.fail("comultiplication colinear", {L(h)});
    // coassociativity up to the associator of M^H:
    // ((k⊗l)⊗m) ↦ k0⊗l0⊗m0 ω(k1,l1,m1)
    Vec first(d * d * d), second(d * d * d);
    for (auto [s, k, l2] : pair_terms(del)) {
      for (auto [a, m, n] : pair_terms(c.comult.column(l2))) second[(k * d + m) * d + n] += s * a;
      for (auto [a, kk, ll] : pair_terms(c.comult.column(k)))
        for (auto [x, k0, k1] : pair_terms(c.coaction.column(kk)))
          for (auto [y, l0, l1] : pair_terms(c.coaction.column(ll)))
            for (auto [z, m0, m1] : pair_terms(c.coaction.column(l2))) {
              Scalar w = s * a * x * y * z * Hb.om(k1, l1, m1);
              if (!w.is_zero()) first[(k0 * d + l0) * d + m0] += w;
            }
    }
    ++r.checked;
    if (first != second) r.fail("comultiplication coassociative in M^H", {L(h)});
  }
  return r;
}

// ---- Hom-spaces ----

struct HomSpace {
  std::string name;
  Subspace sub;  // in Hom(H, A), dim A · dim H
  int rows = 0, cols = 0;
  int dim() const { return sub.dim(); }
  Matrix map(int i) const { return detail::unflatten_map(sub.basis()[i], rows, cols); }
  Matrix map(const Vec& coords) const { return detail::unflatten_map(sub.element(coords), rows, cols); }
  std::optional<Vec> coordinates(const Matrix& m) const { return sub.coordinates(detail::flatten_map(m)); }
};

// structure constants of a bilinear map X × Y -> Z over the bases
struct Bilinear {
  int dx = 0, dy = 0, dz = 0;
  std::vector<Vec> cols;  // cols[i*dy + j]
  Vec operator()(const Vec& x, const Vec& y) const {
    Vec out(dz);
    for (int i = 0; i < dx; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dy; ++j)
        if (!y[j].is_zero()) axpy(out, x[i] * y[j], cols[i * dy + j]);
    }
    return out;
  }
};

struct MoritaContext {
  ComoduleAlgebra A;
  Coinvariants B;
  AdjointCoalgebra Hbar;
  HomSpace ring1, ring2, P, Q;
  Vec unit1, unit2;  // α1_A in ring1, ε1_A in ring2 (coordinates)
  Bilinear mul1, mul2;
  Bilinear ring2_P, P_ring1, ring1_Q, Q_ring2;
  Bilinear pairing;  // P × Q -> ring2, (p,q)
  Bilinear bracket;  // Q × P -> ring1, [q,p]
  Report report;
};

namespace detail {

using MapOp = std::function<Matrix(const Matrix&, const Matrix&)>;

// the subspace of Hom(H, A) cut out by cond(φ) = 0, cond linear
inline Subspace hom_subspace(int n, int d, const std::function<Vec(const Matrix&)>& cond) {
  std::vector<Vec> cols;
  for (int i = 0; i < n * d; ++i) cols.push_back(cond(unflatten_map(unit_vec(n * d, i), n, d)));
  int m = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  return Subspace(n * d, nullspace(Matrix::from_columns(m, cols)));
}

inline Bilinear tabulate(const HomSpace& X, const HomSpace& Y, const HomSpace& Z, const MapOp& op,
                         Report& r, const std::string& name) {
  Bilinear b{X.dim(), Y.dim(), Z.dim(), {}};
  for (int i = 0; i < X.dim(); ++i)
    for (int j = 0; j < Y.dim(); ++j) {
      ++r.checked;
      auto c = Z.coordinates(op(X.map(i), Y.map(j)));
      if (!c) {
        r.fail("closure of " + name, {X.name + "#" + std::to_string(i), Y.name + "#" + std::to_string(j)});
        c = Vec(Z.dim());
      }
      b.cols.push_back(*c);
    }
  return b;
}

}  // namespace detail

inline MoritaContext build_morita(const ComoduleAlgebra& A) {
  const CoquasiHopf& H = detail::hopf_of(A);
  const CoquasiBialgebra& Hb = H.base();
  int n = A.dim(), d = H.dim();
  MoritaContext m;
  m.A = A;
  m.B = coinvariants(A);
  m.Hbar = adjoint_coalgebra(H);
  Report& r = m.report;
  r.subject = "Morita context";
  r.merge(check_adjoint_coalgebra(m.Hbar, H));

  // ρφ(h) - Σ φ(k) ⊗ coefficient-vector, for a coaction-like rule h ↦ Σ k ⊗ v
  auto colinear = [&](std::vector<std::vector<std::pair<int, Vec>>> rule) {
    return [&, rule](const Matrix& phi) {
      Vec out(d * n * d);
      for (int h = 0; h < d; ++h) {
        Vec x = A.rho(phi.column(h));
        for (const auto& [k, v] : rule[h]) axpy(x, Scalar(-1), kron(phi.column(k), v));
        for (int i = 0; i < n * d; ++i) out[h * n * d + i] = x[i];
      }
      return out;
    };
  };
  std::vector<std::vector<std::pair<int, Vec>>> regular(d), twisted(d), adjoint(d), trivial(d);
  for (int h = 0; h < d; ++h) {
    for (const auto& t : H.terms(h, 2)) {
      regular[h].push_back({t.legs[0], t.coeff * H.basis(t.legs[1])});
      twisted[h].push_back({t.legs[1], t.coeff * H.S(t.legs[0])});
    }
    Vec rho = m.Hbar.coaction.column(h);
    for (int i = 0; i < d * d; ++i)
      if (!rho[i].is_zero()) adjoint[h].push_back({i / d, rho[i] * H.basis(i % d)});
    trivial[h].push_back({h, H.unit()});
  }
  auto space = [&](std::string name, const std::vector<std::vector<std::pair<int, Vec>>>& rule) {
    return HomSpace{std::move(name), detail::hom_subspace(n, d, colinear(rule)), n, d};
  };
  m.ring1 = space("ring1", adjoint);
  m.ring2 = space("ring2", trivial);
  m.P = space("P", regular);
  m.Q = space("Q", twisted);

  // the maps, on matrices H -> A
  auto conv = [&](const Matrix& f, const Matrix& g) {
    Matrix out(n, d);
    for (int h = 0; h < d; ++h) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 2)) axpy(acc, t.coeff, A.mul(f.column(t.legs[0]), g.column(t.legs[1])));
      out.set_column(h, acc);
    }
    return out;
  };
  auto ring1_mul = [&](const Matrix& f, const Matrix& g) {
    Matrix out(n, d);
    for (int h = 0; h < d; ++h) {
      Vec del = m.Hbar.comult.column(h), acc(n);
      for (int i = 0; i < d * d; ++i)
        if (!del[i].is_zero()) axpy(acc, del[i], A.mul(f.column(i / d), g.column(i % d)));
      out.set_column(h, acc);
    }
    return out;
  };
  // (ps)(h) = p(h1)s(h5) β(h3) ω(h2, S(h4), h6)
  auto p_s = [&](const Matrix& p, const Matrix& s) {
    Matrix out(n, d);
    for (int h = 0; h < d; ++h) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 6)) {
        const auto& l = t.legs;
        Scalar c = t.coeff * H.beta(l[2]);
        if (!c.is_zero()) c *= Hb.om(H.basis(l[1]), H.S(l[3]), H.basis(l[5]));
        if (!c.is_zero()) axpy(acc, c, A.mul(p.column(l[0]), s.column(l[4])));
      }
      out.set_column(h, acc);
    }
    return out;
  };
  // (sq)(h) = s(h2)q(h6) β(h4) ω^-1(S(h1), h3, S(h5))
  auto s_q = [&](const Matrix& s, const Matrix& q) {
    Matrix out(n, d);
    for (int h = 0; h < d; ++h) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 6)) {
        const auto& l = t.legs;
        Scalar c = t.coeff * H.beta(l[3]);
        if (!c.is_zero()) c *= Hb.om_inv(H.S(l[0]), H.basis(l[2]), H.S(l[4]));
        if (!c.is_zero()) axpy(acc, c, A.mul(s.column(l[1]), q.column(l[5])));
      }
      out.set_column(h, acc);
    }
    return out;
  };
  // (p,q)(h) = p(h1)β(h2)q(h3)
  auto pair_pq = [&](const Matrix& p, const Matrix& q) {
    Matrix out(n, d);
    for (int h = 0; h < d; ++h) {
      Vec acc(n);
      for (const auto& t : H.terms(h, 3)) {
        Scalar c = t.coeff * H.beta(t.legs[1]);
        if (!c.is_zero()) axpy(acc, c, A.mul(p.column(t.legs[0]), q.column(t.legs[2])));
      }
      out.set_column(h, acc);
    }
    return out;
  };

  m.mul1 = detail::tabulate(m.ring1, m.ring1, m.ring1, ring1_mul, r, "ring1 product");
  m.mul2 = detail::tabulate(m.ring2, m.ring2, m.ring2, conv, r, "ring2 product");
  m.ring2_P = detail::tabulate(m.ring2, m.P, m.P, conv, r, "ring2 on P");
  m.P_ring1 = detail::tabulate(m.P, m.ring1, m.P, p_s, r, "ring1 on P");
  m.ring1_Q = detail::tabulate(m.ring1, m.Q, m.Q, s_q, r, "ring1 on Q");
  m.Q_ring2 = detail::tabulate(m.Q, m.ring2, m.Q, conv, r, "ring2 on Q");
  m.pairing = detail::tabulate(m.P, m.Q, m.ring2, pair_pq, r, "pairing");
  m.bracket = detail::tabulate(m.Q, m.P, m.ring1, conv, r, "bracket");

  Matrix u1(n, d), u2(n, d);
  for (int h = 0; h < d; ++h) {
    u1.set_column(h, H.alpha(h) * A.unit());
    u2.set_column(h, H.eps(h) * A.unit());
  }
  ++r.checked;
  auto c1 = m.ring1.coordinates(u1), c2 = m.ring2.coordinates(u2);
  if (!c1) r.fail("ring1 unit colinear", {"alpha"});
  if (!c2) r.fail("ring2 unit colinear", {"eps"});
  m.unit1 = c1.value_or(Vec(m.ring1.dim()));
  m.unit2 = c2.value_or(Vec(m.ring2.dim()));
  if (!r.ok()) return m;

  // axioms, all on basis tuples
  auto e = [](int k, int i) { return unit_vec(k, i); };
  int d1 = m.ring1.dim(), d2 = m.ring2.dim(), dp = m.P.dim(), dq = m.Q.dim();
  auto tag = [](const HomSpace& s, int i) { return s.name + "#" + std::to_string(i); };
  auto expect = [&](bool ok, const std::string& id, std::vector<std::string> w) {
    ++r.checked;
    if (!ok) r.fail(id, std::move(w));
  };
  for (int i = 0; i < d1; ++i) {
    expect(m.mul1(m.unit1, e(d1, i)) == e(d1, i) && m.mul1(e(d1, i), m.unit1) == e(d1, i), "ring1 unit", {tag(m.ring1, i)});
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d1; ++k)
        expect(m.mul1(m.mul1(e(d1, i), e(d1, j)), e(d1, k)) == m.mul1(e(d1, i), m.mul1(e(d1, j), e(d1, k))),
               "ring1 associative", {tag(m.ring1, i), tag(m.ring1, j), tag(m.ring1, k)});
  }
  for (int i = 0; i < d2; ++i) {
    expect(m.mul2(m.unit2, e(d2, i)) == e(d2, i) && m.mul2(e(d2, i), m.unit2) == e(d2, i), "ring2 unit", {tag(m.ring2, i)});
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d2; ++k)
        expect(m.mul2(m.mul2(e(d2, i), e(d2, j)), e(d2, k)) == m.mul2(e(d2, i), m.mul2(e(d2, j), e(d2, k))),
               "ring2 associative", {tag(m.ring2, i), tag(m.ring2, j), tag(m.ring2, k)});
  }
  for (int p = 0; p < dp; ++p) {
    Vec ep = e(dp, p);
    expect(m.ring2_P(m.unit2, ep) == ep, "P left unit", {tag(m.P, p)});
    expect(m.P_ring1(ep, m.unit1) == ep, "P right unit", {tag(m.P, p)});
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b)
        expect(m.ring2_P(m.mul2(e(d2, a), e(d2, b)), ep) == m.ring2_P(e(d2, a), m.ring2_P(e(d2, b), ep)),
               "P left module", {tag(m.ring2, a), tag(m.ring2, b), tag(m.P, p)});
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b)
        expect(m.P_ring1(m.P_ring1(ep, e(d1, a)), e(d1, b)) == m.P_ring1(ep, m.mul1(e(d1, a), e(d1, b))),
               "P right module", {tag(m.P, p), tag(m.ring1, a), tag(m.ring1, b)});
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d1; ++b)
        expect(m.P_ring1(m.ring2_P(e(d2, a), ep), e(d1, b)) == m.ring2_P(e(d2, a), m.P_ring1(ep, e(d1, b))),
               "P bimodule", {tag(m.ring2, a), tag(m.P, p), tag(m.ring1, b)});
  }
  for (int q = 0; q < dq; ++q) {
    Vec eq = e(dq, q);
    expect(m.ring1_Q(m.unit1, eq) == eq, "Q left unit", {tag(m.Q, q)});
    expect(m.Q_ring2(eq, m.unit2) == eq, "Q right unit", {tag(m.Q, q)});
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b)
        expect(m.ring1_Q(m.mul1(e(d1, a), e(d1, b)), eq) == m.ring1_Q(e(d1, a), m.ring1_Q(e(d1, b), eq)),
               "Q left module", {tag(m.ring1, a), tag(m.ring1, b), tag(m.Q, q)});
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b)
        expect(m.Q_ring2(m.Q_ring2(eq, e(d2, a)), e(d2, b)) == m.Q_ring2(eq, m.mul2(e(d2, a), e(d2, b))),
               "Q right module", {tag(m.Q, q), tag(m.ring2, a), tag(m.ring2, b)});
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d2; ++b)
        expect(m.Q_ring2(m.ring1_Q(e(d1, a), eq), e(d2, b)) == m.ring1_Q(e(d1, a), m.Q_ring2(eq, e(d2, b))),
               "Q bimodule", {tag(m.ring1, a), tag(m.Q, q), tag(m.ring2, b)});
  }
  for (int p = 0; p < dp; ++p)
    for (int q = 0; q < dq; ++q) {
      Vec ep = e(dp, p), eq = e(dq, q);
      std::vector<std::string> w{tag(m.P, p), tag(m.Q, q)};
      for (int s = 0; s < d1; ++s) {
        Vec es = e(d1, s);
        auto ws = w;
        ws.push_back(tag(m.ring1, s));
        expect(m.pairing(m.P_ring1(ep, es), eq) == m.pairing(ep, m.ring1_Q(es, eq)), "pairing ring1-balanced", ws);
        expect(m.bracket(m.ring1_Q(es, eq), ep) == m.mul1(es, m.bracket(eq, ep)), "bracket left ring1-linear", ws);
        expect(m.bracket(eq, m.P_ring1(ep, es)) == m.mul1(m.bracket(eq, ep), es), "bracket right ring1-linear", ws);
      }
      for (int t = 0; t < d2; ++t) {
        Vec et = e(d2, t);
        auto wt = w;
        wt.push_back(tag(m.ring2, t));
        expect(m.bracket(m.Q_ring2(eq, et), ep) == m.bracket(eq, m.ring2_P(et, ep)), "bracket ring2-balanced", wt);
        expect(m.pairing(m.ring2_P(et, ep), eq) == m.mul2(et, m.pairing(ep, eq)), "pairing left ring2-linear", wt);
        expect(m.pairing(ep, m.Q_ring2(eq, et)) == m.mul2(m.pairing(ep, eq), et), "pairing right ring2-linear", wt);
      }
      for (int p2 = 0; p2 < dp; ++p2) {
        Vec ep2 = e(dp, p2);
        expect(m.ring2_P(m.pairing(ep, eq), ep2) == m.P_ring1(ep, m.bracket(eq, ep2)), "mixed associativity on P",
               {tag(m.P, p), tag(m.Q, q), tag(m.P, p2)});
      }
      for (int q2 = 0; q2 < dq; ++q2) {
        Vec eq2 = e(dq, q2);
        expect(m.ring1_Q(m.bracket(eq, ep), eq2) == m.Q_ring2(eq, m.pairing(ep, eq2)), "mixed associativity on Q",
               {tag(m.Q, q), tag(m.P, p), tag(m.Q, q2)});
      }
    }
  return m;
}

// ---- strictness ----

enum class Strictness { Strict, SurjectiveBracketOnly, Neither };

inline std::string to_string(Strictness s) {
  switch (s) {
    case Strictness::Strict: return "Strict";
    case Strictness::SurjectiveBracketOnly: return "SurjectiveBracketOnly";
    default: return "Neither";
  }
}

// Σ_i [q_i, p_i] = α1_A (resp. Σ_i (p_i, q_i) = ε1_A), as maps H -> A
struct StrictnessWitness {
  std::vector<Matrix> p, q;
};

struct StrictnessResult {
  Strictness verdict = Strictness::Neither;
  bool bracket_surjective = false, pairing_surjective = false;
  int bracket_rank = 0, pairing_rank = 0;
  std::optional<StrictnessWitness> bracket_witness, pairing_witness;
  Report report;  // the witnesses re-evaluated, and Σ ξ_i ζ_i = id_A
};

namespace detail {

inline Matrix scaled(const Scalar& s, Matrix m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return m;
}

// coefficients c_ij with Σ c_ij f(x_i, y_j) = target, or nothing
inline std::optional<std::vector<std::tuple<Scalar, int, int>>> hit_target(const Bilinear& f, const Vec& target, int& rank_out) {
  Matrix img = Matrix::from_columns(f.dz, f.cols.empty() ? std::vector<Vec>{} : f.cols);
  rank_out = f.cols.empty() ? 0 : rank(img);
  if (f.cols.empty()) return std::nullopt;
  auto sol = solve(img, target);
  if (!sol) return std::nullopt;
  std::vector<std::tuple<Scalar, int, int>> out;
  for (int k = 0; k < static_cast<int>(sol->size()); ++k)
    if (!(*sol)[k].is_zero()) out.emplace_back((*sol)[k], k / f.dy, k % f.dy);
  return out;
}

}  // namespace detail

inline StrictnessResult morita_strictness(const MoritaContext& m) {
  StrictnessResult res;
  Report& r = res.report;
  r.subject = "Morita strictness";
  const ComoduleAlgebra& A = m.A;
  const CoquasiHopf& H = detail::hopf_of(A);
  int n = A.dim(), d = H.dim();

  if (auto c = detail::hit_target(m.bracket, m.unit1, res.bracket_rank)) {
    res.bracket_surjective = true;
    StrictnessWitness w;
    for (auto [s, qi, pj] : *c) {
      w.q.push_back(detail::scaled(s, m.Q.map(qi)));
      w.p.push_back(m.P.map(pj));
    }
    res.bracket_witness = w;
  }
  if (auto c = detail::hit_target(m.pairing, m.unit2, res.pairing_rank)) {
    res.pairing_surjective = true;
    StrictnessWitness w;
    for (auto [s, pi, qj] : *c) {
      w.p.push_back(detail::scaled(s, m.P.map(pi)));
      w.q.push_back(m.Q.map(qj));
    }
    res.pairing_witness = w;
  }
  res.verdict = res.bracket_surjective ? (res.pairing_surjective ? Strictness::Strict : Strictness::SurjectiveBracketOnly)
                                       : Strictness::Neither;
  if (!res.bracket_surjective && res.pairing_surjective) r.notes.push_back("pairing surjective but bracket not");

  if (res.bracket_witness) {
    const auto& w = *res.bracket_witness;
    // Σ [q_i, p_i] = α1_A
    Matrix sum(n, d);
    for (std::size_t i = 0; i < w.p.size(); ++i)
      for (int h = 0; h < d; ++h) {
        Vec acc = sum.column(h);
        for (const auto& t : H.terms(h, 2)) axpy(acc, t.coeff, A.mul(w.q[i].column(t.legs[0]), w.p[i].column(t.legs[1])));
        sum.set_column(h, acc);
      }
    Matrix u1(n, d);
    for (int h = 0; h < d; ++h) u1.set_column(h, H.alpha(h) * A.unit());
    ++r.checked;
    if (sum != u1) r.fail("bracket witness hits alpha", {"bracket"});
    // ζ_i(a) = a0 β(a1) q_i(a2) ⊗ a3, ξ_i(b ⊗ h) = b p_i(h): Σ ξ_i ζ_i(a) = a
    for (int a = 0; a < n; ++a) {
      Vec acc(n);
      for (const auto& t : A.coaction_terms(a, 3)) {
        Scalar c = t.coeff * H.beta(t.legs[0]);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < w.p.size(); ++i)
          axpy(acc, c, A.mul(A.mul(A.basis(t.elem), w.q[i].column(t.legs[1])), w.p[i].column(t.legs[2])));
      }
      ++r.checked;
      if (acc != A.basis(a)) r.fail("xi zeta = id", {A.label(a)});
    }
    // ζ_i lands in B ⊗ H
    Coinvariants B = coinvariants(A);
    for (int a = 0; a < n; ++a)
      for (std::size_t i = 0; i < w.p.size(); ++i) {
        Vec z(n * d);
        for (const auto& t : A.coaction_terms(a, 3)) {
          Scalar c = t.coeff * H.beta(t.legs[0]);
          if (!c.is_zero()) axpy(z, c, kron(A.mul(A.basis(t.elem), w.q[i].column(t.legs[1])), H.basis(t.legs[2])));
        }
        bool in_b = true;
        for (int h = 0; h < d && in_b; ++h) {
          Vec slice(n);
          for (int x = 0; x < n; ++x) slice[x] = z[x * d + h];
          in_b = B.subspace.contains(slice);
        }
        ++r.checked;
        if (!in_b) r.fail("zeta lands in B⊗H", {A.label(a), std::to_string(i)});
      }
  }
  if (res.pairing_witness) {
    const auto& w = *res.pairing_witness;
    Matrix sum(n, d);
    for (std::size_t i = 0; i < w.p.size(); ++i)
      for (int h = 0; h < d; ++h) {
        Vec acc = sum.column(h);
        for (const auto& t : H.terms(h, 3)) {
          Scalar c = t.coeff * H.beta(t.legs[1]);
          if (!c.is_zero()) axpy(acc, c, A.mul(w.p[i].column(t.legs[0]), w.q[i].column(t.legs[2])));
        }
        sum.set_column(h, acc);
      }
    Matrix u2(n, d);
    for (int h = 0; h < d; ++h) u2.set_column(h, H.eps(h) * A.unit());
    ++r.checked;
    if (sum != u2) r.fail("pairing witness hits epsilon", {"pairing"});
  }
  return res;
}

// the cleaving maps as elements of the context: γ ∈ P, δ ∈ Q with
// [δ, γ] = α1_A and (γ, δ) = ε1_A
inline Report check_cleaving_in_context(const MoritaContext& m, const CleavingSystem& cs) {
  Report r;
  r.subject = "cleaving system in the Morita context";
  auto g = m.P.coordinates(cs.gamma), dl = m.Q.coordinates(cs.delta);
  ++r.checked;
  if (!g) r.fail("gamma in P", {"gamma"});
  ++r.checked;
  if (!dl) r.fail("delta in Q", {"delta"});
  if (!g || !dl) return r;
  ++r.checked;
  if (m.bracket(*dl, *g) != m.unit1) r.fail("[delta, gamma] = alpha", {"delta", "gamma"});
  ++r.checked;
  if (m.pairing(*g, *dl) != m.unit2) r.fail("(gamma, delta) = epsilon", {"gamma", "delta"});
  return r;
}

}  // namespace coquasi
