// Single-entry corruption of structure tensors.  A fixture is a list of named
// tensors plus a checker that rebuilds the structure from (possibly corrupted)
// tensors; a mutation is detected when the checker names a failed identity.
#pragma once

#include <functional>
#include <random>

#include "coquasi/cleft.hpp"
#include "coquasi/hopf_modules.hpp"
#include "coquasi/lowdim.hpp"

namespace coquasi {

struct MutableFixture {
  std::string name;
  std::vector<std::string> tensor_names;
  std::vector<Matrix> tensors;
  std::function<Report(const std::vector<Matrix>&)> check;
};

struct Mutation {
  int tensor = 0, row = 0, col = 0;
  Scalar before, after;
};

struct MutationOutcome {
  Mutation mutation;
  std::string where;  // "tensor[row, col]: before -> after"
  bool detected = false;
  std::string identity;
  std::vector<std::string> witness;
  long failures = 0;
};

namespace detail {

// a constructor that refuses the data counts as a failed identity, named by the exception
inline Report guarded(const std::function<Report()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Report r;
    r.subject = "construction";
    r.fail("well-formed structure", {"constructor"}, e.what());
    return r;
  }
}

inline Matrix row_of(const Vec& v) {
  Matrix m(1, static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m(0, static_cast<int>(i)) = v[i];
  return m;
}
inline Matrix column_of(const Vec& v) { return Matrix::from_columns(static_cast<int>(v.size()), {v}); }

}  // namespace detail

inline MutableFixture host_fixture(const std::string& name, const CoquasiHopf& H) {
  const CoquasiBialgebra& B = H.base();
  MutableFixture f;
  f.name = name;
  f.tensor_names = {"comult", "counit", "mult", "unit", "omega", "omega_inv", "antipode", "alpha", "beta"};
  f.tensors = {B.coalgebra().comult(),
               detail::row_of(B.coalgebra().counit()),
               B.mult(),
               detail::column_of(B.unit()),
               B.omega().values,
               B.omega_inv().values,
               H.antipode(),
               H.alpha_functional().values,
               H.beta_functional().values};
  Space space = B.space();
  f.check = [space](const std::vector<Matrix>& t) {
    return detail::guarded([&] {
      int d = space.dim();
      Coalgebra c(space, t[0], t[1].row(0));
      CoquasiBialgebra b(c, t[2], t[3].column(0), Functional(3, d, t[4]), Functional(3, d, t[5]));
      CoquasiHopf h(b, t[6], Functional(1, d, t[7]), Functional(1, d, t[8]));
      return check_coquasi_hopf(h);
    });
  };
  return f;
}

inline MutableFixture crossed_fixture(const std::string& name, const CrossedSystem& cs) {
  MutableFixture f;
  f.name = name;
  f.tensor_names = {"R mult", "R unit", "action", "sigma", "sigma_inv"};
  f.tensors = {cs.R.mult(), detail::column_of(cs.R.unit()), cs.action, cs.sigma.values, cs.sigma_inv->values};
  f.check = [cs](const std::vector<Matrix>& t) {
    return detail::guarded([&] {
      int dh = cs.dH();
      CrossedSystem m{Algebra(cs.R.space(), t[0], t[1].column(0)), cs.host, t[2], Functional(2, dh, t[3]),
                      Functional(2, dh, t[4])};
      return check_crossed_system(m);
    });
  };
  return f;
}

inline MutableFixture comodule_fixture(const std::string& name, const ComoduleAlgebra& A) {
  MutableFixture f;
  f.name = name;
  f.tensor_names = {"mult", "unit", "coaction"};
  f.tensors = {A.mult(), detail::column_of(A.unit()), A.coaction()};
  f.check = [A](const std::vector<Matrix>& t) {
    return detail::guarded([&] {
      return check_comodule_algebra(ComoduleAlgebra(A.space(), t[0], t[1].column(0), t[2], A.host()));
    });
  };
  return f;
}

inline MutableFixture cleaving_fixture(const std::string& name, const CleavingSystem& cs) {
  MutableFixture f;
  f.name = name;
  f.tensor_names = {"gamma", "delta"};
  f.tensors = {cs.gamma, cs.delta};
  f.check = [cs](const std::vector<Matrix>& t) {
    return detail::guarded([&] { return check_cleaving(CleavingSystem{cs.A, t[0], t[1]}); });
  };
  return f;
}

inline MutableFixture module_fixture(const std::string& name, const CoquasiHopfModule& M) {
  MutableFixture f;
  f.name = name;
  f.tensor_names = {"r_action", "coaction", "h_action"};
  f.tensors = {M.r_action, M.coaction, M.h_action};
  f.check = [M](const std::vector<Matrix>& t) {
    return detail::guarded([&] {
      CoquasiHopfModule m = M;
      m.r_action = t[0];
      m.coaction = t[1];
      m.h_action = t[2];
      return check_hopf_module(m);
    });
  };
  return f;
}

// the corrupted value: the old one plus a random nonzero offset from a small
// pool (rationals, and roots of unity when the fixture lives over Q(ζ_n))
inline Scalar corrupt(const Scalar& old, std::mt19937& rng, int field_order) {
  std::vector<Scalar> pool{Scalar(1), Scalar(-1), Scalar(2), Scalar::rational(1, 2), Scalar(-3)};
  if (field_order > 2) {
    pool.push_back(Scalar::primitive_root(field_order));
    pool.push_back(Scalar(-1) * Scalar::primitive_root(field_order));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return old + pool[pick(rng)];
}

inline int fixture_field_order(const MutableFixture& f) {
  int n = 1;
  for (const auto& t : f.tensors)
    for (const auto& s : t.data()) n = std::lcm(n, s.order());
  return n;
}

// `count` random single-entry mutations, entries drawn uniformly over all tensors
inline std::vector<MutationOutcome> run_mutations(const MutableFixture& f, int count, unsigned seed) {
  std::mt19937 rng(seed);
  long total = 0;
  for (const auto& t : f.tensors) total += static_cast<long>(t.rows()) * t.cols();
  std::uniform_int_distribution<long> pick(0, total - 1);
  int n = fixture_field_order(f);
  std::vector<MutationOutcome> out;
  for (int i = 0; i < count; ++i) {
    long idx = pick(rng);
    int k = 0;
    while (idx >= static_cast<long>(f.tensors[k].rows()) * f.tensors[k].cols()) {
      idx -= static_cast<long>(f.tensors[k].rows()) * f.tensors[k].cols();
      ++k;
    }
    int cols = f.tensors[k].cols();
    Mutation m{k, static_cast<int>(idx / cols), static_cast<int>(idx % cols), f.tensors[k](idx / cols, idx % cols), {}};
    m.after = corrupt(m.before, rng, n);
    std::vector<Matrix> t = f.tensors;
    t[k](m.row, m.col) = m.after;
    Report r = f.check(t);
    MutationOutcome o;
    o.mutation = m;
    o.where = f.tensor_names[k] + "[" + std::to_string(m.row) + ", " + std::to_string(m.col) + "]: " +
              m.before.to_string() + " -> " + m.after.to_string();
    o.failures = static_cast<long>(r.failures.size());
    o.detected = !r.ok() && !r.failures.front().identity.empty() && !r.failures.front().witness.empty();
    if (!r.ok()) {
      o.identity = r.failures.front().identity;
      o.witness = r.failures.front().witness;
    }
    out.push_back(std::move(o));
  }
  return out;
}

// the fixtures of the suite: both hosts, both crossed systems, their crossed
// products, cleavings and free Hopf modules
inline std::vector<MutableFixture> standard_mutation_fixtures() {
  CrossedSystem s2 = sigma_inverse(catalog::h2_system(catalog::h2_fixture()));
  CrossedSystem s3 = sigma_inverse(catalog::h3_system(catalog::h3_fixture()));
  CrossedProduct p2 = build_crossed_product(s2), p3 = build_crossed_product(s3);
  return {host_fixture("H(2)", catalog::h2()),
          host_fixture("H(3)", catalog::h3()),
          crossed_fixture("H(2) crossed system", s2),
          crossed_fixture("H(3) crossed system", s3),
          comodule_fixture("H(2) crossed product", p2.algebra),
          comodule_fixture("H(3) crossed product", p3.algebra),
          cleaving_fixture("H(2) cleaving", crossed_to_cleft(p2)),
          cleaving_fixture("H(3) cleaving", crossed_to_cleft(p3)),
          module_fixture("H(2) free Hopf module", free_hopf_module(free_r_module(s2.R), s2)),
          module_fixture("H(3) free Hopf module", free_hopf_module(free_r_module(s3.R), s3))};
}

}  // namespace coquasi
