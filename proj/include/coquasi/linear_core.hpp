// Spaces, coalgebras, algebras, multilinear functionals and the convolution
// algebra Hom(C, A).
//
// Conventions used everywhere in the library:
//  * a linear map V -> W is a Matrix with dim W rows and dim V columns;
//  * the basis of V⊗W is ordered lexicographically, e_i⊗f_j at i*dim W + j;
//  * a functional of arity k on V with values in T is a Matrix with dim T
//    rows and dim V^k columns (T = the ground field gives one row).
#pragma once

#include "coquasi/linalg.hpp"
#include "coquasi/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coquasi {

struct ArityMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Space {
 public:
  Space() = default;
  explicit Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate basis label " + labels_[i]);
  }
  static Space numbered(const std::string& prefix, int n) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back(prefix + std::to_string(i));
    return Space(std::move(l));
  }
  static Space tensor(const Space& a, const Space& b, const std::string& sep = "⊗") {
    std::vector<std::string> l;
    for (const auto& x : a.labels_)
      for (const auto& y : b.labels_) l.push_back(x + sep + y);
    return Space(std::move(l));
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  int index(const std::string& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return static_cast<int>(i);
    throw std::out_of_range("unknown basis label \"" + l + "\"");
  }
  friend bool operator==(const Space& a, const Space& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
};

// flat index of a tuple of basis indices in V^{⊗k}
inline int flat_index(const std::vector<int>& legs, int dim) {
  int idx = 0;
  for (int l : legs) idx = idx * dim + l;
  return idx;
}
inline std::vector<int> unflatten(int idx, int dim, int k) {
  std::vector<int> legs(k);
  for (int i = k - 1; i >= 0; --i) {
    legs[i] = idx % dim;
    idx /= dim;
  }
  return legs;
}
inline int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// one summand of an iterated coproduct
struct SweedlerTerm {
  Scalar coeff;
  std::vector<int> legs;
};

class Coalgebra {
 public:
  // one summand c·(e_a ⊗ e_b) of Δ(e_i)
  struct Split {
    Scalar coeff;
    int left, right;
  };

  Coalgebra() = default;
  Coalgebra(Space space, const Matrix& comult, Vec counit) : space_(std::move(space)), counit_(std::move(counit)) {
    int d = space_.dim();
    if (comult.rows() != d * d || comult.cols() != d || static_cast<int>(counit_.size()) != d)
      throw std::invalid_argument("Coalgebra: structure map shapes do not match the space");
    delta_.resize(d);
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (!comult(a * d + b, i).is_zero()) delta_[i].push_back({comult(a * d + b, i), a, b});
    cache_ = std::make_shared<Cache>();
  }
  // sparse form, for large tensor powers where the dense d²×d matrix is wasteful
  Coalgebra(Space space, std::vector<std::vector<Split>> delta, Vec counit)
      : space_(std::move(space)), counit_(std::move(counit)), delta_(std::move(delta)),
        cache_(std::make_shared<Cache>()) {
    int d = space_.dim();
    if (static_cast<int>(delta_.size()) != d || static_cast<int>(counit_.size()) != d)
      throw std::invalid_argument("Coalgebra: structure map shapes do not match the space");
  }

  // the coalgebra of a group-like basis: Δ(g) = g⊗g, ε(g) = 1
  static Coalgebra grouplike(Space space) {
    int d = space.dim();
    std::vector<std::vector<Split>> delta(d);
    for (int i = 0; i < d; ++i) delta[i].push_back({Scalar(1), i, i});
    return Coalgebra(std::move(space), std::move(delta), Vec(d, Scalar(1)));
  }

  const Space& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::vector<Split>& delta(int i) const { return delta_[i]; }
  // dense Δ, built on first use
  const Matrix& comult() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->dense) {
      int d = dim();
      Matrix m(d * d, d);
      for (int i = 0; i < d; ++i)
        for (const auto& s : delta_[i]) m(s.left * d + s.right, i) += s.coeff;
      cache_->dense = std::move(m);
    }
    return *cache_->dense;
  }
  const Vec& counit() const { return counit_; }
  const std::string& label(int i) const { return space_.label(i); }

  // Δ^{(k-1)}(e_i) as a list of (coefficient, legs), computed by repeatedly
  // splitting the last leg
  const std::vector<SweedlerTerm>& terms(int i, int k) const {
    if (k < 1) throw std::invalid_argument("sweedler: need at least one leg");
    std::lock_guard<std::mutex> lock(cache_->mu);
    return terms_locked(i, k);
  }

  // dense Δ^{(k-1)}(x) in V^{⊗k}
  Vec sweedler(const Vec& x, int k) const {
    int d = dim();
    Vec out(static_cast<std::size_t>(ipow(d, k)));
    for (int i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& t : terms(i, k)) out[flat_index(t.legs, d)] += x[i] * t.coeff;
    }
    return out;
  }

  // the same tensor computed by always splitting the first leg
  Vec sweedler_first_leg(const Vec& x, int k) const {
    int d = dim();
    Vec cur = x;
    for (int m = 1; m < k; ++m) {
      Vec next(static_cast<std::size_t>(ipow(d, m + 1)));
      int rest = ipow(d, m - 1);
      for (int idx = 0; idx < ipow(d, m); ++idx) {
        if (cur[idx].is_zero()) continue;
        int first = idx / rest, tail = idx % rest;
        for (const auto& s : delta_[first]) next[(s.left * d + s.right) * rest + tail] += cur[idx] * s.coeff;
      }
      cur = std::move(next);
    }
    return cur;
  }

  Scalar counit(const Vec& x) const {
    Scalar s;
    for (int i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) s += x[i] * counit_[i];
    return s;
  }
  bool is_grouplike(int i) const {
    const auto& t = delta_[i];
    return t.size() == 1 && t[0].coeff.is_one() && t[0].left == i && t[0].right == i && counit_[i].is_one();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::vector<SweedlerTerm>> terms;
    std::optional<Matrix> dense;
  };

  const std::vector<SweedlerTerm>& terms_locked(int i, int k) const {
    auto key = std::make_pair(i, k);
    auto it = cache_->terms.find(key);
    if (it != cache_->terms.end()) return it->second;
    std::vector<SweedlerTerm> out;
    if (k == 1) {
      out.push_back({Scalar(1), {i}});
    } else {
      const auto& prev = terms_locked(i, k - 1);
      for (const auto& t : prev)
        for (const auto& s : delta_[t.legs.back()]) {
          SweedlerTerm n{t.coeff * s.coeff, t.legs};
          n.legs.back() = s.left;
          n.legs.push_back(s.right);
          out.push_back(std::move(n));
        }
    }
    return cache_->terms.emplace(key, std::move(out)).first->second;
  }

  Space space_;
  Vec counit_;
  std::vector<std::vector<Split>> delta_;
  std::shared_ptr<Cache> cache_;
};

// C^{⊗k} with the componentwise coalgebra structure
inline Coalgebra tensor_power(const Coalgebra& c, int k) {
  int d = c.dim();
  int n = ipow(d, k);
  std::vector<std::string> labels;
  for (int idx = 0; idx < n; ++idx) {
    auto legs = unflatten(idx, d, k);
    std::string l;
    for (int j = 0; j < k; ++j) l += (j ? "," : "") + c.label(legs[j]);
    labels.push_back(l);
  }
  std::vector<std::vector<Coalgebra::Split>> delta(n);
  Vec counit(n);
  for (int idx = 0; idx < n; ++idx) {
    auto legs = unflatten(idx, d, k);
    // expand the product of the k coproducts
    std::vector<Coalgebra::Split> acc{{Scalar(1), 0, 0}};
    Scalar eps(1);
    for (int j = 0; j < k; ++j) {
      std::vector<Coalgebra::Split> next;
      for (const auto& a : acc)
        for (const auto& s : c.delta(legs[j])) next.push_back({a.coeff * s.coeff, a.left * d + s.left, a.right * d + s.right});
      acc = std::move(next);
      eps *= c.counit()[legs[j]];
    }
    delta[idx] = std::move(acc);
    counit[idx] = eps;
  }
  return Coalgebra(Space(std::move(labels)), std::move(delta), std::move(counit));
}

inline Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& e) {
  int dc = c.dim(), de = e.dim(), n = dc * de;
  std::vector<std::vector<Coalgebra::Split>> delta(n);
  Vec counit(n);
  for (int i = 0; i < dc; ++i)
    for (int j = 0; j < de; ++j) {
      int idx = i * de + j;
      for (const auto& s : c.delta(i))
        for (const auto& t : e.delta(j))
          delta[idx].push_back({s.coeff * t.coeff, s.left * de + t.left, s.right * de + t.right});
      counit[idx] = c.counit()[i] * e.counit()[j];
    }
  return Coalgebra(Space::tensor(c.space(), e.space(), ","), std::move(delta), std::move(counit));
}

inline Report check_coalgebra(const Coalgebra& c) {
  Report r;
  r.subject = "coalgebra";
  int d = c.dim();
  for (int i = 0; i < d; ++i) {
    Vec e = unit_vec(d, i);
    ++r.checked;
    if (c.sweedler(e, 3) != c.sweedler_first_leg(e, 3)) r.fail("coassociativity", {c.label(i)});
    Vec left(d), right(d);
    for (const auto& t : c.terms(i, 2)) {
      left[t.legs[1]] += t.coeff * c.counit()[t.legs[0]];
      right[t.legs[0]] += t.coeff * c.counit()[t.legs[1]];
    }
    ++r.checked;
    if (left != e || right != e) r.fail("counit law", {c.label(i)});
  }
  return r;
}

class Algebra {
 public:
  Algebra() = default;
  Algebra(Space space, Matrix mult, Vec unit)
      : space_(std::move(space)), mult_(std::move(mult)), unit_(std::move(unit)) {
    int d = space_.dim();
    if (mult_.rows() != d || mult_.cols() != d * d || static_cast<int>(unit_.size()) != d)
      throw std::invalid_argument("Algebra: structure map shapes do not match the space");
  }

  // the ground field as a one-dimensional algebra
  static Algebra ground_field() {
    Matrix m(1, 1);
    m(0, 0) = Scalar(1);
    return Algebra(Space({"1"}), std::move(m), Vec{Scalar(1)});
  }

  const Space& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const Matrix& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }
  const std::string& label(int i) const { return space_.label(i); }
  Vec basis(int i) const { return unit_vec(dim(), i); }

  Vec mul(int i, int j) const { return mult_.column(i * dim() + j); }
  Vec mul(const Vec& x, const Vec& y) const {
    int d = dim();
    Vec out(d);
    for (int i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        int col = i * d + j;
        for (int t = 0; t < d; ++t)
          if (!mult_(t, col).is_zero()) out[t] += c * mult_(t, col);
      }
    }
    return out;
  }
  Vec scalar_multiple_of_unit(const Scalar& s) const { return s * unit_; }

  Matrix left_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.set_column(j, mul(x, basis(j)));
    return m;
  }
  Matrix right_mult(const Vec& x) const {
    Matrix m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.set_column(j, mul(basis(j), x));
    return m;
  }

  // two-sided inverse, if any
  std::optional<Vec> inverse(const Vec& x) const {
    auto l = solve(left_mult(x), unit_);   // x y = 1
    auto r = solve(right_mult(x), unit_);  // y x = 1
    if (!l || !r) return std::nullopt;
    if (mul(x, *l) != unit_ || mul(*l, x) != unit_) return std::nullopt;
    return l;
  }

  std::string format(const Vec& x, int field_order = 0) const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      std::string c = x[i].to_string(field_order ? field_order : x[i].order());
      if (!out.empty()) out += " + ";
      if (x[i].is_one())
        out += label(i);
      else
        out += "(" + c + ")" + label(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  Space space_;
  Matrix mult_;
  Vec unit_;
};

inline Report check_algebra(const Algebra& a) {
  Report r;
  r.subject = "algebra";
  int d = a.dim();
  for (int i = 0; i < d; ++i) {
    Vec ei = a.basis(i);
    ++r.checked;
    if (a.mul(a.unit(), ei) != ei || a.mul(ei, a.unit()) != ei) r.fail("unit law", {a.label(i)});
    for (int j = 0; j < d; ++j) {
      Vec ij = a.mul(i, j);
      for (int k = 0; k < d; ++k) {
        ++r.checked;
        if (a.mul(ij, a.basis(k)) != a.mul(ei, a.mul(j, k)))
          r.fail("associativity", {a.label(i), a.label(j), a.label(k)});
      }
    }
  }
  return r;
}

// A multilinear map on V^{⊗arity} with values in a space of dimension
// values.rows().
struct Functional {
  int arity = 0;
  int base_dim = 0;
  Matrix values;

  Functional() = default;
  Functional(int arity_, int base_dim_, int target_dim = 1)
      : arity(arity_), base_dim(base_dim_), values(target_dim, ipow(base_dim_, arity_)) {}
  Functional(int arity_, int base_dim_, Matrix v) : arity(arity_), base_dim(base_dim_), values(std::move(v)) {
    if (values.cols() != ipow(base_dim, arity)) throw ArityMismatch("functional shape does not match its arity");
  }

  int target_dim() const { return values.rows(); }
  int size() const { return values.cols(); }

  // value at a basis tuple (scalar-valued case)
  const Scalar& at(std::initializer_list<int> legs) const { return values(0, flat_index(legs, base_dim)); }
  Scalar& at(std::initializer_list<int> legs) { return values(0, flat_index(legs, base_dim)); }
  const Scalar& at(const std::vector<int>& legs) const { return values(0, flat_index(legs, base_dim)); }
  // value at a basis tuple (vector-valued case)
  Vec value(const std::vector<int>& legs) const { return values.column(flat_index(legs, base_dim)); }

  // ε⊗...⊗ε times the unit of the target
  static Functional counit_power(const Coalgebra& c, int arity, const Vec& target_unit = Vec{Scalar(1)}) {
    Functional f(arity, c.dim(), static_cast<int>(target_unit.size()));
    for (int idx = 0; idx < f.size(); ++idx) {
      auto legs = unflatten(idx, c.dim(), arity);
      Scalar e(1);
      for (int l : legs) e *= c.counit()[l];
      if (e.is_zero()) continue;
      for (int t = 0; t < f.target_dim(); ++t) f.values(t, idx) = e * target_unit[t];
    }
    return f;
  }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.arity == b.arity && a.base_dim == b.base_dim && a.values == b.values;
  }
  friend bool operator!=(const Functional& a, const Functional& b) { return !(a == b); }
};

// multilinear contraction of f against one vector per slot
inline Vec apply_functional_vec(const Functional& f, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != f.arity)
    throw ArityMismatch("apply_functional: expected " + std::to_string(f.arity) + " arguments, got " +
                        std::to_string(args.size()));
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != f.base_dim) throw ArityMismatch("apply_functional: argument dimension mismatch");
  Vec out(f.target_dim());
  // enumerate the support of each argument
  std::vector<std::vector<int>> supp(args.size());
  for (std::size_t s = 0; s < args.size(); ++s)
    for (int i = 0; i < f.base_dim; ++i)
      if (!args[s][i].is_zero()) supp[s].push_back(i);
  std::vector<std::size_t> pos(args.size(), 0);
  for (const auto& s : supp)
    if (s.empty()) return out;
  while (true) {
    Scalar c(1);
    int idx = 0;
    for (std::size_t s = 0; s < args.size(); ++s) {
      int i = supp[s][pos[s]];
      c *= args[s][i];
      idx = idx * f.base_dim + i;
    }
    for (int t = 0; t < f.target_dim(); ++t)
      if (!f.values(t, idx).is_zero()) out[t] += c * f.values(t, idx);
    std::size_t s = args.size();
    while (s > 0) {
      --s;
      if (++pos[s] < supp[s].size()) break;
      pos[s] = 0;
      if (s == 0) return out;
    }
    if (args.empty()) return out;
  }
}

inline Scalar apply_functional(const Functional& f, const std::vector<Vec>& args) {
  if (f.target_dim() != 1) throw ArityMismatch("apply_functional: functional is not scalar valued");
  return apply_functional_vec(f, args)[0];
}

// ---- the convolution algebra Hom(C, A) ----

inline Matrix convolution_unit(const Coalgebra& c, const Algebra& a) {
  Matrix u(a.dim(), c.dim());
  for (int h = 0; h < c.dim(); ++h)
    if (!c.counit()[h].is_zero())
      for (int t = 0; t < a.dim(); ++t) u(t, h) = c.counit()[h] * a.unit()[t];
  return u;
}

inline Matrix convolution_product(const Matrix& phi, const Matrix& psi, const Coalgebra& c, const Algebra& a) {
  if (phi.rows() != a.dim() || psi.rows() != a.dim() || phi.cols() != c.dim() || psi.cols() != c.dim())
    throw std::invalid_argument("convolution_product: shape mismatch");
  Matrix out(a.dim(), c.dim());
  for (int h = 0; h < c.dim(); ++h) {
    Vec acc(a.dim());
    for (const auto& t : c.terms(h, 2)) axpy(acc, t.coeff, a.mul(phi.column(t.legs[0]), psi.column(t.legs[1])));
    out.set_column(h, acc);
  }
  return out;
}

struct InverseResult {
  std::optional<Matrix> inverse;
  std::string diagnostic;
  explicit operator bool() const { return inverse.has_value(); }
};

namespace detail {

// matrix of ψ ↦ φ⋆ψ (left = true) or ψ ↦ ψ⋆φ on the coordinates ψ(t, h)
inline Matrix convolution_operator(const Matrix& phi, const Coalgebra& c, const Algebra& a, bool left) {
  int da = a.dim(), dc = c.dim(), n = da * dc;
  Matrix m(n, n);
  for (int h = 0; h < dc; ++h)
    for (const auto& t : c.terms(h, 2)) {
      int fixed = left ? t.legs[0] : t.legs[1];
      int var = left ? t.legs[1] : t.legs[0];
      for (int p = 0; p < da; ++p) {
        const Scalar& f = phi(p, fixed);
        if (f.is_zero()) continue;
        for (int q = 0; q < da; ++q) {
          Vec prod = left ? a.mul(p, q) : a.mul(q, p);
          for (int r = 0; r < da; ++r)
            if (!prod[r].is_zero()) m(r * dc + h, q * dc + var) += t.coeff * f * prod[r];
        }
      }
    }
  return m;
}

inline Vec flatten_map(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int h = 0; h < m.cols(); ++h) v.push_back(m(r, h));
  return v;
}
inline Matrix unflatten_map(const Vec& v, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int h = 0; h < cols; ++h) m(r, h) = v[static_cast<std::size_t>(r) * cols + h];
  return m;
}

}  // namespace detail

// two-sided convolution inverse; both one-sided systems must be solvable and
// give the same map
inline InverseResult convolution_inverse(const Matrix& phi, const Coalgebra& c, const Algebra& a) {
  InverseResult res;
  Vec unit = detail::flatten_map(convolution_unit(c, a));
  auto right = solve(detail::convolution_operator(phi, c, a, true), unit);   // φ⋆ψ = u
  auto left = solve(detail::convolution_operator(phi, c, a, false), unit);   // ψ⋆φ = u
  if (!right && !left) {
    res.diagnostic = "NotInvertible: neither one-sided equation is solvable";
    return res;
  }
  if (!right || !left) {
    res.diagnostic = std::string("NotInvertible: only a ") + (right ? "right" : "left") + " inverse exists";
    return res;
  }
  Matrix r = detail::unflatten_map(*right, a.dim(), c.dim());
  Matrix l = detail::unflatten_map(*left, a.dim(), c.dim());
  Matrix u = convolution_unit(c, a);
  if (r != l || convolution_product(phi, r, c, a) != u || convolution_product(r, phi, c, a) != u) {
    res.diagnostic = "NotInvertible: one-sided inverses differ";
    return res;
  }
  res.inverse = std::move(r);
  return res;
}

// functional versions: a functional of arity k on C is a map C^{⊗k} -> T
inline Functional convolve(const Functional& f, const Functional& g, const Coalgebra& c, const Algebra& target) {
  if (f.arity != g.arity) throw ArityMismatch("convolve: arities differ");
  Coalgebra ck = tensor_power(c, f.arity);
  return Functional(f.arity, c.dim(), convolution_product(f.values, g.values, ck, target));
}

inline std::optional<Functional> convolution_inverse(const Functional& f, const Coalgebra& c, const Algebra& target,
                                                     std::string* diagnostic = nullptr) {
  Coalgebra ck = tensor_power(c, f.arity);
  auto r = convolution_inverse(f.values, ck, target);
  if (!r) {
    if (diagnostic) *diagnostic = r.diagnostic;
    return std::nullopt;
  }
  return Functional(f.arity, c.dim(), std::move(*r.inverse));
}

}  // namespace coquasi
