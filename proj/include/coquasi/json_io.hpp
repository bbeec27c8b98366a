// The JSON structure-constant format ("coquasi-doc/1").
//
// A document is an object {"format", "kind", "field", ...payload}.  Scalars are
// strings "c0 + c1*z + ..." over Q(zeta_n) (n from "field") or lists of rational
// strings.  Matrices are nested rows or {"rows", "cols", "entries": [[i, j, s]]}.
// Hosts and other inputs are references: "builtin:NAME", a path relative to the
// referencing file, or an inline document.
#pragma once

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "coquasi/cleft.hpp"
#include "coquasi/hopf_modules.hpp"
#include "coquasi/lowdim.hpp"

namespace coquasi::io {

using json = nlohmann::json;

inline constexpr const char* kFormat = "coquasi-doc/1";

struct SchemaError : std::invalid_argument {
  explicit SchemaError(const std::string& where, const std::string& what)
      : std::invalid_argument("SchemaError at " + (where.empty() ? std::string("/") : where) + ": " + what) {}
};

enum class Kind { CoquasiBialgebra, CoquasiHopf, ComoduleAlgebra, CrossedSystem, CleavingSystem, HopfModule, H2Datum, H3Datum };

inline const std::vector<std::string>& kind_names() {
  static const std::vector<std::string> names{"coquasi-bialgebra", "coquasi-hopf",     "comodule-algebra",
                                              "crossed-system",    "cleaving-system",  "hopf-module",
                                              "h2-datum",          "h3-datum"};
  return names;
}
inline std::string to_string(Kind k) { return kind_names()[static_cast<std::size_t>(k)]; }
inline Kind parse_kind(const std::string& s, const std::string& where = "/kind") {
  // underscores are accepted too
  std::string t = s;
  for (auto& ch : t)
    if (ch == '_') ch = '-';
  const auto& n = kind_names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == t) return static_cast<Kind>(i);
  throw SchemaError(where, "unknown kind \"" + s + "\"");
}

// alternatives in the order of Kind
using Payload = std::variant<CoquasiBialgebra, CoquasiHopf, ComoduleAlgebra, CrossedSystem, CleavingSystem,
                             CoquasiHopfModule, catalog::H2Datum, catalog::H3Datum>;

struct Document {
  Kind kind = Kind::CoquasiHopf;
  int field_order = 1;
  std::string name;
  Payload payload;

  template <class T>
  const T& as() const {
    return std::get<T>(payload);
  }
};

// ---- reading ----

class Reader {
 public:
  Reader(int field_order, std::filesystem::path base_dir) : n_(field_order), base_(std::move(base_dir)) {}

  int field_order() const { return n_; }

  Scalar scalar(const json& j, const std::string& at) const {
    try {
      return scalar_at(j, at);
    } catch (const DivisionByZero&) {
      throw DivisionByZero(at.empty() ? "/" : at);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " at " + (at.empty() ? "/" : at));
    }
  }

  Scalar scalar_at(const json& j, const std::string& at) const {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), n_);
    if (j.is_array()) {
      std::vector<mpq_class> c;
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_string()) throw SchemaError(at + "/" + std::to_string(k), "coefficient must be a string");
        c.push_back(detail::parse_rational(j[k].get<std::string>()));
      }
      return Scalar::from_coeffs(n_, std::move(c));
    }
    throw SchemaError(at, "scalar must be a string or a list of rational strings");
  }

  Vec vec(const json& j, const std::string& at, int expected = -1) const {
    if (!j.is_array()) throw SchemaError(at, "expected an array of scalars");
    if (expected >= 0 && static_cast<int>(j.size()) != expected)
      throw SchemaError(at, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar(j[i], at + "/" + std::to_string(i)));
    return v;
  }

  Matrix matrix(const json& j, const std::string& at, int rows, int cols) const {
    auto shape = [&](int r, int c) {
      if ((rows >= 0 && r != rows) || (cols >= 0 && c != cols))
        throw SchemaError(at, "matrix is " + std::to_string(r) + "x" + std::to_string(c) + ", expected " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
    };
    if (j.is_object()) {
      int r = integer(field(j, "rows", at), at + "/rows"), c = integer(field(j, "cols", at), at + "/cols");
      shape(r, c);
      Matrix m(r, c);
      const json& e = field(j, "entries", at);
      if (!e.is_array()) throw SchemaError(at + "/entries", "expected an array");
      for (std::size_t k = 0; k < e.size(); ++k) {
        std::string w = at + "/entries/" + std::to_string(k);
        if (!e[k].is_array() || e[k].size() != 3) throw SchemaError(w, "entry must be [row, col, scalar]");
        int i = integer(e[k][0], w + "/0"), l = integer(e[k][1], w + "/1");
        if (i < 0 || i >= r || l < 0 || l >= c) throw SchemaError(w, "index out of range");
        m(i, l) += scalar(e[k][2], w + "/2");
      }
      return m;
    }
    if (!j.is_array()) throw SchemaError(at, "matrix must be nested rows or a sparse object");
    int r = static_cast<int>(j.size());
    int c = r ? (j[0].is_array() ? static_cast<int>(j[0].size()) : -1) : (cols >= 0 ? cols : 0);
    if (c < 0) throw SchemaError(at + "/0", "row must be an array");
    shape(r, c);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      std::string w = at + "/" + std::to_string(i);
      Vec row = vec(j[i], w, c);
      for (int l = 0; l < c; ++l) m(i, l) = row[l];
    }
    return m;
  }

  Functional functional(const json& j, const std::string& at, int arity, int base_dim, int target_dim = 1) const {
    if (!j.is_object()) throw SchemaError(at, "functional must be an object {arity, values}");
    int a = integer(field(j, "arity", at), at + "/arity");
    if (a != arity) throw SchemaError(at + "/arity", "expected arity " + std::to_string(arity));
    return Functional(arity, base_dim, matrix(field(j, "values", at), at + "/values", target_dim, ipow(base_dim, arity)));
  }

  Space basis(const json& j, const std::string& at) const {
    if (!j.is_array()) throw SchemaError(at, "basis must be an array of labels");
    std::vector<std::string> l;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) throw SchemaError(at + "/" + std::to_string(i), "label must be a string");
      l.push_back(j[i].get<std::string>());
    }
    try {
      return Space(std::move(l));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(at, e.what());
    }
  }

  Algebra algebra(const json& j, const std::string& at) const {
    if (!j.is_object()) throw SchemaError(at, "algebra must be an object {basis, mult, unit}");
    Space s = basis(field(j, "basis", at), at + "/basis");
    int d = s.dim();
    return Algebra(s, matrix(field(j, "mult", at), at + "/mult", d, d * d), vec(field(j, "unit", at), at + "/unit", d));
  }

  CoquasiBialgebra bialgebra(const json& j, const std::string& at) const {
    Space s = basis(field(j, "basis", at), at + "/basis");
    int d = s.dim();
    Coalgebra c(s, matrix(field(j, "comult", at), at + "/comult", d * d, d), vec(field(j, "counit", at), at + "/counit", d));
    Matrix m = matrix(field(j, "mult", at), at + "/mult", d, d * d);
    Vec u = vec(field(j, "unit", at), at + "/unit", d);
    Functional w = functional(field(j, "omega", at), at + "/omega", 3, d);
    std::optional<Functional> wi;
    if (j.contains("omega_inv")) wi = functional(j["omega_inv"], at + "/omega_inv", 3, d);
    return CoquasiBialgebra(std::move(c), std::move(m), std::move(u), std::move(w), std::move(wi));
  }

  CoquasiHopf hopf(const json& j, const std::string& at) const {
    CoquasiBialgebra b = bialgebra(j, at);
    int d = b.dim();
    Matrix S = matrix(field(j, "antipode", at), at + "/antipode", d, d);
    Functional al(1, d, row(vec(field(j, "alpha", at), at + "/alpha", d)));
    Functional be(1, d, row(vec(field(j, "beta", at), at + "/beta", d)));
    std::optional<TwistF> tf;
    if (j.contains("f") != j.contains("f_inv")) throw SchemaError(at, "f and f_inv must be given together");
    if (j.contains("f"))
      tf = TwistF{functional(j["f"], at + "/f", 2, d), functional(j["f_inv"], at + "/f_inv", 2, d)};
    return CoquasiHopf(std::move(b), std::move(S), std::move(al), std::move(be), std::move(tf));
  }

  Document parse(const json& j, const std::string& at) const;
  Document resolve(const json& ref, const std::string& at, std::optional<Kind> hint = std::nullopt) const;

  Host host(const json& ref, const std::string& at) const;
  ComoduleAlgebra comodule(const json& ref, const std::string& at) const;
  CrossedSystem crossed(const json& ref, const std::string& at) const;

  static const json& field(const json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) throw SchemaError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(at, "missing field \"" + key + "\"");
    return *it;
  }
  static int integer(const json& j, const std::string& at) {
    if (!j.is_number_integer()) throw SchemaError(at, "expected an integer");
    return j.get<int>();
  }

 private:
  static Matrix row(const Vec& v) {
    Matrix m(1, static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(0, static_cast<int>(i)) = v[i];
    return m;
  }

  int n_;
  std::filesystem::path base_;
};

inline int read_field_order(const json& j, const std::string& at, int fallback) {
  if (!j.contains("field")) return fallback;
  const json& f = j["field"];
  int n = Reader::integer(Reader::field(f, "cyclotomic_order", at + "/field"), at + "/field/cyclotomic_order");
  if (n < 1 || n > 840) throw SchemaError(at + "/field/cyclotomic_order", "order must be between 1 and 840");
  return n;
}

// ---- built-in documents ----

// "H2", "H3", "C<n>", "group_C2^<n>": coquasi-Hopf algebras
// "h2_fixture", "h3_fixture": the crossed systems (or data, or crossed products, by hint)
// "h2_cleft", "h3_cleft": their cleaving systems
// "h2_free_module", "h3_free_module": R⊗H as a coquasi-Hopf module
// "group_C2^<n>_twisted", "group_C2^3_cayley": comodule algebras
inline Document builtin_document(const std::string& name, int field_order, std::optional<Kind> hint = std::nullopt) {
  auto order3 = [&] { return field_order % 3 == 0 ? field_order : 3; };
  Document d;
  d.name = name;
  auto want = [&](Kind k) { return hint && *hint == k; };
  if (name == "h2_fixture" || name == "h3_fixture" || name == "h2_cleft" || name == "h3_cleft") {
    bool two = name[1] == '2';
    d.field_order = two ? 1 : order3();
    bool fixture = name.find("fixture") != std::string::npos;
    if (fixture && two && want(Kind::H2Datum)) {
      d.kind = Kind::H2Datum;
      d.payload = catalog::h2_fixture();
      return d;
    }
    if (fixture && !two && want(Kind::H3Datum)) {
      d.kind = Kind::H3Datum;
      d.payload = catalog::h3_fixture(d.field_order);
      return d;
    }
    CrossedSystem cs = sigma_inverse(two ? catalog::h2_system(catalog::h2_fixture())
                                         : catalog::h3_system(catalog::h3_fixture(d.field_order)));
    if (!fixture || want(Kind::CleavingSystem)) {
      d.kind = Kind::CleavingSystem;
      d.payload = crossed_to_cleft(build_crossed_product(cs));
    } else if (want(Kind::ComoduleAlgebra)) {
      d.kind = Kind::ComoduleAlgebra;
      d.payload = build_crossed_product(cs).algebra;
    } else {
      d.kind = Kind::CrossedSystem;
      d.payload = cs;
    }
    return d;
  }
  if (name == "h2_free_module" || name == "h3_free_module") {
    bool two = name[1] == '2';
    d.field_order = two ? 1 : order3();
    CrossedSystem cs = sigma_inverse(two ? catalog::h2_system(catalog::h2_fixture())
                                         : catalog::h3_system(catalog::h3_fixture(d.field_order)));
    d.kind = Kind::HopfModule;
    d.payload = free_hopf_module(free_r_module(cs.R), cs);
    return d;
  }
  if (name.find("_twisted") != std::string::npos || name.find("_cayley") != std::string::npos) {
    d.kind = Kind::ComoduleAlgebra;
    d.payload = catalog::builtin_comodule_algebra(name);
    return d;
  }
  int fo = name == "H3" ? order3() : 0;
  CoquasiHopf H = catalog::builtin_hopf(name, fo);
  d.field_order = name == "H3" ? fo : 1;
  if (want(Kind::CoquasiBialgebra)) {
    d.kind = Kind::CoquasiBialgebra;
    d.payload = H.base();
  } else {
    d.kind = Kind::CoquasiHopf;
    d.payload = H;
  }
  return d;
}

inline Document load_document(const std::filesystem::path& path, int field_order_hint = 1);

inline Document Reader::resolve(const json& ref, const std::string& at, std::optional<Kind> hint) const {
  if (ref.is_string()) {
    std::string s = ref.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return builtin_document(s.substr(8), n_, hint);
    std::filesystem::path p = s;
    if (p.is_relative()) p = base_ / p;
    return load_document(p, n_);
  }
  if (ref.is_object()) {
    Reader inner(read_field_order(ref, at, n_), base_);
    return inner.parse(ref, at);
  }
  throw SchemaError(at, "reference must be \"builtin:NAME\", a path, or an inline document");
}

inline Host Reader::host(const json& ref, const std::string& at) const {
  Document d = resolve(ref, at, Kind::CoquasiHopf);
  if (d.kind == Kind::CoquasiHopf) return Host::of(d.as<CoquasiHopf>());
  if (d.kind == Kind::CoquasiBialgebra) return Host::of(d.as<CoquasiBialgebra>());
  throw SchemaError(at, "host must be a coquasi-bialgebra or coquasi-hopf document, got " + to_string(d.kind));
}

inline CrossedSystem as_crossed(const Document& d, const std::string& at) {
  switch (d.kind) {
    case Kind::CrossedSystem: return d.as<CrossedSystem>();
    case Kind::H2Datum: return sigma_inverse(catalog::h2_system(d.as<catalog::H2Datum>()));
    case Kind::H3Datum: return sigma_inverse(catalog::h3_system(d.as<catalog::H3Datum>()));
    default: throw SchemaError(at, "expected a crossed-system document, got " + to_string(d.kind));
  }
}

inline ComoduleAlgebra as_comodule(const Document& d, const std::string& at) {
  switch (d.kind) {
    case Kind::ComoduleAlgebra: return d.as<ComoduleAlgebra>();
    case Kind::CleavingSystem: return d.as<CleavingSystem>().A;
    case Kind::CrossedSystem:
    case Kind::H2Datum:
    case Kind::H3Datum: return build_crossed_product(as_crossed(d, at)).algebra;
    default: throw SchemaError(at, "expected a comodule algebra (or a crossed system), got " + to_string(d.kind));
  }
}

inline CrossedSystem Reader::crossed(const json& ref, const std::string& at) const {
  return as_crossed(resolve(ref, at, Kind::CrossedSystem), at);
}
inline ComoduleAlgebra Reader::comodule(const json& ref, const std::string& at) const {
  return as_comodule(resolve(ref, at, Kind::ComoduleAlgebra), at);
}

inline Document Reader::parse(const json& j, const std::string& at) const {
  if (!j.is_object()) throw SchemaError(at, "document must be an object");
  if (j.contains("format") && j["format"] != kFormat)
    throw SchemaError(at + "/format", "unsupported format " + j["format"].dump() + ", expected \"" + kFormat + "\"");
  Document d;
  d.field_order = n_;
  const json& k = field(j, "kind", at);
  if (!k.is_string()) throw SchemaError(at + "/kind", "kind must be a string");
  d.kind = parse_kind(k.get<std::string>(), at + "/kind");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError(at + "/name", "name must be a string");
    d.name = j["name"].get<std::string>();
  }
  switch (d.kind) {
    case Kind::CoquasiBialgebra: d.payload = bialgebra(j, at); break;
    case Kind::CoquasiHopf: d.payload = hopf(j, at); break;
    case Kind::ComoduleAlgebra: {
      Host h = host(field(j, "host", at), at + "/host");
      Space s = basis(field(j, "basis", at), at + "/basis");
      int n = s.dim();
      d.payload = ComoduleAlgebra(s, matrix(field(j, "mult", at), at + "/mult", n, n * n),
                                  vec(field(j, "unit", at), at + "/unit", n),
                                  matrix(field(j, "coaction", at), at + "/coaction", n * h.dim(), n), h);
      break;
    }
    case Kind::CrossedSystem: {
      Host h = host(field(j, "host", at), at + "/host");
      Algebra R = algebra(field(j, "R", at), at + "/R");
      int dr = R.dim(), dh = h.dim();
      Matrix act = matrix(field(j, "action", at), at + "/action", dr, dh * dr);
      Functional sig = functional(field(j, "sigma", at), at + "/sigma", 2, dh, dr);
      std::optional<Functional> si;
      if (j.contains("sigma_inv")) si = functional(j["sigma_inv"], at + "/sigma_inv", 2, dh, dr);
      d.payload = CrossedSystem{std::move(R), std::move(h), std::move(act), std::move(sig), std::move(si)};
      break;
    }
    case Kind::CleavingSystem: {
      ComoduleAlgebra A = comodule(field(j, "algebra", at), at + "/algebra");
      int n = A.dim(), dh = A.H().dim();
      Matrix g = matrix(field(j, "gamma", at), at + "/gamma", n, dh);
      Matrix de = matrix(field(j, "delta", at), at + "/delta", n, dh);
      d.payload = CleavingSystem{std::move(A), std::move(g), std::move(de)};
      break;
    }
    case Kind::HopfModule: {
      CrossedSystem cs = crossed(field(j, "system", at), at + "/system");
      Space s = basis(field(j, "basis", at), at + "/basis");
      int m = s.dim(), dr = cs.dR(), dh = cs.dH();
      CoquasiHopfModule M{s,
                          matrix(field(j, "r_action", at), at + "/r_action", m, m * dr),
                          matrix(field(j, "coaction", at), at + "/coaction", m * dh, m),
                          matrix(field(j, "h_action", at), at + "/h_action", m, m * dh),
                          std::move(cs)};
      d.payload = std::move(M);
      break;
    }
    case Kind::H2Datum: {
      Algebra B = algebra(field(j, "B", at), at + "/B");
      int n = B.dim();
      d.payload = catalog::H2Datum{B, matrix(field(j, "F", at), at + "/F", n, n), vec(field(j, "c", at), at + "/c", n)};
      break;
    }
    case Kind::H3Datum: {
      if (n_ % 3 != 0) throw SchemaError(at + "/field", "an h3-datum needs a cyclotomic order divisible by 3");
      Algebra B = algebra(field(j, "B", at), at + "/B");
      int n = B.dim();
      auto v = [&](const char* key) { return vec(field(j, key, at), at + "/" + key, n); };
      d.payload = catalog::H3Datum{B,      matrix(field(j, "F", at), at + "/F", n, n),
                                   matrix(field(j, "G", at), at + "/G", n, n),
                                   v("u1"), v("u2"), v("v1"), v("v2"), n_};
      break;
    }
  }
  return d;
}

inline Document parse_document(const json& j, const std::filesystem::path& base_dir = ".", int field_order_hint = 1) {
  if (!j.is_object()) throw SchemaError("", "document must be an object");
  if (!j.contains("format")) throw SchemaError("", "missing field \"format\"");
  Reader r(read_field_order(j, "", field_order_hint), base_dir);
  return r.parse(j, "");
}

inline Document load_document(const std::filesystem::path& path, int field_order_hint) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string(), "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string(), std::string("malformed JSON: ") + e.what());
  }
  return parse_document(j, path.parent_path().empty() ? "." : path.parent_path(), field_order_hint);
}

// a command-line argument: "builtin:NAME" or a path
inline Document load_ref(const std::string& ref, int field_order = 1, std::optional<Kind> hint = std::nullopt) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_document(ref.substr(8), field_order, hint);
  return load_document(ref, field_order);
}

// ---- writing ----

// Scalars are written over one cyclotomic field: the first pass only collects
// the lcm of all orders, the second writes.
class Writer {
 public:
  explicit Writer(int field_order = 1, bool scanning = false) : n_(field_order), scanning_(scanning) {}
  int field_order() const { return n_; }

  json scalar(const Scalar& s) {
    if (scanning_) {
      n_ = std::lcm(n_, s.order());
      return nullptr;
    }
    return s.to_string(n_);
  }
  json vec(const Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar(s));
    return a;
  }
  // sparse when at most a third of the entries are nonzero
  json matrix(const Matrix& m) {
    long nz = 0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) nz += !m(i, j).is_zero();
    if (3 * nz <= static_cast<long>(m.rows()) * m.cols() && m.rows() * m.cols() > 16) {
      json e = json::array();
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (!m(i, j).is_zero()) e.push_back(json::array({i, j, scalar(m(i, j))}));
      return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
    }
    json a = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json r = json::array();
      for (int j = 0; j < m.cols(); ++j) r.push_back(scalar(m(i, j)));
      a.push_back(r);
    }
    return a;
  }
  json functional(const Functional& f) { return json{{"arity", f.arity}, {"values", matrix(f.values)}}; }
  json basis(const Space& s) { return s.labels(); }
  json algebra(const Algebra& a) { return json{{"basis", basis(a.space())}, {"mult", matrix(a.mult())}, {"unit", vec(a.unit())}}; }

  json body(const CoquasiBialgebra& b) {
    return json{{"kind", "coquasi-bialgebra"},
                {"basis", basis(b.space())},
                {"comult", matrix(b.coalgebra().comult())},
                {"counit", vec(b.coalgebra().counit())},
                {"mult", matrix(b.mult())},
                {"unit", vec(b.unit())},
                {"omega", functional(b.omega())},
                {"omega_inv", functional(b.omega_inv())}};
  }
  json body(const CoquasiHopf& H) {
    json j = body(H.base());
    j["kind"] = "coquasi-hopf";
    j["antipode"] = matrix(H.antipode());
    j["alpha"] = vec(H.alpha_functional().values.row(0));
    j["beta"] = vec(H.beta_functional().values.row(0));
    if (H.twist_f()) {
      j["f"] = functional(H.twist_f()->f);
      j["f_inv"] = functional(H.twist_f()->f_inv);
    }
    return j;
  }
  json host(const Host& h) { return h.is_hopf() ? body(h.hopf()) : body(h.H()); }
  json body(const ComoduleAlgebra& A) {
    return json{{"kind", "comodule-algebra"}, {"host", host(A.host())},        {"basis", basis(A.space())},
                {"mult", matrix(A.mult())},   {"unit", vec(A.unit())},         {"coaction", matrix(A.coaction())}};
  }
  json body(const CrossedSystem& cs) {
    json j{{"kind", "crossed-system"},
           {"host", host(cs.host)},
           {"R", algebra(cs.R)},
           {"action", matrix(cs.action)},
           {"sigma", functional(cs.sigma)}};
    if (cs.sigma_inv) j["sigma_inv"] = functional(*cs.sigma_inv);
    return j;
  }
  json body(const CleavingSystem& c) {
    return json{{"kind", "cleaving-system"}, {"algebra", body(c.A)}, {"gamma", matrix(c.gamma)}, {"delta", matrix(c.delta)}};
  }
  json body(const CoquasiHopfModule& M) {
    return json{{"kind", "hopf-module"},          {"system", body(M.system)},       {"basis", basis(M.space)},
                {"r_action", matrix(M.r_action)}, {"coaction", matrix(M.coaction)}, {"h_action", matrix(M.h_action)}};
  }
  json body(const catalog::H2Datum& d) {
    return json{{"kind", "h2-datum"}, {"B", algebra(d.B)}, {"F", matrix(d.F)}, {"c", vec(d.c)}};
  }
  json body(const catalog::H3Datum& d) {
    if (!scanning_ && n_ % d.field_order != 0) throw std::logic_error("writer field order does not contain the datum's");
    if (scanning_) n_ = std::lcm(n_, d.field_order);
    return json{{"kind", "h3-datum"}, {"B", algebra(d.B)}, {"F", matrix(d.F)}, {"G", matrix(d.G)},
                {"u1", vec(d.u1)},    {"u2", vec(d.u2)},   {"v1", vec(d.v1)},   {"v2", vec(d.v2)}};
  }

 private:
  int n_;
  bool scanning_;
};

template <class T>
json to_json(const T& x, const std::string& name = {}, int min_order = 1) {
  Writer scan(min_order, true);
  scan.body(x);
  Writer w(scan.field_order());
  json j = w.body(x);
  j["format"] = kFormat;
  j["field"] = json{{"cyclotomic_order", w.field_order()}};
  if (!name.empty()) j["name"] = name;
  return j;
}

inline json to_json(const Document& d) {
  return std::visit([&](const auto& x) { return to_json(x, d.name, d.field_order); }, d.payload);
}

inline void save_document(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

// ---- reports ----

inline json report_json(const Report& r) {
  json f = json::array();
  for (const auto& x : r.failures) f.push_back(json{{"identity", x.identity}, {"witness", x.witness}, {"detail", x.detail}});
  return json{{"subject", r.subject}, {"ok", r.ok()},       {"checked", r.checked},
              {"failures", f},        {"flags", r.flags},   {"notes", r.notes}};
}

}  // namespace coquasi::io
