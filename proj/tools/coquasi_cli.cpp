// coquasi_cli: check structure-constant documents and build the derived
// constructions.  Exit codes: 0 ok, 1 failed identities or a construction that
// does not apply, 2 unreadable input.
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "coquasi/json_io.hpp"
#include "coquasi/morita.hpp"

using namespace coquasi;
using io::json;
using io::Kind;

namespace {

struct Options {
  int field = 1;
  bool json_out = false;
  std::string kind, input, output, tau, witness, datum;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

io::Document load(const Options& o, const std::string& ref, std::optional<Kind> hint = std::nullopt) {
  if (!o.kind.empty()) hint = io::parse_kind(o.kind, "--kind");
  io::Document d = io::load_ref(ref, o.field, hint);
  if (!o.kind.empty() && d.kind != *hint)
    throw io::SchemaError(ref, "document is a " + io::to_string(d.kind) + ", not a " + io::to_string(*hint));
  return d;
}

void emit(const Options& o, const json& doc) {
  if (o.output.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    io::save_document(doc, o.output);
    std::cerr << "wrote " << o.output << " (" << doc["kind"].get<std::string>() << ")\n";
  }
}

Report check_document(const io::Document& d) {
  switch (d.kind) {
    case Kind::CoquasiBialgebra: return check_coquasi_bialgebra(d.as<CoquasiBialgebra>());
    case Kind::CoquasiHopf: return check_coquasi_hopf(d.as<CoquasiHopf>());
    case Kind::ComoduleAlgebra: return check_comodule_algebra(d.as<ComoduleAlgebra>());
    case Kind::CrossedSystem: return check_crossed_system(d.as<CrossedSystem>());
    case Kind::CleavingSystem: return check_cleaving(d.as<CleavingSystem>());
    case Kind::HopfModule: return check_hopf_module(d.as<CoquasiHopfModule>());
    case Kind::H2Datum:
    case Kind::H3Datum: {
      auto c = d.kind == Kind::H2Datum ? catalog::check_h2_datum(d.as<catalog::H2Datum>())
                                       : catalog::check_h3_datum(d.as<catalog::H3Datum>());
      Report r = c.report;
      r.notes.push_back(std::string("induced crossed system: ") + (c.system_report.ok() ? "passes" : "fails") + " (" +
                        std::to_string(c.system_report.failures.size()) + " failures)");
      if (!c.agree()) r.fail("datum conditions agree with the crossed-system check", {"datum"});
      return r;
    }
  }
  return {};
}

int cmd_check(const Options& o) {
  io::Document d = load(o, o.input);
  Report r = check_document(d);
  if (o.json_out) {
    json j = io::report_json(r);
    j["kind"] = io::to_string(d.kind);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::to_string(d.kind) << (d.name.empty() ? "" : " " + d.name) << "\n" << r.text();
  }
  return r.ok() ? 0 : 1;
}

// ---- build ----

int run_crossed_product(const Options& o) {
  CrossedSystem cs = io::as_crossed(load(o, o.input, Kind::CrossedSystem), o.input);
  Report r = check_crossed_system(cs);
  if (!r.ok()) {
    std::cerr << r.text();
    return 1;
  }
  emit(o, io::to_json(build_crossed_product(cs).algebra, "crossed product"));
  return 0;
}

Host host_of(const io::Document& d, const std::string& ref) {
  if (d.kind == Kind::CoquasiHopf) return Host::of(d.as<CoquasiHopf>());
  if (d.kind == Kind::CoquasiBialgebra) return Host::of(d.as<CoquasiBialgebra>());
  throw io::SchemaError(ref, "expected a coquasi-hopf or coquasi-bialgebra document");
}

int run_heisenberg(const Options& o) {
  Host h = host_of(load(o, o.input, Kind::CoquasiHopf), o.input);
  CrossedProduct P = heisenberg_double(h);
  emit(o, io::to_json(P.algebra, "Heisenberg double"));
  return 0;
}

int run_circledast(const Options& o) {
  ComoduleAlgebra A = io::as_comodule(load(o, o.input, Kind::ComoduleAlgebra), o.input);
  CircledastAlgebra c = circledast_algebra(A);
  std::cerr << c.report.text() << c.system_report.text();
  emit(o, io::to_json(c.system, "circledast crossed system"));
  return c.report.ok() ? 0 : 1;
}

Twist load_twist(const Options& o, const CoquasiBialgebra& H) {
  Functional tau;
  if (o.tau == "builtin:cayley") {
    tau = catalog::cayley_twist();
  } else if (o.tau.rfind("builtin:clifford", 0) == 0) {
    int n = 0;
    while ((1 << n) < H.dim()) ++n;
    tau = catalog::clifford_twist(n);
  } else {
    std::ifstream in(o.tau);
    if (!in) throw io::SchemaError(o.tau, "cannot open file");
    json j = json::parse(in);
    io::Reader r(io::read_field_order(j, "", o.field), ".");
    tau = r.functional(io::Reader::field(j, "tau", ""), "/tau", 2, H.dim());
  }
  if (tau.base_dim != H.dim()) throw io::SchemaError(o.tau, "twist does not match the host dimension");
  return Twist::make(tau, H.coalgebra());
}

int run_twist(const Options& o) {
  io::Document d = load(o, o.input);
  switch (d.kind) {
    case Kind::CoquasiHopf: {
      const CoquasiHopf& H = d.as<CoquasiHopf>();
      emit(o, io::to_json(twist_bialgebra(H, load_twist(o, H.base())), "twisted"));
      return 0;
    }
    case Kind::CoquasiBialgebra: {
      const CoquasiBialgebra& H = d.as<CoquasiBialgebra>();
      emit(o, io::to_json(twist_bialgebra(H, load_twist(o, H)), "twisted"));
      return 0;
    }
    case Kind::ComoduleAlgebra: {
      const ComoduleAlgebra& A = d.as<ComoduleAlgebra>();
      emit(o, io::to_json(twist_comodule_algebra(A, load_twist(o, A.H())), "twisted"));
      return 0;
    }
    case Kind::CrossedSystem: {
      const CrossedSystem& cs = d.as<CrossedSystem>();
      emit(o, io::to_json(twist_crossed_system(cs, load_twist(o, cs.H())), "twisted"));
      return 0;
    }
    default: throw io::SchemaError(o.input, "cannot twist a " + io::to_string(d.kind));
  }
}

int run_deform(const Options& o) {
  CrossedSystem cs = io::as_crossed(load(o, o.input, Kind::CrossedSystem), o.input);
  std::ifstream in(o.witness);
  if (!in) throw io::SchemaError(o.witness, "cannot open file");
  json j = json::parse(in);
  io::Reader r(io::read_field_order(j, "", o.field), ".");
  Matrix a = r.matrix(io::Reader::field(j, "a", ""), "/a", cs.dR(), cs.dH());
  EquivalenceWitness w = EquivalenceWitness::make(a, cs);
  emit(o, io::to_json(deform_by_a(cs, w), "deformed"));
  return 0;
}

int run_cleft_to_crossed(const Options& o) {
  io::Document d = load(o, o.input, Kind::CleavingSystem);
  if (d.kind != Kind::CleavingSystem) throw io::SchemaError(o.input, "expected a cleaving-system document");
  CleftToCrossed c = cleft_to_crossed(d.as<CleavingSystem>());
  std::cerr << c.report.text();
  emit(o, io::to_json(c.system, "crossed system of a cleaving"));
  return c.report.ok() ? 0 : 1;
}

int run_crossed_to_cleft(const Options& o) {
  CrossedSystem cs = io::as_crossed(load(o, o.input, Kind::CrossedSystem), o.input);
  if (!cs.sigma_inv) {
    cs = sigma_inverse(cs);
    std::cerr << "note: sigma inverse computed by convolution inversion\n";
  }
  CleavingSystem c = crossed_to_cleft(build_crossed_product(cs));
  Report r = check_cleaving(c);
  if (!r.ok()) std::cerr << r.text();
  emit(o, io::to_json(c, "cleaving of a crossed product"));
  return r.ok() ? 0 : 1;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int run_morita(const Options& o) {
  io::Document d = load(o, o.input, Kind::CleavingSystem);
  ComoduleAlgebra A = io::as_comodule(d, o.input);
  MoritaContext m = build_morita(A);
  StrictnessResult s = morita_strictness(m);
  std::optional<Report> cl;
  if (d.kind == Kind::CleavingSystem) cl = check_cleaving_in_context(m, d.as<CleavingSystem>());
  bool strict = s.verdict == Strictness::Strict;
  if (o.json_out) {
    json j{{"dims", {{"A", A.dim()}, {"B", m.B.dim()}, {"H", A.H().dim()}, {"ring1", m.ring1.dim()},
                     {"ring2", m.ring2.dim()}, {"P", m.P.dim()}, {"Q", m.Q.dim()}}},
           {"context", io::report_json(m.report)},
           {"verdict", to_string(s.verdict)},
           {"bracket_rank", s.bracket_rank},
           {"pairing_rank", s.pairing_rank},
           {"witnesses", io::report_json(s.report)}};
    if (cl) j["cleaving"] = io::report_json(*cl);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim A = " << A.dim() << ", dim B = " << m.B.dim() << ", dim H = " << A.H().dim() << "\n";
    std::cout << "ring1 " << m.ring1.dim() << ", ring2 " << m.ring2.dim() << ", P " << m.P.dim() << ", Q " << m.Q.dim()
              << "\n";
    std::cout << "context axioms: " << (m.report.ok() ? "hold" : "FAIL") << " (" << m.report.checked << " checks)\n";
    if (!m.report.ok()) std::cout << m.report.text();
    std::cout << "bracket rank " << s.bracket_rank << "/" << m.ring1.dim() << ", pairing rank " << s.pairing_rank << "/"
              << m.ring2.dim() << "\n";
    std::cout << "verdict: " << to_string(s.verdict) << "\n";
    if (cl) {
      if (cl->ok())
        std::cout << "strict: " << yes_no(strict) << "; [δ,γ]=α·1; (γ,δ)=ε·1\n";
      else
        std::cout << "strict: " << yes_no(strict) << "; cleaving pair fails:\n" << cl->text();
    } else {
      std::cout << "strict: " << yes_no(strict) << "\n";
    }
    if (!s.report.ok()) std::cout << s.report.text();
  }
  bool ok = m.report.ok() && s.report.ok() && (!cl || cl->ok());
  return ok ? 0 : 1;
}

int run_can(const Options& o) {
  ComoduleAlgebra A = io::as_comodule(load(o, o.input, Kind::ComoduleAlgebra), o.input);
  GaloisResult g = galois_can(A);
  if (o.json_out) {
    std::cout << json{{"verdict", g.bijective ? "Bijective" : "NotBijective"}, {"detail", g.verdict},
                      {"identities", io::report_json(g.report)}}.dump(2)
              << "\n";
  } else {
    std::cout << (g.bijective ? "Bijective" : "NotBijective") << "\n";
    if (g.bijective) std::cout << g.report.text();
    else std::cout << g.verdict << "\n";
  }
  return g.report.ok() ? 0 : 1;
}

// cells as {H label: {B label: scalar}}
json table_json(const catalog::ProductTable& t, const Algebra& B, const CoquasiBialgebra& H, int n) {
  io::Writer w(n);
  json cells = json::array();
  for (const auto& row : t.cells) {
    json r = json::array();
    for (const Vec& v : row) {
      json c = json::object();
      for (int h = 0; h < H.dim(); ++h)
        for (int e = 0; e < B.dim(); ++e) {
          const Scalar& s = v[e * H.dim() + h];
          if (!s.is_zero()) c[H.label(h)][B.label(e)] = w.scalar(s);
        }
      r.push_back(c);
    }
    cells.push_back(r);
  }
  return json{{"names", t.names}, {"B_basis", B.space().labels()}, {"H_basis", H.space().labels()},
              {"cyclotomic_order", n}, {"cells", cells}};
}

int run_tables(const Options& o) {
  std::string ref = o.datum.empty() ? o.input : o.datum;
  if (ref.empty()) throw InputError("tables needs an input or --datum");
  io::Document d = load(o, ref, Kind::H3Datum);
  catalog::ProductTable t;
  Algebra B;
  CoquasiBialgebra H;
  int n = d.field_order;
  if (d.kind == Kind::H2Datum) {
    const auto& x = d.as<catalog::H2Datum>();
    t = catalog::h2_table(x);
    B = x.B;
    H = catalog::h2().base();
  } else if (d.kind == Kind::H3Datum) {
    const auto& x = d.as<catalog::H3Datum>();
    t = catalog::h3_table(x);
    B = x.B;
    H = catalog::h3(x.field_order).base();
    n = x.field_order;
  } else {
    CrossedSystem cs = io::as_crossed(d, ref);
    ComoduleAlgebra A = build_crossed_product(cs).algebra;
    std::vector<std::string> names;
    std::vector<Vec> elems;
    for (int r = 0; r < cs.dR(); ++r)
      for (int h = 0; h < cs.dH(); ++h) {
        names.push_back(cs.R.label(r) + "#" + cs.H().label(h));
        elems.push_back(unit_vec(A.dim(), r * cs.dH() + h));
      }
    t = catalog::product_table(A, names, elems);
    B = cs.R;
    H = cs.H();
  }
  if (o.json_out)
    std::cout << table_json(t, B, H, n).dump(2) << "\n";
  else
    std::cout << catalog::format_table(t, B, H, n);
  return 0;
}

int cmd_export(const Options& o) {
  emit(o, io::to_json(load(o, o.input)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coquasi_cli: coquasi-Hopf algebras, crossed products and cleft extensions"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto* check = app.add_subcommand("check", "check every identity of a document; exit 1 on failures");
  check->add_option("input", o.input, "path or builtin:NAME")->required();
  check->add_option("--kind", o.kind, "expected document kind");
  check->add_flag("--json", o.json_out, "machine-readable report");
  check->add_option("--field", o.field, "cyclotomic order for builtins");
  check->callback([&] { action = cmd_check; });

  auto* exp = app.add_subcommand("export", "write a document (e.g. a builtin) as JSON");
  exp->add_option("input", o.input, "path or builtin:NAME")->required();
  exp->add_option("--kind", o.kind, "document kind to export as");
  exp->add_option("-o,--output", o.output, "output path (default stdout)");
  exp->add_option("--field", o.field, "cyclotomic order for builtins");
  exp->callback([&] { action = cmd_export; });

  auto* build = app.add_subcommand("build", "construct derived structures");
  build->require_subcommand(1);
  std::map<std::string, std::pair<std::string, std::function<int(const Options&)>>> subs{
      {"crossed-product", {"R#σH of a crossed system", run_crossed_product}},
      {"heisenberg", {"the Heisenberg double H*#H of a host", run_heisenberg}},
      {"circledast", {"the crossed system on (Hom(H,A), ⊛)", run_circledast}},
      {"twist", {"twist a host, comodule algebra or crossed system (--tau)", run_twist}},
      {"deform", {"deform a crossed system by a witness (--witness)", run_deform}},
      {"cleft-to-crossed", {"the crossed system of a cleaving system", run_cleft_to_crossed}},
      {"crossed-to-cleft", {"the cleaving system of a crossed product", run_crossed_to_cleft}},
      {"morita", {"the Morita context, its strictness and witnesses", run_morita}},
      {"can", {"bijectivity of the Galois map", run_can}},
      {"tables", {"multiplication tables", run_tables}},
  };
  for (auto& [name, entry] : subs) {
    auto* s = build->add_subcommand(name, entry.first);
    auto* in = s->add_option("input", o.input, "path or builtin:NAME");
    if (name == "tables")
      s->add_option("--datum", o.datum, "an h2-datum or h3-datum document");
    else
      in->required();
    if (name == "twist") s->add_option("--tau", o.tau, "builtin:clifford, builtin:cayley or a JSON file with \"tau\"")->required();
    if (name == "deform") s->add_option("--witness", o.witness, "JSON file with the map \"a\"")->required();
    s->add_option("-o,--output", o.output, "output path (default stdout)");
    s->add_option("--field", o.field, "cyclotomic order for builtins");
    s->add_flag("--json", o.json_out, "machine-readable output");
    auto fn = entry.second;
    s->callback([&action, fn] { action = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return action(o);
  } catch (const io::SchemaError& e) {
    std::cerr << e.what() << "\n";
  } catch (const DivisionByZero& e) {
    std::cerr << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
  } catch (const UnknownName& e) {
    std::cerr << e.what() << "\n";
  } catch (const ArityMismatch& e) {
    std::cerr << "ArityMismatch: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    // construction errors: the input was read but the operation does not apply
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
