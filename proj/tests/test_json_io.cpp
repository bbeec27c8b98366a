#include "coquasi/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace coquasi;
using io::json;

namespace {

CrossedSystem h2_sys() { return sigma_inverse(catalog::h2_system(catalog::h2_fixture())); }
CrossedSystem h3_sys() { return sigma_inverse(catalog::h3_system(catalog::h3_fixture())); }

template <class T>
T round_trip(const T& x) {
  json j = io::to_json(x);
  // through text, as a file would
  json back = json::parse(j.dump());
  io::Document d = io::parse_document(back);
  return d.as<T>();
}

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / ("coquasi_io_" + std::to_string(::getpid()));
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST(JsonIo, HostsRoundTrip) {
  for (const char* name : {"H2", "H3", "C2", "C3", "C5", "group_C2^3"}) {
    CoquasiHopf H = catalog::builtin_hopf(name);
    CoquasiHopf back = round_trip(H);
    EXPECT_EQ(back, H) << name;
    ASSERT_EQ(back.twist_f().has_value(), H.twist_f().has_value());
    if (H.twist_f()) {
      EXPECT_EQ(back.twist_f()->f, H.twist_f()->f);
    }
    EXPECT_EQ(round_trip(H.base()), H.base()) << name;
  }
  CoquasiHopf h6 = catalog::h3(6);
  EXPECT_EQ(io::to_json(h6)["field"]["cyclotomic_order"].get<int>() % 3, 0);
  EXPECT_EQ(round_trip(h6), h6);
}

TEST(JsonIo, StructuresRoundTrip) {
  for (const auto& cs : {h2_sys(), h3_sys()}) {
    CrossedSystem b = round_trip(cs);
    EXPECT_EQ(b, cs);
    ASSERT_TRUE(b.sigma_inv.has_value());
    EXPECT_EQ(*b.sigma_inv, *cs.sigma_inv);

    CrossedProduct P = build_crossed_product(cs);
    EXPECT_EQ(round_trip(P.algebra), P.algebra);
    EXPECT_EQ(round_trip(P.algebra).H(), P.algebra.H());

    CleavingSystem c = crossed_to_cleft(P);
    CleavingSystem cb = round_trip(c);
    EXPECT_EQ(cb.A, c.A);
    EXPECT_EQ(cb.gamma, c.gamma);
    EXPECT_EQ(cb.delta, c.delta);

    CoquasiHopfModule M = free_hopf_module(free_r_module(cs.R, 2), cs);
    CoquasiHopfModule Mb = round_trip(M);
    EXPECT_EQ(Mb.r_action, M.r_action);
    EXPECT_EQ(Mb.coaction, M.coaction);
    EXPECT_EQ(Mb.h_action, M.h_action);
    EXPECT_EQ(Mb.system, M.system);
  }
  ComoduleAlgebra O = catalog::builtin_comodule_algebra("group_C2^3_cayley");
  ComoduleAlgebra Ob = round_trip(O);
  EXPECT_EQ(Ob, O);
  EXPECT_EQ(Ob.H(), O.H());
}

TEST(JsonIo, DataRoundTrip) {
  catalog::H2Datum d2 = catalog::h2_fixture();
  catalog::H2Datum b2 = round_trip(d2);
  EXPECT_EQ(b2.F, d2.F);
  EXPECT_EQ(b2.c, d2.c);
  EXPECT_EQ(b2.B.mult(), d2.B.mult());
  catalog::H3Datum d3 = catalog::h3_fixture();
  catalog::H3Datum b3 = round_trip(d3);
  EXPECT_EQ(b3.F, d3.F);
  EXPECT_EQ(b3.G, d3.G);
  EXPECT_EQ(b3.u1, d3.u1);
  EXPECT_EQ(b3.u2, d3.u2);
  EXPECT_EQ(b3.v1, d3.v1);
  EXPECT_EQ(b3.v2, d3.v2);
  EXPECT_EQ(b3.field_order, 3);
}

TEST(JsonIo, WriterIsDeterministic) {
  json a = io::to_json(h3_sys()), b = io::to_json(h3_sys());
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(JsonIo, ScalarForms) {
  io::Reader r(3, ".");
  EXPECT_EQ(r.scalar("1/2 + z", ""), Scalar::rational(1, 2) + Scalar::primitive_root(3));
  EXPECT_EQ(r.scalar(json::array({"1/2", "1"}), ""), Scalar::rational(1, 2) + Scalar::primitive_root(3));
  EXPECT_EQ(r.scalar("z^3", ""), Scalar(1));
  EXPECT_THROW(r.scalar("1/0", ""), DivisionByZero);
  EXPECT_THROW(r.scalar("1/x", ""), ParseError);
  EXPECT_THROW(r.scalar(3, ""), io::SchemaError);
}

TEST(JsonIo, Matrices) {
  io::Reader r(1, ".");
  json dense = json::array({json::array({"1", "0"}), json::array({"0", "-2"})});
  json sparse = {{"rows", 2}, {"cols", 2}, {"entries", json::array({json::array({0, 0, "1"}), json::array({1, 1, "-2"})})}};
  EXPECT_EQ(r.matrix(dense, "", 2, 2), r.matrix(sparse, "", 2, 2));
  EXPECT_THROW(r.matrix(dense, "", 3, 2), io::SchemaError);
  json ragged = json::array({json::array({"1", "0"}), json::array({"0"})});
  EXPECT_THROW(r.matrix(ragged, "", -1, -1), io::SchemaError);
  json oob = {{"rows", 2}, {"cols", 2}, {"entries", json::array({json::array({2, 0, "1"})})}};
  EXPECT_THROW(r.matrix(oob, "", 2, 2), io::SchemaError);
}

TEST(JsonIo, SchemaErrors) {
  json j = io::to_json(h2_sys());
  json bad = j;
  bad.erase("sigma");
  EXPECT_THROW(io::parse_document(bad), io::SchemaError);
  bad = j;
  bad["kind"] = "crossed-thing";
  EXPECT_THROW(io::parse_document(bad), io::SchemaError);
  bad = j;
  bad["format"] = "coquasi-doc/0";
  EXPECT_THROW(io::parse_document(bad), io::SchemaError);
  bad = j;
  bad["host"] = "builtin:H7";
  EXPECT_THROW(io::parse_document(bad), UnknownName);
  bad = j;
  bad["R"]["unit"][0] = "1/0";
  EXPECT_THROW(io::parse_document(bad), DivisionByZero);
  json h3 = io::to_json(catalog::h3_fixture());
  h3["field"]["cyclotomic_order"] = 4;
  EXPECT_THROW(io::parse_document(h3), std::exception);
}

TEST(JsonIo, References) {
  auto dir = scratch_dir();
  json host = io::to_json(catalog::h2());
  io::save_document(host, dir / "h2.json");
  json cs = io::to_json(h2_sys());
  cs["host"] = "h2.json";
  io::save_document(cs, dir / "cs.json");
  io::Document d = io::load_document(dir / "cs.json");
  EXPECT_EQ(d.kind, io::Kind::CrossedSystem);
  EXPECT_EQ(d.as<CrossedSystem>(), h2_sys());
  cs["host"] = "builtin:H2";
  EXPECT_EQ(io::parse_document(cs).as<CrossedSystem>(), h2_sys());

  // a cleaving system whose algebra is a crossed-system file
  json cl = io::to_json(crossed_to_cleft(build_crossed_product(h2_sys())));
  cl["algebra"] = "cs.json";
  io::save_document(cl, dir / "cl.json");
  io::Document c = io::load_document(dir / "cl.json");
  EXPECT_TRUE(check_cleaving(c.as<CleavingSystem>()).ok());

  EXPECT_THROW(io::load_document(dir / "missing.json"), io::SchemaError);
  std::ofstream(dir / "broken.json") << "{\"format\": ";
  EXPECT_THROW(io::load_document(dir / "broken.json"), io::SchemaError);
  std::filesystem::remove_all(dir);
}

TEST(JsonIo, Builtins) {
  EXPECT_EQ(io::load_ref("builtin:H3").kind, io::Kind::CoquasiHopf);
  EXPECT_EQ(io::load_ref("builtin:h2_fixture").as<CrossedSystem>(), h2_sys());
  EXPECT_EQ(io::load_ref("builtin:h3_fixture", 1, io::Kind::H3Datum).kind, io::Kind::H3Datum);
  EXPECT_EQ(io::load_ref("builtin:h2_cleft").kind, io::Kind::CleavingSystem);
  EXPECT_EQ(io::load_ref("builtin:H3", 6).field_order, 6);
  EXPECT_THROW(io::load_ref("builtin:nothing"), UnknownName);
}

TEST(JsonIo, ReportJsonHasSortedKeys) {
  Report r;
  r.subject = "x";
  r.fail("some identity", {"a", "b"}, "d");
  std::string s = io::report_json(r).dump();
  EXPECT_LT(s.find("\"checked\""), s.find("\"failures\""));
  EXPECT_LT(s.find("\"failures\""), s.find("\"subject\""));
}
