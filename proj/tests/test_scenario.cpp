#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "phasedyn/error.hpp"
#include "phasedyn/scenario.hpp"
#include "phasedyn/serialize.hpp"
#include "phasedyn/suite.hpp"
#include "phasedyn/sweep.hpp"
#include "support.hpp"

using namespace phasedyn;
using namespace phasedyn::testing;

namespace {

Scenario spin_scenario(Family f, int twice) {
  Scenario sc;
  sc.family = f;
  sc.j = Spin::from_twice(twice);
  return sc;
}

std::string usage_error(const Scenario& sc) {
  try {
    sc.validate();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

std::set<std::string> categories(const CheckReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks()) out.insert(c.name.substr(0, c.name.find('/')));
  return out;
}

} // namespace

TEST(Family, NamesRoundTrip) {
  for (const char* n : {"su2", "suq2", "witten", "ab_map", "f_deform", "hermitian_f", "oscillator",
                        "q_oscillator", "jordan_schwinger"}) {
    EXPECT_EQ(family_name(parse_family(n)), n);
  }
  EXPECT_THROW(parse_family("su3"), Error);
  EXPECT_TRUE(is_spin_family(Family::witten));
  EXPECT_FALSE(is_spin_family(Family::q_oscillator));
}

TEST(ScenarioValidate, FamilyRequirements) {
  Scenario sc;
  sc.family = Family::su2;
  EXPECT_EQ(usage_error(sc), "usage");
  sc = spin_scenario(Family::suq2, 2);
  EXPECT_EQ(usage_error(sc), "usage");
  sc.q = 1.3;
  EXPECT_EQ(usage_error(sc), "");
  sc = spin_scenario(Family::witten, 2);
  sc.r = 1.0;
  EXPECT_EQ(usage_error(sc), "usage");
  sc = spin_scenario(Family::oscillator, 2);
  EXPECT_EQ(usage_error(sc), "usage");
  sc.j.reset();
  sc.s = 3;
  EXPECT_EQ(usage_error(sc), "");
  sc.s = 0;
  EXPECT_EQ(usage_error(sc), "usage");
}

TEST(ScenarioJson, RoundTripMirrorsFlags) {
  Scenario sc = spin_scenario(Family::hermitian_f, 3);
  sc.q_phase = 7;
  sc.theta0 = 0.25;
  sc.muB = 2.0;
  const auto j = sc.to_json();
  EXPECT_EQ(j["family"], "hermitian_f");
  EXPECT_EQ(j["j"], "3/2");
  EXPECT_EQ(j["q-phase"], 7);
  const auto back = Scenario::from_json(Json::parse(dump_json(j)));
  EXPECT_EQ(dump_json(back.to_json()), dump_json(j));
}

TEST(ScenarioJson, UnknownKeyIsUsageError) {
  try {
    Scenario::from_json(Json::parse(R"({"family": "su2", "j": "1", "bogus": 1})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "usage");
  }
}

TEST(Scenario, SetParam) {
  Scenario sc;
  sc.set_param("j", 1.5);
  EXPECT_EQ(sc.j->twice(), 3);
  sc.set_param("q", 2.0);
  EXPECT_EQ(*sc.q, 2.0);
  EXPECT_THROW(sc.set_param("j", 0.3), Error);
  EXPECT_THROW(sc.set_param("nope", 1.0), Error);
}

TEST(Scenario, MuBDefaults) {
  Scenario sc;
  sc.family = Family::jordan_schwinger;
  sc.omega1 = 0.5;
  sc.omega2 = 2.0;
  EXPECT_DOUBLE_EQ(sc.effective_muB(), 1.5);
  sc.family = Family::su2;
  EXPECT_DOUBLE_EQ(sc.effective_muB(), 1.0);
  sc.muB = 3.0;
  EXPECT_DOUBLE_EQ(sc.effective_muB(), 3.0);
}

TEST(Scenario, ToleranceFromEnvironment) {
  Scenario sc;
  ::setenv("PHASEDYN_TOL", "1e-9", 1);
  EXPECT_DOUBLE_EQ(sc.tolerance().abs_tol, 1e-9);
  sc.tol = 1e-6;
  EXPECT_DOUBLE_EQ(sc.tolerance().abs_tol, 1e-6);
  ::unsetenv("PHASEDYN_TOL");
  sc.tol.reset();
  EXPECT_DOUBLE_EQ(sc.tolerance().abs_tol, 1e-12);
}

TEST(Verify, EverySpinFamilyPasses) {
  for (const int twice : {1, 2, 3, 5}) {
    std::vector<Scenario> all;
    all.push_back(spin_scenario(Family::su2, twice));
    auto q = spin_scenario(Family::suq2, twice);
    q.q = 1.3;
    all.push_back(q);
    auto w = spin_scenario(Family::witten, twice);
    w.r = 0.8;
    all.push_back(w);
    auto ab = spin_scenario(Family::ab_map, twice);
    ab.q = 1.5;
    all.push_back(ab);
    ab.split = "symmetric";
    all.push_back(ab);
    all.push_back(spin_scenario(Family::f_deform, twice));
    auto hf = spin_scenario(Family::hermitian_f, twice);
    hf.f = "qbracket";
    hf.q = 0.7;
    all.push_back(hf);
    for (const auto& sc : all) {
      const auto r = run_verify(sc);
      EXPECT_TRUE(r.all_pass()) << family_name(sc.family) << " j=" << sc.j->str();
      const std::set<std::string> want{"algebra", "casimir", "phase", "dynamics", "derivation", "control"};
      EXPECT_EQ(categories(r), want) << family_name(sc.family);
    }
  }
}

TEST(Verify, OscillatorFamiliesPass) {
  Scenario sc;
  for (const auto f : {Family::oscillator, Family::q_oscillator, Family::jordan_schwinger}) {
    sc.family = f;
    sc.s = 3;
    EXPECT_TRUE(run_verify(sc).all_pass()) << family_name(f);
  }
}

TEST(Verify, ConstructionFailureIsAFailedCheck) {
  auto sc = spin_scenario(Family::hermitian_f, 3);
  sc.q_phase = 5;
  const auto r = run_verify(sc);
  EXPECT_FALSE(r.all_pass());
  const auto* c = r.find("algebra/construction");
  ASSERT_NE(c, nullptr);
  EXPECT_NE(c->detail.find("negative norm"), std::string::npos);
}

TEST(Verify, DocumentIsDeterministic) {
  auto sc = spin_scenario(Family::suq2, 5);
  sc.q = 1.3;
  const auto a = dump_json(verify_document(sc, run_verify(sc)));
  const auto b = dump_json(verify_document(sc, run_verify(sc)));
  EXPECT_EQ(a, b);
  const auto doc = Json::parse(a);
  EXPECT_EQ(doc["version"], kVersion);
  EXPECT_EQ(doc["scenario"]["family"], "suq2");
  EXPECT_TRUE(doc["all_pass"].get<bool>());
}

TEST(BuildModel, DocumentsPerFamily) {
  auto w = spin_scenario(Family::witten, 2);
  w.r = 1.2;
  const auto doc = build_model(w).document;
  EXPECT_EQ(doc["triple"]["provenance"]["map"], "witten");
  Scenario qo;
  qo.family = Family::q_oscillator;
  qo.s = 3;
  const auto qdoc = build_model(qo).document;
  EXPECT_EQ(qdoc["metadata"]["radicands"].size(), 4u);
  EXPECT_TRUE(qdoc["metadata"]["positive_norm"].get<bool>());
}

TEST(SweepAxis, Parse) {
  const auto ax = SweepAxis::parse("q:1.0001:3:20");
  EXPECT_EQ(ax.param, "q");
  EXPECT_EQ(ax.count, 20);
  EXPECT_EQ(ax.values().front(), 1.0001);
  EXPECT_EQ(ax.values().back(), 3.0);
  for (const char* bad : {"q:1:2", "q:1:2:1", "q:a:2:3", ":1:2:3"}) EXPECT_THROW(SweepAxis::parse(bad), Error);
}

TEST(Sweep, OrderIndependentOfJobs) {
  SweepSpec spec;
  spec.base = spin_scenario(Family::suq2, 2);
  spec.axes.push_back(SweepAxis::parse("q:1.0001:3:20"));
  std::ostringstream one;
  std::ostringstream four;
  EXPECT_TRUE(run_sweep(spec, one));
  spec.jobs = 4;
  EXPECT_TRUE(run_sweep(spec, four));
  const std::string csv = one.str();
  EXPECT_EQ(csv, four.str());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
}

TEST(Sweep, InvalidPointsListedNotCounted) {
  SweepSpec spec;
  spec.base = spin_scenario(Family::witten, 2);
  spec.axes.push_back(SweepAxis::parse("r:0.5:1.5:3"));
  std::ostringstream csv;
  EXPECT_TRUE(run_sweep(spec, csv));
  EXPECT_NE(csv.str().find("\n1,invalid,"), std::string::npos);
}

TEST(Sweep, TwoAxes) {
  SweepSpec spec;
  spec.base = spin_scenario(Family::suq2, 1);
  spec.axes.push_back(SweepAxis::parse("q:0.5:2:3"));
  spec.axes.push_back(SweepAxis::parse("j:0.5:2.5:5"));
  std::ostringstream os;
  EXPECT_TRUE(run_sweep(spec, os));
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "q,j,status,algebra,casimir,phase,dynamics,derivation,control,all_pass");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 16);
}
