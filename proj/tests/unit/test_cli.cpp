// Copyright 2026 The pulsegate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pulsegate/attacks/gadgets.hpp"
#include "pulsegate/core/hash.hpp"
#include "pulsegate/core/serialize.hpp"
#include "pulsegate/lowering/lowering.hpp"

namespace pulsegate {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    static std::atomic<int> n{0};
    dir_ = fs::temp_directory_path() /
           ("pulsegate_cli_" + std::to_string(::getpid()) + "_" + std::to_string(n++));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const json& j) const {
    std::ofstream(path(name)) << j.dump(2);
    return path(name);
  }

  Outcome run(const std::string& args) const {
    const std::string cmd = std::string(PULSEGATE_CLI) + " " + args + " > " +
                            path("stdout").string() + " 2> " + path("stderr").string();
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(path("stdout"));
    r.err = slurp(path("stderr"));
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, CalibrateIsDeterministic) {
  const auto a = run("--seed 3 calibrate --qubits 2 --coupling 0-1,1-0");
  const auto b = run("--seed 3 calibrate --qubits 2 --coupling 0-1,1-0");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto calib = from_json<CalibrationSnapshot>(json::parse(a.out));
  EXPECT_EQ(calib.num_qubits(), 2);
  write("calib.json", json::parse(a.out));
  const auto zero = run("--calib " + path("calib.json").string() + " --seed 1 calibrate --drift 0");
  EXPECT_EQ(content_hash(from_json<CalibrationSnapshot>(json::parse(zero.out))), content_hash(calib));
  const auto later = run("--calib " + path("calib.json").string() + " --seed 1 calibrate --drift 72");
  ASSERT_EQ(later.code, 0) << later.err;
  EXPECT_NE(later.out, zero.out);
}

TEST_F(Cli, MultiQubitDeviceNeedsCoupling) {
  EXPECT_EQ(run("calibrate --qubits 3").code, 1);
}

TEST_F(Cli, StrictLoweringRefusesAPlunder) {
  const auto g = attack::build_flip_gadget(attack::AttackKind::plunder, true);
  const auto calib = write("calib.json", to_json(g.calib));
  const auto circ = write("circuit.json", to_json(g.circuit));
  const auto strict = run("--calib " + calib.string() + " lower " + circ.string());
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.err.find("binding-mismatch"), std::string::npos) << strict.err;
  const auto loose = run("--calib " + calib.string() + " lower " + circ.string() + " --mode permissive");
  ASSERT_EQ(loose.code, 0) << loose.err;
  const auto s = from_json<Schedule>(json::parse(loose.out));
  EXPECT_TRUE(s.channels().count(drive(1)));
}

TEST_F(Cli, PublishThenVerifyEachGadget) {
  const auto store = path("store").string();
  for (auto k : attack::kAllAttackKinds) {
    const auto armed = attack::build_flip_gadget(k, true);
    // The armed block gadget prepares |1> first, so restore rather than rebuild.
    const auto clean = attack::restore(armed.circuit, *armed.record);
    const auto calib = write("calib.json", to_json(armed.calib));
    const auto c0 = write("clean.json", to_json(clean));
    const auto c1 = write("armed.json", to_json(armed.circuit));
    const auto pub = run("--calib " + calib.string() + " publish " + c0.string() + " --store " + store);
    ASSERT_EQ(pub.code, 0) << pub.err;
    EXPECT_NE(pub.out.find(gate_level_hash(clean)), std::string::npos);
    const auto ok = run("--calib " + calib.string() + " verify " + c0.string() + " --store " + store);
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_NE(ok.out.find("verdict: pass"), std::string::npos);
    const auto bad = run("--json --calib " + calib.string() + " verify " + c1.string() + " --store " + store);
    EXPECT_EQ(bad.code, 2) << to_string(k);
    const auto j = json::parse(bad.out);
    EXPECT_EQ(j.at("verdict"), "fail");
    const bool channel = k == attack::AttackKind::plunder || k == attack::AttackKind::block;
    const bool reference = k == attack::AttackKind::reorder || k == attack::AttackKind::timing;
    EXPECT_EQ(j.at("failed_stage"), channel ? "channel" : reference ? "reference" : "syntax") << to_string(k);
  }
}

TEST_F(Cli, VerifyWithoutRecordFails) {
  const auto g = attack::build_flip_gadget(attack::AttackKind::phase, false);
  const auto calib = write("calib.json", to_json(g.calib));
  const auto c = write("c.json", to_json(g.circuit));
  EXPECT_EQ(run("--calib " + calib.string() + " verify " + c.string() + " --store " + path("none").string()).code, 2);
}

TEST_F(Cli, AttackWritesArtifactAndRecord) {
  const auto g = attack::build_flip_gadget(attack::AttackKind::phase, false);
  std::size_t entry = 0;
  for (std::size_t i = 0; i < g.gate.schedule.size(); ++i) {
    const auto* p = std::get_if<ShiftPhase>(&g.gate.schedule[i].instruction);
    if (p && p->delta == 0.0) entry = i;
  }
  const auto calib = write("calib.json", to_json(g.calib));
  const auto c = write("c.json", to_json(g.circuit));
  const auto spec = write("attack.json", {{"kind", "phase"},
                                          {"target", {{"op", g.gate_op}, {"entry", entry}}},
                                          {"parameters", {{"phase", 3.14159}}}});
  const auto r = run("--calib " + calib.string() + " attack " + spec.string() + " --circuit " + c.string() +
                     " --out " + path("t.json").string() + " --record " + path("rec.json").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = from_json<GateCircuit>(json::parse(slurp(path("t.json"))));
  const auto rec = attack::tamper_record_from_json(json::parse(slurp(path("rec.json"))));
  EXPECT_EQ(gate_level_hash(t), gate_level_hash(g.circuit));
  EXPECT_EQ(attack::restore(t, rec), g.circuit);
}

TEST_F(Cli, SimulateCircuit) {
  const auto g = attack::build_flip_gadget(attack::AttackKind::waveform, true);
  const auto calib = write("calib.json", to_json(g.calib));
  const auto c = write("c.json", to_json(g.circuit));
  const auto r = run("--seed 5 --calib " + calib.string() + " simulate --circuit " + c.string() +
                     " --mode permissive --shots 500");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("counts").at("01"), 500);
}

TEST_F(Cli, TimingSweepCsv) {
  const auto calib = attack::gadget_device();
  Schedule s;
  s.insert(0, Play{drive(0), calib.templates[0].sx});
  s.insert(160, Play{drive(0), calib.templates[0].sx.scaled(-1.0)});
  s.append(lower::lower_gate(make_measure(0, 0), calib), 320);
  const auto cal = write("calib.json", to_json(calib));
  const auto sp = write("s.json", to_json(s));
  const auto r = run("--seed 2 --calib " + cal.string() + " simulate --schedule " + sp.string() +
                     " --sweep-offset 1 --offset-min 0 --offset-max 15 --shots 200");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::vector<std::string> rows;
  bool header = false;
  for (std::string l; std::getline(in, l);) {
    if (l.empty() || l[0] == '#') continue;
    if (!header) {
      EXPECT_EQ(l, "offset,probability,exact,shots,stderr");
      header = true;
      continue;
    }
    rows.push_back(l);
  }
  EXPECT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows.front().rfind("0,", 0), 0u);
}

TEST_F(Cli, Demos) {
  const auto t = run("--seed 1 demo teleport --theta-grid 3 --shots 200");
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("theta,p1_bob,p1_eve,purity_bob,stderr,theory"), std::string::npos);
  const auto g = run("--json --seed 1 demo grover --marked 11 --attacked 00 --shots 200");
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_GE(json::parse(g.out).at("tampered").at("00").get<double>(), 0.95);
  const auto f = run("demo flip --out " + path("flip.json").string());
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json::parse(slurp(path("flip.json"))).at("gadgets").size(), 7u);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("lower " + path("missing.json").string()).code, 1);
  EXPECT_EQ(run("demo grover --marked 21").code, 1);
  std::ofstream(path("broken.json")) << "{\"num_qubits\": 1, \"ops\": [{\"gate\": \"warp\"}]}";
  const auto calib = write("calib.json", to_json(synthesize_snapshot(1, {}, 7)));
  const auto r = run("--calib " + calib.string() + " lower " + path("broken.json").string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("schema error"), std::string::npos) << r.err;
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
}  // namespace pulsegate
