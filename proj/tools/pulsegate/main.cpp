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

#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "io.hpp"
#include "pulsegate/demo/demo.hpp"

namespace cli = pulsegate::cli;

int main(int argc, char** argv) {
  CLI::App app{"pulsegate: pulse-level tamper injection and verification"};
  app.set_version_flag("--version", pulsegate::demo::version());
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalArgs g;
  app.add_option("--calib", g.calib, "calibration snapshot JSON");
  app.add_option("--seed", g.seed, "seed for every stochastic component");
  app.add_flag("--json", g.json, "machine-readable output");

  std::function<int()> run;

  cli::CalibrateArgs cal;
  auto* c = app.add_subcommand("calibrate", "synthesize or drift a calibration snapshot");
  c->add_option("--qubits", cal.qubits, "number of qubits")->check(CLI::PositiveNumber);
  c->add_option("--coupling", cal.coupling, "directed couplings, e.g. 0-1,1-0");
  c->add_option("--drift", cal.drift_hours, "advance by HOURS of drift")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--out", cal.out, "output file (stdout if omitted)");
  c->callback([&] { run = [&] { return cli::cmd_calibrate(g, cal); }; });

  cli::LowerArgs low;
  auto* l = app.add_subcommand("lower", "lower a gate circuit to a pulse schedule");
  l->add_option("circuit", low.circuit, "circuit JSON")->required();
  l->add_option("--mode", low.mode, "strict or permissive")
      ->check(CLI::IsMember({"strict", "permissive"}));
  l->add_option("--out", low.out, "schedule output file");
  l->callback([&] { run = [&] { return cli::cmd_lower(g, low); }; });

  cli::SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "simulate a circuit or schedule");
  s->add_option("--circuit", sim.circuit, "circuit JSON (lowered first)");
  s->add_option("--schedule", sim.schedule, "schedule JSON");
  s->add_option("--mode", sim.mode, "lowering mode for --circuit")
      ->check(CLI::IsMember({"strict", "permissive"}));
  s->add_option("--shots", sim.shots, "shots");
  s->add_flag("--noise", sim.noise, "T1/T2 decay during delays and idle gaps");
  s->add_option("--sweep-offset", sim.sweep_entry,
                "sweep the start offset of schedule entry ENTRY and write CSV");
  s->add_option("--offset-min", sim.sweep_min, "first offset of the sweep");
  s->add_option("--offset-max", sim.sweep_max, "last offset of the sweep");
  s->add_option("--bit", sim.bit, "classical bit reported by the sweep")
      ->check(CLI::NonNegativeNumber);
  s->add_option("--out", sim.out, "output file");
  s->callback([&] { run = [&] { return cli::cmd_simulate(g, sim); }; });

  cli::AttackArgs att;
  auto* a = app.add_subcommand("attack", "apply attack.json to a circuit or schedule");
  a->add_option("attack", att.attack, "attack spec JSON")->required();
  a->add_option("--circuit", att.circuit, "circuit JSON");
  a->add_option("--schedule", att.schedule, "schedule JSON");
  a->add_option("--out", att.out, "tampered artifact output");
  a->add_option("--record", att.record_out, "tamper record output");
  a->callback([&] { run = [&] { return cli::cmd_attack(g, att); }; });

  cli::PublishArgs pub;
  auto* p = app.add_subcommand("publish", "store a trusted record");
  p->add_option("circuit", pub.circuit, "circuit JSON")->required();
  p->add_option("--schedule", pub.schedule, "schedule JSON (strict lowering if omitted)");
  p->add_option("--store", pub.store, "trusted store directory")->required();
  p->callback([&] { run = [&] { return cli::cmd_publish(g, pub); }; });

  cli::VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run the verification pipeline (exit 2 on fail)");
  v->add_option("circuit", ver.circuit, "circuit JSON")->required();
  v->add_option("--store", ver.store, "trusted store directory")->required();
  v->add_option("--tolerances", ver.tolerances, "tolerances JSON");
  v->add_option("--out", ver.out, "report output");
  v->callback([&] { run = [&] { return cli::cmd_verify(g, ver); }; });

  auto* d = app.add_subcommand("demo", "demo scenarios");
  d->require_subcommand(1);

  cli::TeleportArgs tel;
  auto* dt = d->add_subcommand("teleport", "teleportation sweep");
  dt->add_option("--variant", tel.variant, "benchmark, coupling_eve, decoupling or del_h")
      ->check(CLI::IsMember({"benchmark", "coupling_eve", "decoupling", "del_h"}));
  dt->add_option("--theta-grid", tel.theta_grid, "points over [0, pi]");
  dt->add_option("--shots", tel.shots, "shots per point");
  dt->add_flag("--noise", tel.noise, "enable decoherence");
  dt->add_option("--out", tel.out, "CSV output");
  dt->callback([&] { run = [&] { return cli::cmd_demo_teleport(g, tel); }; });

  cli::GroverArgs gro;
  auto* dg = d->add_subcommand("grover", "two-qubit Grover with a phase attack");
  const auto basis = CLI::IsMember({"00", "01", "10", "11"});
  dg->add_option("--marked", gro.marked, "marked state")->check(basis);
  dg->add_option("--attacked", gro.attacked, "attacker state")->check(basis);
  dg->add_option("--shots", gro.shots, "shots");
  dg->add_option("--out", gro.out, "CSV output");
  dg->callback([&] { run = [&] { return cli::cmd_demo_grover(g, gro); }; });

  cli::FlipArgs flip;
  auto* df = d->add_subcommand("flip", "qubit-flip gadget matrix");
  df->add_option("--out", flip.out, "JSON output");
  df->callback([&] { run = [&] { return cli::cmd_demo_flip(g, flip); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    return run ? run() : cli::kUsage;
  } catch (const pulsegate::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const pulsegate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return cli::kUsage;
}
