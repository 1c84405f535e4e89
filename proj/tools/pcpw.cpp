#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pcpw/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for finite partial crossed products"};
  app.require_subcommand(1);

  std::string file, json_out, ideal, ideal2;
  int point = 0, point2 = -1;
  std::uint64_t cap = pcpw::kDefaultEnumCap, seed = 0;
  bool timings = false, serial = false;
  int samples = 25;

  const std::vector<std::string> commands = {
      "validate", "info",      "orbits",  "induce",   "admissible",
      "decompose", "transpose", "compare", "check-all"};
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c);
    sub->add_option("file", file, "scenario JSON file")->required();
    sub->add_option("--point", point, "base point x0");
    sub->add_option("--point2", point2, "second point x1");
    sub->add_option("--ideal", ideal, "declared ideal name");
    sub->add_option("--ideal2", ideal2, "second declared ideal name");
    sub->add_option("--cap", cap, "enumeration cap (default 2^20)");
    sub->add_option("--seed", seed, "seed for sampled checks");
    sub->add_option("--samples", samples, "sampled ideals in check-all");
    sub->add_flag("--timings", timings,
                  "include wall-clock times in the JSON report (breaks "
                  "byte-for-byte determinism)");
    sub->add_flag("--serial", serial, "disable the parallel kernels");
    sub->add_option("--json", json_out, "write the JSON report to this file");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  std::string cmd;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) cmd = commands[i];

  pcpw::default_exec() = serial ? pcpw::Exec::serial : pcpw::Exec::parallel;

  try {
    pcpw::Scenario scenario = pcpw::parse_scenario(file);
    pcpw::RunOptions opt;
    opt.point = point;
    opt.point2 = point2;
    opt.ideal = ideal;
    opt.ideal2 = ideal2;
    opt.cap = cap;
    opt.seed = seed;
    opt.timings = timings;
    opt.samples = samples;
    if (opt.point < 0 || opt.point >= static_cast<int>(scenario.action.space))
      throw pcpw::scenario_error("--point out of range");
    if (opt.point2 >= static_cast<int>(scenario.action.space))
      throw pcpw::scenario_error("--point2 out of range");

    pcpw::Report rep = pcpw::run_command(scenario, cmd, opt);
    std::cout << pcpw::report_to_text(rep);
    if (!json_out.empty()) {
      std::ofstream out(json_out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << json_out << "\n";
        return 2;
      }
      out << pcpw::report_to_json(rep, timings);
    }
    return rep.all_ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
