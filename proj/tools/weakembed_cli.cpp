#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weakembed/derivative.hpp"
#include "weakembed/errors.hpp"
#include "weakembed/io.hpp"

#ifndef WEAKEMBED_FIXTURE_DIR
#define WEAKEMBED_FIXTURE_DIR "fixtures"
#endif

namespace {

using we::json;

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw we::Error(we::Errc::InvalidInput, "cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

json load(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw we::Error(we::Errc::InvalidInput, e.what());
  }
}

int emit(const json& j, int code) {
  std::cout << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a map of a graph into an embedded graph is approximable by an embedding"};
  app.require_subcommand(1);

  std::string file, trace_out;
  double budget = 1e6;
  int steps = 1;

  auto* check = app.add_subcommand("check", "run the full decision pipeline");
  check->add_option("instance", file, "instance JSON, or - for stdin")->required();
  check->add_option("--trace", trace_out, "write the iteration trace to this file");
  auto* oracle = app.add_subcommand("oracle", "brute-force search over strand orders");
  oracle->add_option("instance", file)->required();
  oracle->add_option("--budget", budget, "largest allowed order space");
  auto* derive = app.add_subcommand("derive", "print simplified derivatives");
  derive->add_option("instance", file)->required();
  derive->add_option("--steps", steps, "number of derivatives");
  auto* z2 = app.add_subcommand("z2", "Z2 gate only");
  z2->add_option("instance", file)->required();
  auto* plmap = app.add_subcommand("plmap", "decide a piecewise-linear map");
  plmap->add_option("map", file)->required();
  plmap->add_option("--trace", trace_out);
  auto* cplanar = app.add_subcommand("cplanar", "decide c-planarity of a flat clustered graph (<= 3 clusters)");
  cplanar->add_option("clustered", file)->required();
  auto* fixtures = app.add_subcommand("fixtures", "list bundled fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0, usage errors share the bad-input code
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    auto run_check = [&](const we::Instance& I) {
      we::Trace t;
      we::Verdict v = we::decide(I, &t);
      if (!trace_out.empty()) std::ofstream(trace_out) << we::trace_to_json(t).dump(2) << "\n";
      return emit(we::verdict_to_json(v), v.approximable() ? 0 : 1);
    };
    if (*check) return run_check(we::instance_from_json(load(file)));
    if (*plmap) return run_check(we::reduce_pl_map(we::plmap_from_json(load(file))));
    if (*cplanar) return run_check(we::reduce_flat_clustered(we::clustered_from_json(load(file))));
    if (*z2) {
      we::Instance I = we::instance_from_json(load(file));
      we::validate_instance(I);
      auto r = we::z2_check(we::prune_host(I));
      return emit(we::z2_to_json(r), r.z2 ? 0 : 1);
    }
    if (*oracle) {
      auto r = we::brute_force_approximable(we::instance_from_json(load(file)), budget);
      return emit(we::oracle_to_json(r), r.approximable ? 0 : 1);
    }
    if (*derive) {
      we::Instance I = we::instance_from_json(load(file));
      we::validate_instance(I);
      I = we::prune_host(I);
      auto r = we::z2_check(I);
      if (!r.z2) return emit(we::z2_to_json(r), 1);
      json out = json::array();
      we::Instance cur = we::iteration_start(I);
      for (int i = 0; i <= steps; ++i) {
        if (i) cur = we::simplified_derivative(cur);
        out.push_back({{"iteration", i},
                       {"potential", we::potential(cur)},
                       {"instance", we::instance_to_json(cur)},
                       {"dot", we::to_dot(cur, "step" + std::to_string(i))}});
      }
      return emit({{"steps", out}}, 0);
    }
    if (*fixtures) {
      json list = json::array();
      std::vector<std::filesystem::path> files;
      for (const auto& f : std::filesystem::directory_iterator(WEAKEMBED_FIXTURE_DIR))
        if (f.path().extension() == ".json") files.push_back(f.path());
      std::sort(files.begin(), files.end());
      for (const auto& p : files) {
        json j = load(p.string());
        list.push_back({{"file", p.filename().string()},
                        {"name", j.value("name", p.stem().string())},
                        {"provenance", j.value("provenance", "")}});
      }
      return emit(list, 0);
    }
  } catch (const std::exception& e) {
    return emit(we::error_to_json(e), 2);
  }
  return 2;
}
