#include "chamberworks/facts.hpp"
#include "chamberworks/kernels.hpp"
#include "chamberworks/sweep.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace chamberworks;

namespace {

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    os << j.dump(2) << "\n";
  }
}

std::shared_ptr<ComplexLattice> build_or_die(const std::string& family,
                                             int rank) {
  try {
    return build_named_complex(family, rank);
  } catch (const std::exception& e) {
    std::cerr << "build failed: " << e.what() << "\n";
    std::exit(2);
  }
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  ordered_json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    std::cerr << "malformed JSON in " << path << ": " << e.what() << "\n";
    std::exit(2);
  }
  return j;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chamberworks: exact geometry of spherical Coxeter complexes"};
  app.require_subcommand(0, 1);

  bool print_schemas = false;
  app.add_flag("--json-schema", print_schemas,
               "print the JSON schemas of the file formats and exit");
  int threads = 0;
  app.add_option("--threads", threads,
                 "cap worker threads (also via CHAMBERWORKS_THREADS)");

  std::string family;
  int rank = 0;
  std::string out_path, in_path;

  auto add_complex_args = [&](CLI::App* cmd) {
    cmd->add_option("type", family,
                    "complex type: a, b, d (with rank), f4, e6, e7")
        ->required();
    cmd->add_option("rank", rank, "rank for the classical families");
    cmd->add_option("--out", out_path, "write JSON here instead of stdout");
  };

  auto* cmd_build = app.add_subcommand(
      "build", "build a complex and export its face lattice as JSON");
  add_complex_args(cmd_build);

  auto* cmd_facts =
      app.add_subcommand("facts", "run the fact catalogue for a complex");
  add_complex_args(cmd_facts);
  bool remark_circle = false;
  cmd_facts->add_flag("--remark-circle", remark_circle,
                      "run the feature-gated E7 singular-circle check "
                      "(tens of minutes, ~1 GB of memory)");

  auto* cmd_hull = app.add_subcommand(
      "hull", "simplicial convex hull of a subcomplex file");
  add_complex_args(cmd_hull);
  cmd_hull->add_option("--in", in_path, "subcomplex JSON file")->required();

  auto* cmd_verdict = app.add_subcommand(
      "verdict", "center-conjecture verdict for a subcomplex file");
  add_complex_args(cmd_verdict);
  cmd_verdict->add_option("--in", in_path, "subcomplex JSON file")->required();
  bool hull_first = false;
  cmd_verdict->add_flag("--hull-first", hull_first,
                        "close the input to its simplicial convex hull before "
                        "judging");

  auto* cmd_sweep = app.add_subcommand(
      "sweep", "hull-and-verdict sweep over seed subcomplexes");
  add_complex_args(cmd_sweep);
  SweepOptions sopt;
  cmd_sweep->add_option("--max-seed-faces", sopt.max_seed_faces,
                        "number of faces per seed (exhaustive mode: <= 2)");
  cmd_sweep->add_option("--samples", sopt.samples,
                        "sample this many seeds instead of exhausting");
  cmd_sweep->add_option("--seed", sopt.seed, "PRNG seed for sampled sweeps");
  bool no_orbit_reduction = false;
  cmd_sweep->add_flag("--no-orbit-reduction", no_orbit_reduction,
                      "exhaust raw seeds instead of orbit representatives");

  CLI11_PARSE(app, argc, argv);

  if (print_schemas) {
    std::cout << shipped_schemas().dump(2) << "\n";
    return 0;
  }
  if (threads > 0) kernels::set_threads(threads);
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 0;
  }

  try {
    if (cmd_build->parsed()) {
      auto cc = build_or_die(family, rank);
      emit(complex_to_json(*cc), out_path);
      return 0;
    }
    if (cmd_facts->parsed()) {
      FactReport r;
      try {
        r = run_facts(family, rank, remark_circle);
      } catch (const std::exception& e) {
        std::cerr << "facts failed to start: " << e.what() << "\n";
        return 2;
      }
      emit(facts_to_json(r), out_path);
      return r.all_pass ? 0 : 1;
    }
    if (cmd_hull->parsed()) {
      auto cc = build_or_die(family, rank);
      Subcomplex k;
      try {
        k = subcomplex_from_json(*cc, read_json_file(in_path));
      } catch (const std::exception& e) {
        std::cerr << "bad subcomplex file: " << e.what() << "\n";
        return 2;
      }
      Subcomplex hull = simplicial_convex_hull(*cc, k.faces);
      emit(subcomplex_to_json(*cc, hull), out_path);
      return 0;
    }
    if (cmd_verdict->parsed()) {
      auto cc = build_or_die(family, rank);
      Subcomplex k;
      try {
        k = subcomplex_from_json(*cc, read_json_file(in_path));
      } catch (const std::exception& e) {
        std::cerr << "bad subcomplex file: " << e.what() << "\n";
        return 2;
      }
      bool convex_by_construction = false;
      if (hull_first) {
        k = simplicial_convex_hull(*cc, k.faces);
        convex_by_construction = true;
      }
      VerdictResult v;
      try {
        v = verdict(*cc, k, convex_by_construction);
      } catch (const std::exception& e) {
        std::cerr << "verdict error: " << e.what() << "\n";
        return 2;
      }
      emit(verdict_to_json(*cc, v), out_path);
      return v.kind == VerdictKind::Counterexample ? 1 : 0;
    }
    if (cmd_sweep->parsed()) {
      auto cc = build_or_die(family, rank);
      sopt.orbit_reduction = !no_orbit_reduction;
      SweepSummary s;
      try {
        s = sweep(*cc, sopt);
      } catch (const std::exception& e) {
        std::cerr << "sweep error: " << e.what() << "\n";
        return 2;
      }
      emit(sweep_to_json(*cc, sopt, s), out_path);
      return s.counterexample == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
