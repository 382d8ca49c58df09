// Command-line front end. Machine output is JSON on stdout, diagnostics go
// to stderr. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gridknot/bounds.hpp"
#include "gridknot/census.hpp"
#include "gridknot/io.hpp"
#include "gridknot/realizer.hpp"
#include "gridknot/simplify.hpp"

using namespace gridknot;

namespace {

struct Global {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::uint64_t limit_states = 0;
  double limit_seconds = 0;
  bool pretty = false;

  Limits limits() const {
    Limits l = Limits::from_env();
    l.max_states = limit_states;
    l.max_seconds = limit_seconds;
    return l;
  }
};

// Flat objects become a two-column table; anything nested is indented JSON.
void emit(const Json& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump() << '\n';
    return;
  }
  bool flat = j.is_object();
  size_t width = 0;
  for (auto it = j.begin(); flat && it != j.end(); ++it) {
    flat = !it.value().is_structured();
    width = std::max(width, it.key().size());
  }
  if (!flat) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << it.key() << v << '\n';
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return read_file(path);
}

GridDiagram load_grid(const std::string& path) { return parse_grid(read_input(path)); }

// Inline JSON or the name of a file holding it.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text = first != std::string::npos && (arg[first] == '{' || arg[first] == '[')
                               ? arg
                               : read_input(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string frame_name(size_t i) {
  std::ostringstream os;
  os << "frame_" << std::setw(4) << std::setfill('0') << i << ".svg";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid diagrams of knots: Cromwell moves, simplification, census and Reidemeister bounds"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also follow the subcommand
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized inputs");
  app.add_option("--jobs", g.jobs, "Worker threads for the census")->check(CLI::PositiveNumber);
  app.add_option("--limit-states", g.limit_states, "Cap on states per simplification search (0 = none)");
  app.add_option("--limit-seconds", g.limit_seconds, "Cap on seconds per simplification search (0 = none)");
  app.add_flag("--pretty", g.pretty, "Human-readable output");

  std::string grid_path, move_arg, out_path, frames_dir, format = "ascii", input_path;

  auto* validate = app.add_subcommand("validate", "Check a grid file");
  validate->add_option("--grid", grid_path, "Grid file (text or JSON, - for stdin)")->required();

  auto* info = app.add_subcommand("info", "Size, crossings, components and total edge length");
  info->add_option("--grid", grid_path)->required();

  auto* moves = app.add_subcommand("moves", "List applicable moves, or apply one");
  moves->add_option("--grid", grid_path)->required();
  moves->add_option("--apply", move_arg, "Move JSON (inline or file) to apply");

  auto* simplify = app.add_subcommand("simplify", "Decide triviality by monotone simplification");
  int scramble_steps = 0;
  bool strict = false, no_exterior = false, all_merges = false, check_exterior = false, only_needs = false;
  auto* simplify_grid = simplify->add_option("--grid", grid_path);
  simplify->add_option("--scramble", scramble_steps, "Start from a random trivial diagram of this many steps")
      ->excludes(simplify_grid);
  simplify->add_flag("--strict", strict, "Merges and exchanges only, no rotations");
  simplify->add_flag("--no-exterior", no_exterior, "Forbid exterior exchanges");
  simplify->add_flag("--all-merges", all_merges, "Expand every merge instead of one");
  simplify->add_flag("--check-exterior", check_exterior, "Also report whether exterior exchanges are required");
  simplify->add_flag("--needs-exterior", only_needs, "Only report whether exterior exchanges are required");
  simplify->add_option("--witness-out", out_path, "Write the witness JSON here");

  auto* census = app.add_subcommand("census", "Enumerate grids up to symmetry");
  int census_n = 0;
  bool knots = false, stuck = false, trivial = false, only_ext_h = false, max = false;
  std::string checkpoint;
  std::uint64_t stop_after = 0;
  census->add_option("--n", census_n, "Grid size")->required();
  census->add_flag("--knots", knots, "Knots only");
  census->add_flag("--stuck", stuck, "No merge and no interior exchange");
  census->add_flag("--trivial", trivial, "Trivial knots only");
  census->add_flag("--only-exterior-horizontal", only_ext_h,
                   "Stuck, admitting the exterior horizontal exchange but not the vertical one");
  census->add_flag("--max-stats", max, "Report the maximum crossings and total length instead");
  census->add_option("--checkpoint", checkpoint, "Resume from and append to this file");
  census->add_option("--stop-after", stop_after, "Stop after this many accepted orbits");
  census->add_option("--out", out_path, "Write accepted grids here, one text record each");

  auto* bounds = app.add_subcommand("bounds", "Reidemeister move budgets of exterior moves");
  std::vector<std::string> formula;
  auto* formula_opt = bounds->add_option("--formula", formula, "N KIND: the closed-form budget")->expected(2);
  auto* bounds_grid = bounds->add_option("--grid", grid_path)->excludes(formula_opt);
  bounds->add_option("--move", move_arg, "Move JSON (inline or file)")->needs(bounds_grid);

  auto* realize_cmd = app.add_subcommand("realize", "Reidemeister sequence for one exterior move");
  realize_cmd->add_option("--grid", grid_path)->required();
  realize_cmd->add_option("--move", move_arg)->required();
  realize_cmd->add_option("--out", out_path, "Write the trace JSON here and print a summary");
  realize_cmd->add_option("--frames", frames_dir, "Write one SVG per move into this directory");

  auto* render_cmd = app.add_subcommand("render", "Draw a grid");
  render_cmd->add_option("--grid", grid_path)->required();
  render_cmd->add_option("--format", format, "ascii or svg");
  render_cmd->add_option("--out", out_path, "Write the drawing here");

  auto* replay_cmd = app.add_subcommand("replay", "Check a simplification witness or a realization trace");
  replay_cmd->add_option("file", input_path, "Witness or trace JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      try {
        const GridDiagram d = load_grid(grid_path);
        emit({{"valid", true}, {"n", d.size()}, {"components", component_count(d)}, {"knot", is_knot(d)}},
             g.pretty);
      } catch (const Error& e) {
        emit({{"valid", false}, {"error", to_string(e.code())}, {"message", e.what()}}, g.pretty);
        return 1;
      }
      return 0;
    }

    if (*info) {
      const GridDiagram d = load_grid(grid_path);
      emit({{"n", d.size()},
            {"crossings", crossing_count(d)},
            {"components", component_count(d)},
            {"total_length", length_stats(d).total_all}},
           g.pretty);
      return 0;
    }

    if (*moves) {
      const GridDiagram d = load_grid(grid_path);
      if (!move_arg.empty()) {
        emit(to_json(apply(d, move_from_json(load_json(move_arg)))), g.pretty);
      } else {
        emit(to_json(available_moves(d)), g.pretty);
      }
      return 0;
    }

    if (*simplify) {
      if (grid_path.empty() && scramble_steps == 0) throw CLI::RequiredError("--grid or --scramble");
      const GridDiagram d = grid_path.empty() ? scramble(g.seed, scramble_steps) : load_grid(grid_path);
      if (only_needs) {
        emit({{"needs_exterior", needs_exterior(d, g.limits())}}, g.pretty);
        return 0;
      }
      SearchOptions o;
      o.rotations = !strict;
      o.exterior_exchanges = !no_exterior;
      o.greedy_merges = !all_merges;
      o.check_exterior = check_exterior;
      const SearchReport r = is_trivial(d, g.limits(), o);
      Json j = to_json(r);
      if (scramble_steps > 0) j["start"] = to_json(d);
      if (!out_path.empty() && r.witness) write_file(out_path, to_json(*r.witness).dump(2) + "\n");
      emit(j, g.pretty);
      return 0;
    }

    if (*census) {
      CensusOptions o;
      o.jobs = g.jobs;
      o.limits = g.limits();
      o.checkpoint = checkpoint;
      o.stop_after = stop_after;
      if (max) {
        const MaxStats m = max_stats(census_n, g.jobs);
        emit({{"n", census_n},
              {"max_crossings", m.crossings},
              {"max_length", m.total_length},
              {"crossings_bound", max_crossings_bound(census_n)},
              {"length_bound", max_length_bound(census_n)}},
             g.pretty);
        return 0;
      }
      CensusFilter f;
      f.knots_only = knots;
      f.stuck_only = stuck;
      f.trivial_only = trivial;
      f.only_exterior_horizontal = only_ext_h;
      const CensusResult r = enumerate(census_n, f, {}, o);
      if (!out_path.empty()) {
        std::string text;
        for (const auto& d : r.representatives) text += to_text(d);
        write_file(out_path, text);
      }
      emit(to_json(r), g.pretty);
      return 0;
    }

    if (*bounds) {
      if (!formula.empty()) {
        int n = 0;
        try {
          n = std::stoi(formula[0]);
        } catch (const std::exception&) {
          throw CLI::ValidationError("--formula", "N must be an integer");
        }
        emit(theorem3_bound(n, parse_bound_kind(formula[1])), g.pretty);
        return 0;
      }
      if (grid_path.empty() || move_arg.empty()) throw CLI::RequiredError("--formula, or --grid with --move");
      const GridDiagram d = load_grid(grid_path);
      const CromwellMove m = move_from_json(load_json(move_arg));
      Json j = to_json(verify_theorem3(d, m));
      Json jumps = Json::array();
      for (const auto& spec : jump_decomposition(d, m)) jumps.push_back(to_json(spec));
      j["jump_specs"] = jumps;
      emit(j, g.pretty);
      return 0;
    }

    if (*realize_cmd) {
      const GridDiagram d = load_grid(grid_path);
      const CromwellMove m = move_from_json(load_json(move_arg));
      const RealizationTrace t = realize(d, m, !frames_dir.empty());
      if (!frames_dir.empty()) {
        std::filesystem::create_directories(frames_dir);
        for (size_t i = 0; i < t.frames.size(); ++i) {
          write_file((std::filesystem::path(frames_dir) / frame_name(i)).string(), render_svg(t.frames[i]));
        }
      }
      Json j = to_json(t);
      if (out_path.empty()) {
        emit(j, g.pretty);
        return 0;
      }
      write_file(out_path, j.dump(2) + "\n");
      int budget = 0;
      for (const auto& s : t.jumps) budget += s.sigma_simple();
      emit({{"termination", t.termination},
            {"moves", t.moves.size()},
            {"budget", budget},
            {"bound", theorem3_bound(d.size(), bound_kind(m))},
            {"final_gauss", t.final.gauss_code()}},
           g.pretty);
      return 0;
    }

    if (*render_cmd) {
      const GridDiagram d = load_grid(grid_path);
      const RenderFormat f = parse_render_format(format);
      const std::string drawing = render(d, f);
      if (!out_path.empty()) write_file(out_path, drawing);
      if (g.pretty) {
        std::cout << drawing;
      } else {
        emit({{"format", format}, {"grid", to_json(d)}, {"drawing", drawing}}, false);
      }
      return 0;
    }

    if (*replay_cmd) {
      const Json j = load_json(input_path);
      if (j.contains("initial")) {
        const RealizationTrace t = trace_from_json(j);
        const PlanarDiagram end = replay(t);
        const bool ok = end.code() == t.final.code();
        emit({{"kind", "trace"},
              {"moves", t.moves.size()},
              {"final_gauss", end.gauss_code()},
              {"matches", ok}},
             g.pretty);
        return ok ? 0 : 1;
      }
      const SimplificationWitness w = witness_from_json(j);
      const GridDiagram end = replay_witness(w);
      emit({{"kind", "witness"}, {"moves", w.moves.size()}, {"final", to_json(end)}, {"valid", true}}, g.pretty);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "IoError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 2;
}
