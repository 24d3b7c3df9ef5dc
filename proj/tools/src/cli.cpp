#include "lombardi_cli/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lombardi/circular_layout.hpp"
#include "lombardi/decompose.hpp"
#include "lombardi/degenerate_layout.hpp"
#include "lombardi/document.hpp"
#include "lombardi/error.hpp"
#include "lombardi/halin_layout.hpp"
#include "lombardi/spirograph.hpp"
#include "lombardi/svg.hpp"
#include "lombardi/verify.hpp"

namespace lombardi::cli {

namespace {

struct Settings {
  double tolerance = 1e-9;
  std::int64_t budget = kDefaultSearchBudget;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  int mode = 0;
  double clearance = kDefaultClearance;
  RenderOptions render;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

void report_failure(std::ostream& err, std::string_view reason, const std::string& message) {
  nlohmann::json j;
  j["error"] = reason;
  j["message"] = message;
  err << j.dump() << '\n';
}

Drawing run_circular(const Settings& s) {
  const RotationGraph g = load_graph(read_text_file(s.input));
  const DecompositionPlan plan = circular_plan(g, s.budget);
  CircularOptions opts;
  opts.seed = s.seed;
  return draw_circular(g, plan, opts);
}

Drawing run_degenerate(const Settings& s) {
  const RotationGraph g = load_graph(read_text_file(s.input));
  DegenerateOptions opts;
  opts.seed = s.seed;
  const int mode = s.mode != 0 ? s.mode : (degeneracy_order(g).degeneracy <= 2 ? 2 : 3);
  return mode == 2 ? draw_2degenerate(g, opts) : draw_3degenerate(g, opts);
}

Drawing run_halin(const Settings& s) {
  const GraphDocument doc = parse_graph_document(read_text_file(s.input));
  const HalinGraph h = doc.tree_edges ? halin_from_graph(doc.graph, *doc.tree_edges, doc.root)
                                      : halin_from_tree(doc.graph, doc.root);
  return draw_halin(h).drawing;
}

Drawing run_spiro(const Settings& s) {
  return draw_spirograph(parse_spiro_spec(read_text_file(s.input))).drawing;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Lombardi drawings: circular-arc edges with perfect angular resolution", "lombardi"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--tolerance", s.tolerance, "Angular tolerance for verification (radians)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", s.budget, "Node budget for cycle searches")->check(CLI::PositiveNumber);

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", s.input, what)->required();
    sub->fallthrough();
  };
  auto layout = [&](const char* name, const char* help, const char* what) {
    CLI::App* sub = app.add_subcommand(name, help);
    input(sub, what);
    sub->add_option("-o,--output", s.output, "Drawing document to write (default: stdout)");
    return sub;
  };

  CLI::App* circular = layout("circular", "All vertices on one circle (regular graphs)", "Graph document");
  circular->add_option("--seed", s.seed, "Seed for the perturbation retries");
  CLI::App* degenerate = layout("degenerate", "Incremental drawing of 2- or 3-degenerate graphs", "Graph document");
  degenerate->add_option("--mode", s.mode, "2 or 3 (default: from the degeneracy)")->check(CLI::IsMember({2, 3}));
  degenerate->add_option("--seed", s.seed, "Seed for candidate sampling");
  CLI::App* halin = layout("halin", "Halin graph from a plane tree", "Tree or graph document");
  CLI::App* spiro = layout("spiro", "Concentric circles with rotational symmetry", "Spirograph spec");

  CLI::App* verify = app.add_subcommand("verify", "Check a drawing and print a report");
  input(verify, "Drawing document");
  verify->add_option("--clearance", s.clearance, "Minimum arc-to-vertex distance")->check(CLI::PositiveNumber);

  CLI::App* render = app.add_subcommand("render", "SVG image of a drawing");
  input(render, "Drawing document");
  render->add_option("--svg", s.output, "SVG file to write (default: stdout)");
  render->add_option("--width", s.render.width)->check(CLI::PositiveNumber);
  render->add_option("--height", s.render.height)->check(CLI::PositiveNumber);
  render->add_option("--margin", s.render.margin)->check(CLI::NonNegativeNumber);
  render->add_flag("--labels", s.render.labels, "Print vertex ids");
  render->add_flag("!--no-color", s.render.color_by_factor, "Draw every edge in one color");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (circular->parsed()) {
      emit(drawing_to_json(run_circular(s)), s.output, out);
    } else if (degenerate->parsed()) {
      emit(drawing_to_json(run_degenerate(s)), s.output, out);
    } else if (halin->parsed()) {
      emit(drawing_to_json(run_halin(s)), s.output, out);
    } else if (spiro->parsed()) {
      emit(drawing_to_json(run_spiro(s)), s.output, out);
    } else if (verify->parsed()) {
      const Drawing d = parse_drawing(read_text_file(s.input));
      const VerificationReport r = verify_drawing(d, s.clearance);
      out << report_to_json(r, d, s.tolerance);
      if (!r.clean(s.tolerance)) {
        throw Error(ErrorCode::VerificationFailed,
                    "max deviation " + std::to_string(r.max_deviation) + ", " +
                        std::to_string(r.incidence.size()) + " incidences");
      }
    } else if (render->parsed()) {
      emit(to_svg(parse_drawing(read_text_file(s.input)), s.render), s.output, out);
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    report_failure(err, to_string(e.code()), what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what);
    return is_layout_rejection(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    report_failure(err, "Internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace lombardi::cli
