#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"

namespace georeduce::harness {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBuilder = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (const char* dir = std::getenv(kOutputDirVariable); dir && *dir && p.is_relative()) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  const auto p = output_path(path);
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << content)) throw UsageError("cannot write " + p.string());
}

Kind kind_arg(const std::string& name) {
  const auto kind = parse_kind(name);
  if (!kind) {
    throw UsageError("unknown kind '" + name +
                     "' (friendly, fat-tri, circles, planes, indep3d)");
  }
  return *kind;
}

Rational rational_arg(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("bad rational: ") + e.what());
  }
}

// Source of a build: a graph, or a set system (friendly only).
struct Source {
  std::optional<combinat::Graph> graph;
  std::optional<combinat::SetSystem> sets;
};

Instance build(Kind kind, const Source& src, const Rational& delta) {
  if (kind == Kind::kFriendly) {
    return reductions::build_friendly(src.sets ? *src.sets
                                               : combinat::vc_to_setcover(*src.graph));
  }
  if (!src.graph) throw UsageError(std::string(kind_name(kind)) + " needs a graph source");
  switch (kind) {
    case Kind::kFatTriangles: return reductions::build_fat_triangles(*src.graph, delta);
    case Kind::kCircles: return reductions::build_circles(*src.graph, delta);
    case Kind::kPlanes:
      return reductions::build_planes(reductions::build_circles(*src.graph, delta));
    default: return reductions::build_indep3d(*src.graph);
  }
}

Source random_source(Kind kind, std::size_t n, std::optional<std::size_t> m,
                     std::uint64_t seed) {
  Source src;
  if (kind == Kind::kFriendly) {
    src.sets = random_set_system(n, m.value_or(n), seed);
  } else {
    src.graph = random_degree3_graph(n, seed);
  }
  return src;
}

void print_report(const reductions::VerificationReport& report, std::ostream& out) {
  for (const auto& c : report.conditions) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
  return s;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Builds and certifies geometric hard instances from graphs and set systems",
               "georeduce"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Build an instance file");
  std::string gen_kind;
  std::string graph_file;
  std::string sets_file;
  std::vector<std::uint64_t> random_args;
  std::string delta_text = "1";
  std::string gen_out;
  std::optional<std::size_t> gen_m;
  gen->add_option("kind", gen_kind, "friendly | fat-tri | circles | planes | indep3d")
      ->required();
  auto* graph_opt = gen->add_option("--graph", graph_file, "Graph JSON {n, edges}");
  auto* sets_opt = gen->add_option("--sets", sets_file, "Set system JSON {n, sets}");
  auto* random_opt =
      gen->add_option("--random", random_args, "Random source: n seed")->expected(2);
  gen->add_option("--m", gen_m, "Set count for a random friendly source (default n)");
  graph_opt->excludes(sets_opt)->excludes(random_opt);
  sets_opt->excludes(random_opt);
  gen->add_option("--delta", delta_text, "Angle tolerance in degrees (rational)");
  gen->add_option("--out", gen_out, "Instance file to write")->required();

  auto* ver = app.add_subcommand("verify", "Check every condition of an instance file");
  std::string verify_file;
  std::string report_file;
  ver->add_option("file", verify_file)->required();
  ver->add_option("--report", report_file, "Write a JSON report");

  auto* sol = app.add_subcommand("solve", "Solve the geometric instance and its source");
  std::string solve_file;
  bool exact = false;
  bool greedy = false;
  sol->add_option("file", solve_file)->required();
  auto* exact_flag = sol->add_flag("--exact", exact);
  auto* greedy_flag = sol->add_flag("--greedy", greedy);
  exact_flag->excludes(greedy_flag);

  auto* exp = app.add_subcommand("export", "Export a display figure");
  std::string export_file;
  std::string svg_out;
  std::string obj_out;
  exp->add_option("file", export_file)->required();
  auto* svg_opt = exp->add_option("--svg", svg_out, "SVG for planar kinds");
  auto* obj_opt = exp->add_option("--obj", obj_out, "OBJ for 3D kinds");
  svg_opt->excludes(obj_opt);

  auto* rt = app.add_subcommand("roundtrip", "Build, verify and compare optima");
  std::string rt_kind;
  std::size_t rt_n = 0;
  std::uint64_t rt_seed = 0;
  std::optional<std::size_t> rt_m;
  std::string rt_out;
  std::string rt_delta = "1";
  rt->add_option("--kind", rt_kind)->required();
  rt->add_option("--n", rt_n)->required();
  rt->add_option("--seed", rt_seed)->required();
  rt->add_option("--m", rt_m, "Set count for friendly (default n)");
  rt->add_option("--delta", rt_delta);
  rt->add_option("--out", rt_out, "Also write the built instance file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Kind kind = kind_arg(gen_kind);
      const Rational delta = rational_arg(delta_text);
      Source src;
      std::optional<std::uint64_t> seed;
      if (!graph_file.empty()) {
        src.graph = parse_graph(read_file(graph_file));
      } else if (!sets_file.empty()) {
        if (kind != Kind::kFriendly) throw UsageError("--sets applies to friendly only");
        src.sets = parse_set_system(read_file(sets_file));
      } else if (random_args.size() == 2) {
        seed = random_args[1];
        src = random_source(kind, random_args[0], gen_m, *seed);
      } else {
        throw UsageError("gen needs --graph, --sets or --random");
      }
      Instance inst = build(kind, src, delta);
      write_file(gen_out, serialize({std::move(inst), seed}));
      return kExitOk;
    }

    if (ver->parsed()) {
      const InstanceFile file = parse_instance(read_file(verify_file));
      const auto report = verify(file.instance);
      print_report(report, out);
      if (!report_file.empty()) {
        write_file(report_file, serialize_report(report, kind_of(file.instance)));
      }
      if (!report.passed()) {
        err << "verification failed: " << join(report.failed_ids()) << "\n";
        return kExitFailed;
      }
      return kExitOk;
    }

    if (sol->parsed()) {
      if (!exact && !greedy) throw UsageError("solve needs --exact or --greedy");
      const InstanceFile file = parse_instance(read_file(solve_file));
      const auto result = solve(file.instance, greedy);
      out << "geometric " << result.geometric << "\nsource " << result.source
          << "\nchosen";
      for (std::size_t i : result.chosen) out << " " << i;
      out << "\n";
      return (exact && result.geometric != result.source) ? kExitFailed : kExitOk;
    }

    if (exp->parsed()) {
      if (svg_out.empty() && obj_out.empty()) throw UsageError("export needs --svg or --obj");
      const InstanceFile file = parse_instance(read_file(export_file));
      if (!svg_out.empty()) {
        write_file(svg_out, export_svg(file.instance));
      } else {
        write_file(obj_out, export_obj(file.instance));
      }
      return kExitOk;
    }

    // roundtrip
    const Kind kind = kind_arg(rt_kind);
    const Rational delta = rational_arg(rt_delta);
    Instance inst = build(kind, random_source(kind, rt_n, rt_m, rt_seed), delta);
    const std::string text = serialize({inst, rt_seed});
    const InstanceFile reread = parse_instance(text);
    if (serialize(reread) != text) {
      err << "instance file does not round-trip\n";
      return kExitFailed;
    }
    const auto report = verify(reread.instance);
    const auto result = solve(reread.instance, false);
    out << kind_name(kind) << " n=" << rt_n << " seed=" << rt_seed << ": verification "
        << (report.passed() ? "pass" : "FAIL") << ", geometric optimum "
        << result.geometric << ", source optimum " << result.source << "\n";
    if (!report.passed()) {
      err << "verification failed: " << join(report.failed_ids()) << "\n";
      return kExitFailed;
    }
    if (result.geometric != result.source) {
      err << "optimum mismatch\n";
      return kExitFailed;
    }
    if (!rt_out.empty()) write_file(rt_out, text);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kParseError:
      case ErrorCode::kKindMismatch:
        return kExitUsage;
      default:
        return kExitBuilder;
    }
  }
}

}  // namespace georeduce::harness
