#include <json.hpp>

#include "georeduce/errors.hpp"
#include "georeduce/harness.hpp"

namespace georeduce::harness {
namespace {

using nlohmann::json;
using reductions::CircleInstance;
using reductions::FatTriangleInstance;
using reductions::FriendlyInstance;
using reductions::PlaneInstance;
using reductions::Triangle3DInstance;

constexpr const char* kInstanceFormat = "georeduce-instance";
constexpr const char* kReportFormat = "georeduce-report";

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

// --- writers ---------------------------------------------------------------

json rat(const Rational& r) { return r.str(); }

json point2(const geom2d::Point2& p) { return {{"x", rat(p.x)}, {"y", rat(p.y)}}; }

json point3(const geom3d::Point3& p) {
  return {{"x", rat(p.x)}, {"y", rat(p.y)}, {"z", rat(p.z)}};
}

json unit_point(const geom2d::UnitCirclePoint& p) {
  json j = point2(p.point);
  j["t"] = rat(p.t);
  return j;
}

json graph_json(const combinat::Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

json sets_json(const combinat::SetSystem& s) {
  return {{"n", s.n}, {"sets", s.sets}, {"k", s.k}, {"freq", s.freq}};
}

json triangles_json(const std::vector<geom2d::Triangle2>& tris) {
  json out = json::array();
  for (const auto& t : tris) out.push_back(t.v);
  return out;
}

void write_circles(json& j, const CircleInstance& c) {
  j["params"]["delta"] = rat(c.delta);
  j["params"]["perturbation_denominator"] = rat(c.perturbation_denominator);
  j["source"]["graph"] = graph_json(c.source);
  j["points"] = json::array();
  for (const auto& p : c.points) j["points"].push_back(point2(p));
  j["required"] = c.required;
  j["triangles"] = triangles_json(c.triangles);
  j["circles"] = json::array();
  for (const auto& circle : c.circles) {
    j["circles"].push_back({{"center", point2(circle.center)},
                            {"radius_sq", rat(circle.radius_sq)}});
  }
}

json instance_json(const Instance& inst) {
  json j;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FriendlyInstance>) {
          j["params"] = json::object();
          j["source"]["set_system"] = sets_json(x.source);
          j["points"] = json::array();
          for (const auto& p : x.points) j["points"].push_back(unit_point(p));
          j["regions"] = json::array();
          for (const auto& r : x.regions) {
            j["regions"].push_back(
                {{"inner_radius", rat(r.inner_radius)}, {"tips", r.tooth_tips}});
          }
        } else if constexpr (std::is_same_v<T, FatTriangleInstance>) {
          j["params"]["delta"] = rat(x.delta);
          j["params"]["alpha"] = rat(x.alpha);
          j["source"]["graph"] = graph_json(x.source);
          j["coloring"] = x.coloring.color;
          j["points"] = json::array();
          for (std::size_t i = 0; i < x.points.size(); ++i) {
            json p = unit_point(x.points[i]);
            p["block"] = i < x.block.size() ? x.block[i] : 0;
            j["points"].push_back(p);
          }
          j["required"] = x.required;
          j["triangles"] = triangles_json(x.triangles);
        } else if constexpr (std::is_same_v<T, CircleInstance>) {
          write_circles(j, x);
        } else if constexpr (std::is_same_v<T, PlaneInstance>) {
          write_circles(j, x.circles);
          j["lifted_points"] = json::array();
          for (const auto& p : x.points) j["lifted_points"].push_back(point3(p));
          j["planes"] = json::array();
          for (const auto& h : x.planes) {
            j["planes"].push_back(
                {{"a", rat(h.a)}, {"b", rat(h.b)}, {"c", rat(h.c)}, {"d", rat(h.d)}});
          }
        } else {
          j["params"] = json::object();
          j["source"]["graph"] = graph_json(x.source);
          j["sites"] = json::array();
          for (const auto& p : x.sites) j["sites"].push_back(point3(p));
          j["witnesses"] = json::array();
          for (const auto& w : x.witnesses) {
            j["witnesses"].push_back({{"i", w.i},
                                      {"j", w.j},
                                      {"point", point3(w.point)},
                                      {"margin", rat(w.margin)}});
          }
          j["triangles"] = x.triangle_witnesses;
        }
      },
      inst);
  return j;
}

// --- readers ---------------------------------------------------------------

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Rational read_rat(const json& j) {
  if (!j.is_string()) fail("rationals must be strings");
  return Rational::parse(j.get<std::string>());
}

std::size_t read_index(const json& j) {
  if (!j.is_number_unsigned()) fail("expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> read_indices(const json& j) {
  if (!j.is_array()) fail("expected an array of indices");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(read_index(x));
  return out;
}

const json& read_array(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  return a;
}

geom2d::Point2 read_point2(const json& j) {
  return {read_rat(field(j, "x")), read_rat(field(j, "y"))};
}

geom3d::Point3 read_point3(const json& j) {
  return {read_rat(field(j, "x")), read_rat(field(j, "y")), read_rat(field(j, "z"))};
}

geom2d::UnitCirclePoint read_unit_point(const json& j) {
  return {read_rat(field(j, "t")), read_point2(j)};
}

combinat::Graph graph_from(const json& j) {
  std::vector<combinat::Edge> edges;
  for (const auto& e : read_array(j, "edges")) {
    const auto pair = read_indices(e);
    if (pair.size() != 2) fail("edges must be vertex pairs");
    edges.emplace_back(pair[0], pair[1]);
  }
  try {
    return combinat::Graph(read_index(field(j, "n")), std::move(edges));
  } catch (const Error& e) {
    fail(e.what());
  }
}

combinat::SetSystem sets_from(const json& j) {
  const std::size_t n = read_index(field(j, "n"));
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& s : read_array(j, "sets")) sets.push_back(read_indices(s));
  combinat::SetSystem probe{n, sets, 0, 0};
  for (const auto& s : sets) {
    for (std::size_t e : s) {
      if (e >= n) fail("set element out of range");
    }
  }
  const std::size_t k = j.contains("k") ? read_index(j.at("k")) : combinat::max_set_size(probe);
  const std::size_t freq =
      j.contains("freq") ? read_index(j.at("freq")) : combinat::max_frequency(probe);
  try {
    return combinat::make_set_system(n, std::move(sets), k, freq);
  } catch (const Error& e) {
    fail(e.what());
  }
}

std::vector<geom2d::Triangle2> triangles_from(const json& j) {
  std::vector<geom2d::Triangle2> out;
  for (const auto& t : j) {
    const auto v = read_indices(t);
    if (v.size() != 3) fail("triangles must have three vertex indices");
    out.push_back({{v[0], v[1], v[2]}});
  }
  return out;
}

CircleInstance circles_from(const json& j) {
  CircleInstance c;
  const json& params = field(j, "params");
  c.delta = read_rat(field(params, "delta"));
  c.perturbation_denominator = read_rat(field(params, "perturbation_denominator"));
  c.source = graph_from(field(field(j, "source"), "graph"));
  for (const auto& p : read_array(j, "points")) c.points.push_back(read_point2(p));
  c.required = read_index(field(j, "required"));
  c.triangles = triangles_from(read_array(j, "triangles"));
  for (const auto& circle : read_array(j, "circles")) {
    c.circles.push_back(
        {read_point2(field(circle, "center")), read_rat(field(circle, "radius_sq"))});
  }
  return c;
}

FriendlyInstance friendly_from(const json& j) {
  FriendlyInstance f;
  f.source = sets_from(field(field(j, "source"), "set_system"));
  std::vector<geom2d::Point2> pts;
  for (const auto& p : read_array(j, "points")) {
    f.points.push_back(read_unit_point(p));
    pts.push_back(f.points.back().point);
  }
  for (const auto& r : read_array(j, "regions")) {
    const Rational radius = read_rat(field(r, "inner_radius"));
    const auto tips = read_indices(field(r, "tips"));
    // A region that does not build is kept for the verifier to reject.
    geom2d::GearRegion region{radius, tips, {radius, {}, {}}};
    try {
      region = geom2d::make_gear_region(radius, tips, pts);
    } catch (const Error&) {
    }
    f.regions.push_back(std::move(region));
  }
  return f;
}

FatTriangleInstance fat_from(const json& j) {
  FatTriangleInstance t;
  const json& params = field(j, "params");
  t.delta = read_rat(field(params, "delta"));
  t.alpha = read_rat(field(params, "alpha"));
  t.source = graph_from(field(field(j, "source"), "graph"));
  t.coloring.color = read_indices(field(j, "coloring"));
  for (const auto& p : read_array(j, "points")) {
    t.points.push_back(read_unit_point(p));
    t.block.push_back(read_index(field(p, "block")));
  }
  t.required = read_index(field(j, "required"));
  t.triangles = triangles_from(read_array(j, "triangles"));
  return t;
}

PlaneInstance planes_from(const json& j) {
  PlaneInstance p;
  p.circles = circles_from(j);
  for (const auto& q : read_array(j, "lifted_points")) p.points.push_back(read_point3(q));
  for (const auto& h : read_array(j, "planes")) {
    p.planes.push_back({read_rat(field(h, "a")), read_rat(field(h, "b")),
                        read_rat(field(h, "c")), read_rat(field(h, "d"))});
  }
  return p;
}

Triangle3DInstance indep3d_from(const json& j) {
  Triangle3DInstance t;
  t.source = graph_from(field(field(j, "source"), "graph"));
  for (const auto& p : read_array(j, "sites")) t.sites.push_back(read_point3(p));
  for (const auto& w : read_array(j, "witnesses")) {
    t.witnesses.push_back({read_index(field(w, "i")), read_index(field(w, "j")),
                           read_point3(field(w, "point")),
                           read_rat(field(w, "margin"))});
  }
  for (const auto& tri : read_array(j, "triangles")) {
    t.triangle_witnesses.push_back(read_indices(tri));
  }
  return t;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kFriendly: return "friendly";
    case Kind::kFatTriangles: return "fat-tri";
    case Kind::kCircles: return "circles";
    case Kind::kPlanes: return "planes";
    case Kind::kIndep3d: return "indep3d";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view name) {
  for (Kind k : {Kind::kFriendly, Kind::kFatTriangles, Kind::kCircles, Kind::kPlanes,
                 Kind::kIndep3d}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

bool is_planar(Kind kind) {
  return kind == Kind::kFriendly || kind == Kind::kFatTriangles ||
         kind == Kind::kCircles;
}

Kind kind_of(const Instance& inst) { return static_cast<Kind>(inst.index()); }

std::string serialize(const InstanceFile& file) {
  json j = instance_json(file.instance);
  j["format"] = kInstanceFormat;
  j["version"] = kFormatVersion;
  j["kind"] = std::string(kind_name(kind_of(file.instance)));
  if (file.seed) j["params"]["seed"] = *file.seed;
  return dump(j);
}

InstanceFile parse_instance(std::string_view text) {
  const json j = parse_json(text);
  try {
    if (!j.is_object() || j.value("format", "") != kInstanceFormat) {
      fail("not an instance file");
    }
    if (field(j, "version") != kFormatVersion) fail("unsupported format version");
    const json& kind_field = field(j, "kind");
    if (!kind_field.is_string()) fail("kind must be a string");
    const auto kind = parse_kind(kind_field.get<std::string>());
    if (!kind) fail("unknown kind");
    InstanceFile file{FriendlyInstance{}, std::nullopt};
    switch (*kind) {
      case Kind::kFriendly: file.instance = friendly_from(j); break;
      case Kind::kFatTriangles: file.instance = fat_from(j); break;
      case Kind::kCircles: file.instance = circles_from(j); break;
      case Kind::kPlanes: file.instance = planes_from(j); break;
      case Kind::kIndep3d: file.instance = indep3d_from(j); break;
    }
    const json& params = field(j, "params");
    if (params.contains("seed")) {
      if (!params.at("seed").is_number_unsigned()) fail("seed must be unsigned");
      file.seed = params.at("seed").get<std::uint64_t>();
    }
    return file;
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

combinat::Graph parse_graph(std::string_view text) {
  try {
    return graph_from(parse_json(text));
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

std::string serialize_graph(const combinat::Graph& g) { return dump(graph_json(g)); }

combinat::SetSystem parse_set_system(std::string_view text) {
  try {
    return sets_from(parse_json(text));
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

std::string serialize_set_system(const combinat::SetSystem& s) {
  return dump(sets_json(s));
}

reductions::VerificationReport verify(const Instance& inst) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FriendlyInstance>) {
          return reductions::verify_friendly(x);
        } else if constexpr (std::is_same_v<T, FatTriangleInstance>) {
          return reductions::verify_fat_triangles(x);
        } else if constexpr (std::is_same_v<T, CircleInstance>) {
          return reductions::verify_circles(x);
        } else if constexpr (std::is_same_v<T, PlaneInstance>) {
          return reductions::verify_planes(x);
        } else {
          return reductions::verify_indep3d(x);
        }
      },
      inst);
}

std::string serialize_report(const reductions::VerificationReport& report, Kind kind) {
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    conditions.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json j{{"format", kReportFormat},
         {"version", kFormatVersion},
         {"kind", std::string(kind_name(kind))},
         {"passed", report.passed()},
         {"conditions", conditions}};
  return dump(j);
}

OptimumComparison solve(const Instance& inst, bool greedy) {
  OptimumComparison out;
  if (const auto* t = std::get_if<Triangle3DInstance>(&inst)) {
    if (greedy) {
      throw Error(ErrorCode::kKindMismatch, "greedy solving applies to cover kinds");
    }
    const auto geometric = combinat::exact_max_independent_set(
        reductions::intersection_graph(reductions::triangles_of(*t)));
    out.geometric = geometric.size;
    out.chosen = geometric.vertices;
    out.source = combinat::exact_max_independent_set(t->source).size;
    return out;
  }

  combinat::SetSystem geometric;
  combinat::SetSystem source;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FriendlyInstance>) {
          geometric = reductions::cover_system(reductions::geometric_membership(x),
                                               x.points.size(), x.regions.size());
          source = x.source;
        } else if constexpr (std::is_same_v<T, FatTriangleInstance>) {
          geometric = reductions::cover_system(reductions::geometric_membership(x),
                                               x.required, x.triangles.size());
          source = combinat::vc_to_setcover(x.source);
        } else if constexpr (std::is_same_v<T, CircleInstance>) {
          geometric = reductions::cover_system(reductions::geometric_membership(x),
                                               x.required, x.circles.size());
          source = combinat::vc_to_setcover(x.source);
        } else if constexpr (std::is_same_v<T, PlaneInstance>) {
          geometric = reductions::cover_system(reductions::geometric_membership(x),
                                               x.circles.required, x.planes.size());
          source = combinat::vc_to_setcover(x.circles.source);
        }
      },
      inst);
  const auto g = greedy ? combinat::greedy_set_cover(geometric)
                        : combinat::exact_min_set_cover(geometric);
  out.geometric = g.size;
  out.chosen = g.chosen;
  out.source = combinat::exact_min_set_cover(source).size;
  return out;
}

}  // namespace georeduce::harness
