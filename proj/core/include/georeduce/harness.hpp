#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "georeduce/combinat.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::harness {

// ---------------------------------------------------------------------------
// Random sources (mt19937_64, deterministic per seed)

// 3n attempts at a uniform vertex pair; a pair is kept when it is a new
// non-loop edge between vertices of degree < 3. Edges come back sorted.
combinat::Graph random_degree3_graph(std::size_t n, std::uint64_t seed);

// m nonempty sets of size <= 3 over n elements, every element in 1..4 sets.
// Requires n >= 1 and ceil(n / 3) <= m <= 4n.
combinat::SetSystem random_set_system(std::size_t n, std::size_t m,
                                      std::uint64_t seed);

// ---------------------------------------------------------------------------
// Instance files

enum class Kind { kFriendly, kFatTriangles, kCircles, kPlanes, kIndep3d };

std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);
bool is_planar(Kind kind);

using Instance =
    std::variant<reductions::FriendlyInstance, reductions::FatTriangleInstance,
                 reductions::CircleInstance, reductions::PlaneInstance,
                 reductions::Triangle3DInstance>;

Kind kind_of(const Instance& inst);

struct InstanceFile {
  Instance instance;
  std::optional<std::uint64_t> seed;  // set when built from a random source
};

inline constexpr int kFormatVersion = 1;

// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string serialize(const InstanceFile& file);
// Throws parse-error on malformed JSON, a wrong format tag or version, or a
// non-canonical rational.
InstanceFile parse_instance(std::string_view text);

// {"n": N, "edges": [[u, v], ...]} with 0-based vertices.
combinat::Graph parse_graph(std::string_view text);
std::string serialize_graph(const combinat::Graph& g);
// {"n": N, "sets": [[...], ...]} with optional "k" and "freq" bounds.
combinat::SetSystem parse_set_system(std::string_view text);
std::string serialize_set_system(const combinat::SetSystem& s);

reductions::VerificationReport verify(const Instance& inst);
std::string serialize_report(const reductions::VerificationReport& report,
                             Kind kind);

// ---------------------------------------------------------------------------
// Solving both sides

struct OptimumComparison {
  std::size_t geometric = 0;
  std::size_t source = 0;
  std::vector<std::size_t> chosen;  // geometric solution (shape indices)
};

// Minimum cover (cover kinds) or maximum independent set (indep3d) over the
// geometric instance and over its source. With greedy = true the geometric
// side uses greedy_set_cover; the source side is always exact.
OptimumComparison solve(const Instance& inst, bool greedy);

// ---------------------------------------------------------------------------
// Display exports

// Throws kind-mismatch for 3D kinds.
std::string export_svg(const Instance& inst);
// Throws kind-mismatch for planar kinds.
std::string export_obj(const Instance& inst);

// ---------------------------------------------------------------------------
// Command line. Exit codes: 0 success, 1 verification failure or optimum
// mismatch, 2 usage, parse or kind errors, 3 builder errors.

inline constexpr const char* kOutputDirVariable = "GEOREDUCE_OUTPUT_DIR";

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace georeduce::harness
