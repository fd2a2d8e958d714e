#include <algorithm>

#include "georeduce/errors.hpp"
#include "georeduce/reductions.hpp"

namespace georeduce::reductions {

bool VerificationReport::passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const Condition& c) { return c.passed; });
}

void VerificationReport::add(std::string id, bool ok, std::string detail) {
  conditions.push_back({std::move(id), ok, std::move(detail)});
}

const Condition* VerificationReport::find(const std::string& id) const {
  for (const auto& c : conditions) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> VerificationReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& c : conditions) {
    if (!c.passed) out.push_back(c.id);
  }
  return out;
}

combinat::SetSystem cover_system(const MembershipMatrix& m, std::size_t required,
                                 std::size_t num_shapes) {
  combinat::SetSystem s;
  s.n = required;
  s.sets.assign(num_shapes, {});
  for (std::size_t i = 0; i < required && i < m.size(); ++i) {
    for (std::size_t j = 0; j < num_shapes && j < m[i].size(); ++j) {
      if (m[i][j]) s.sets[j].push_back(i);
    }
  }
  s.k = combinat::max_set_size(s);
  s.freq = combinat::max_frequency(s);
  return s;
}

MembershipMatrix source_membership(const combinat::Graph& g,
                                   const std::vector<geom2d::Triangle2>& triangles,
                                   std::size_t num_points) {
  MembershipMatrix m(num_points, std::vector<bool>(triangles.size(), false));
  const std::size_t edges = g.edges().size();
  for (std::size_t e = 0; e < edges && e < num_points; ++e) {
    const auto [u, v] = g.edges()[e];
    if (u < triangles.size()) m[e][u] = true;
    if (v < triangles.size()) m[e][v] = true;
  }
  // Fillers belong to the triangle that lists them.
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    for (std::size_t p : triangles[t].v) {
      if (p >= edges && p < num_points) m[p][t] = true;
    }
  }
  return m;
}

}  // namespace georeduce::reductions
