#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperbound/curve.hpp"
#include "hyperbound/rational.hpp"

namespace hyperbound {

// Caller declarations; none of these is checked by the engine.
struct Hypotheses {
  bool rank_le_1 = false;
  bool geometrically_simple = false;
  bool condition_dagger = false;
  std::optional<std::uint64_t> good_reduction_at;

  static Hypotheses all_asserted() { return {true, true, true, std::nullopt}; }
};

// Text of every declared hypothesis, as stamped on reports.
std::vector<std::string> hypothesis_statements(const Hypotheses& h);
// Throws PreconditionError naming the missing declarations.
void require_hypotheses(const Hypotheses& h);

// Smallest prime > d^2 + 3.
std::uint64_t bertrand_prime(int d);

struct CrudeBound {
  Integer value;  // (3d(2p^d + 1))^d
  Integer cap;    // (3d(2(2d^2 + 3)^d + 1))^d
};
CrudeBound crude_bound(int d, std::uint64_t p);

struct DiskBound {
  std::vector<int> extents;  // largest exponent that can enter the polygon, per axis
  bool empty_axis = false;   // some radius-1 axis of order 0 has empty New_1
  Integer non_center;
  Integer ordered_count;  // non_center plus the center when it counts
};

// Ordered d-tuples in a residue polydisk with the given per-coordinate
// vanishing orders (0..2) and radii, from the mixed volume of the
// worst-case Newton polygons.
DiskBound per_disk_bound(int d, const std::vector<int>& orders, const std::vector<Rational>& radii, std::uint64_t p,
                         bool center_counts);
// Same order and radius on every coordinate; the center counts.
DiskBound per_disk_bound(int d, int vanishing_order, const Rational& m, std::uint64_t p);

struct VanishingGroup {
  int cost = 0;
  Integer gain_active;
  Integer gain_inactive;
};

struct Allocation {
  std::vector<std::size_t> active;  // sorted group indices
  Integer total;
};

// Best activation subset with total cost <= budget. Among maximizers the
// lexicographically smallest active-index list wins.
Allocation allocate_vanishing(const std::vector<VanishingGroup>& groups, int budget);

struct ConfigurationRecord {
  std::string label;
  std::vector<Rational> radius;
  std::vector<int> vanishing_order;
  Integer ordered_count;
  int stabilizer = 1;
  Integer unordered_count;
  std::string note;
};

struct BoundReport {
  std::string curve;
  int d = 0;
  std::uint64_t p = 0;
  std::vector<std::string> hypotheses;
  std::vector<ConfigurationRecord> configurations;
  int budget = 0;
  std::vector<std::size_t> active_groups;
  std::string method;
  Integer tuple_bound;
  Integer point_bound;
};

nlohmann::ordered_json to_json(const BoundReport& report);

struct PipelineOptions {
  // Override the vanishing budget 2r = 2.
  std::optional<int> budget;
  // Generic pipeline: prime to use instead of bertrand_prime(d).
  std::optional<std::uint64_t> prime;
  // Generic pipeline: use actual point counts over F_{p^k}, k <= d.
  bool refined = false;
};

BoundReport quadratic_pipeline(const CurveModel& curve, const Hypotheses& hypotheses,
                               const PipelineOptions& options = {});
BoundReport cubic_pipeline(const CurveModel& curve, const Hypotheses& hypotheses, const PipelineOptions& options = {});
BoundReport generic_pipeline(int d, const CurveModel& curve, const Hypotheses& hypotheses,
                             const PipelineOptions& options = {});

}  // namespace hyperbound
