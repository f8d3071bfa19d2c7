#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gcard/categorified.hpp"
#include "gcard/cycle_stats.hpp"
#include "gcard/equivariant.hpp"
#include "gcard/group.hpp"
#include "gcard/groupoid.hpp"
#include "gcard/permutation.hpp"
#include "gcard/rational.hpp"

// Wire formats. Rationals are always "num/den" strings; automorphism orders
// are JSON integers when they fit in 64 bits and decimal strings otherwise.

namespace gcard {

using json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void to_json(json& j, const Rational& r);
void to_json(json& j, const Permutation& sigma);
void to_json(json& j, const Cycle& cycle);
void to_json(json& j, const CycleType& lambda);
void to_json(json& j, const PVector& p);
void to_json(json& j, const SkeletonComponent& c);
void to_json(json& j, const GroupoidSkeleton& skeleton);
void to_json(json& j, const ValidationReport& report);
void to_json(json& j, const Orbit& orbit);
void to_json(json& j, const MomentReport& report);
void to_json(json& j, const CategorifiedReport& report);
void to_json(json& j, const GeneralTheoremReport& report);

Rational rational_from_json(const json& j);
Permutation permutation_from_json(const json& j);
CycleType cycle_type_from_json(const json& j);
GroupoidSkeleton skeleton_from_json(const json& j);

/// {"order": m, "table": [[...], ...]}
FiniteGroup cayley_group_from_json(const json& j, const Limits& limits = {});
/// A Cayley object as above, or one of the names "S<n>" / "Z<k>".
FiniteGroup group_from_json(const json& j, const Limits& limits = {});
FiniteGroup group_from_name(const std::string& name, const Limits& limits = {});
json cayley_group_to_json(const FiniteGroup& group);

/// {"group": ..., "fibers": {"g": size, ...},
///  "transports": {"h": {"g": [bijection], ...}, ...}}
/// Every fiber and every (h, g) transport must be present.
EquivariantFunctor functor_from_json(const json& j, const Limits& limits = {});

std::string moment_csv_header();
std::string to_csv_row(const MomentReport& report);
std::string categorified_csv_header();
std::string to_csv_row(const CategorifiedReport& report);

}  // namespace gcard
