#pragma once

#include "mmflow/audit.hpp"
#include "mmflow/costs.hpp"
#include "mmflow/critical.hpp"
#include "mmflow/limits.hpp"
#include "mmflow/scheme.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace mmflow {

/// Writes through a sibling temporary file and renames it into place. Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

/// Finite numbers as numbers; +-inf and NaN as the strings "inf", "-inf", "nan".
[[nodiscard]] nlohmann::json json_number(double x);
[[nodiscard]] nlohmann::json to_json(const Point& x);
[[nodiscard]] nlohmann::json to_json(const CriticalAtlas& atlas);
[[nodiscard]] nlohmann::json to_json(const StableSet& set);
[[nodiscard]] nlohmann::json to_json(const PathWitness& w);
[[nodiscard]] nlohmann::json to_json(const ChainWitness& w);
[[nodiscard]] nlohmann::json to_json(const JumpRecord& j);
[[nodiscard]] nlohmann::json to_json(const StabilityReport& s);
[[nodiscard]] nlohmann::json to_json(const BalanceReport& b);
[[nodiscard]] nlohmann::json to_json(const AuditReport& a);
[[nodiscard]] nlohmann::json to_json(const SchemeParams& p);

/// `k,t,u_0..u_{n-1},F,grad_norm`, every `stride`-th node plus the last.
[[nodiscard]] std::string trajectory_csv(const Trajectory& traj, const EnergyModel& model, std::size_t stride = 1);
/// `t,u_0..u_{n-1},F,f` at the finest run's nodes.
[[nodiscard]] std::string curve_csv(const RegulatedCurve& curve, const EnergyModel& model, const Monotonicity& f,
                                    std::size_t stride = 1);

/// Shortest decimal text that round-trips the double.
[[nodiscard]] std::string format_double(double x);

}  // namespace mmflow
