#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "meso/kinematics.hpp"
#include "meso/report.hpp"
#include "meso/scenarios.hpp"

namespace meso {

/// Shortest round-trip decimal representation of a double (std::to_chars).
std::string format_double(double v);

/// 64-bit FNV-1a of a byte string, hex-encoded; used for artifact checksums.
std::string fnv1a_hex(const std::string& bytes);

/// CSV dump of a trajectory: one row per grid point per stored snapshot,
/// columns t,x,y[,z],field,component,value with LF line endings.
std::string trajectory_csv(const Trajectory& traj, const MaterialParameters& p);

std::string appendix_table_csv(const std::vector<AppendixRow>& rows);

/// Machine-readable report: one JSON object per check, deterministic order.
std::string report_json(const ResidualReport& rep, const std::string& title);

/// Convergence study CSV with columns check,resolution,norm,order.
struct ConvergenceRow {
    std::string check;
    int resolution = 0;
    double norm = 0.0;
    std::string order; // number, "exact", or "n/a"
};
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

void write_file(const std::string& path, const std::string& content);

} // namespace meso
