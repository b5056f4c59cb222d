#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "meso/io.hpp"

namespace meso {

struct VerifyOptions {
    std::string only;                        // substring filter on check names
    std::map<std::string, double> tol;       // per-check tolerance overrides
    MaterialParameters material;
    uint64_t seed = 2024;
    bool mutate = false;                     // test hook: inject a sign error
};

/// Run the registered identity checks (exterior calculus laws, Bianchi and
/// transport consistency, balance closure, Noether identities, line-defect
/// algebra, dispersion, energy) and collect one named result each.
ResidualReport run_verify(const VerifyOptions& opt);

} // namespace meso
