#pragma once

#include "vbf/factored_bpoly.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vbf {

// Persistent memo of conjectured b-functions keyed by n. The format is
// versioned; loading rejects unknown versions outright.
struct BxiCache {
    static constexpr int kVersion = 1;
    std::map<int, FactoredBPoly> entries;

    static BxiCache load(const std::filesystem::path& path);  // throws on bad content
    void save(const std::filesystem::path& path) const;
};

// Runs one CLI command. args excludes the program name. Normal output goes
// to out only when the command succeeds; diagnostics go to err.
// Exit codes: 0 success, 1 a requested check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vbf
