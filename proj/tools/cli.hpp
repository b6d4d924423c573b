#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperpi/catalog.hpp"

namespace hyperpi::cli {

/// One --param assignment: a single value (count == 1) or a
/// start:stop:count range.
struct ParamSpec {
    std::string name;  // "a" or "b"
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
};

struct RunConfig {
    enum class Mode { list, verify, sweep };
    enum class Format { csv, json, pretty };

    Mode mode = Mode::list;
    std::string identity;  // identity id or "all"
    std::vector<ParamSpec> params;
    double tol = 1e-11;
    Format format = Format::pretty;
    std::string out_path;  // empty: standard output
    bool default_grid = false;
};

/// Parses argv (without the program name). Throws UsageError on unknown
/// flags, malformed ranges, or out-of-range tolerances.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the configured run, writing the table to `os`.
/// Returns 0 when every in-domain record is ok, 1 on any residual breach.
int run(const RunConfig& config, std::ostream& os);

/// Entry point used by the binary: parses, opens --out if given, reports
/// usage errors on stderr with exit status 2.
int main_impl(int argc, char** argv);

} // namespace hyperpi::cli
