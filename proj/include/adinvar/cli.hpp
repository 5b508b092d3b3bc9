#pragma once

#include "adinvar/report.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace adinvar {

/// A parsed JSON document plus where it came from; `base_dir` resolves
/// relative algebra references inside builder files and `source` prefixes
/// diagnostics.
struct Input {
    json doc;
    std::filesystem::path base_dir = ".";
    std::string source = "input";

    static Input from_file(const std::string& path);
};

// One function per subcommand. Each returns the report the CLI prints;
// unusable input throws Error, failed verifications are failed checks.
Report check_report(const Input& algebra);
Report extend_report(const Input& builder);
Report gd_report(const Input& builder);
/// Accepts an algebra file with a metric or a builder file.
Report geometry_report(const Input& in);
Report verify_as_report(const Input& builder);
Report derivations_report(const Input& algebra, const Input* metric = nullptr, const Input* so_aut_builder = nullptr);
Report series_report(const Input& builder);
/// Empty name lists the entries; `emit` writes corpus/ and builders/ files under `dir`.
Report corpus_report(const std::string& name, bool emit = false, const std::string& dir = ".");

/// Runs one command line (without the program name) and returns the exit
/// code: 0 when every check passes, 1 when some check fails, 2 on unusable
/// input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adinvar
