#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace annihil {

enum class OutputFormat { csv, json };

struct RunConfig
{
    std::string command;
    int k = 0;
    std::optional<int> s_max;
    std::optional<int> d_max;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::filesystem::path> cache_dir;
    std::optional<std::filesystem::path> out;
    std::vector<std::string> suites;
    int verbosity = 0;
};

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Environment variable naming the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "ANNIHIL_CACHE_DIR";

/// Runs one command line (args exclude the program name). Results go to
/// `out` or to the --out file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace annihil
