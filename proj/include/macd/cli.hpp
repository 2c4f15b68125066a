#pragma once

// Command-line front end.  `run` is the whole program minus process setup,
// so tests can drive it with string streams.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace macd::cli {

enum class ExitCode : int { ok = 0, identity_failed = 1, invalid_input = 2 };

struct CliConfig {
  std::string subcommand;
  int n = 2;
  int k = 1;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<int> r;
  std::string format = "text";
  std::filesystem::path cache_dir;
  int max_size = 4;
  std::string identity;                   // verify
  std::vector<std::string> identities;    // grid filter
  unsigned threads = 1;
  bool no_cache = false;
};

constexpr const char* kCacheEnv = "MACD_CACHE_DIR";
constexpr const char* kDefaultCacheDir = ".macd-cache";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macd::cli
