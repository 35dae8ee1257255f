#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sigdoc {

/// Environment variable naming a config file when --config is not given.
inline constexpr const char* kConfigEnvVar = "SIGDOC_CONFIG";

/// `key = value` settings, one per line. `#` starts a comment, blank lines
/// are ignored, keys are case-sensitive and may appear only once.
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text, std::string_view origin = "<config>");
  static ConfigFile load(const std::filesystem::path& path);

  std::optional<std::string> get(std::string_view key) const;
  const std::map<std::string, std::string, std::less<>>& values() const noexcept { return values_; }
  const std::string& origin() const noexcept { return origin_; }

 private:
  std::map<std::string, std::string, std::less<>> values_;
  std::string origin_;
};

}  // namespace sigdoc
