#pragma once

#include <stdexcept>
#include <string>

namespace sigdoc {

/// Invalid or unreadable configuration: bad flags, missing roots, unreadable
/// stop-word files. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An aggregate was requested over an input that carries no defined samples.
class NoDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failure while writing or reading report artifacts.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigdoc
