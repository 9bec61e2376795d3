#pragma once

#include <optional>
#include <string>

#include "schmidt/serialization.hpp"

namespace schmidt::cli {

// Bad user input: reported with exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults for `play` and `sweep`; a config file and then flags override
// these keys.
Json default_play_config();

// Git-style blob hash: sha1("blob <size>\0" + content), lowercase hex.
std::string content_hash(const std::string& content);

// Hash of the canonical config dump plus the contents of every input file
// the config points to.
std::string input_hash(const Json& config);

ThetaMatrix load_theta(const Json& value);
PsiSpec load_psi(const std::string& text);
Point parse_point(const std::string& text);

struct PlayResult {
  GameTrace trace;
  std::optional<Certificate> certificate;
  Json report;
  bool ok = false;
};

// Builds Lambda, derives the constants, plays White's strategy against the
// configured adversary and certifies the final ball. Module errors after
// the config is validated are captured in the report (status "error").
PlayResult run_play(const Json& config);

}  // namespace schmidt::cli
