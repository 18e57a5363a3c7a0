#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "weylalt/rational.hpp"
#include "weylalt/root_system.hpp"
#include "weylalt/verify.hpp"

namespace weylalt::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Weight specs: a sum of signed terms, each an optional rational factor
/// followed by one of
///   w<i>           fundamental weight i (1-based)
///   highest-root
///   sum-simple     sum of the simple roots
///   rho
///   eps:<c1,...>   ambient coordinates, rationals as p/q; the list may be
///                  wrapped in <>, () or []
/// or the literal 0. Examples: "w1", "2w1 - w2", "eps:1/2,1/2,1/2", "rho+w3".
/// Throws ParseError.
RationalVector parse_weight(std::string_view spec, const RootSystem& rs);

struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  bool passed() const;
};

/// Canonical form: keys sorted, integers as numbers when they fit in 64
/// bits and as decimal strings otherwise, rationals as "p/q" strings.
nlohmann::json to_json(const RunReport& report);

/// Runs the command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylalt::cli
