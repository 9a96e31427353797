#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dbruhat::cli {

// A parsed invocation. Options are kept as text so a command can be written
// back out and parsed again unchanged.
struct Command {
  std::string subcommand;
  std::vector<std::string> positionals;
  std::map<std::string, std::string> options;  // long name without dashes
  bool force = false;
  bool pretty = false;
  friend bool operator==(const Command&, const Command&) = default;
};

enum Status : int { ok = 0, domain_error = 1, parse_error = 2 };

// Thrown by parse() for -h/--help; carries the rendered usage text.
struct HelpRequested {
  std::string text;
};

// Throws ParseError on malformed argv (no program name).
Command parse(std::span<const std::string> args);
std::vector<std::string> serialize(const Command& cmd);

int execute(const Command& cmd, std::ostream& out, std::ostream& err);
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

const std::vector<std::string>& subcommands();

}  // namespace dbruhat::cli
