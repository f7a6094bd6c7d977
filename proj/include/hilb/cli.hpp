#pragma once

#include <string>
#include <vector>

namespace hilb {
namespace cli {

// Exit codes: 0 pass, 1 mathematical falsification or hard contract
// violation, 2 usage error. Every subcommand prints a human-readable table
// and writes a JSON artifact (path from --out, or a default per subcommand).
int run(const std::vector<std::string>& args);

}  // namespace cli
}  // namespace hilb
