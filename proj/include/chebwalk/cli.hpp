#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebwalk::cli {

/// Exit codes: 0 success / inequality holds, 1 violation or match found,
/// 2 usage, parse or precondition error.
enum ExitCode : int { ok = 0, violation = 1, usage_error = 2 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebwalk::cli
