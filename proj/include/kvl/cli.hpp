#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kvl {

/// Runs one CLI invocation. Exit status: 0 = success / property holds,
/// 1 = property refuted (witness printed), 2 = usage or format error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kvl
