#pragma once

#include <string>
#include <string_view>

#include "kvl/truth_table.hpp"

namespace kvl {

/// Canonical KVLF text form: "KVLF 1\n<k> <n>\n<values...>\n".
std::string serialize(const TruthTable& f);

/// Inverse of serialize. Tolerates arbitrary whitespace between
/// tokens; anything else is rejected with a byte offset in the message.
TruthTable parse(std::string_view text);

TruthTable load_file(const std::string& path);
void save_file(const TruthTable& f, const std::string& path);

} // namespace kvl
