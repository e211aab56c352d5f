#pragma once

#include "lingdyn/script.hpp"
#include "lingdyn/transfer.hpp"

#include <string>

namespace lingdyn::syntax {

/// Deterministic JSON. Keys are sorted; identical inputs give identical bytes.
std::string to_json(const LfNode& lf, int indent = -1);
std::string to_json(const TransferOutput& out, int indent = -1);
std::string to_json(const std::vector<LogEntry>& log, int indent = -1);

/// {"status", "pf", "pf_string", "lf", "log", "errors"}. "lf" is null when
/// the derivation crashed before transfer.
std::string to_json(const ScriptResult& result, int indent = 2);

} // namespace lingdyn::syntax
