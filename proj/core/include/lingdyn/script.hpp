#pragma once

#include "lingdyn/derivation.hpp"
#include "lingdyn/transfer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lingdyn::syntax {

/// Operand of a script step. AUTO strings resolve to a bound name first and
/// to a lexicon id otherwise.
struct ScriptArg {
    enum class Kind { AUTO, NAME, LEX, PATH, LAST };
    Kind kind = Kind::AUTO;
    std::string text;
    Path path;
};

struct ScriptStep {
    OpKind op = OpKind::EM;
    std::vector<ScriptArg> args;
    std::string name;
    Pronunciation pronunciation = Pronunciation::HIGHEST;
};

/// Parses a derivation script:
///
///   [{"op": "em", "args": ["which", "books"], "as": "wb"},
///    {"op": "im", "args": ["C1", "wb"], "as": "CP"},
///    {"op": "close", "args": ["CP"]},
///    {"op": "transfer", "args": ["CP"], "pronounce": "highest"}]
///
/// A bare array or {"steps": [...]}. Operands are strings, {"name": s},
/// {"lex": s}, {"path": [i, ...]} (IM term only) or "_" for the last result;
/// close and transfer default to the last result. Throws DomainError.
std::vector<ScriptStep> parse_script(std::string_view json_text);

struct ScriptError {
    std::size_t step = 0;
    std::string op;
    std::string reason;
    std::string message;
};

struct ScriptResult {
    Derivation derivation;
    std::optional<TransferOutput> output;
    std::vector<ScriptError> errors;

    bool converged() const { return errors.empty() && output.has_value(); }
    /// 0 when converged, 2 when the derivation crashed.
    int exit_code() const { return converged() ? 0 : 2; }
};

/// Runs steps in order and stops at the first failure. A script without a
/// transfer step is transferred at its last result. A labeling failure at
/// transfer still yields the LF, with the failing nodes marked.
ScriptResult run_script(std::shared_ptr<const Lexicon> lexicon, const std::vector<ScriptStep>& steps);

} // namespace lingdyn::syntax
