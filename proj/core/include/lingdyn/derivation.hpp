#pragma once

#include "lingdyn/lexicon.hpp"
#include "lingdyn/synobj.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lingdyn::syntax {

/// A fresh selection from the lexicon, used as an External Merge operand.
struct Selection {
    std::string lex_id;
};

using Operand = std::variant<SynObj, Selection>;

/// Where the phase head sits in a closed phase, relative to the phase root.
/// Everything at or below `complement` is impenetrable; the specifiers and
/// the head form the edge.
struct PhaseRecord {
    Uid phase = 0;
    Path head;
    std::optional<Path> complement;
    std::vector<Path> edge;
    bool edge_open = true;
};

enum class OpKind { EM, IM, CLOSE, TRANSFER };

/// Replayable log entry. Operands refer to objects by uid (or lexicon id for
/// fresh selections), which replay reproduces because uids are assigned
/// from a per-derivation counter.
struct LogEntry {
    struct Ref {
        bool lexical = false;
        std::string lex_id;
        Uid uid = 0;
    };
    OpKind op = OpKind::EM;
    std::vector<Ref> operands;
    Path term;  ///< IM only
    Uid result = 0;
    std::string name;
};

/// Narrow-syntax workspace. Operations are free functions that return a new
/// Derivation; nodes are shared between the old and new value and never
/// modified.
class Derivation {
public:
    explicit Derivation(std::shared_ptr<const Lexicon> lexicon);

    const Lexicon& lexicon() const { return *lexicon_; }
    const std::shared_ptr<const Lexicon>& lexicon_ptr() const { return lexicon_; }
    const std::vector<SynObj>& workspace() const { return workspace_; }
    const std::vector<LogEntry>& log() const { return log_; }
    const std::vector<PhaseRecord>& phases() const { return phases_; }

    /// Object produced by the most recent operation.
    const SynObj& last() const;
    /// Object bound to `name` by an earlier `as` clause. Throws DerivationError.
    const SynObj& named(const std::string& name) const;
    bool has_name(const std::string& name) const { return names_.contains(name); }
    const std::map<std::string, SynObj>& names() const { return names_; }

    bool is_root(const SynObj& so) const;
    const PhaseRecord* closed_phase(Uid uid) const;
    bool phase_closed(const SynObj& so) const { return closed_phase(so.uid()) != nullptr; }

    /// Would Internal Merge of the term at `path` inside `root` violate the
    /// Phase Impenetrability Condition?
    bool impenetrable(const SynObj& root, const Path& path) const;

    friend Derivation external_merge(const Derivation&, const Operand&, const Operand&, const std::string&);
    friend Derivation internal_merge(const Derivation&, const SynObj&, const Path&, const std::string&);
    friend Derivation close_phase(const Derivation&, const SynObj&);
    friend Derivation record_transfer(const Derivation&, const SynObj&);

private:
    Uid fresh_uid() { return next_uid_++; }
    void bind(const std::string& name, const SynObj& so);

    std::shared_ptr<const Lexicon> lexicon_;
    std::vector<SynObj> workspace_;
    std::map<std::string, SynObj> names_;
    std::vector<LogEntry> log_;
    std::vector<PhaseRecord> phases_;
    SynObj last_;
    Uid next_uid_ = 1;
};

/// EM: {a, b}. Operands must be distinct workspace roots or fresh
/// selections. Throws DerivationError otherwise.
Derivation external_merge(const Derivation& d, const Operand& a, const Operand& b,
                          const std::string& name = {});

/// IM: {Y, X} where Y is the term of `root` at `path`; X is left untouched and
/// Y becomes a second occurrence of its class. Throws DerivationError for the
/// root itself or a bad path, PhaseImpenetrabilityError for an off-edge term
/// of a closed phase.
Derivation internal_merge(const Derivation& d, const SynObj& root, const Path& path,
                          const std::string& name = {});

/// IM addressed by object: uses the shallowest accessible occurrence of
/// `term` inside `root`.
Derivation internal_merge(const Derivation& d, const SynObj& root, const SynObj& term,
                          const std::string& name = {});

/// Marks the phase headed inside `root` closed. Its complement becomes
/// impenetrable at once; its edge stays accessible until the next phase
/// closes. Closing an already closed phase returns `d` unchanged.
Derivation close_phase(const Derivation& d, const SynObj& root);

/// Appends a TRANSFER entry to the log; the structure is unchanged.
Derivation record_transfer(const Derivation& d, const SynObj& root);

/// Locates head, complement and edge of a phase-headed object. Throws
/// DerivationError when no phase head can be found on the projection spine.
PhaseRecord phase_anatomy(const SynObj& root, const Lexicon& lexicon);

/// Re-executes a log against a fresh workspace.
Derivation replay(std::shared_ptr<const Lexicon> lexicon, const std::vector<LogEntry>& log);

/// Same workspace shape, canonical forms and occurrence classes.
bool equivalent(const Derivation& a, const Derivation& b);

std::string_view to_string(OpKind k);

} // namespace lingdyn::syntax
