#pragma once

#include "lingdyn/derivation.hpp"
#include "lingdyn/labeling.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lingdyn::syntax {

/// Which occurrence of a copy class is spelled out.
enum class Pronunciation {
    HIGHEST, ///< shallowest occurrence, ties broken leftmost
    LOWEST,  ///< deepest occurrence, ties broken leftmost
    ALL,     ///< every occurrence
};

/// Decides the order of the two members of a set at externalization.
class Linearization {
public:
    virtual ~Linearization() = default;
    /// Index of the member pronounced first.
    virtual std::size_t first(const SynObj& set, const Path& where, const CopyContext& ctx) const = 0;
};

/// Specifier before head before complement.
///
/// A head-eligible lexical item precedes its sister unless the sister is a
/// non-complement lexical item (-H without +C), which is a specifier. Between
/// two phrases the moved one (a member of a copy class) is the specifier;
/// otherwise the smaller phrase goes first, then canonical order.
class SpecHeadComplement : public Linearization {
public:
    std::size_t first(const SynObj& set, const Path& where, const CopyContext& ctx) const override;
};

struct TransferOptions {
    Pronunciation pronunciation = Pronunciation::HIGHEST;
    std::shared_ptr<const Linearization> linearization;
    /// Throw UnlabelableError instead of recording failures on LF nodes.
    bool strict = true;
};

/// One LF position. Members are in canonical order: LF carries no linear order.
struct LfNode {
    Uid uid = 0;
    std::string lex_id;
    std::string phon;
    std::optional<std::string> label;
    std::optional<LabelKind> label_kind;
    std::string label_error;
    bool lower_copy = false;
    bool silent = false;
    std::size_t class_size = 1;
    std::vector<LfNode> members;
};

struct PfToken {
    std::string phon;
    std::string lex_id;
    Uid uid = 0;
};

struct TransferOutput {
    LfNode lf;
    std::vector<PfToken> pf;
    /// Canonical forms of sets that failed labeling, in preorder.
    std::vector<std::string> failures;

    std::string pf_string() const;
    std::vector<std::string> pf_words() const;
    /// LF positions holding this copy class.
    std::size_t lf_occurrences(Uid uid) const;
    /// Of those, how many are spelled out.
    std::size_t pronounced_occurrences(Uid uid) const;
    bool labeled() const { return failures.empty(); }
};

/// Labels every LF node and externalizes `root`. With strict options a
/// labeling failure throws UnlabelableError (the derivation crashes).
TransferOutput transfer(const SynObj& root, const TransferOptions& options = {});

/// Checks that `root` is in the workspace and records the transfer in the
/// log. Returns the updated derivation alongside the output.
std::pair<Derivation, TransferOutput> transfer(const Derivation& d, const SynObj& root,
                                               const TransferOptions& options = {});

std::string_view to_string(Pronunciation p);
/// Throws DomainError for an unknown name.
Pronunciation pronunciation_from_string(std::string_view s);

} // namespace lingdyn::syntax
