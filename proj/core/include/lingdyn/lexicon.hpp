#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lingdyn::syntax {

enum class Sign { PLUS, MINUS };

/// Names admitted as signed binary features.
inline const std::set<std::string, std::less<>> kBinaryFeatures{"N", "V", "H", "C", "T", "Pr", "Ph"};

/// Immutable lexical item.
///
/// Feature strings in the lexicon file take three forms:
///   "+N", "-V" (U+2212 minus is accepted)   signed binary feature
///   "cat:D"                                 category tag, open-ended
///   "agree:...", "pair:..."                 inert annotations, carried but unchecked
///
/// With no category tag the category follows the classic N/V matrix:
/// +N-V -> N, -N+V -> V, +N+V -> A, -N-V -> P.
class LexItem {
public:
    LexItem(std::string id, std::string phon, const std::vector<std::string>& features,
            bool phase_head = false);

    const std::string& id() const { return id_; }
    const std::string& phon() const { return phon_; }
    const std::map<std::string, Sign, std::less<>>& features() const { return features_; }
    const std::vector<std::string>& categories() const { return categories_; }
    const std::vector<std::string>& annotations() const { return annotations_; }

    std::optional<Sign> feature(std::string_view name) const;
    bool has(std::string_view name, Sign sign) const;

    /// First category tag, or empty when the item has none.
    std::string category() const { return categories_.empty() ? std::string{} : categories_.front(); }

    /// Not marked -H. Minimal search only stops at head-eligible items.
    bool head_eligible() const { return !has("H", Sign::MINUS); }
    /// -H +C: a complement, linearized after its head.
    bool complement() const { return has("H", Sign::MINUS) && has("C", Sign::PLUS); }
    /// Non-empty phon and not -Pr.
    bool pronounceable() const { return !phon_.empty() && !has("Pr", Sign::MINUS); }
    /// Explicit phase_head flag or +Ph.
    bool marked_phase_head() const { return phase_head_ || has("Ph", Sign::PLUS); }

    /// Features in lexicon-file notation, deterministic order.
    std::vector<std::string> feature_strings() const;

private:
    std::string id_;
    std::string phon_;
    std::map<std::string, Sign, std::less<>> features_;
    std::vector<std::string> categories_;
    std::vector<std::string> annotations_;
    bool phase_head_;
};

using LexItemPtr = std::shared_ptr<const LexItem>;

class Lexicon {
public:
    Lexicon() = default;
    explicit Lexicon(std::vector<LexItem> items, std::set<std::string> phase_categories = {"C", "v"});

    /// Accepts a bare array of entries or {"phase_categories": [...], "items": [...]}.
    /// Each entry: {id, phon, features: [...], phase_head: bool}. Throws DomainError.
    static Lexicon from_json(std::string_view text);

    LexItemPtr find(std::string_view id) const;
    /// Throws DomainError for an unknown id.
    LexItemPtr at(std::string_view id) const;
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    const std::set<std::string>& phase_categories() const { return phase_categories_; }
    bool is_phase_head(const LexItem& item) const;
    std::size_t size() const { return items_.size(); }
    std::vector<LexItemPtr> items() const;

private:
    std::map<std::string, LexItemPtr, std::less<>> items_;
    std::set<std::string> phase_categories_{"C", "v"};
};

} // namespace lingdyn::syntax
