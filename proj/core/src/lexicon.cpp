#include "lingdyn/lexicon.hpp"

#include "lingdyn/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace lingdyn::syntax {

namespace {

constexpr std::string_view kUnicodeMinus = "−";

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

} // namespace

LexItem::LexItem(std::string id, std::string phon, const std::vector<std::string>& features,
                 bool phase_head)
    : id_(std::move(id)), phon_(std::move(phon)), phase_head_(phase_head) {
    if (id_.empty()) throw DomainError("LexItem: empty id");
    for (const std::string& raw : features) {
        std::string_view f = raw;
        if (starts_with(f, "cat:")) {
            std::string cat{f.substr(4)};
            if (cat.empty()) throw DomainError("LexItem " + id_ + ": empty category tag");
            if (std::find(categories_.begin(), categories_.end(), cat) == categories_.end())
                categories_.push_back(std::move(cat));
            continue;
        }
        if (starts_with(f, "agree:") || starts_with(f, "pair:")) {
            annotations_.emplace_back(f);
            continue;
        }
        Sign sign;
        if (starts_with(f, "+")) {
            sign = Sign::PLUS;
            f.remove_prefix(1);
        } else if (starts_with(f, "-")) {
            sign = Sign::MINUS;
            f.remove_prefix(1);
        } else if (starts_with(f, kUnicodeMinus)) {
            sign = Sign::MINUS;
            f.remove_prefix(kUnicodeMinus.size());
        } else {
            throw DomainError("LexItem " + id_ + ": unrecognized feature '" + raw + "'");
        }
        if (!kBinaryFeatures.contains(f))
            throw DomainError("LexItem " + id_ + ": unknown binary feature '" + raw + "'");
        auto [it, inserted] = features_.emplace(std::string{f}, sign);
        if (!inserted && it->second != sign)
            throw DomainError("LexItem " + id_ + ": both signs given for feature " + std::string{f});
    }
    if (categories_.empty()) {
        const auto n = feature("N");
        const auto v = feature("V");
        if (n && v) {
            const bool pn = *n == Sign::PLUS;
            const bool pv = *v == Sign::PLUS;
            categories_.push_back(pn ? (pv ? "A" : "N") : (pv ? "V" : "P"));
        }
    }
}

std::optional<Sign> LexItem::feature(std::string_view name) const {
    const auto it = features_.find(name);
    if (it == features_.end()) return std::nullopt;
    return it->second;
}

bool LexItem::has(std::string_view name, Sign sign) const {
    const auto s = feature(name);
    return s && *s == sign;
}

std::vector<std::string> LexItem::feature_strings() const {
    std::vector<std::string> out;
    for (const auto& [name, sign] : features_) out.push_back((sign == Sign::PLUS ? "+" : "-") + name);
    for (const auto& c : categories_) out.push_back("cat:" + c);
    for (const auto& a : annotations_) out.push_back(a);
    return out;
}

Lexicon::Lexicon(std::vector<LexItem> items, std::set<std::string> phase_categories)
    : phase_categories_(std::move(phase_categories)) {
    for (LexItem& item : items) {
        const std::string id = item.id();
        auto ptr = std::make_shared<const LexItem>(std::move(item));
        if (!items_.emplace(id, std::move(ptr)).second)
            throw DomainError("Lexicon: duplicate id '" + id + "'");
    }
}

Lexicon Lexicon::from_json(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("lexicon: invalid JSON: ") + e.what());
    }
    std::set<std::string> phase_categories{"C", "v"};
    const json* entries = &doc;
    if (doc.is_object()) {
        if (doc.contains("phase_categories"))
            phase_categories = doc.at("phase_categories").get<std::set<std::string>>();
        if (!doc.contains("items")) throw DomainError("lexicon: object form needs an 'items' array");
        entries = &doc.at("items");
    }
    if (!entries->is_array()) throw DomainError("lexicon: expected an array of entries");

    std::vector<LexItem> items;
    for (const json& e : *entries) {
        try {
            items.emplace_back(e.at("id").get<std::string>(), e.value("phon", std::string{}),
                               e.value("features", std::vector<std::string>{}),
                               e.value("phase_head", false));
        } catch (const json::exception& ex) {
            throw DomainError(std::string("lexicon: malformed entry: ") + ex.what());
        }
    }
    return Lexicon(std::move(items), std::move(phase_categories));
}

LexItemPtr Lexicon::find(std::string_view id) const {
    const auto it = items_.find(id);
    return it == items_.end() ? nullptr : it->second;
}

LexItemPtr Lexicon::at(std::string_view id) const {
    LexItemPtr p = find(id);
    if (!p) throw DomainError("Lexicon: unknown item '" + std::string{id} + "'");
    return p;
}

bool Lexicon::is_phase_head(const LexItem& item) const {
    if (item.marked_phase_head()) return true;
    return std::any_of(item.categories().begin(), item.categories().end(),
                       [&](const std::string& c) { return phase_categories_.contains(c); });
}

std::vector<LexItemPtr> Lexicon::items() const {
    std::vector<LexItemPtr> out;
    for (const auto& [id, p] : items_) out.push_back(p);
    return out;
}

} // namespace lingdyn::syntax
