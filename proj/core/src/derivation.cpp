#include "lingdyn/derivation.hpp"

#include "lingdyn/error.hpp"
#include "lingdyn/labeling.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace lingdyn::syntax {

namespace {

std::string describe(const Path& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

Path child(const Path& p, std::uint8_t i) {
    Path q = p;
    q.push_back(i);
    return q;
}

Path suffix(const Path& p, std::size_t from) { return Path(p.begin() + static_cast<long>(from), p.end()); }

} // namespace

Derivation::Derivation(std::shared_ptr<const Lexicon> lexicon) : lexicon_(std::move(lexicon)) {
    if (!lexicon_) throw DomainError("Derivation: null lexicon");
}

const SynObj& Derivation::last() const {
    if (!last_.valid()) throw DerivationError("no object has been built yet");
    return last_;
}

const SynObj& Derivation::named(const std::string& name) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw DerivationError("unknown name '" + name + "'");
    return it->second;
}

bool Derivation::is_root(const SynObj& so) const {
    return std::any_of(workspace_.begin(), workspace_.end(),
                       [&](const SynObj& r) { return r.same_object(so); });
}

const PhaseRecord* Derivation::closed_phase(Uid uid) const {
    for (const auto& r : phases_)
        if (r.phase == uid) return &r;
    return nullptr;
}

void Derivation::bind(const std::string& name, const SynObj& so) {
    last_ = so;
    if (!name.empty()) names_[name] = so;
}

bool Derivation::impenetrable(const SynObj& root, const Path& path) const {
    SynObj cur = root;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (const PhaseRecord* r = closed_phase(cur.uid())) {
            const Path rel = suffix(path, k);
            if (r->complement && starts_with(rel, *r->complement)) return true;
            if (!r->edge_open) return true;
        }
        cur = cur.member(path[k]);
    }
    return false;
}

Derivation external_merge(const Derivation& d, const Operand& a, const Operand& b,
                          const std::string& name) {
    Derivation out = d;
    LogEntry entry;
    entry.op = OpKind::EM;
    entry.name = name;

    std::vector<SynObj> consumed;
    auto resolve = [&](const Operand& op) -> SynObj {
        if (const auto* sel = std::get_if<Selection>(&op)) {
            SynObj leaf = SynObj::leaf(d.lexicon().at(sel->lex_id), out.fresh_uid());
            entry.operands.push_back({true, sel->lex_id, leaf.uid()});
            return leaf;
        }
        const SynObj& so = std::get<SynObj>(op);
        if (!so.valid()) throw DerivationError("EM: invalid operand");
        if (!d.is_root(so)) {
            for (const auto& r : d.workspace())
                if (!occurrences(r, so.uid()).empty())
                    throw DerivationError("EM: " + so.canonical() +
                                          " is a term of a workspace object; use Internal Merge");
            throw DerivationError("EM: " + so.canonical() + " is not in the workspace");
        }
        entry.operands.push_back({false, {}, so.uid()});
        consumed.push_back(so);
        return so;
    };

    const SynObj x = resolve(a);
    const SynObj y = resolve(b);
    if (x.same_object(y)) throw DerivationError("EM: cannot merge an object with itself");
    const SynObj merged = SynObj::pair(x, y, out.fresh_uid());
    assert(merged.member(0).same_object(x) && merged.member(1).same_object(y));

    auto& ws = out.workspace_;
    ws.erase(std::remove_if(ws.begin(), ws.end(),
                            [&](const SynObj& r) {
                                return std::any_of(consumed.begin(), consumed.end(),
                                                   [&](const SynObj& c) { return c.same_object(r); });
                            }),
             ws.end());
    ws.push_back(merged);
    entry.result = merged.uid();
    out.log_.push_back(entry);
    out.bind(name, merged);
    return out;
}

Derivation internal_merge(const Derivation& d, const SynObj& root, const Path& path,
                          const std::string& name) {
    if (!d.is_root(root)) throw DerivationError("IM: target is not a workspace root");
    if (path.empty()) throw DerivationError("IM: the root itself is not a proper term");
    SynObj term;
    try {
        term = at(root, path);
    } catch (const DomainError&) {
        throw DerivationError("IM: path " + describe(path) + " is not a term of the root");
    }
    if (d.impenetrable(root, path))
        throw PhaseImpenetrabilityError("IM: " + term.canonical() + " at " + describe(path) +
                                        " is inside a closed phase");

    Derivation out = d;
    const SynObj merged = SynObj::pair(term, root, out.fresh_uid());
    assert(merged.member(1).same_object(root));
    for (auto& r : out.workspace_)
        if (r.same_object(root)) r = merged;
    out.log_.push_back({OpKind::IM, {{false, {}, root.uid()}}, path, merged.uid(), name});
    out.bind(name, merged);
    return out;
}

Derivation internal_merge(const Derivation& d, const SynObj& root, const SynObj& term,
                          const std::string& name) {
    if (!d.is_root(root)) throw DerivationError("IM: target is not a workspace root");
    std::vector<Path> paths = occurrences(root, term.uid());
    // Uids are per derivation, so an outside object may share one.
    std::erase_if(paths, [&](const Path& p) { return p.empty() || !at(root, p).same_object(term); });
    if (paths.empty()) {
        if (root.uid() == term.uid()) throw DerivationError("IM: the root itself is not a proper term");
        throw DerivationError("IM: " + term.canonical() + " is not a term of the root");
    }
    std::stable_sort(paths.begin(), paths.end(),
                     [](const Path& x, const Path& y) { return x.size() < y.size(); });
    for (const auto& p : paths)
        if (!d.impenetrable(root, p)) return internal_merge(d, root, p, name);
    throw PhaseImpenetrabilityError("IM: every occurrence of " + term.canonical() +
                                    " is inside a closed phase");
}

PhaseRecord phase_anatomy(const SynObj& root, const Lexicon& lexicon) {
    CopyContext ctx(root);
    Labeler labeler(ctx);
    auto phase_label = [&](const Path& p) {
        try {
            const Label& l = labeler.label(p);
            return std::any_of(l.prominent.begin(), l.prominent.end(),
                               [&](const std::string& c) { return lexicon.phase_categories().contains(c); });
        } catch (const UnlabelableError&) {
            return false;
        }
    };

    std::function<std::optional<PhaseRecord>(const Path&, std::vector<Path>)> search =
        [&](const Path& cur, std::vector<Path> edge) -> std::optional<PhaseRecord> {
        const SynObj so = at(root, cur);
        if (so.is_leaf()) {
            if (!lexicon.is_phase_head(so.item())) return std::nullopt;
            edge.push_back(cur);
            return PhaseRecord{root.uid(), cur, std::nullopt, edge, true};
        }
        std::vector<std::uint8_t> visible;
        for (std::uint8_t i = 0; i < 2; ++i)
            if (!ctx.is_lower(child(cur, i))) visible.push_back(i);
        if (visible.size() == 1) {
            edge.push_back(child(cur, 1 - visible.front()));
            return search(child(cur, visible.front()), edge);
        }
        if (visible.empty()) return std::nullopt;

        const SynObj& a = so.member(0);
        const SynObj& b = so.member(1);
        auto head = [](const SynObj& s) { return s.is_leaf() && s.item().head_eligible(); };
        auto phase_head = [&](const SynObj& s) { return head(s) && lexicon.is_phase_head(s.item()); };

        if (head(a) || head(b)) {
            std::uint8_t h = head(a) ? 0 : 1;
            if (head(a) && head(b) && !phase_head(a) && phase_head(b)) h = 1;
            if (!phase_head(so.member(h))) return std::nullopt;
            edge.push_back(child(cur, h));
            return PhaseRecord{root.uid(), child(cur, h), child(cur, 1 - h), edge, true};
        }
        if (a.is_leaf() != b.is_leaf()) {
            const std::uint8_t spec = a.is_leaf() ? 0 : 1;
            edge.push_back(child(cur, spec));
            return search(child(cur, 1 - spec), edge);
        }
        // Two phrases: follow the one whose label is a phase category first.
        std::vector<std::uint8_t> order{0, 1};
        if (!phase_label(child(cur, 0)) && phase_label(child(cur, 1))) order = {1, 0};
        for (std::uint8_t i : order) {
            std::vector<Path> e = edge;
            e.push_back(child(cur, 1 - i));
            if (auto r = search(child(cur, i), e)) return r;
        }
        return std::nullopt;
    };

    auto r = search({}, {});
    if (!r) throw DerivationError("close_phase: " + root.canonical() + " is not headed by a phase head");
    return *r;
}

Derivation close_phase(const Derivation& d, const SynObj& root) {
    if (!d.is_root(root)) throw DerivationError("close_phase: target is not a workspace root");
    if (d.phase_closed(root)) return d;
    PhaseRecord rec = phase_anatomy(root, d.lexicon());
    Derivation out = d;
    for (auto& r : out.phases_) r.edge_open = false;
    out.phases_.push_back(std::move(rec));
    out.log_.push_back({OpKind::CLOSE, {{false, {}, root.uid()}}, {}, root.uid(), {}});
    out.last_ = root;
    return out;
}

Derivation record_transfer(const Derivation& d, const SynObj& root) {
    if (!d.is_root(root)) throw DerivationError("transfer: target is not a workspace root");
    Derivation out = d;
    out.log_.push_back({OpKind::TRANSFER, {{false, {}, root.uid()}}, {}, root.uid(), {}});
    out.last_ = root;
    return out;
}

Derivation replay(std::shared_ptr<const Lexicon> lexicon, const std::vector<LogEntry>& log) {
    Derivation d(std::move(lexicon));
    auto root_by_uid = [&](Uid uid) -> SynObj {
        for (const auto& r : d.workspace())
            if (r.uid() == uid) return r;
        throw DerivationError("replay: no workspace root with uid " + std::to_string(uid));
    };
    auto operand = [&](const LogEntry::Ref& ref) -> Operand {
        if (ref.lexical) return Selection{ref.lex_id};
        return root_by_uid(ref.uid);
    };
    for (const auto& e : log) {
        switch (e.op) {
        case OpKind::EM:
            if (e.operands.size() != 2) throw DerivationError("replay: EM needs two operands");
            d = external_merge(d, operand(e.operands[0]), operand(e.operands[1]), e.name);
            break;
        case OpKind::IM:
            d = internal_merge(d, root_by_uid(e.operands.at(0).uid), e.term, e.name);
            break;
        case OpKind::CLOSE: d = close_phase(d, root_by_uid(e.operands.at(0).uid)); break;
        case OpKind::TRANSFER: d = record_transfer(d, root_by_uid(e.operands.at(0).uid)); break;
        }
        if (!d.log().empty() && d.log().back().result != e.result)
            throw DerivationError("replay: log does not reproduce its own uids");
    }
    return d;
}

bool equivalent(const Derivation& a, const Derivation& b) {
    const auto& wa = a.workspace();
    const auto& wb = b.workspace();
    if (wa.size() != wb.size()) return false;
    for (std::size_t i = 0; i < wa.size(); ++i) {
        if (wa[i].uid() != wb[i].uid() || wa[i].canonical() != wb[i].canonical()) return false;
        CopyContext ca(wa[i]);
        CopyContext cb(wb[i]);
        if (ca.classes() != cb.classes()) return false;
    }
    if (a.phases().size() != b.phases().size()) return false;
    for (std::size_t i = 0; i < a.phases().size(); ++i) {
        const auto& p = a.phases()[i];
        const auto& q = b.phases()[i];
        if (p.phase != q.phase || p.head != q.head || p.complement != q.complement ||
            p.edge_open != q.edge_open)
            return false;
    }
    return true;
}

std::string_view to_string(OpKind k) {
    switch (k) {
    case OpKind::EM: return "em";
    case OpKind::IM: return "im";
    case OpKind::CLOSE: return "close";
    case OpKind::TRANSFER: return "transfer";
    }
    return "?";
}

} // namespace lingdyn::syntax
