#include "lingdyn/script.hpp"

#include "lingdyn/error.hpp"

#include <json.hpp>

namespace lingdyn::syntax {

namespace {

using nlohmann::json;

OpKind parse_op(const std::string& s) {
    if (s == "em") return OpKind::EM;
    if (s == "im") return OpKind::IM;
    if (s == "close") return OpKind::CLOSE;
    if (s == "transfer") return OpKind::TRANSFER;
    throw DomainError("script: unknown op '" + s + "'");
}

ScriptArg parse_arg(const json& j) {
    ScriptArg a;
    if (j.is_string()) {
        a.text = j.get<std::string>();
        if (a.text == "_") a.kind = ScriptArg::Kind::LAST;
        return a;
    }
    if (!j.is_object() || j.size() != 1) throw DomainError("script: bad operand " + j.dump());
    if (j.contains("name")) {
        a.kind = ScriptArg::Kind::NAME;
        a.text = j.at("name").get<std::string>();
    } else if (j.contains("lex")) {
        a.kind = ScriptArg::Kind::LEX;
        a.text = j.at("lex").get<std::string>();
    } else if (j.contains("path")) {
        a.kind = ScriptArg::Kind::PATH;
        for (const auto& i : j.at("path")) {
            const int v = i.get<int>();
            if (v != 0 && v != 1) throw DomainError("script: path entries are 0 or 1");
            a.path.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        throw DomainError("script: bad operand " + j.dump());
    }
    return a;
}

std::size_t arity(OpKind op) { return op == OpKind::EM || op == OpKind::IM ? 2 : 1; }

} // namespace

std::vector<ScriptStep> parse_script(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("script: ") + e.what());
    }
    const json& list = doc.is_object() && doc.contains("steps") ? doc.at("steps") : doc;
    if (!list.is_array()) throw DomainError("script: expected an array of steps");

    std::vector<ScriptStep> steps;
    try {
        for (const auto& j : list) {
            ScriptStep s;
            s.op = parse_op(j.at("op").get<std::string>());
            if (j.contains("args")) {
                for (const auto& a : j.at("args")) s.args.push_back(parse_arg(a));
            } else {
                for (const char* key : {"a", "b"})
                    if (j.contains(key)) s.args.push_back(parse_arg(j.at(key)));
            }
            if (s.args.empty() && arity(s.op) == 1) s.args.push_back({ScriptArg::Kind::LAST, {}, {}});
            if (s.args.size() != arity(s.op))
                throw DomainError("script: op '" + std::string(to_string(s.op)) + "' takes " +
                                  std::to_string(arity(s.op)) + " operand(s)");
            if (s.op != OpKind::IM && s.args.back().kind == ScriptArg::Kind::PATH)
                throw DomainError("script: path operands are only valid as an IM term");
            if (s.args.front().kind == ScriptArg::Kind::PATH)
                throw DomainError("script: the first operand cannot be a path");
            if (j.contains("as")) s.name = j.at("as").get<std::string>();
            if (j.contains("pronounce")) s.pronunciation = pronunciation_from_string(j.at("pronounce").get<std::string>());
            steps.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("script: ") + e.what());
    }
    return steps;
}

namespace {

SynObj resolve_object(const Derivation& d, const ScriptArg& a) {
    switch (a.kind) {
    case ScriptArg::Kind::LAST: return d.last();
    case ScriptArg::Kind::NAME:
    case ScriptArg::Kind::AUTO: return d.named(a.text);
    default: throw DerivationError("operand '" + a.text + "' does not name an object");
    }
}

Operand resolve_operand(const Derivation& d, const ScriptArg& a) {
    if (a.kind == ScriptArg::Kind::LEX) return Selection{a.text};
    if (a.kind == ScriptArg::Kind::AUTO && !d.has_name(a.text)) {
        if (!d.lexicon().contains(a.text))
            throw DerivationError("'" + a.text + "' is neither a bound name nor a lexicon id");
        return Selection{a.text};
    }
    return resolve_object(d, a);
}

} // namespace

ScriptResult run_script(std::shared_ptr<const Lexicon> lexicon, const std::vector<ScriptStep>& steps) {
    ScriptResult r{Derivation(std::move(lexicon)), std::nullopt, {}};
    bool transferred = false;

    auto do_transfer = [&](const SynObj& root, Pronunciation p) {
        TransferOptions opt;
        opt.pronunciation = p;
        opt.strict = false;
        auto [next, out] = transfer(r.derivation, root, opt);
        r.derivation = std::move(next);
        if (!out.labeled())
            throw UnlabelableError("transfer: cannot label " + out.failures.front());
        r.output = std::move(out);
    };

    std::size_t i = 0;
    std::string op;
    try {
        for (; i < steps.size(); ++i) {
            const ScriptStep& s = steps[i];
            op = to_string(s.op);
            Derivation& d = r.derivation;
            switch (s.op) {
            case OpKind::EM:
                d = external_merge(d, resolve_operand(d, s.args[0]), resolve_operand(d, s.args[1]), s.name);
                break;
            case OpKind::IM: {
                const SynObj root = resolve_object(d, s.args[0]);
                if (s.args[1].kind == ScriptArg::Kind::PATH)
                    d = internal_merge(d, root, s.args[1].path, s.name);
                else
                    d = internal_merge(d, root, resolve_object(d, s.args[1]), s.name);
                break;
            }
            case OpKind::CLOSE: d = close_phase(d, resolve_object(d, s.args[0])); break;
            case OpKind::TRANSFER:
                transferred = true;
                do_transfer(resolve_object(d, s.args[0]), s.pronunciation);
                break;
            }
        }
        if (!transferred) {
            op = "transfer";
            do_transfer(r.derivation.last(), Pronunciation::HIGHEST);
        }
    } catch (const UnlabelableError& e) {
        // Keep the LF so the failing nodes can be inspected.
        TransferOptions opt;
        opt.strict = false;
        if (r.derivation.log().empty() == false && r.derivation.log().back().op == OpKind::TRANSFER) {
            for (const auto& root : r.derivation.workspace())
                if (root.uid() == r.derivation.log().back().result) r.output = transfer(root, opt);
        }
        r.errors.push_back({i, op, e.reason(), e.what()});
    } catch (const DerivationCrash& e) {
        r.errors.push_back({i, op, e.reason(), e.what()});
    } catch (const DerivationError& e) {
        r.errors.push_back({i, op, "illegal_operation", e.what()});
    } catch (const DomainError& e) {
        r.errors.push_back({i, op, "domain_error", e.what()});
    }
    return r;
}

} // namespace lingdyn::syntax
