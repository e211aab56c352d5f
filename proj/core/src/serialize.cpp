#include "lingdyn/serialize.hpp"

#include <json.hpp>

namespace lingdyn::syntax {

namespace {

using nlohmann::json;

json path_json(const Path& p) {
    json a = json::array();
    for (auto i : p) a.push_back(static_cast<int>(i));
    return a;
}

json lf_json(const LfNode& n) {
    json j;
    j["uid"] = n.uid;
    j["label"] = n.label ? json(*n.label) : json(nullptr);
    if (n.label_kind) j["label_kind"] = std::string(to_string(*n.label_kind));
    if (!n.label_error.empty()) j["label_error"] = n.label_error;
    j["silent"] = n.silent;
    j["lower_copy"] = n.lower_copy;
    j["occurrences"] = n.class_size;
    if (n.members.empty()) {
        j["lex"] = n.lex_id;
        j["phon"] = n.phon;
    } else {
        json m = json::array();
        for (const auto& c : n.members) m.push_back(lf_json(c));
        j["members"] = std::move(m);
    }
    return j;
}

json pf_json(const TransferOutput& out) {
    json a = json::array();
    for (const auto& t : out.pf) a.push_back(t.phon);
    return a;
}

json log_json(const std::vector<LogEntry>& log) {
    json a = json::array();
    for (const auto& e : log) {
        json j;
        j["op"] = std::string(to_string(e.op));
        json ops = json::array();
        for (const auto& r : e.operands) {
            json o;
            if (r.lexical) o["lex"] = r.lex_id;
            o["uid"] = r.uid;
            ops.push_back(std::move(o));
        }
        j["operands"] = std::move(ops);
        if (e.op == OpKind::IM) j["path"] = path_json(e.term);
        j["result"] = e.result;
        if (!e.name.empty()) j["as"] = e.name;
        a.push_back(std::move(j));
    }
    return a;
}

} // namespace

std::string to_json(const LfNode& lf, int indent) { return lf_json(lf).dump(indent); }

std::string to_json(const TransferOutput& out, int indent) {
    json j;
    j["lf"] = lf_json(out.lf);
    j["pf"] = pf_json(out);
    j["pf_string"] = out.pf_string();
    return j.dump(indent);
}

std::string to_json(const std::vector<LogEntry>& log, int indent) { return log_json(log).dump(indent); }

std::string to_json(const ScriptResult& r, int indent) {
    json j;
    j["status"] = r.converged() ? "converged" : "crashed";
    j["lf"] = r.output ? lf_json(r.output->lf) : json(nullptr);
    j["pf"] = r.output ? pf_json(*r.output) : json::array();
    j["pf_string"] = r.output ? r.output->pf_string() : std::string{};
    j["log"] = log_json(r.derivation.log());
    json errs = json::array();
    for (const auto& e : r.errors)
        errs.push_back({{"step", e.step}, {"op", e.op}, {"reason", e.reason}, {"message", e.message}});
    j["errors"] = std::move(errs);
    return j.dump(indent) + "\n";
}

} // namespace lingdyn::syntax
