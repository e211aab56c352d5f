#include "commands.hpp"

#include "lingdyn/collective.hpp"
#include "lingdyn/error.hpp"
#include "lingdyn/fibonacci.hpp"
#include "lingdyn/script.hpp"
#include "lingdyn/serialize.hpp"
#include "lingdyn/thermo.hpp"
#include "lingdyn/xbar_tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace lingdyn::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string emit(const ordered_json& j) { return j.dump() + "\n"; }

double parse_env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    if (*end != '\0' || !std::isfinite(x) || x <= 0.0)
        throw DomainError(std::string(name) + " must be a positive number, got '" + v + "'");
    return x;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// "a:b:c" -> three numbers.
std::array<double, 3> parse_triple(const std::string& s, const char* what) {
    std::array<double, 3> out{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t colon = s.find(':', pos);
        if ((i < 2) == (colon == std::string::npos))
            throw CLI::ValidationError(what, "expected a:b:c, got '" + s + "'");
        const std::string part = s.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        try {
            std::size_t used = 0;
            out[static_cast<std::size_t>(i)] = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError(what, "not a number: '" + part + "'");
        }
        pos = colon + 1;
    }
    return out;
}

ordered_json mode_report_json(const doubled::ModeReport& r, double entropy_scale) {
    ordered_json j;
    j["theta"] = round12(r.theta);
    j["overlap_with_bare"] = round12(r.overlap_with_bare);
    j["number_expectation"] = round12(r.number_expectation);
    j["entropy"] = round12(r.entropy * entropy_scale);
    ordered_json w = ordered_json::array();
    for (double x : r.weights) w.push_back(round12(x));
    j["weights"] = std::move(w);
    j["tail_bound"] = round12(r.tail_bound);
    return j;
}

} // namespace

RunConfig RunConfig::from_environment() {
    RunConfig c;
    const double n = parse_env_double("LINGDYN_N_MAX", c.n_max);
    if (n != std::floor(n) || n > 4096) throw DomainError("LINGDYN_N_MAX must be an integer in [1, 4096]");
    c.n_max = static_cast<int>(n);
    c.tail_tolerance = parse_env_double("LINGDYN_TAIL_TOL", c.tail_tolerance);
    return c;
}

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string tree_json(std::uint32_t depth, bool counts_only, bool symmetric) {
    xbar::GrowOptions opt;
    opt.counts_only = counts_only;
    xbar::FTree tree = xbar::grow(depth, opt);
    if (symmetric) tree = xbar::symmetric(tree);

    ordered_json j;
    j["depth"] = depth;
    j["symmetric"] = symmetric;
    j["counts_only"] = counts_only;
    ordered_json counts = ordered_json::array();
    ordered_json totals = ordered_json::array();
    for (std::uint32_t s = 0; s <= depth; ++s) {
        const xbar::StateCount c = xbar::count_states(tree, s);
        counts.push_back({c.zeros, c.ones});
        totals.push_back(c.total());
    }
    j["counts"] = std::move(counts);
    j["totals"] = std::move(totals);
    ordered_json nodes = ordered_json::array();
    for (const auto& n : tree.nodes()) {
        ordered_json o;
        o["id"] = n.id;
        o["state"] = std::string(xbar::to_string(n.state));
        o["step"] = n.step;
        o["parent"] = n.parent ? ordered_json(*n.parent) : ordered_json(nullptr);
        o["rule"] = n.rule ? ordered_json(std::string(xbar::to_string(*n.rule))) : ordered_json(nullptr);
        nodes.push_back(std::move(o));
    }
    j["nodes"] = std::move(nodes);
    return emit(j);
}

std::string fib_json(std::uint64_t n, bool matrix, bool big) {
    // Written by hand: JSON integers are unbounded but nlohmann stops at 64 bits.
    auto render = [&](auto tag) {
        using Int = decltype(tag);
        std::string s = "{\"n\":" + std::to_string(n);
        if (matrix) {
            const auto m = fibonacci::fib_pow<Int>(n);
            s += ",\"matrix\":[[" + fibonacci::to_string(m.a) + "," + fibonacci::to_string(m.b) + "],[" +
                 fibonacci::to_string(m.c) + "," + fibonacci::to_string(m.d) + "]]";
        } else {
            s += ",\"fib\":" + fibonacci::to_string(fibonacci::fib<Int>(n));
        }
        return s + "}\n";
    };
    return big ? render(fibonacci::BigInt{}) : render(fibonacci::Int128{});
}

std::string dicke_json(std::int64_t n, std::int64_t l, const std::string& op) {
    const collective::DickeState s(n, l);
    ordered_json j;
    j["N"] = n;
    j["l"] = l;
    j["op"] = op;
    auto state = [](const std::optional<collective::DickeState>& st) {
        return st ? ordered_json{{"N", st->n()}, {"l", st->l()}} : ordered_json(nullptr);
    };
    if (op == "sigma+" || op == "sigma-") {
        const auto r = op == "sigma+" ? collective::sigma_plus(s) : collective::sigma_minus(s);
        j["coefficient"] = round12(r.coefficient);
        j["state"] = state(r.state);
    } else if (op == "s3") {
        j["coefficient"] = round12(collective::order_parameter(s));
        j["state"] = state(s);
    } else if (op == "contraction") {
        j["coefficient"] = round12(static_cast<double>(n - 2 * l) / static_cast<double>(n));
        j["state"] = state(s);
    } else {
        throw DomainError("unknown dicke op '" + op + "'");
    }
    j["deviation"] = round12(collective::contraction_deviation(n, l));
    return emit(j);
}

std::string bogoliubov_json(double theta, int modes, bool report, const RunConfig& config,
                            const std::optional<std::string>& concept_tag) {
    if (modes < 1) throw DomainError("bogoliubov: modes must be >= 1");
    const doubled::FockCutoff cutoff = config.cutoff();
    doubled::require_tail(theta, cutoff);
    const doubled::ThetaVacuum vac(std::vector<double>(static_cast<std::size_t>(modes), theta), cutoff, concept_tag);
    const auto reports = vac.reports(config.threads);

    ordered_json j = mode_report_json(reports.front(), 1.0);
    if (!report) j.erase("weights");
    ordered_json v;
    v["modes"] = modes;
    v["concept"] = concept_tag ? ordered_json(*concept_tag) : ordered_json(nullptr);
    v["total_number"] = round12(vac.total_number());
    v["total_entropy"] = round12(vac.total_entropy());
    v["overlap_with_bare"] = round12(vac.overlap_with_bare());
    j["vacuum"] = std::move(v);
    j["n_max"] = cutoff.n_max();
    j["tail_tolerance"] = cutoff.tail_tolerance();
    return emit(j);
}

std::string entropy_sweep(double from, double to, double step, bool bits, bool json, const RunConfig& config) {
    if (!(step > 0.0) || to < from) throw DomainError("entropy: need from <= to and step > 0");
    const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
    if (count > 1000000) throw DomainError("entropy: sweep has more than 10^6 points");
    const doubled::FockCutoff cutoff = config.cutoff();
    const double scale = bits ? 1.0 / std::log(2.0) : 1.0;

    std::ostringstream csv;
    ordered_json rows = ordered_json::array();
    csv << "theta,entropy,number,overlap_with_bare\n";
    for (long i = 0; i < count; ++i) {
        const double theta = from + static_cast<double>(i) * step;
        const doubled::ModeReport r = doubled::mode_report(theta, cutoff);
        const double vals[4] = {round12(theta), round12(r.entropy * scale), round12(r.number_expectation),
                                round12(r.overlap_with_bare)};
        if (json) {
            rows.push_back({{"theta", vals[0]}, {"entropy", vals[1]}, {"number", vals[2]},
                            {"overlap_with_bare", vals[3]}});
        } else {
            char line[128];
            std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n", vals[0], vals[1], vals[2], vals[3]);
            csv << line;
        }
    }
    if (!json) return csv.str();
    ordered_json j;
    j["units"] = bits ? "bits" : "nats";
    j["n_max"] = cutoff.n_max();
    j["rows"] = std::move(rows);
    return emit(j);
}

std::string heat_json(double omega, double beta, double t0, double t1, int steps,
                      std::optional<double> center, double rate, const RunConfig& config) {
    if (!(omega > 0.0) || !(beta > 0.0)) throw DomainError("heat: omega and beta must be positive");
    const double c = center.value_or(doubled::stationary_theta(omega, beta));
    const auto path = doubled::linear_ramp(t0, t1, steps, c, rate);
    const doubled::HeatReport r = doubled::heat_relation_check(path, omega, beta, config.cutoff());
    ordered_json j;
    j["omega"] = omega;
    j["beta"] = beta;
    j["theta_star"] = round12(r.theta_star);
    j["ramp_center"] = round12(c);
    j["crosses_stationary"] = r.crosses_stationary;
    j["residual"] = round12(r.residual);
    j["max_path_residual"] = round12(r.max_path_residual);
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < r.times.size(); ++i)
        samples.push_back({round12(r.times[i]), round12(r.residuals[i])});
    j["samples"] = std::move(samples);
    return emit(j);
}

DeriveOutput derive(const std::string& lexicon_json, const std::string& script_json) {
    auto lexicon = std::make_shared<const syntax::Lexicon>(syntax::Lexicon::from_json(lexicon_json));
    const auto steps = syntax::parse_script(script_json);
    const syntax::ScriptResult r = syntax::run_script(lexicon, steps);
    return {syntax::to_json(r), r.exit_code()};
}

namespace {

int write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return kExitOk;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Error("cannot write " + path);
    return kExitOk;
}

} // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
             const SelftestFn& selftest) {
    RunConfig config;
    try {
        config = RunConfig::from_environment();
    } catch (const Error& e) {
        err << "lingdyn: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"Merge/Phase derivations and doubled-algebra numerics", "lingdyn"};
    app.require_subcommand(1, 1);
    std::string out_path;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write output to this file"); };
    auto add_cutoff = [&](CLI::App* sub) {
        sub->add_option("--n-max", config.n_max, "Per-mode Fock cutoff")->check(CLI::Range(1, 4096));
        sub->add_option("--tail-tol", config.tail_tolerance, "Largest admissible tail bound")
            ->check(CLI::PositiveNumber);
    };

    std::uint32_t depth = 0;
    bool counts_only = false, symmetric = false;
    auto* tree = app.add_subcommand("tree", "Grow the X-bar tree and count states per step");
    tree->add_option("--depth", depth, "Number of forward steps")->required();
    tree->add_flag("--counts-only", counts_only, "Use the count recurrence; emit no nodes");
    tree->add_flag("--symmetric", symmetric, "Exchange |0> and |1>");
    add_out(tree);

    std::uint64_t fib_n = 0;
    bool fib_matrix = false, fib_big = false;
    auto* fib = app.add_subcommand("fib", "Fibonacci numbers from powers of [[1,1],[1,0]]");
    fib->add_option("--n", fib_n, "Index")->required();
    fib->add_flag("--matrix", fib_matrix, "Print F^n instead of F_n");
    fib->add_flag("--big", fib_big, "Arbitrary precision instead of checked 128-bit");
    add_out(fib);

    std::int64_t dicke_n = 0, dicke_l = 0;
    std::string dicke_op;
    auto* dicke = app.add_subcommand("dicke", "Ladder action on the symmetric state |l> of N elements");
    dicke->add_option("--N", dicke_n, "Number of elements")->required();
    dicke->add_option("--l", dicke_l, "Number of excited elements")->required();
    dicke->add_option("--op", dicke_op, "Operator")
        ->required()
        ->check(CLI::IsMember({"sigma+", "sigma-", "s3", "contraction"}));
    add_out(dicke);

    double theta = 0.0;
    int modes = 1;
    bool report = false;
    std::optional<std::string> concept_tag;
    auto* bog = app.add_subcommand("bogoliubov", "Theta-vacuum of the doubled algebra");
    bog->add_option("--theta", theta, "Squeeze parameter")->required();
    bog->add_option("--modes", modes, "Number of modes sharing theta")->check(CLI::PositiveNumber);
    bog->add_flag("--report", report, "Include the weights W_n");
    bog->add_option("--concept", concept_tag, "Tag attached to the theta-set");
    bog->add_option("--parallel-modes", config.threads, "Worker threads for per-mode work")
        ->check(CLI::Range(1u, 256u));
    add_cutoff(bog);
    add_out(bog);

    std::string sweep;
    bool bits = false;
    std::string format = "csv";
    auto* ent = app.add_subcommand("entropy", "Entropy, number and bare overlap over a theta range");
    ent->add_option("--theta-sweep", sweep, "from:to:step")->required();
    ent->add_flag("--bits", bits, "Report entropy in bits instead of nats");
    ent->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_cutoff(ent);
    add_out(ent);

    double omega = 1.0, beta = 1.0, rate = 1.0;
    std::optional<double> center;
    std::string ramp;
    auto* heat = app.add_subcommand("heat", "Check dE = (1/beta) dS along a linear theta ramp");
    heat->add_option("--omega", omega, "Mode frequency")->check(CLI::PositiveNumber);
    heat->add_option("--beta", beta, "Inverse temperature")->check(CLI::PositiveNumber);
    heat->add_option("--ramp", ramp, "t0:t1:steps")->required();
    heat->add_option("--center", center, "Theta at the ramp midpoint (default: stationary theta)");
    heat->add_option("--rate", rate, "d theta / dt");
    add_cutoff(heat);
    add_out(heat);

    std::string lexicon_path, script_path;
    auto* der = app.add_subcommand("derive", "Run a derivation script and transfer the result");
    der->add_option("--lexicon", lexicon_path, "Lexicon JSON")->required();
    der->add_option("--script", script_path, "Derivation script JSON")->required();
    add_out(der);

    bool selftest_json = false;
    auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
    self->add_flag("--json", selftest_json, "Print the results as JSON");

    std::array<double, 3> triple{};
    try {
        app.parse(argc, argv);
        if (ent->parsed()) triple = parse_triple(sweep, "--theta-sweep");
        if (heat->parsed()) {
            triple = parse_triple(ramp, "--ramp");
            if (triple[2] != std::floor(triple[2]) || triple[2] < 3 || triple[2] > 1e6)
                throw CLI::ValidationError("--ramp", "steps must be an integer >= 3");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tree->parsed()) return write_output(tree_json(depth, counts_only, symmetric), out_path, out);
        if (fib->parsed()) return write_output(fib_json(fib_n, fib_matrix, fib_big), out_path, out);
        if (dicke->parsed()) return write_output(dicke_json(dicke_n, dicke_l, dicke_op), out_path, out);
        if (bog->parsed())
            return write_output(bogoliubov_json(theta, modes, report, config, concept_tag), out_path, out);
        if (ent->parsed())
            return write_output(entropy_sweep(triple[0], triple[1], triple[2], bits, format == "json", config),
                                out_path, out);
        if (heat->parsed())
            return write_output(heat_json(omega, beta, triple[0], triple[1], static_cast<int>(triple[2]),
                                          center, rate, config),
                                out_path, out);
        if (der->parsed()) {
            const DeriveOutput r = derive(read_file(lexicon_path), read_file(script_path));
            write_output(r.text, out_path, out);
            return r.exit_code;
        }
        if (self->parsed()) {
            if (!selftest) {
                err << "lingdyn: selftest is not available in this build\n";
                return kExitError;
            }
            return selftest(out, selftest_json);
        }
    } catch (const Error& e) {
        err << "lingdyn: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}

} // namespace lingdyn::cli
