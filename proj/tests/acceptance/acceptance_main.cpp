// One line per acceptance criterion; exit status 0 only if all pass.

#include "criteria.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

lingdyn::acceptance::Outcome selftest_criterion() {
    lingdyn::acceptance::Outcome o{10, "CLI selftest runs 1-9 and exits 0", false, {}, 0.0, 180.0};
    const std::string cli = LINGDYN_CLI_PATH;
    if (cli.empty()) {
        o.detail = "CLI was not built (LINGDYN_BUILD_TOOLS=OFF)";
        return o;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const int status = std::system(("'" + cli + "' selftest > /dev/null 2>&1").c_str());
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const int code = status == -1 ? -1 : WIFEXITED(status) ? WEXITSTATUS(status) : 128;
    o.passed = code == 0 && o.seconds < o.budget_seconds;
    o.detail = "lingdyn selftest exit code " + std::to_string(code);
    return o;
}

} // namespace

int main(int argc, char** argv) {
    std::string data_dir = LINGDYN_DATA_DIR;
    bool skip_cli = false;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--skip-cli") skip_cli = true;
        else data_dir = a;
    }
    auto results = lingdyn::acceptance::run_all(data_dir);
    for (const auto& r : results) std::cout << lingdyn::acceptance::format_line(r) << std::endl;
    if (!skip_cli) {
        results.push_back(selftest_criterion());
        std::cout << lingdyn::acceptance::format_line(results.back()) << std::endl;
    }
    const bool ok = lingdyn::acceptance::all_passed(results);
    std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
    return ok ? 0 : 1;
}
