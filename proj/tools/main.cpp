#include "commands.hpp"

#include "criteria.hpp"

#include <iostream>

int main(int argc, char** argv) {
    auto selftest = [](std::ostream& out, bool json) {
        const auto results = lingdyn::acceptance::run_all(LINGDYN_DATA_DIR);
        if (json)
            out << lingdyn::acceptance::to_json(results);
        else
            lingdyn::acceptance::print_table(results, out);
        return lingdyn::acceptance::all_passed(results) ? 0 : 1;
    };
    return lingdyn::cli::dispatch(argc, argv, std::cout, std::cerr, selftest);
}
