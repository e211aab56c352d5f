#include "lingdyn/fibonacci.hpp"

#include <algorithm>

namespace lingdyn::fibonacci {

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    // magnitude via unsigned to cover the minimum value
    UInt128 mag = negative ? static_cast<UInt128>(-(v + 1)) + 1u : static_cast<UInt128>(v);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10u)));
        mag /= 10u;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace lingdyn::fibonacci
