// One line per acceptance criterion; exits non-zero if any fails.

#include <iostream>

#include "powersum/verify.hpp"

int main() {
    powersum::verify::Options opts;
    opts.golden_dir = POWERSUM_GOLDEN_DIR;
    bool all = true;
    for (int k = 1; k <= powersum::verify::kCriteria; ++k) {
        const auto r = powersum::verify::run(k, opts);
        std::cout << r.to_line() << std::endl;
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
