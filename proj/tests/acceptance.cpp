// One line per acceptance criterion; exit status 1 if any fails.

#include "tfspec/verify.hpp"

#include <iostream>

int main() {
    bool ok = true;
    for (int id = 1; id <= tfspec::kCriterionCount; ++id) {
        const auto r = tfspec::run_criterion(id);
        std::cout << tfspec::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
