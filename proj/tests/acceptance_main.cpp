#include <iostream>

#include "acceptance.hpp"

int main() {
    bool all = true;
    nyldon::acceptance::run_all({}, [&](const nyldon::acceptance::CriterionResult& r) {
        all = all && r.passed;
        std::cout << nyldon::acceptance::format(r) << std::endl;
    });
    return all ? 0 : 1;
}
