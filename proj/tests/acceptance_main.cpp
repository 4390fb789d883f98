// Verification gate: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exit code 0 only when all pass.

#include <iostream>

#include "freeharm/acceptance.hpp"

int main() {
    const auto results = freeharm::run_acceptance({}, &std::cout);
    const bool ok = freeharm::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "CRITERIA FAILED") << std::endl;
    return ok ? 0 : 1;
}
