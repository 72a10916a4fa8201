// Acceptance suite: runs every criterion of the property checklist and
// prints one pass/fail line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>

#include "braidinv/selftest.hpp"

int main() {
    const auto started = std::chrono::steady_clock::now();
    const auto results = braidinv::run_selftest();
    bool all = true;
    int index = 0;
    for (const auto& r : results) {
        ++index;
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << index << " [" << r.name
                  << "]: " << r.detail << "\n";
        all = all && r.passed;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cout << (all ? "ACCEPTED" : "REJECTED") << " (" << results.size() << " criteria, "
              << elapsed << " ms)\n";
    return all ? 0 : 1;
}
