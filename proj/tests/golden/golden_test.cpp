#include <cstring>
#include <iostream>

#include "golden.hpp"

// Usage: golden_test <dir> [--update]
int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: golden_test <dir> [--update]\n";
        return 2;
    }
    bool update = argc > 2 && std::strcmp(argv[2], "--update") == 0;
    int bad = 0;
    auto results = golden::run_all(argv[1], update);
    for (const auto& o : results) {
        if (o.matched) continue;
        ++bad;
        std::cout << "MISMATCH " << o.name << "\n--- expected\n" << o.expected << "--- actual\n" << o.actual;
    }
    std::cout << results.size() - bad << "/" << results.size() << " transcripts match\n";
    return bad == 0 ? 0 : 1;
}
