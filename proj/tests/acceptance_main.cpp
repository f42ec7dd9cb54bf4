// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff every
// executed criterion passed. Run a single criterion with --criterion N.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "pinchlab/verify.hpp"

int main(int argc, char** argv) {
    pinchlab::verify::Options opt;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--g") && i + 1 < argc)
            opt.g_max = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::fprintf(stderr, "usage: acceptance [--criterion N] [--g G] [--seed S]\n");
            return 2;
        }
    }

    std::vector<int> todo;
    if (only > 0)
        todo.push_back(only);
    else
        for (int i = 1; i <= pinchlab::verify::n_criteria(); ++i) todo.push_back(i);

    bool all_pass = true;
    for (int idx : todo) {
        auto r = pinchlab::verify::run_criterion(idx, opt);
        std::printf("criterion %02d [%s]: %s (%.2fs)\n", r.criterion, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds);
        if (!r.pass) {
            std::printf("  details: %s\n", r.details.dump().c_str());
            all_pass = false;
        }
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
