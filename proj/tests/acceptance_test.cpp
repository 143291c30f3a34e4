// Runs acceptance criteria 1-8 and prints one line per criterion.

#include <cstdio>
#include <iostream>

#include <tame/acceptance.hpp>

int main()
{
    tame::acceptance::Options opts;
    opts.corpus_dir = std::string(TAME_SOURCE_DIR) + "/corpus";
    const auto run = tame::acceptance::run_acceptance(opts);
    bool all = true;
    for (const auto &c : run.results) {
        std::printf("criterion %d %-28s %s  (%d instances, %d failures, %.1f s)%s%s\n", c.id, c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.instances, c.failures, c.seconds, c.detail.empty() ? "" : "  ",
                    c.detail.c_str());
        all = all && c.passed;
    }
    return all ? 0 : 1;
}
