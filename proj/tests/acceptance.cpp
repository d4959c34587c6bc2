#include "dicrit/corpus/acceptance.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv)
{
    const std::string dir = argc > 1 ? argv[1] : dicrit::acceptance::default_corpus_dir();
    int failed = 0;
    double total = 0;
    dicrit::acceptance::run_all(dir, [&](const dicrit::acceptance::CriterionResult& r) {
        std::printf("%s criterion %d: %s (%s) [%.2fs]\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        failed += r.pass ? 0 : 1;
        total += r.seconds;
    });
    std::printf("%d of 9 criteria failed, %.2fs total\n", failed, total);
    return failed == 0 ? 0 : 1;
}
