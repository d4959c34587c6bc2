#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dicrit::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs criteria 1..9 against the JSON corpus in `corpus_dir`. The callback,
/// if given, sees each result as soon as it is known.
std::vector<CriterionResult> run_all(const std::string& corpus_dir,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// Directory of the corpus shipped with the sources.
std::string default_corpus_dir();

}  // namespace dicrit::acceptance
