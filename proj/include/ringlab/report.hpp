#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/corpus.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

struct RingReport {
    std::string expr;
    long long order = 0;
    long long characteristic = 0;
    std::string build_error;  // nonempty when the ring could not be built

    std::vector<Verdict> predicates;  // canonical id order, minus skipped ones
    std::vector<std::pair<std::string, std::string>> skipped_predicates;  // id -> reason

    std::optional<ClassificationOutcome> classification;
    std::string classification_skipped;

    std::vector<VerificationRecord> theorems;
};

struct ReportSummary {
    int rings = 0;
    int build_failures = 0;
    std::vector<std::pair<std::string, int>> predicate_true_counts;
    std::vector<std::pair<std::string, int>> case_counts;
    int theorem_records = 0;
    int disagreements = 0;
    int skips = 0;
    double runtime_millis = 0.0;
};

struct ClassificationReport {
    std::vector<RingReport> rings;  // sorted by rendered expression
    ReportSummary summary;
};

struct RunRequest {
    bool predicates = false;
    bool classification = false;
    std::vector<std::string> theorem_ids;
};

// Evaluates the corpus, ring-level parallel (spec.jobs workers), output
// sorted by rendered expression. Determinism: same spec and seed give the
// same report apart from the timing fields.
ClassificationReport run_corpus(const CorpusSpec& spec, const RunRequest& request);

std::string report_to_json(const ClassificationReport& report, const CorpusSpec& spec);
std::string report_to_csv(const ClassificationReport& report);

} // namespace ringlab
