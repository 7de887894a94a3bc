#include "ringlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace ringlab {

namespace {

RingReport evaluate_ring(const ExprPtr& expr, const CorpusSpec& spec, const RunRequest& req) {
    RingReport out;
    out.expr = render(expr);

    FiniteRing R;
    try {
        R = build(expr, spec.eval.limits);
    } catch (const error& e) {
        out.build_error = e.what();
        return out;
    }
    out.order = R.order();
    out.characteristic = R.characteristic();

    RingAnalysis analysis(R, spec.eval);

    if (req.predicates) {
        for (const std::string& id : predicate_ids()) {
            try {
                out.predicates.push_back(analysis.predicate(id));
            } catch (const error& e) {
                if (e.code() == errc::size_guard || e.code() == errc::degenerate_ring)
                    out.skipped_predicates.emplace_back(id, e.what());
                else
                    throw;
            }
        }
    }

    if (req.classification) {
        try {
            out.classification = classify_by_components(analysis);
        } catch (const error& e) {
            if (e.code() == errc::size_guard || e.code() == errc::degenerate_ring)
                out.classification_skipped = e.what();
            else
                throw;
        }
    }

    for (const std::string& id : req.theorem_ids)
        out.theorems.push_back(verify_theorem(analysis, id));

    return out;
}

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, idx] : w.elems) j[name] = idx;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["holds"] = v.holds;
    j["scanned"] = v.stats.scanned;
    j["carrier"] = v.stats.carrier;
    if (v.stats.violations) j["violations"] = v.stats.violations;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

nlohmann::json record_to_json(const VerificationRecord& r) {
    nlohmann::json j;
    j["ring"] = r.ring;
    j["theorem_id"] = r.theorem_id;
    if (r.skipped_reason) {
        j["skipped_reason"] = *r.skipped_reason;
    } else {
        if (r.left) j["left"] = *r.left;
        if (r.right) j["right"] = *r.right;
        j["agree"] = r.agree;
    }
    if (!r.witnesses.empty()) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto& [k, v] : r.witnesses) w[k] = v;
        j["witnesses"] = w;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["millis"] = r.millis;
    return j;
}

} // namespace

ClassificationReport run_corpus(const CorpusSpec& spec, const RunRequest& req) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<ExprPtr> exprs = corpus_exprs(spec);

    std::vector<RingReport> reports(exprs.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= exprs.size() || failed.load()) break;
            try {
                reports[i] = evaluate_ring(exprs[i], spec, req);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failed = true;
                failure = render(exprs[i]) + ": " + e.what();
            }
        }
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failed) fail(errc::internal, "corpus evaluation failed at " + failure);

    std::sort(reports.begin(), reports.end(),
              [](const RingReport& a, const RingReport& b) { return a.expr < b.expr; });

    ClassificationReport out;
    out.rings = std::move(reports);

    std::map<std::string, int> true_counts, case_counts;
    for (const auto& r : out.rings) {
        ++out.summary.rings;
        if (!r.build_error.empty()) ++out.summary.build_failures;
        for (const auto& v : r.predicates)
            if (v.holds) ++true_counts[v.predicate_id];
        out.summary.skips += static_cast<int>(r.skipped_predicates.size());
        if (r.classification) ++case_counts[class_case_name(r.classification->case_tag)];
        for (const auto& rec : r.theorems) {
            ++out.summary.theorem_records;
            if (rec.skipped()) ++out.summary.skips;
            if (rec.disagreement()) ++out.summary.disagreements;
        }
    }
    out.summary.predicate_true_counts.assign(true_counts.begin(), true_counts.end());
    out.summary.case_counts.assign(case_counts.begin(), case_counts.end());
    out.summary.runtime_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::string report_to_json(const ClassificationReport& report, const CorpusSpec& spec) {
    nlohmann::json j;
    j["schema"] = "ringlab-report-v1";

    nlohmann::json s;
    if (spec.include_zmod_range) s["zmod"] = {spec.zmod_lo, spec.zmod_hi};
    s["default_structured"] = spec.include_default_structured;
    s["structured"] = spec.structured;
    s["seed"] = spec.eval.seed;
    s["full_scan"] = spec.eval.full_scan;
    s["guards"] = {{"max_order", spec.eval.limits.max_order},
                   {"memo_order", spec.eval.limits.memo_order},
                   {"clean_scan_max", spec.eval.clean_scan_max},
                   {"ideal_enum_max", spec.eval.ideal_enum_max},
                   {"radical_max", spec.eval.radical_max},
                   {"witness_scan_max", spec.eval.witness_scan_max}};
    j["spec"] = s;

    nlohmann::json rings = nlohmann::json::array();
    for (const auto& r : report.rings) {
        nlohmann::json jr;
        jr["expr"] = r.expr;
        if (!r.build_error.empty()) {
            jr["build_error"] = r.build_error;
            rings.push_back(jr);
            continue;
        }
        jr["order"] = r.order;
        jr["characteristic"] = r.characteristic;
        if (!r.predicates.empty()) {
            nlohmann::json preds = nlohmann::json::object();
            for (const auto& v : r.predicates) preds[v.predicate_id] = verdict_to_json(v);
            jr["predicates"] = preds;
        }
        if (!r.skipped_predicates.empty()) {
            nlohmann::json sk = nlohmann::json::object();
            for (const auto& [id, reason] : r.skipped_predicates) sk[id] = reason;
            jr["skipped_predicates"] = sk;
        }
        if (r.classification) {
            nlohmann::json jc;
            jc["case"] = class_case_name(r.classification->case_tag);
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& f : r.classification->evidence)
                factors.push_back({{"p", f.prime},
                                   {"component", f.component},
                                   {"radical_nil", f.radical_nil},
                                   {"residue_form", f.residue_form},
                                   {"residue_ok", f.residue_ok}});
            jc["factors"] = factors;
            if (r.classification->counterexample)
                jc["counterexample"] = witness_to_json(*r.classification->counterexample);
            jr["classification"] = jc;
        } else if (!r.classification_skipped.empty()) {
            jr["classification_skipped"] = r.classification_skipped;
        }
        if (!r.theorems.empty()) {
            nlohmann::json recs = nlohmann::json::array();
            for (const auto& rec : r.theorems) recs.push_back(record_to_json(rec));
            jr["theorems"] = recs;
        }
        rings.push_back(jr);
    }
    j["rings"] = rings;

    nlohmann::json sum;
    sum["rings"] = report.summary.rings;
    sum["build_failures"] = report.summary.build_failures;
    sum["theorem_records"] = report.summary.theorem_records;
    sum["disagreements"] = report.summary.disagreements;
    sum["skips"] = report.summary.skips;
    sum["runtime_millis"] = report.summary.runtime_millis;
    nlohmann::json tc = nlohmann::json::object();
    for (const auto& [id, c] : report.summary.predicate_true_counts) tc[id] = c;
    sum["predicate_true_counts"] = tc;
    nlohmann::json cc = nlohmann::json::object();
    for (const auto& [id, c] : report.summary.case_counts) cc[id] = c;
    sum["case_counts"] = cc;
    j["summary"] = sum;

    return j.dump(2) + "\n";
}

std::string report_to_csv(const ClassificationReport& report) {
    std::string out = "expr,order,characteristic";
    for (const std::string& id : predicate_ids()) out += "," + id;
    out += ",classification\n";
    for (const auto& r : report.rings) {
        if (!r.build_error.empty()) continue;
        out += "\"" + r.expr + "\"," + std::to_string(r.order) + "," +
               std::to_string(r.characteristic);
        for (const std::string& id : predicate_ids()) {
            const auto v = std::find_if(r.predicates.begin(), r.predicates.end(),
                                        [&](const Verdict& x) { return x.predicate_id == id; });
            if (v != r.predicates.end()) {
                out += v->holds ? ",true" : ",false";
            } else {
                out += ",skip";
            }
        }
        out += ",";
        if (r.classification) out += class_case_name(r.classification->case_tag);
        else out += "skip";
        out += "\n";
    }
    return out;
}

} // namespace ringlab
