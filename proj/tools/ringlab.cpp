// Command-line front end: batch classification, theorem verification, and
// per-element witness explanations over corpora of finite rings.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/report.hpp"

namespace {

using namespace ringlab;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct CorpusFlags {
    std::string zmod_range;
    std::vector<std::string> rings;
    bool full_scan = false;
    long long guard_order = 1 << 20;
    long long guard_ideals = 64;
    long long guard_clean = 1024;
    long long guard_radical = 65536;
    long long guard_witness = 4096;
    int jobs = 1;
    std::uint64_t seed = 0;
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
    cmd->add_option("--zmod", f.zmod_range, "Z/n range, e.g. 2..200");
    cmd->add_option("--ring", f.rings, "ring expression (repeatable)");
    cmd->add_flag("--full-scan", f.full_scan, "keep scanning after the first counterexample");
    cmd->add_option("--guard-order", f.guard_order, "maximum ring order built");
    cmd->add_option("--guard-ideals", f.guard_ideals, "ideal enumeration guard");
    cmd->add_option("--guard-clean", f.guard_clean, "exchange/clean scan guard");
    cmd->add_option("--guard-radical", f.guard_radical, "radical computation guard");
    cmd->add_option("--guard-witness", f.guard_witness, "full witness-sweep guard");
    cmd->add_option("--jobs", f.jobs, "worker threads (ring-level parallelism)");
    cmd->add_option("--seed", f.seed, "seed for sampled sub-structures");
}

CorpusSpec make_spec(const CorpusFlags& f) {
    CorpusSpec spec;
    const bool explicit_corpus = !f.zmod_range.empty() || !f.rings.empty();
    spec.include_default_structured = !explicit_corpus;
    spec.include_zmod_range = !explicit_corpus || !f.zmod_range.empty();
    if (!f.zmod_range.empty()) {
        const auto dots = f.zmod_range.find("..");
        if (dots == std::string::npos)
            fail(errc::syntax_error, "--zmod expects a range like 2..200");
        spec.zmod_lo = std::stoi(f.zmod_range.substr(0, dots));
        spec.zmod_hi = std::stoi(f.zmod_range.substr(dots + 2));
        if (spec.zmod_lo < 1 || spec.zmod_hi < spec.zmod_lo)
            fail(errc::syntax_error, "--zmod range is empty or negative");
    }
    spec.structured = f.rings;
    spec.eval.full_scan = f.full_scan;
    spec.eval.limits.max_order = f.guard_order;
    spec.eval.ideal_enum_max = f.guard_ideals;
    spec.eval.clean_scan_max = f.guard_clean;
    spec.eval.radical_max = f.guard_radical;
    spec.eval.witness_scan_max = f.guard_witness;
    spec.eval.seed = f.seed;
    spec.jobs = f.jobs;
    return spec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::internal, "cannot open " + path + " for writing");
    out << content;
}

int cmd_classify(const CorpusFlags& flags, const std::string& out_path,
                 const std::string& csv_path) {
    CorpusSpec spec = make_spec(flags);
    RunRequest req;
    req.predicates = true;
    req.classification = true;
    const ClassificationReport report = run_corpus(spec, req);

    write_file(out_path, report_to_json(report, spec));
    if (!csv_path.empty()) write_file(csv_path, report_to_csv(report));

    std::cout << "classified " << report.summary.rings << " ring(s), "
              << report.summary.build_failures << " build failure(s), "
              << report.summary.skips << " guarded skip(s), "
              << static_cast<long long>(report.summary.runtime_millis) << " ms\n";
    return kExitOk;
}

int cmd_verify(const CorpusFlags& flags, std::string theorems, const std::string& out_path) {
    CorpusSpec spec = make_spec(flags);
    RunRequest req;
    if (theorems.empty() || theorems == "all") {
        req.theorem_ids = all_theorem_ids();
    } else {
        size_t pos = 0;
        while (pos != std::string::npos) {
            const size_t comma = theorems.find(',', pos);
            const std::string id = theorems.substr(pos, comma == std::string::npos ? comma
                                                                                   : comma - pos);
            if (!is_theorem_id(id)) {
                std::cerr << "unknown theorem id: " << id << "\n";
                return kExitUsage;
            }
            req.theorem_ids.push_back(id);
            pos = comma == std::string::npos ? comma : comma + 1;
        }
    }

    const ClassificationReport report = run_corpus(spec, req);
    if (!out_path.empty()) write_file(out_path, report_to_json(report, spec));

    // per-theorem rollup
    for (const std::string& id : req.theorem_ids) {
        int checked = 0, skipped = 0, disagreements = 0;
        for (const auto& r : report.rings)
            for (const auto& rec : r.theorems) {
                if (rec.theorem_id != id) continue;
                if (rec.skipped()) ++skipped;
                else {
                    ++checked;
                    if (!rec.agree) ++disagreements;
                }
            }
        std::cout << id << ": " << checked << " checked, " << skipped << " skipped, "
                  << disagreements << " disagreement(s)\n";
    }
    std::cout << "total: " << report.summary.theorem_records << " record(s), "
              << report.summary.disagreements << " disagreement(s), " << report.summary.skips
              << " skip(s), " << static_cast<long long>(report.summary.runtime_millis) << " ms\n";

    if (report.summary.disagreements > 0) {
        for (const auto& r : report.rings)
            for (const auto& rec : r.theorems)
                if (rec.disagreement()) {
                    std::cout << "DISAGREEMENT " << rec.theorem_id << " on " << rec.ring;
                    if (rec.left) std::cout << " left=" << (*rec.left ? "true" : "false");
                    if (rec.right) std::cout << " right=" << (*rec.right ? "true" : "false");
                    std::cout << "\n";
                }
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_explain(const CorpusFlags& flags, const std::string& expr_text, int element) {
    CorpusSpec spec = make_spec(flags);
    const FiniteRing R = build(expr_text, spec.eval.limits);
    if (element < 0 || element >= R.order()) {
        std::cerr << "element index " << element << " out of range for " << R.label()
                  << " (order " << R.order() << ")\n";
        return kExitUsage;
    }

    std::cout << "ring " << R.label() << ": order " << R.order() << ", characteristic "
              << R.characteristic() << "\n";
    std::cout << "element a = " << element << "\n";

    const auto [m, n] = periodic_exponents(R, element);
    std::cout << "power trail:";
    int x = element;
    for (int k = 1; k <= n; ++k) {
        std::cout << ' ' << x;
        x = R.mul(x, element);
    }
    std::cout << "  (a^" << n << " = a^" << m << ")\n";

    const int a3 = R.pow(element, 3);
    for (const bool plus : {false, true}) {
        const int b = plus ? R.add(element, a3) : R.sub(element, a3);
        const NilpotencyResult nr = nilpotency(R, b);
        std::cout << "a " << (plus ? '+' : '-') << " a^3 = " << b << ": "
                  << (nr.is_nilpotent ? "nilpotent, index " + std::to_string(nr.index)
                                      : std::string("not nilpotent"))
                  << "\n";
    }

    RingAnalysis analysis(R, spec.eval);
    const Verdict& yaqub = analysis.predicate("yaqub_nil_clean");
    if (!yaqub.holds) {
        std::cout << "ring is not Yaqub nil-clean";
        if (yaqub.witness && !yaqub.witness->elems.empty())
            std::cout << " (counterexample a = " << yaqub.witness->elems.front().second << ")";
        std::cout << "; no tripotent witness is owed\n";
        return kExitOk;
    }

    const TripotentWitness w = extract_tripotent(analysis, element);
    std::cout << "tripotent witness: e = " << w.e << ", mode "
              << (w.mode == TripotentWitness::Mode::minus ? "minus (a - e)" : "plus3 (a + 3e)")
              << ", nilpotency index " << w.nil_index << "\n";
    verify_tripotent_witness(R, w);
    std::cout << "verified: e^3 = e, ae = ea, declared combination nilpotent\n";

    if (nilpotency(R, R.of_int(5)).is_nilpotent &&
        nilpotency(R, R.add(element, a3)).is_nilpotent) {
        const QuadTripotentWitness q = extract_quad_tripotent(R, element);
        verify_quad_tripotent_witness(R, q);
        std::cout << "quad-tripotent witness: e = " << q.e
                  << " with e^3 = 4e and a - e nilpotent (index " << q.nil_index << ")\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring classification and theorem verification"};
    app.require_subcommand(1);

    CorpusFlags flags;

    auto* classify = app.add_subcommand("classify", "evaluate class predicates over a corpus");
    std::string out_path = "report.json", csv_path;
    add_corpus_flags(classify, flags);
    classify->add_option("--out", out_path, "JSON report path")->required();
    classify->add_option("--csv", csv_path, "CSV summary path");

    auto* verify = app.add_subcommand("verify", "check the theorem catalog over a corpus");
    std::string theorems = "all", verify_out;
    add_corpus_flags(verify, flags);
    verify->add_option("--theorems", theorems, "all or comma-separated ids, e.g. T5.4,C3.3");
    verify->add_option("--out", verify_out, "JSON report path");

    auto* explain = app.add_subcommand("explain", "show witnesses for one element");
    std::string expr_text;
    int element = 0;
    add_corpus_flags(explain, flags);
    explain->add_option("expr", expr_text, "ring expression")->required();
    explain->add_option("element", element, "element index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(flags, out_path, csv_path);
        if (verify->parsed()) return cmd_verify(flags, theorems, verify_out);
        if (explain->parsed()) return cmd_explain(flags, expr_text, element);
        return kExitUsage;
    } catch (const error& e) {
        if (e.code() == errc::syntax_error || e.code() == errc::malformed_expr) {
            std::cerr << e.what() << "\n";
            return kExitUsage;
        }
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
