// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. All arithmetic assertions are exact; the only
// tolerances are the stated wall-clock budgets.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "rax/audit.hpp"
#include "test_support.hpp"

using namespace rax;
using rax::testing::q;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;
    void expect(bool condition, const std::string& what) {
        if (condition) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool contains_member(const Family& family, const SimpleRandomVariable& wanted) {
    for (const auto& member : family.members)
        if (member == wanted) return true;
    return false;
}

SimpleRandomVariable swap_hi() {
    return SimpleRandomVariable({{q(1), Event::interval(q(0), q(1, 2))},
                                 {q(0), Event::interval(q(1, 2), q(1))}});
}

SimpleRandomVariable swap_lo() {
    return SimpleRandomVariable({{q(0), Event::interval(q(0), q(1, 2))},
                                 {q(1), Event::interval(q(1, 2), q(1))}});
}

const SimpleRandomVariable* find_text(const Family& family, const std::string& text) {
    for (const auto& member : family.members)
        if (member.text() == text) return &member;
    return nullptr;
}

// ---- criterion bodies -------------------------------------------------

bool criterion_1(std::string& detail) {
    Checker c;
    const Family family = demo_family();
    const auto n = static_cast<std::uint64_t>(family.members.size());

    c.expect(n >= 10, "demo family has at least 10 members");
    c.expect(contains_member(family, swap_hi()) && contains_member(family, swap_lo()),
             "demo family contains the swap pair");
    c.expect(contains_member(family, SimpleRandomVariable::constant(q(0))) &&
                 contains_member(family, SimpleRandomVariable::constant(q(1))),
             "demo family contains the constants 0 and 1");

    const auto start = std::chrono::steady_clock::now();
    const AuditReport report = run_audit(constant_negative(), family);
    const double elapsed = seconds_since(start);

    c.expect(report.transitivity->verdict == Verdict::holds_on_family &&
                 report.transitivity->antecedent_triples == 0 && report.transitivity->vacuous,
             "transitivity holds with zero antecedent triples");
    bool annotated = false;
    for (const auto& note : report.annotations)
        annotated = annotated || note.find("vacuous") != std::string::npos;
    c.expect(annotated, "vacuity is annotated");

    c.expect(report.completeness->verdict == Verdict::violated &&
                 report.completeness->pairs_examined == n * (n - 1) / 2 &&
                 report.completeness->violations == report.completeness->pairs_examined,
             "completeness violated on every pair");

    const auto& sd = *report.same_distribution_indifference;
    c.expect(sd.verdict == Verdict::violated && sd.same_distribution_pairs > 0 &&
                 sd.violations == sd.same_distribution_pairs,
             "indifference violated on every identically-distributed pair");

    bool contours_empty = !report.contour_sets.empty();
    for (const auto& entry : report.contour_sets)
        contours_empty = contours_empty && entry.upper.empty() && entry.lower.empty();
    c.expect(contours_empty, "all contour sets are empty");

    c.expect(report.continuity_proxy->verdict == Verdict::holds_on_family &&
                 report.continuity_proxy->qualifying_sequences == 0,
             "continuity proxy holds vacuously");

    c.expect(elapsed < 1.0, "audit finished under one second");
    detail = c.detail;
    return c.ok;
}

bool criterion_2(std::string& detail) {
    Checker c;
    const Family family = demo_family();
    const auto rep = neg_abs_sum();

    const auto start = std::chrono::steady_clock::now();
    const AuditReport report = run_audit(rep, family);
    const double elapsed = seconds_since(start);

    bool relation_is_ae_equality = true;
    for (const auto& x : family.members)
        for (const auto& y : family.members)
            relation_is_ae_equality =
                relation_is_ae_equality && (prefer(rep, x, y).forward == equal_ae(x, y));
    c.expect(relation_is_ae_equality, "weak preference coincides with a.e. equality");

    c.expect(report.transitivity->verdict == Verdict::holds_on_family &&
                 report.transitivity->violations == 0,
             "transitivity holds");

    std::uint64_t non_equal_pairs = 0;
    std::uint64_t distinct_distributed_pairs = 0;  // same distribution, not a.e. equal
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            const bool ae = equal_ae(family.members[i], family.members[j]);
            if (!ae) ++non_equal_pairs;
            if (!ae && same_distribution(family.members[i], family.members[j]))
                ++distinct_distributed_pairs;
        }
    }
    c.expect(report.completeness->verdict == Verdict::violated &&
                 report.completeness->violations == non_equal_pairs,
             "completeness violated exactly on the non-a.e.-equal pairs");

    const auto& sd = *report.same_distribution_indifference;
    c.expect(sd.verdict == Verdict::violated && sd.violations == distinct_distributed_pairs &&
                 distinct_distributed_pairs > 0,
             "every identically-distributed, a.e.-distinct pair is not mutually preferred");
    bool witnesses_incomparable = sd.witnesses.size() == sd.violations;
    for (const auto& w : sd.witnesses)
        witnesses_incomparable = witnesses_incomparable && !w.verdict.indifferent();
    c.expect(witnesses_incomparable, "each violation carries a non-indifferent witness");

    bool contours_are_classes = !report.contour_sets.empty();
    for (const auto& entry : report.contour_sets) {
        const auto* member = find_text(family, entry.member);
        contours_are_classes = contours_are_classes && member != nullptr;
        if (member == nullptr) break;
        std::vector<std::string> expected;
        for (const auto& text : report.members) {
            const auto* other = find_text(family, text);
            if (other != nullptr && equal_ae(*other, *member)) expected.push_back(text);
        }
        contours_are_classes =
            contours_are_classes && entry.upper == expected && entry.lower == expected;
    }
    c.expect(contours_are_classes, "each contour set equals the member's a.e.-equality class");

    c.expect(elapsed < 1.0, "audit finished under one second");
    detail = c.detail;
    return c.ok;
}

bool criterion_3(std::string& detail) {
    Checker c;
    GeneratorConfig config;
    config.size = 12;
    config.max_cells = 6;
    config.outcome_grid = default_outcome_grid();

    const auto rep = expected_regret();
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Family family = generate_family(seed, config);
        const AuditReport report = run_audit(rep, family);
        for (AxiomCheck check : all_checks()) {
            if (report.verdict_of(check) != Verdict::holds_on_family) {
                c.expect(false, "seed " + std::to_string(seed) + ": " + check_name(check) +
                                    " did not hold");
            }
        }
        // preference order equals the exact expectation order
        std::vector<Rational> means;
        means.reserve(family.members.size());
        for (const auto& member : family.members)
            means.push_back(rax::testing::oracle_expectation(member));
        for (std::size_t i = 0; i < family.members.size() && c.ok; ++i) {
            for (std::size_t j = 0; j < family.members.size(); ++j) {
                const auto verdict = prefer(rep, family.members[i], family.members[j]);
                if (verdict.forward != (means[i] >= means[j])) {
                    c.expect(false, "seed " + std::to_string(seed) +
                                        ": preference order deviates from expectation order");
                    break;
                }
            }
        }
    }
    c.expect(seconds_since(start) < 10.0, "twenty audits finished under ten seconds");
    detail = c.detail;
    return c.ok;
}

bool criterion_4(std::string& detail) {
    Checker c;
    SeededRng rng(404);
    const auto psi = difference_regret();
    const auto grid = default_outcome_grid();
    for (int i = 0; i < 100 && c.ok; ++i) {
        const auto x = rax::testing::random_variable(rng, grid);
        const auto y = rax::testing::random_variable(rng, grid);
        // oracle: evaluate both variables on each elementary interval of
        // the pooled breakpoints and assemble (regret, length) directly
        const auto points = rax::testing::state_breakpoints(x, &y);
        std::vector<std::pair<Rational, Rational>> entries;
        for (std::size_t k = 0; k + 1 < points.size(); ++k) {
            const Rational mid = (points[k] + points[k + 1]) / 2;
            entries.emplace_back(psi.evaluate(x.value_at(mid), y.value_at(mid)),
                                 points[k + 1] - points[k]);
        }
        c.expect(regret_lottery(psi, x, y) == RegretLottery(entries),
                 "lottery " + std::to_string(i) + " deviates from the brute-force assembly");
    }
    detail = c.detail;
    return c.ok;
}

bool criterion_5(std::string& detail) {
    Checker c;
    SeededRng rng(505);
    const auto grid = default_outcome_grid();
    const std::vector<Representation> reps{constant_negative(), neg_abs_sum(), expected_regret()};
    for (int i = 0; i < 100 && c.ok; ++i) {
        const auto x = rax::testing::random_variable(rng, grid);
        const auto partner = rax::testing::random_variable(rng, grid);
        const auto split = rax::testing::split_variant(x, rng);
        c.expect(distribution(split) == distribution(x), "distribution changed by a split");
        c.expect(equal_ae(split, x), "a.e. class changed by a split");
        c.expect(equal_ae(split, partner) == equal_ae(x, partner),
                 "a.e. relation to the partner changed by a split");
        for (const auto& rep : reps) {
            c.expect(prefer(rep, split, partner) == prefer(rep, x, partner) &&
                         prefer(rep, partner, split) == prefer(rep, partner, x),
                     rep.name + " verdict changed by a split");
        }
    }
    detail = c.detail;
    return c.ok;
}

bool criterion_6(std::string& detail) {
    Checker c;
    const auto pass = validate_regret_function(difference_regret(), {}, 101);
    c.expect(pass.passed && pass.violations.empty() && pass.grid_points == 101,
             "difference passes at grid 101");

    const auto flipped = validate_regret_function(negated_difference_regret(), {}, 101);
    c.expect(!flipped.passed && flipped.violations.size() == 2 &&
                 flipped.violations[0].check == PsiCheck::increasing_in_first &&
                 flipped.violations[1].check == PsiCheck::decreasing_in_second,
             "sign flip fails on both monotonicity axes");

    const auto offset = validate_regret_function(offset_difference_regret(), {}, 101);
    c.expect(!offset.passed && offset.violations.size() == 1 &&
                 offset.violations[0].check == PsiCheck::diagonal_zero,
             "offset fails on the diagonal");
    detail = c.detail;
    return c.ok;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(RAX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool criterion_7(std::string& detail) {
    Checker c;
    const auto dir = std::filesystem::temp_directory_path() / "rax-acceptance";
    std::filesystem::create_directories(dir);

    const auto family_file = (dir / "family.json").string();
    run_cli("gen-family --seed 11 --size 3 -o " + family_file);

    const std::vector<std::string> commands{
        "demo 1",
        "demo 1 --format json",
        "demo 2",
        "demo 2 --format json",
        "audit --rep constant-negative --seed 5 --size 4 --format json",
        "audit --rep neg-abs-sum --seed 5 --size 4",
        "audit --rep expected-regret --seed 7 --size 12 --expect all-hold",
        "audit --rep neg-abs-sum --family " + family_file + " --format json",
        "validate-psi difference",
        "validate-psi neg-difference --format json",
        "gen-family --seed 11 --size 3 -o " + (dir / "a.json").string(),
    };
    for (const auto& args : commands) {
        const auto first = run_cli(args);
        const auto second = run_cli(args);
        c.expect(first.exit_code == second.exit_code && first.output == second.output,
                 "stdout differs across runs of: " + args);
    }

    run_cli("gen-family --seed 11 --size 3 -o " + (dir / "b.json").string());
    c.expect(!slurp(dir / "a.json").empty() && slurp(dir / "a.json") == slurp(dir / "b.json") &&
                 slurp(dir / "a.json") == slurp(family_file),
             "gen-family files differ across runs");

    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    detail = c.detail;
    return c.ok;
}

bool criterion_8(std::string& detail) {
    Checker c;
    SeededRng rng(808);
    for (int i = 0; i < 1000 && c.ok; ++i) {
        const Event a = rax::testing::random_event(rng);
        const Event b = rax::testing::random_event(rng);
        c.expect(a.measure() + b.measure() == unite(a, b).measure() + intersect(a, b).measure(),
                 "inclusion-exclusion failed at pair " + std::to_string(i));
    }
    for (int i = 0; i < 1000 && c.ok; ++i) {
        const Partition a = rax::testing::random_partition(rng);
        const Partition b = rax::testing::random_partition(rng);
        const Refinement r = common_refinement(a, b);
        Rational total = 0;
        for (const auto& cell : r.cells) total += cell.measure();
        c.expect(total == 1, "refinement measure not conserved at pair " + std::to_string(i));
        c.expect(r.cells.size() <= a.size() * b.size(),
                 "cell-count bound broken at pair " + std::to_string(i));
    }
    detail = c.detail;
    return c.ok;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* label;
        bool (*body)(std::string&);
    };
    const std::vector<Entry> criteria{
        {1, "constant-negative demo audit reproduces the expected pattern", criterion_1},
        {2, "neg-abs-sum demo audit reproduces the expected pattern", criterion_2},
        {3, "expected-regret holds on 20 seeded families and orders by expectation", criterion_3},
        {4, "regret lotteries equal the brute-force oracle on 100 seeded pairs", criterion_4},
        {5, "cell splits change no distribution, class or verdict (100 variables)", criterion_5},
        {6, "regret-function validator passes difference and rejects the variants", criterion_6},
        {7, "every CLI command is byte-deterministic across invocations", criterion_7},
        {8, "measure algebra: inclusion-exclusion and refinement conservation hold", criterion_8},
    };

    int failures = 0;
    for (const auto& entry : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = entry.body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", entry.number, entry.label);
        if (!ok) {
            ++failures;
            if (!detail.empty()) std::fprintf(stderr, "  detail: %s\n", detail.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
