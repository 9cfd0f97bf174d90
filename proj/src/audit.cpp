#include "rax/audit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace rax {

std::string check_name(AxiomCheck check) {
    switch (check) {
        case AxiomCheck::completeness: return "completeness";
        case AxiomCheck::transitivity: return "transitivity";
        case AxiomCheck::same_distribution_indifference: return "same-distribution-indifference";
        case AxiomCheck::monotonicity: return "monotonicity";
        case AxiomCheck::continuity_proxy: return "continuity-proxy";
    }
    return "?";
}

std::optional<AxiomCheck> check_by_name(std::string_view name) {
    for (AxiomCheck check : all_checks())
        if (check_name(check) == name) return check;
    return std::nullopt;
}

const std::vector<AxiomCheck>& all_checks() {
    static const std::vector<AxiomCheck> checks{
        AxiomCheck::completeness, AxiomCheck::transitivity,
        AxiomCheck::same_distribution_indifference, AxiomCheck::monotonicity,
        AxiomCheck::continuity_proxy};
    return checks;
}

std::string verdict_name(Verdict verdict) {
    return verdict == Verdict::holds_on_family ? "holds-on-family" : "violated";
}

namespace {

// Family restated in canonical order with all pairwise verdicts cached.
struct AuditContext {
    const Representation& rep;
    std::vector<const SimpleRandomVariable*> members;  // canonical order
    std::vector<std::string> texts;
    std::vector<std::vector<PreferenceVerdict>> verdicts;  // verdicts[i][j] = prefer(m_i, m_j)

    std::size_t size() const { return members.size(); }
    bool related(std::size_t i, std::size_t j) const { return verdicts[i][j].forward; }
};

AuditContext build_context(const Representation& rep, const Family& family) {
    if (family.members.empty()) throw std::invalid_argument("audit: family is empty");

    AuditContext ctx{rep, {}, {}, {}};
    const std::size_t n = family.members.size();
    std::vector<std::string> raw_texts;
    raw_texts.reserve(n);
    for (const auto& member : family.members) raw_texts.push_back(member.text());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&raw_texts](std::size_t a, std::size_t b) {
        return raw_texts[a] < raw_texts[b];
    });

    ctx.members.reserve(n);
    ctx.texts.reserve(n);
    for (std::size_t idx : order) {
        ctx.members.push_back(&family.members[idx]);
        ctx.texts.push_back(raw_texts[idx]);
    }

    ctx.verdicts.assign(n, std::vector<PreferenceVerdict>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            ctx.verdicts[i][j] = prefer(rep, *ctx.members[i], *ctx.members[j]);
            if (j != i) ctx.verdicts[j][i] = ctx.verdicts[i][j].reversed();
        }
    }
    return ctx;
}

CompletenessResult check_completeness(const AuditContext& ctx) {
    CompletenessResult out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        for (std::size_t j = i + 1; j < ctx.size(); ++j) {
            ++out.pairs_examined;
            const auto& v = ctx.verdicts[i][j];
            if (v.incomparable()) {
                ++out.violations;
                if (!out.witness) out.witness = PairWitness{ctx.texts[i], ctx.texts[j], v};
            }
        }
    }
    out.verdict = out.violations == 0 ? Verdict::holds_on_family : Verdict::violated;
    return out;
}

TransitivityResult check_transitivity(const AuditContext& ctx) {
    TransitivityResult out;
    const std::size_t n = ctx.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ctx.related(i, j)) ++out.related_pairs;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                ++out.triples_examined;
                if (!(ctx.related(i, j) && ctx.related(j, k))) continue;
                ++out.antecedent_triples;
                if (!ctx.related(i, k)) {
                    ++out.violations;
                    if (!out.witness) {
                        out.witness =
                            TripleWitness{ctx.texts[i],       ctx.texts[j],       ctx.texts[k],
                                          ctx.verdicts[i][j], ctx.verdicts[j][k], ctx.verdicts[i][k]};
                    }
                }
            }
        }
    }
    out.vacuous = out.antecedent_triples == 0;
    out.verdict = out.violations == 0 ? Verdict::holds_on_family : Verdict::violated;
    return out;
}

SameDistributionResult check_same_distribution_indifference(const AuditContext& ctx) {
    SameDistributionResult out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        for (std::size_t j = i + 1; j < ctx.size(); ++j) {
            ++out.pairs_examined;
            if (!same_distribution(*ctx.members[i], *ctx.members[j])) continue;
            ++out.same_distribution_pairs;
            const auto& v = ctx.verdicts[i][j];
            if (!v.indifferent()) {
                ++out.violations;
                out.witnesses.push_back(PairWitness{ctx.texts[i], ctx.texts[j], v});
            }
        }
    }
    out.verdict = out.violations == 0 ? Verdict::holds_on_family : Verdict::violated;
    return out;
}

MonotonicityResult check_monotonicity(const AuditContext& ctx) {
    MonotonicityResult out;
    auto probe = [&out, &ctx](std::size_t hi, std::size_t lo) {
        ++out.strict_dominance_pairs;
        if (!ctx.verdicts[hi][lo].strict()) {
            ++out.violations;
            if (!out.witness)
                out.witness = PairWitness{ctx.texts[hi], ctx.texts[lo], ctx.verdicts[hi][lo]};
        }
    };
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        for (std::size_t j = i + 1; j < ctx.size(); ++j) {
            ++out.pairs_examined;
            if (statewise_dominates(*ctx.members[i], *ctx.members[j]) == Dominance::strict)
                probe(i, j);
            else if (statewise_dominates(*ctx.members[j], *ctx.members[i]) == Dominance::strict)
                probe(j, i);
        }
    }
    out.verdict = out.violations == 0 ? Verdict::holds_on_family : Verdict::violated;
    return out;
}

struct PerturbationPattern {
    const char* name;
    int direction;  // sign applied to every cell outcome
};

constexpr PerturbationPattern kPatterns[] = {
    {"constant", 0},
    {"shift-up", +1},
    {"shift-down", -1},
};

ContinuityProxyResult check_continuity_proxy(const AuditContext& ctx, const OutcomeSpace& space,
                                             int sequence_length) {
    ContinuityProxyResult out;
    out.sequence_length = sequence_length;
    const std::size_t n = ctx.size();

    std::vector<Partition> partitions;
    partitions.reserve(n);
    for (const auto* member : ctx.members) partitions.push_back(member->partition());

    std::vector<Rational> deltas;  // 1/2^k for k = 1..sequence_length
    deltas.reserve(sequence_length);
    for (int k = 1; k <= sequence_length; ++k)
        deltas.emplace_back(BigInt(1), BigInt(1) << k);

    for (std::size_t xi = 0; xi < n; ++xi) {
        for (std::size_t yi = 0; yi < n; ++yi) {
            // xi is the candidate limit, yi the contour's base point
            const Refinement refined = common_refinement(partitions[xi], partitions[yi]);
            const std::size_t cells = refined.cells.size();
            std::vector<Rational> probs, x_outcomes, y_outcomes;
            probs.reserve(cells);
            x_outcomes.reserve(cells);
            y_outcomes.reserve(cells);
            for (std::size_t i = 0; i < cells; ++i) {
                probs.push_back(refined.cells[i].measure());
                x_outcomes.push_back(ctx.members[xi]->cells()[refined.from_a[i]].outcome);
                y_outcomes.push_back(ctx.members[yi]->cells()[refined.from_b[i]].outcome);
            }

            auto value_of = [&](const std::vector<Rational>& won,
                                const std::vector<Rational>& lost) {
                std::vector<std::pair<Rational, Rational>> entries;
                entries.reserve(cells);
                for (std::size_t i = 0; i < cells; ++i)
                    entries.emplace_back(ctx.rep.psi.evaluate(won[i], lost[i]), probs[i]);
                return ctx.rep.value(RegretLottery(std::move(entries)));
            };

            std::vector<Rational> shifted(cells);
            for (const auto& pattern : kPatterns) {
                for (const bool upper : {true, false}) {
                    ++out.sequences_examined;
                    const bool limit_inside =
                        upper ? ctx.verdicts[xi][yi].forward : ctx.verdicts[xi][yi].backward;

                    bool stayed_inside = true;
                    if (pattern.direction == 0) {
                        // constant sequence: every element is the limit itself,
                        // so it qualifies exactly when the limit is inside and
                        // can never witness a violation
                        stayed_inside = limit_inside;
                    } else {
                        for (int k = 0; k < sequence_length && stayed_inside; ++k) {
                            const Rational delta =
                                pattern.direction > 0 ? deltas[k] : Rational(-deltas[k]);
                            for (std::size_t i = 0; i < cells; ++i) {
                                shifted[i] = std::clamp(Rational(x_outcomes[i] + delta),
                                                        space.lower, space.upper);
                            }
                            const Rational value = upper ? value_of(shifted, y_outcomes)
                                                         : value_of(y_outcomes, shifted);
                            stayed_inside = value >= 0;
                        }
                    }
                    if (!stayed_inside) continue;
                    ++out.qualifying_sequences;
                    if (!limit_inside) {
                        ++out.violations;
                        if (!out.witness) {
                            out.witness = SequenceWitness{ctx.texts[xi], ctx.texts[yi],
                                                          upper ? "upper" : "lower", pattern.name,
                                                          ctx.verdicts[xi][yi]};
                        }
                    }
                }
            }
        }
    }
    out.verdict = out.violations == 0 ? Verdict::holds_on_family : Verdict::violated;
    return out;
}

std::vector<ContourEntry> contour_summary(const AuditContext& ctx) {
    std::vector<ContourEntry> out;
    out.reserve(ctx.size());
    for (std::size_t yi = 0; yi < ctx.size(); ++yi) {
        ContourEntry entry{ctx.texts[yi], {}, {}};
        for (std::size_t xi = 0; xi < ctx.size(); ++xi) {
            if (ctx.related(xi, yi)) entry.upper.push_back(ctx.texts[xi]);
            if (ctx.related(yi, xi)) entry.lower.push_back(ctx.texts[xi]);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

bool wants(const std::vector<AxiomCheck>& checks, AxiomCheck check) {
    return std::find(checks.begin(), checks.end(), check) != checks.end();
}

}  // namespace

AuditReport run_audit(const Representation& rep, const Family& family,
                      const AuditOptions& options) {
    AuditOptions normalized = options;
    // canonical check order, duplicates dropped
    normalized.checks.clear();
    for (AxiomCheck check : all_checks())
        if (wants(options.checks, check)) normalized.checks.push_back(check);
    if (normalized.checks.empty())
        throw std::invalid_argument("audit: no checks selected");
    if (wants(normalized.checks, AxiomCheck::continuity_proxy) && normalized.sequence_length < 3)
        throw std::invalid_argument("audit: sequence length must be at least 3");

    const AuditContext ctx = build_context(rep, family);

    AuditReport report;
    report.representation = rep.name;
    report.family_size = ctx.size();
    report.members = ctx.texts;
    report.options = normalized;

    if (wants(normalized.checks, AxiomCheck::completeness))
        report.completeness = check_completeness(ctx);
    if (wants(normalized.checks, AxiomCheck::transitivity))
        report.transitivity = check_transitivity(ctx);
    if (wants(normalized.checks, AxiomCheck::same_distribution_indifference))
        report.same_distribution_indifference = check_same_distribution_indifference(ctx);
    if (wants(normalized.checks, AxiomCheck::monotonicity))
        report.monotonicity = check_monotonicity(ctx);
    if (wants(normalized.checks, AxiomCheck::continuity_proxy)) {
        report.continuity_proxy = check_continuity_proxy(
            ctx, family.members.front().space(), normalized.sequence_length);
    }
    if (normalized.include_contours) report.contour_sets = contour_summary(ctx);

    if (report.transitivity && report.transitivity->vacuous) {
        report.annotations.push_back(
            report.transitivity->related_pairs == 0
                ? "transitivity holds vacuously: the relation relates no ordered pair on this "
                  "family, so no antecedent triple exists"
                : "transitivity holds vacuously: no ordered triple satisfies both antecedents on "
                  "this family");
    }
    if (report.continuity_proxy) {
        report.annotations.push_back(
            "continuity-proxy samples sequential closedness under the L1 metric with dyadic "
            "outcome perturbations; it certifies the sampled sequences only, not continuity");
    }
    if (normalized.include_contours) {
        report.annotations.push_back(
            "contour sets are computed up to almost-everywhere equality, so a.e.-equal members "
            "always appear together");
    }
    return report;
}

Verdict AuditReport::verdict_of(AxiomCheck check) const {
    switch (check) {
        case AxiomCheck::completeness:
            if (completeness) return completeness->verdict;
            break;
        case AxiomCheck::transitivity:
            if (transitivity) return transitivity->verdict;
            break;
        case AxiomCheck::same_distribution_indifference:
            if (same_distribution_indifference) return same_distribution_indifference->verdict;
            break;
        case AxiomCheck::monotonicity:
            if (monotonicity) return monotonicity->verdict;
            break;
        case AxiomCheck::continuity_proxy:
            if (continuity_proxy) return continuity_proxy->verdict;
            break;
    }
    throw std::logic_error("audit report: check '" + check_name(check) + "' did not run");
}

std::pair<std::vector<SimpleRandomVariable>, std::vector<SimpleRandomVariable>> contour_sets(
    const Representation& rep, const Family& family, const SimpleRandomVariable& y) {
    const bool is_member = std::any_of(family.members.begin(), family.members.end(),
                                       [&y](const auto& m) { return m == y; });
    if (!is_member)
        throw std::invalid_argument("contour_sets: the base point is not a family member");

    std::vector<const SimpleRandomVariable*> ordered;
    ordered.reserve(family.members.size());
    for (const auto& m : family.members) ordered.push_back(&m);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return a->text() < b->text(); });

    std::pair<std::vector<SimpleRandomVariable>, std::vector<SimpleRandomVariable>> out;
    for (const auto* m : ordered) {
        const PreferenceVerdict v = prefer(rep, *m, y);
        if (v.forward) out.first.push_back(*m);
        if (v.backward) out.second.push_back(*m);
    }
    return out;
}

namespace {

nlohmann::json to_json(const PreferenceVerdict& v) {
    return {{"forward", v.forward},
            {"backward", v.backward},
            {"value_forward", format_rational(v.value_forward)},
            {"value_backward", format_rational(v.value_backward)}};
}

nlohmann::json to_json(const PairWitness& w) {
    return {{"x", w.x}, {"y", w.y}, {"verdict", to_json(w.verdict)}};
}

nlohmann::json to_json(const TripleWitness& w) {
    return {{"x", w.x},           {"y", w.y},           {"z", w.z},
            {"xy", to_json(w.xy)}, {"yz", to_json(w.yz)}, {"xz", to_json(w.xz)}};
}

nlohmann::json to_json(const SequenceWitness& w) {
    return {{"limit", w.limit},
            {"target", w.target},
            {"contour", w.contour},
            {"pattern", w.pattern},
            {"limit_verdict", to_json(w.limit_verdict)}};
}

std::string relation_summary(const PreferenceVerdict& v) {
    if (v.indifferent()) return "indifferent";
    if (v.strict()) return "X strictly preferred";
    if (v.reversed().strict()) return "Y strictly preferred";
    return "incomparable";
}

std::string pair_witness_line(const PairWitness& w) {
    return "X = " + w.x + "; Y = " + w.y + "; V(X,Y) = " + format_rational(w.verdict.value_forward) +
           "; V(Y,X) = " + format_rational(w.verdict.value_backward) + " [" +
           relation_summary(w.verdict) + "]";
}

}  // namespace

nlohmann::json report_to_json(const AuditReport& report) {
    nlohmann::json checks = nlohmann::json::object();

    if (report.completeness) {
        const auto& r = *report.completeness;
        nlohmann::json j{{"verdict", verdict_name(r.verdict)},
                         {"pairs_examined", r.pairs_examined},
                         {"violations", r.violations}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        checks[check_name(AxiomCheck::completeness)] = std::move(j);
    }
    if (report.transitivity) {
        const auto& r = *report.transitivity;
        nlohmann::json j{{"verdict", verdict_name(r.verdict)},
                         {"triples_examined", r.triples_examined},
                         {"related_pairs", r.related_pairs},
                         {"antecedent_triples", r.antecedent_triples},
                         {"violations", r.violations},
                         {"vacuous", r.vacuous}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        checks[check_name(AxiomCheck::transitivity)] = std::move(j);
    }
    if (report.same_distribution_indifference) {
        const auto& r = *report.same_distribution_indifference;
        nlohmann::json witnesses = nlohmann::json::array();
        for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
        checks[check_name(AxiomCheck::same_distribution_indifference)] = {
            {"verdict", verdict_name(r.verdict)},
            {"pairs_examined", r.pairs_examined},
            {"same_distribution_pairs", r.same_distribution_pairs},
            {"violations", r.violations},
            {"witnesses", std::move(witnesses)}};
    }
    if (report.monotonicity) {
        const auto& r = *report.monotonicity;
        nlohmann::json j{{"verdict", verdict_name(r.verdict)},
                         {"pairs_examined", r.pairs_examined},
                         {"strict_dominance_pairs", r.strict_dominance_pairs},
                         {"violations", r.violations}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        checks[check_name(AxiomCheck::monotonicity)] = std::move(j);
    }
    if (report.continuity_proxy) {
        const auto& r = *report.continuity_proxy;
        nlohmann::json j{{"verdict", verdict_name(r.verdict)},
                         {"sequences_examined", r.sequences_examined},
                         {"qualifying_sequences", r.qualifying_sequences},
                         {"violations", r.violations},
                         {"sequence_length", r.sequence_length},
                         {"proxy", true}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        checks[check_name(AxiomCheck::continuity_proxy)] = std::move(j);
    }

    std::vector<std::string> check_names;
    check_names.reserve(report.options.checks.size());
    for (AxiomCheck check : report.options.checks) check_names.push_back(check_name(check));

    nlohmann::json contours = nlohmann::json::array();
    for (const auto& entry : report.contour_sets)
        contours.push_back(
            {{"member", entry.member}, {"upper", entry.upper}, {"lower", entry.lower}});

    return {{"representation", report.representation},
            {"family", {{"size", report.family_size}, {"members", report.members}}},
            {"options",
             {{"checks", check_names},
              {"sequence_length", report.options.sequence_length},
              {"include_contours", report.options.include_contours}}},
            {"checks", std::move(checks)},
            {"contour_sets", std::move(contours)},
            {"annotations", report.annotations}};
}

std::string report_to_text(const AuditReport& report) {
    std::string out;
    auto line = [&out](const std::string& s) {
        out += s;
        out += '\n';
    };
    auto verdict_label = [](Verdict v) {
        return v == Verdict::holds_on_family ? std::string("holds on family")
                                             : std::string("VIOLATED");
    };

    line("representation: " + report.representation);
    line("family: " + std::to_string(report.family_size) + " members");
    line("checks:");

    if (report.completeness) {
        const auto& r = *report.completeness;
        line("  completeness: " + verdict_label(r.verdict) + " (" +
             std::to_string(r.pairs_examined) + " pairs examined, " +
             std::to_string(r.violations) + " incomparable)");
        if (r.witness) line("    witness: " + pair_witness_line(*r.witness));
    }
    if (report.transitivity) {
        const auto& r = *report.transitivity;
        line("  transitivity: " + verdict_label(r.verdict) + " (" +
             std::to_string(r.triples_examined) + " ordered triples examined, " +
             std::to_string(r.antecedent_triples) + " antecedent triples, " +
             std::to_string(r.violations) + " violations)" + (r.vacuous ? " [vacuous]" : ""));
        if (r.witness) {
            line("    witness: X = " + r.witness->x + "; Y = " + r.witness->y +
                 "; Z = " + r.witness->z);
            line("      V(X,Y) = " + format_rational(r.witness->xy.value_forward) +
                 "; V(Y,Z) = " + format_rational(r.witness->yz.value_forward) +
                 "; V(X,Z) = " + format_rational(r.witness->xz.value_forward));
        }
    }
    if (report.same_distribution_indifference) {
        const auto& r = *report.same_distribution_indifference;
        line("  same-distribution-indifference: " + verdict_label(r.verdict) + " (" +
             std::to_string(r.pairs_examined) + " pairs examined, " +
             std::to_string(r.same_distribution_pairs) + " identically-distributed pairs, " +
             std::to_string(r.violations) + " violations)");
        for (const auto& w : r.witnesses) line("    witness: " + pair_witness_line(w));
    }
    if (report.monotonicity) {
        const auto& r = *report.monotonicity;
        line("  monotonicity: " + verdict_label(r.verdict) + " (" +
             std::to_string(r.pairs_examined) + " pairs examined, " +
             std::to_string(r.strict_dominance_pairs) + " strict-dominance pairs, " +
             std::to_string(r.violations) + " violations)");
        if (r.witness)
            line("    witness: " + pair_witness_line(*r.witness) +
                 " (X strictly dominates Y statewise)");
    }
    if (report.continuity_proxy) {
        const auto& r = *report.continuity_proxy;
        line("  continuity-proxy: " + verdict_label(r.verdict) + " (" +
             std::to_string(r.sequences_examined) + " sequences examined, " +
             std::to_string(r.qualifying_sequences) + " qualifying, " +
             std::to_string(r.violations) + " violations; depth " +
             std::to_string(r.sequence_length) + ")");
        if (r.witness) {
            line("    witness: sequence -> " + r.witness->limit + " (pattern " +
                 r.witness->pattern + ") stays in the " + r.witness->contour + " contour of " +
                 r.witness->target + " but the limit escapes");
        }
    }

    if (!report.contour_sets.empty()) {
        line("contour sets:");
        for (const auto& entry : report.contour_sets) {
            auto set_text = [](const std::vector<std::string>& names) {
                if (names.empty()) return std::string("{}");
                std::string s = "{";
                for (const auto& name : names) {
                    if (s.size() > 1) s += ", ";
                    s += name;
                }
                return s + "}";
            };
            line("  " + entry.member + ":");
            line("    upper = " + set_text(entry.upper));
            line("    lower = " + set_text(entry.lower));
        }
    }
    if (!report.annotations.empty()) {
        line("annotations:");
        for (const auto& note : report.annotations) line("  - " + note);
    }
    return out;
}

const std::vector<ExpectProfile>& expect_profiles() {
    static const std::vector<ExpectProfile> profiles = [] {
        const auto violated_pattern = std::vector<std::pair<AxiomCheck, Verdict>>{
            {AxiomCheck::completeness, Verdict::violated},
            {AxiomCheck::transitivity, Verdict::holds_on_family},
            {AxiomCheck::same_distribution_indifference, Verdict::violated},
            {AxiomCheck::monotonicity, Verdict::violated},
            {AxiomCheck::continuity_proxy, Verdict::holds_on_family}};
        std::vector<std::pair<AxiomCheck, Verdict>> all_hold;
        for (AxiomCheck check : all_checks()) all_hold.emplace_back(check, Verdict::holds_on_family);
        return std::vector<ExpectProfile>{{"counterexample-1", violated_pattern},
                                          {"counterexample-2", violated_pattern},
                                          {"all-hold", all_hold}};
    }();
    return profiles;
}

std::optional<ExpectProfile> expect_profile_by_name(std::string_view name) {
    for (const auto& profile : expect_profiles())
        if (profile.name == name) return profile;
    return std::nullopt;
}

bool matches_profile(const AuditReport& report, const ExpectProfile& profile) {
    for (const auto& [check, verdict] : profile.expected) {
        try {
            if (report.verdict_of(check) != verdict) return false;
        } catch (const std::logic_error&) {
            return false;  // the profile names a check that did not run
        }
    }
    return true;
}

}  // namespace rax
