#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rax/family.hpp"
#include "rax/representation.hpp"

namespace rax {

enum class AxiomCheck {
    completeness,
    transitivity,
    same_distribution_indifference,
    monotonicity,
    continuity_proxy,
};

std::string check_name(AxiomCheck check);
std::optional<AxiomCheck> check_by_name(std::string_view name);
const std::vector<AxiomCheck>& all_checks();

struct AuditOptions {
    std::vector<AxiomCheck> checks = all_checks();
    // dyadic perturbation depth for the continuity proxy (>= 3)
    int sequence_length = 12;
    bool include_contours = true;
};

// "holds_on_family" certifies the finite family that was searched, never
// the whole space of random variables.
enum class Verdict { holds_on_family, violated };

std::string verdict_name(Verdict verdict);

struct PairWitness {
    std::string x;
    std::string y;
    PreferenceVerdict verdict;  // prefer(x, y)
};

struct TripleWitness {
    std::string x;
    std::string y;
    std::string z;
    PreferenceVerdict xy;
    PreferenceVerdict yz;
    PreferenceVerdict xz;
};

struct SequenceWitness {
    std::string limit;    // the member the sequence converges to
    std::string target;   // the contour's base point y
    std::string contour;  // "upper" or "lower"
    std::string pattern;  // perturbation pattern name
    PreferenceVerdict limit_verdict;  // prefer(limit, target)
};

struct CompletenessResult {
    Verdict verdict = Verdict::holds_on_family;
    std::uint64_t pairs_examined = 0;
    std::uint64_t violations = 0;
    std::optional<PairWitness> witness;  // first incomparable pair
};

struct TransitivityResult {
    Verdict verdict = Verdict::holds_on_family;
    std::uint64_t triples_examined = 0;  // all n^3 ordered triples
    std::uint64_t related_pairs = 0;     // ordered pairs with X weakly preferred to Y
    std::uint64_t antecedent_triples = 0;
    std::uint64_t violations = 0;
    std::optional<TripleWitness> witness;
    bool vacuous = false;  // no antecedent triple existed
};

struct SameDistributionResult {
    Verdict verdict = Verdict::holds_on_family;
    std::uint64_t pairs_examined = 0;
    std::uint64_t same_distribution_pairs = 0;
    std::uint64_t violations = 0;
    std::vector<PairWitness> witnesses;  // every violating pair
};

struct MonotonicityResult {
    Verdict verdict = Verdict::holds_on_family;
    std::uint64_t pairs_examined = 0;
    std::uint64_t strict_dominance_pairs = 0;
    std::uint64_t violations = 0;
    std::optional<PairWitness> witness;  // dominant member first
};

struct ContinuityProxyResult {
    Verdict verdict = Verdict::holds_on_family;
    std::uint64_t sequences_examined = 0;
    std::uint64_t qualifying_sequences = 0;  // every sampled element stayed in the contour
    std::uint64_t violations = 0;            // qualifying sequence whose limit escaped
    int sequence_length = 0;
    std::optional<SequenceWitness> witness;
};

struct ContourEntry {
    std::string member;
    std::vector<std::string> upper;  // {X : X weakly preferred to member}
    std::vector<std::string> lower;  // {X : member weakly preferred to X}
};

struct AuditReport {
    std::string representation;
    std::size_t family_size = 0;
    std::vector<std::string> members;  // canonical text, canonical order
    AuditOptions options;

    std::optional<CompletenessResult> completeness;
    std::optional<TransitivityResult> transitivity;
    std::optional<SameDistributionResult> same_distribution_indifference;
    std::optional<MonotonicityResult> monotonicity;
    std::optional<ContinuityProxyResult> continuity_proxy;

    std::vector<ContourEntry> contour_sets;
    std::vector<std::string> annotations;

    Verdict verdict_of(AxiomCheck check) const;  // throws if the check did not run
};

/// Runs the selected checks by exhaustive search over the family, in the
/// canonical member order (lexicographic by canonical text). Deterministic:
/// identical (representation, family, options) give identical reports.
AuditReport run_audit(const Representation& rep, const Family& family,
                      const AuditOptions& options = {});

/// Upper and lower contour sets of `y` restricted to the family, in
/// canonical member order. `y` must be a member.
std::pair<std::vector<SimpleRandomVariable>, std::vector<SimpleRandomVariable>> contour_sets(
    const Representation& rep, const Family& family, const SimpleRandomVariable& y);

nlohmann::json report_to_json(const AuditReport& report);
std::string report_to_text(const AuditReport& report);

// A named verdict pattern the CLI can assert against.
struct ExpectProfile {
    std::string name;
    std::vector<std::pair<AxiomCheck, Verdict>> expected;
};

const std::vector<ExpectProfile>& expect_profiles();
std::optional<ExpectProfile> expect_profile_by_name(std::string_view name);

/// True when every check the profile names ran and returned the expected
/// verdict.
bool matches_profile(const AuditReport& report, const ExpectProfile& profile);

}  // namespace rax
