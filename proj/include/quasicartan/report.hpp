#pragma once

// JSON serialization of every verdict type, and the combined
// classification report. Keys are emitted in sorted order and big integers
// as decimal strings, so dump() output is canonical: parsing it and dumping
// again reproduces the same bytes. Indices in reports are 1-based.

#include <quasicartan/companion.hpp>
#include <quasicartan/matrix.hpp>
#include <quasicartan/positivity.hpp>
#include <quasicartan/symmetrize.hpp>

#include <json.hpp>

#include <optional>
#include <string_view>

namespace quasicartan {

std::string_view to_string(SymmetryKind k);
std::string_view to_string(FailureKind k);

nlohmann::json to_json(const Symmetrizer& d);
Symmetrizer symmetrizer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymmetrizeOutcome& outcome);
nlohmann::json to_json(const PositivityVerdict& verdict);
nlohmann::json to_json(const CompanionResult& result);
nlohmann::json to_json(const ComponentPartition& partition);

struct ClassificationReport {
    std::size_t n = 0;
    bool symmetric_by_signs = false;
    bool skew_symmetric_by_signs = false;
    SymmetrizeOutcome symmetrizable;
    SymmetrizeOutcome skew_symmetrizable;
    std::optional<PositivityVerdict> positive;  // iff symmetrizable
    std::optional<CompanionResult> companion;   // iff skew-symmetrizable and decided
    bool companion_undecided = false;           // search cap exceeded
    bool connected = false;
    ComponentPartition components;
};

struct ClassifyOptions {
    CompanionOptions companion;
    bool integer_symmetrizer = false;
    /// Brute-force routines where one exists (symmetrizability verdict,
    /// cofactor minors, exhaustive companion search). Small n only.
    bool use_oracle = false;
};

/// The individual decisions used by classify and by the command-line
/// subcommands. With use_oracle the brute-force routine decides and the
/// fast routine must agree with it (std::logic_error otherwise).
SymmetrizeOutcome decide_symmetrizable(const IntMatrix& a, const ClassifyOptions& options);
SymmetrizeOutcome decide_skew_symmetrizable(const IntMatrix& b, const ClassifyOptions& options);
PositivityVerdict decide_positive(const IntMatrix& c, const ClassifyOptions& options);
CompanionResult decide_companion(const IntMatrix& b, const ClassifyOptions& options);

/// Runs every check on a. Each witness is re-verified before it is stored;
/// a failed re-verification throws std::logic_error.
ClassificationReport classify(const IntMatrix& a, const ClassifyOptions& options = {});

nlohmann::json to_json(const ClassificationReport& report);

}  // namespace quasicartan
