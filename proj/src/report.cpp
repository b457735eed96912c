#include <quasicartan/report.hpp>

#include <quasicartan/errors.hpp>
#include <quasicartan/matrix_io.hpp>
#include <quasicartan/oracle.hpp>

#include <stdexcept>

namespace quasicartan {

using nlohmann::json;

std::string_view to_string(SymmetryKind k) {
    return k == SymmetryKind::symmetric ? "symmetric" : "skew";
}

std::string_view to_string(FailureKind k) {
    switch (k) {
        case FailureKind::sign_violation: return "sign_violation";
        case FailureKind::ratio_conflict: return "ratio_conflict";
        case FailureKind::nonzero_diagonal: return "nonzero_diagonal";
    }
    return "sign_violation";
}

json to_json(const Symmetrizer& d) {
    json diag = json::array();
    for (const auto& v : d.diag) diag.push_back(v.get_str());
    return {{"kind", to_string(d.kind)}, {"diag", std::move(diag)}};
}

Symmetrizer symmetrizer_from_json(const json& j) {
    Symmetrizer d;
    const auto& kind = j.at("kind").get_ref<const std::string&>();
    if (kind == "symmetric") {
        d.kind = SymmetryKind::symmetric;
    } else if (kind == "skew") {
        d.kind = SymmetryKind::skew;
    } else {
        throw std::invalid_argument("symmetrizer kind must be \"symmetric\" or \"skew\"");
    }
    for (const auto& v : j.at("diag")) {
        Rational r(v.get<std::string>(), 10);
        r.canonicalize();
        d.diag.push_back(std::move(r));
    }
    return d;
}

json to_json(const SymmetrizeOutcome& outcome) {
    json j;
    j["symmetrizable"] = outcome.symmetrizable;
    j["symmetrizer"] = outcome.witness ? to_json(*outcome.witness) : json(nullptr);
    if (outcome.failure) {
        j["failure"] = {{"kind", to_string(outcome.failure->kind)},
                        {"i", outcome.failure->i + 1},
                        {"j", outcome.failure->j + 1}};
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

json to_json(const PositivityVerdict& verdict) {
    json minors = json::array();
    for (const auto& m : verdict.minors) minors.push_back(to_decimal(m));
    json j;
    j["positive"] = verdict.positive;
    j["first_failure"] = verdict.first_failure ? json(*verdict.first_failure) : json(nullptr);
    j["minors"] = std::move(minors);
    return j;
}

json to_json(const CompanionResult& result) {
    json j;
    j["found"] = result.found;
    j["companion"] = result.companion ? to_json(*result.companion) : json(nullptr);
    j["assignments_tried"] = result.assignments_tried;
    j["fast_path"] = to_string(result.fast_path);
    return j;
}

json to_json(const ComponentPartition& partition) {
    json blocks = json::array();
    for (const auto& block : partition.blocks) {
        json b = json::array();
        for (std::size_t v : block) b.push_back(v + 1);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

namespace {

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("internal consistency check failed: ") + what);
}

}  // namespace

SymmetrizeOutcome decide_symmetrizable(const IntMatrix& a, const ClassifyOptions& options) {
    SymmetrizeOutcome outcome = check_symmetrizable(a);
    if (options.use_oracle) {
        require(oracle::cycle_symmetrizable(a) == outcome.symmetrizable,
                "worklist and cycle criteria disagree on symmetrizability");
    }
    if (outcome.witness) {
        if (options.integer_symmetrizer) {
            outcome.witness = integer_normalize(*outcome.witness, connected_components(a));
        }
        require(outcome.witness->certifies(a), "symmetrizer does not symmetrize the matrix");
    }
    return outcome;
}

SymmetrizeOutcome decide_skew_symmetrizable(const IntMatrix& b, const ClassifyOptions& options) {
    SymmetrizeOutcome outcome = check_skew_symmetrizable(b);
    if (outcome.witness) {
        if (options.integer_symmetrizer) {
            outcome.witness = integer_normalize(*outcome.witness, connected_components(b));
        }
        require(outcome.witness->certifies(b), "skew-symmetrizer does not skew-symmetrize the matrix");
    }
    return outcome;
}

PositivityVerdict decide_positive(const IntMatrix& c, const ClassifyOptions& options) {
    if (!check_symmetrizable(c).symmetrizable) {
        throw PreconditionError("matrix is not symmetrizable; positivity by leading minors is undefined");
    }
    if (!options.use_oracle) return is_positive(c);

    PositivityVerdict verdict =
        is_positive(c, [](const IntMatrix& m) { return oracle::cofactor_determinant(m); });
    require(verdict == is_positive(c), "Bareiss and cofactor leading minors disagree");
    require(verdict.positive == oracle::all_principal_minors_positive_cofactor(c),
            "leading-minor and all-principal-minor tests disagree");
    return verdict;
}

CompanionResult decide_companion(const IntMatrix& b, const ClassifyOptions& options) {
    if (!check_skew_symmetrizable(b).symmetrizable) {
        throw PreconditionError("matrix is not skew-symmetrizable; companions are undefined");
    }
    CompanionResult result = options.use_oracle ? oracle::exhaustive_companion(b)
                                                : find_positive_companion(b, options.companion);
    if (options.use_oracle) {
        require(result.found == find_positive_companion(b, options.companion).found,
                "exhaustive and pruned companion searches disagree");
    }
    if (result.companion) {
        require(verify_companion(b, *result.companion), "companion fails verification");
    }
    return result;
}

ClassificationReport classify(const IntMatrix& a, const ClassifyOptions& options) {
    ClassificationReport r;
    r.n = a.size();
    r.symmetric_by_signs = is_symmetric_by_signs(a);
    r.skew_symmetric_by_signs = is_skew_symmetric_by_signs(a);
    r.symmetrizable = decide_symmetrizable(a, options);
    r.skew_symmetrizable = decide_skew_symmetrizable(a, options);
    if (r.symmetrizable.symmetrizable) {
        r.positive = decide_positive(a, options);
    }
    if (r.skew_symmetrizable.symmetrizable) {
        try {
            r.companion = decide_companion(a, options);
        } catch (const SearchCapExceeded&) {
            r.companion_undecided = true;
        }
    }
    r.components = connected_components(a);
    r.connected = r.components.connected();
    return r;
}

json to_json(const ClassificationReport& report) {
    json j;
    j["n"] = report.n;
    j["symmetric_by_signs"] = report.symmetric_by_signs;
    j["skew_symmetric_by_signs"] = report.skew_symmetric_by_signs;
    j["symmetrizable"] = to_json(report.symmetrizable);
    j["skew_symmetrizable"] = to_json(report.skew_symmetrizable);
    j["positive"] = report.positive ? to_json(*report.positive) : json(nullptr);
    if (report.companion_undecided) {
        j["companion"] = {{"undecided", "cap"}};
    } else {
        j["companion"] = report.companion ? to_json(*report.companion) : json(nullptr);
    }
    j["connected"] = report.connected;
    j["components"] = to_json(report.components);
    return j;
}

}  // namespace quasicartan
