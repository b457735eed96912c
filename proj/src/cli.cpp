#include <quasicartan/cli.hpp>

#include <quasicartan/errors.hpp>
#include <quasicartan/matrix_io.hpp>
#include <quasicartan/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace quasicartan::cli {

namespace {

struct Settings {
    std::string file;
    std::string format = "text";
    bool no_prune = false;
    bool no_fastpath = false;
    std::optional<std::uint64_t> cap;
    bool oracle = false;
    bool integer_symmetrizer = false;
};

void add_common_options(CLI::App& sub, Settings& s) {
    sub.add_option("FILE", s.file, "Matrix file (text or JSON), or - for stdin")->required();
    sub.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
    sub.add_flag("--no-prune", s.no_prune, "Disable pruning in the companion search");
    sub.add_flag("--no-fastpath", s.no_fastpath, "Disable companion fast paths and component splitting");
    sub.add_option("--cap", s.cap, "Companion search budget (default 2^24, env QUASICARTAN_CAP)");
    sub.add_flag("--oracle", s.oracle, "Decide with brute-force reference routines (small matrices)");
    sub.add_flag("--integer-symmetrizer", s.integer_symmetrizer,
                 "Report the smallest positive integer symmetrizer per component");
}

std::string read_input(const std::string& file, std::istream& in) {
    if (file == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream stream(file, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot open '" + file + "'");
    return {std::istreambuf_iterator<char>(stream), std::istreambuf_iterator<char>()};
}

std::uint64_t cap_from_environment() {
    const char* value = std::getenv("QUASICARTAN_CAP");
    if (value == nullptr || *value == '\0') return default_search_cap;
    std::string s(value);
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 19) {
        throw std::runtime_error("QUASICARTAN_CAP must be a non-negative integer, got '" + s + "'");
    }
    return std::stoull(s);
}

std::string join_diag(const Symmetrizer& d) {
    std::string out;
    for (std::size_t i = 0; i < d.diag.size(); ++i) {
        if (i) out += ' ';
        out += d.diag[i].get_str();
    }
    return out;
}

std::string join_minors(const PositivityVerdict& v) {
    std::string out;
    for (std::size_t i = 0; i < v.minors.size(); ++i) {
        if (i) out += ' ';
        out += v.minors[i].get_str();
    }
    return out;
}

void print_outcome_text(std::ostream& out, std::string_view label, const SymmetrizeOutcome& o) {
    out << label << ": " << (o.symmetrizable ? "yes" : "no") << '\n';
    if (o.witness) out << "symmetrizer: " << join_diag(*o.witness) << '\n';
    if (o.failure) {
        out << "reason: " << to_string(o.failure->kind) << " at (" << o.failure->i + 1 << ","
            << o.failure->j + 1 << ")\n";
    }
}

void print_positivity_text(std::ostream& out, const PositivityVerdict& v) {
    out << "positive: " << (v.positive ? "yes" : "no") << '\n';
    if (v.first_failure) out << "first failure: " << *v.first_failure << '\n';
    out << "leading minors: " << join_minors(v) << '\n';
}

void print_companion_text(std::ostream& out, const CompanionResult& r) {
    if (r.found) {
        out << "companion: found (fast path " << to_string(r.fast_path) << ", assignments tried "
            << r.assignments_tried << ")\n"
            << to_text(*r.companion);
    } else {
        out << "companion: none (fast path " << to_string(r.fast_path) << ", assignments tried "
            << r.assignments_tried << ")\n"
            << "There is no positive quasi-Cartan companion.\n";
    }
}

int cmd_symmetrizable(const IntMatrix& a, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const auto outcome = decide_symmetrizable(a, opts);
    if (json) {
        out << to_json(outcome).dump() << '\n';
    } else {
        print_outcome_text(out, "symmetrizable", outcome);
    }
    return outcome.symmetrizable ? affirmative : negative;
}

int cmd_symmetrizer(const IntMatrix& a, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const auto outcome = decide_symmetrizable(a, opts);
    if (!outcome.symmetrizable) {
        if (json) {
            out << to_json(outcome).dump() << '\n';
        } else {
            print_outcome_text(out, "symmetrizable", outcome);
        }
        return negative;
    }
    SymmetrizeOutcome built;
    built.symmetrizable = true;
    built.witness = find_symmetrizer(a);
    if (opts.integer_symmetrizer) built.witness = integer_normalize(*built.witness, connected_components(a));
    if (!built.witness->certifies(a)) throw std::logic_error("internal consistency check failed: symmetrizer");
    if (json) {
        out << to_json(*built.witness).dump() << '\n';
    } else {
        out << "symmetrizer: " << join_diag(*built.witness) << '\n';
    }
    return affirmative;
}

int cmd_positive(const IntMatrix& c, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const auto verdict = decide_positive(c, opts);
    if (json) {
        out << to_json(verdict).dump() << '\n';
    } else {
        print_positivity_text(out, verdict);
    }
    return verdict.positive ? affirmative : negative;
}

int cmd_companion(const IntMatrix& b, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const auto result = decide_companion(b, opts);
    if (json) {
        out << to_json(result).dump() << '\n';
    } else {
        print_companion_text(out, result);
    }
    return result.found ? affirmative : negative;
}

int cmd_classify(const IntMatrix& a, const ClassifyOptions& opts, bool json, std::ostream& out) {
    const auto report = classify(a, opts);
    if (json) {
        out << to_json(report).dump() << '\n';
    } else {
        out << "dimension: " << report.n << '\n'
            << "symmetric by signs: " << (report.symmetric_by_signs ? "yes" : "no") << '\n'
            << "skew-symmetric by signs: " << (report.skew_symmetric_by_signs ? "yes" : "no") << '\n';
        print_outcome_text(out, "symmetrizable", report.symmetrizable);
        if (report.positive) print_positivity_text(out, *report.positive);
        print_outcome_text(out, "skew-symmetrizable", report.skew_symmetrizable);
        if (report.companion) print_companion_text(out, *report.companion);
        if (report.companion_undecided) out << "companion: undecided (search cap exceeded)\n";
        out << "connected: " << (report.connected ? "yes" : "no") << '\n' << "components:";
        for (const auto& block : report.components.blocks) {
            out << " {";
            for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << block[k] + 1;
            out << '}';
        }
        out << '\n';
    }
    return report.companion_undecided ? undecided : affirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetrizability, positivity and positive quasi-Cartan companions of integer matrices",
                 "quasicartan"};
    app.require_subcommand(1);

    Settings settings;
    struct Command {
        const char* name;
        const char* help;
        int (*handler)(const IntMatrix&, const ClassifyOptions&, bool, std::ostream&);
    };
    const Command commands[] = {
        {"symmetrizable", "Decide whether D*A is symmetric for some positive diagonal D", cmd_symmetrizable},
        {"symmetrizer", "Construct a symmetrizer of a symmetrizable matrix", cmd_symmetrizer},
        {"positive", "Decide positivity of a symmetrizable matrix by leading minors", cmd_positive},
        {"companion", "Search for a positive quasi-Cartan companion of a skew-symmetrizable matrix",
         cmd_companion},
        {"classify", "Run every check and report all verdicts", cmd_classify},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common_options(*sub, settings);
        subs.emplace_back(sub, &c);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return affirmative;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return affirmative;
        }
        err << "quasicartan: " << e.what() << '\n';
        return usage_error;
    }

    const Command* chosen = nullptr;
    for (const auto& [sub, command] : subs) {
        if (sub->parsed()) chosen = command;
    }

    const bool json = settings.format == "json";
    try {
        ClassifyOptions opts;
        opts.use_oracle = settings.oracle;
        opts.integer_symmetrizer = settings.integer_symmetrizer;
        opts.companion.prune = !settings.no_prune;
        opts.companion.fast_paths = !settings.no_fastpath;
        opts.companion.cap = settings.cap ? *settings.cap : cap_from_environment();

        const IntMatrix a = parse_matrix(read_input(settings.file, in));
        return chosen->handler(a, opts, json, out);
    } catch (const ParseError& e) {
        err << "quasicartan: " << settings.file << ": " << e.what() << '\n';
        return usage_error;
    } catch (const SearchCapExceeded& e) {
        if (json) out << nlohmann::json{{"undecided", "cap"}, {"cap", e.cap()}}.dump() << '\n';
        err << "quasicartan: " << e.what() << '\n';
        return undecided;
    } catch (const std::exception& e) {
        err << "quasicartan: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace quasicartan::cli
