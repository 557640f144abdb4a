#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gridperm/cache.hpp"
#include "gridperm/distance.hpp"
#include "gridperm/grid_class.hpp"
#include "gridperm/oracle.hpp"
#include "gridperm/perm_set.hpp"
#include "gridperm/polynomial.hpp"

namespace gridperm::cli {

namespace {

enum class OutputFormat { Text, Json, Latex };

struct Config {
    OutputFormat format = OutputFormat::Text;
    std::optional<long> eval;
    std::string cache_dir;
    bool no_cache = false;
    DistanceLimits limits;
    std::size_t n_ceiling = 7;
    bool allow_n8 = false;
    bool verbose = false;
    unsigned threads = 1;
};

// Thrown for bad user input; reported with exit code kUsageError.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignedPerm parse_perm_arg(const std::string& text) {
    try {
        return SignedPerm::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("--perm \"" + text + "\": " + e.what());
    }
}

PermSet read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return read_perm_set(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void print_histogram(const LengthHistogram& h, std::ostream& err) {
    err << "|S| = " << h.total() << (h.has_epsilon ? " (including ε)" : "") << '\n';
    if (h.has_epsilon) err << "  length 0: 1\n";
    for (const auto& [m, c] : h.counts) err << "  length " << m << ": " << c << '\n';
}

void emit_polynomial(const Polynomial& p, const Config& config, std::ostream& out) {
    std::optional<Rational> value;
    if (config.eval) {
        value = evaluate(p, Rational(*config.eval));
        if (value->get_den() != 1)
            throw InternalError("P(" + std::to_string(*config.eval) + ") = " + value->get_str() +
                                " is not an integer");
    }
    switch (config.format) {
        case OutputFormat::Json: {
            auto doc = nlohmann::ordered_json::parse(to_json(p));
            if (value) doc["eval"] = {{"n", *config.eval}, {"value", value->get_str()}};
            out << doc.dump() << '\n';
            return;
        }
        case OutputFormat::Latex:
            out << format(p, PolyFormat::Latex) << '\n';
            break;
        case OutputFormat::Text:
            out << format(p, PolyFormat::CoeffArray) << '\n';
            break;
    }
    if (value) out << "P(" << *config.eval << ") = " << value->get_str() << '\n';
}

void emit_perm_set(const PermSet& set, const Config& config, std::ostream& out) {
    if (config.format == OutputFormat::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& pi : set) list.push_back(pi.to_string());
        out << list.dump() << '\n';
        return;
    }
    for (const auto& pi : set) out << pi.to_string() << '\n';
}

DistanceOptions distance_options(const Config& config, std::unique_ptr<DistanceCache>& cache) {
    DistanceOptions options;
    options.limits = config.limits;
    options.closure.workers = config.threads;
    if (!config.no_cache) {
        std::optional<std::filesystem::path> root;
        if (!config.cache_dir.empty())
            root = config.cache_dir;
        else
            root = DistanceCache::default_root();
        if (root) {
            cache = std::make_unique<DistanceCache>(*root);
            options.cache = cache.get();
        }
    }
    return options;
}

int cmd_enumerate(const std::vector<std::string>& perms, const std::string& input, const Config& config,
                  std::ostream& out, std::ostream& err) {
    PermSet generators;
    if (!input.empty())
        for (const auto& pi : read_input_file(input)) generators.insert(pi);
    for (const auto& text : perms) generators.insert(parse_perm_arg(text));
    if (generators.empty()) throw UsageError("enumerate: give --perm or --input");

    ClosureOptions closure{config.threads};
    const PermSet s = complete_and_compact(generators, closure);
    const LengthHistogram h = length_histogram(s);
    if (config.verbose) print_histogram(h, err);
    if (h.counts.empty())
        err << "note: S = {ε}; ε contributes only at n = 0, so the polynomial is zero for n >= 1\n";
    emit_polynomial(from_histogram(h), config, out);
    return kOk;
}

int cmd_distance(DistanceFamily family, std::size_t k, bool exact, const Config& config, std::ostream& out,
                 std::ostream& err) {
    std::unique_ptr<DistanceCache> cache;
    const DistanceOptions options = distance_options(config, cache);
    if (config.verbose) {
        err << "|Pi_" << k << "| = " << generator_keys(family, k, options).size() << '\n';
        print_histogram(distance_histogram(family, k, options), err);
    }
    const Polynomial p = exact ? exact_distance_polynomial(family, k, options)
                               : distance_polynomial(family, k, options);
    emit_polynomial(p, config, out);
    return kOk;
}

int cmd_verify(DistanceFamily family, std::size_t k_max, std::size_t n_max, const Config& config,
               std::ostream& out) {
    std::unique_ptr<DistanceCache> cache;
    const DistanceOptions options = distance_options(config, cache);
    OracleLimits limits;
    limits.n_ceiling = config.allow_n8 ? OracleLimits::kHardMaximum : config.n_ceiling;
    const VerifyReport report = verify(family, k_max, n_max, options, limits);
    if (config.format == OutputFormat::Json)
        out << report.json() << '\n';
    else
        out << report.table();
    return report.all_match() ? kOk : kMismatch;
}

int cmd_downset(const std::string& perm, const Config& config, std::ostream& out) {
    emit_perm_set(complete_and_compact(PermSet{parse_perm_arg(perm)}, {config.threads}), config, out);
    return kOk;
}

int cmd_compactify(const std::string& perm, const Config& config, std::ostream& out) {
    const Compactification c = compactify(parse_perm_arg(perm));
    if (config.format == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["core"] = c.core.to_string();
        doc["vector"] = c.fill.sizes();
        out << doc.dump() << '\n';
    } else {
        out << "core: " << c.core.to_string() << '\n';
        out << "vector: " << c.fill.to_string() << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate grid classes of signed permutations", "gridperm"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"latex", OutputFormat::Latex}};
    app.add_option("--format", config.format, "Output format: text, json or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->option_text("text|json|latex");
    long eval_n = 0;
    auto* eval_opt = app.add_option("--eval", eval_n, "Also print the exact value P(n)")
                         ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", config.cache_dir,
                   "Cache directory (default: $GRIDPERM_CACHE_DIR, then the user cache dir)");
    app.add_flag("--no-cache", config.no_cache, "Neither read nor write the cache");
    app.add_option("--pancake-k-ceiling", config.limits.pancake_k_ceiling, "Largest pancake k accepted")
        ->check(CLI::PositiveNumber);
    app.add_option("--reversal-k-ceiling", config.limits.reversal_k_ceiling, "Largest reversal k accepted")
        ->check(CLI::PositiveNumber);
    app.add_option("--n-ceiling", config.n_ceiling, "Largest n searched by verify")
        ->check(CLI::Range(std::size_t{1}, OracleLimits::kHardMaximum));
    app.add_flag("--allow-n8", config.allow_n8, "Permit verify with n = 8");
    app.add_flag("-v,--verbose", config.verbose, "Print |S| by length on stderr");
    app.add_option("--threads", config.threads, "Worker threads for the closure")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> enum_perms;
    std::string enum_input;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Polynomial counting Grid(Π) ∩ B_n");
    enumerate_cmd->add_option("--perm", enum_perms, "Generator in one-line notation (repeatable)")
        ->allow_extra_args(false);
    enumerate_cmd->add_option("--input", enum_input, "File with one generator per line");

    std::size_t k = 0;
    bool exact = false;
    auto* pancake_cmd = app.add_subcommand("pancake", "Signed permutations within k prefix reversals");
    pancake_cmd->add_option("--k", k, "Distance bound")->required();
    pancake_cmd->add_flag("--exact", exact, "Count distance exactly k");
    auto* reversal_cmd = app.add_subcommand("reversal", "Signed permutations within k block reversals");
    reversal_cmd->add_option("--k", k, "Distance bound")->required();
    reversal_cmd->add_flag("--exact", exact, "Count distance exactly k");

    DistanceFamily family = DistanceFamily::PrefixReversal;
    std::size_t k_max = 0;
    std::size_t n_max = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Check the polynomials against breadth-first search");
    verify_cmd->add_option_function<std::string>(
                  "--family", [&](const std::string& name) {
                      auto parsed = parse_family(name);
                      if (!parsed) throw CLI::ValidationError("--family", "expected pancake or reversal");
                      family = *parsed;
                  },
                  "pancake or reversal")
        ->required();
    verify_cmd->add_option("--k-max", k_max, "Largest k checked")->required();
    verify_cmd->add_option("--n-max", n_max, "Largest n checked")->required()->check(CLI::PositiveNumber);

    std::string perm;
    auto* downset_cmd = app.add_subcommand("downset", "Compact permutations contained in a permutation");
    downset_cmd->add_option("--perm", perm, "Permutation in one-line notation")->required();
    auto* compactify_cmd = app.add_subcommand("compactify", "Compact core and filling vector");
    compactify_cmd->add_option("--perm", perm, "Permutation in one-line notation")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    if (*eval_opt) config.eval = eval_n;

    try {
        const bool polynomial_command = *enumerate_cmd || *pancake_cmd || *reversal_cmd;
        if (config.eval && !polynomial_command)
            throw UsageError("--eval applies only to enumerate, pancake and reversal");
        if (*enumerate_cmd) return cmd_enumerate(enum_perms, enum_input, config, out, err);
        if (*pancake_cmd) return cmd_distance(DistanceFamily::PrefixReversal, k, exact, config, out, err);
        if (*reversal_cmd) return cmd_distance(DistanceFamily::BlockReversal, k, exact, config, out, err);
        if (*verify_cmd) return cmd_verify(family, k_max, n_max, config, out);
        if (*downset_cmd) return cmd_downset(perm, config, out);
        if (*compactify_cmd) return cmd_compactify(perm, config, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace gridperm::cli
