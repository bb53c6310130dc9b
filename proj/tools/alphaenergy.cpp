#include "alphaenergy/codec.hpp"
#include "alphaenergy/error.hpp"
#include "alphaenergy/generators.hpp"
#include "alphaenergy/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace ae = alphaenergy;

namespace {

struct CommonOptions {
    std::string alphas;
    std::vector<std::string> inputs;
    std::vector<std::string> graph6;
    std::vector<std::string> families;
    std::string format = "csv";
    std::string out;
    double tolerance = ae::Tolerances{}.holds;
    double equality_tolerance = ae::Tolerances{}.equality;
    bool strict = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_corpus_options(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("graph6", o.graph6, "graph6 strings");
    cmd.add_option("-i,--input", o.inputs, "graph6 lines or an edge-list file (auto-detected)");
    cmd.add_option("--family", o.families,
                   "generator descriptor, e.g. complete:3..8, star:4, cycle:5, bipartite:2,3, petersen, "
                   "er:n,p,seed, er-connected:n,p,seed, regular:n,k,seed");
}

void add_output_options(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    cmd.add_option("-o,--out", o.out, "write the report here instead of stdout");
}

void add_alpha_option(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("-a,--alpha", o.alphas, "comma-separated alpha values (default 0,0.1,...,0.9,0.95)");
}

void add_tolerance_options(CLI::App& cmd, CommonOptions& o) {
    cmd.add_option("--tolerance", o.tolerance, "relative slack allowed before a bound counts as violated")
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--equality-tolerance", o.equality_tolerance, "relative gap that counts as equality")
        ->check(CLI::NonNegativeNumber);
}

std::vector<double> alphas_of(const CommonOptions& o) {
    return o.alphas.empty() ? ae::default_alpha_grid() : ae::parse_alpha_list(o.alphas);
}

ae::Tolerances tolerances_of(const CommonOptions& o) { return {o.tolerance, o.equality_tolerance}; }

ae::ReportFormat format_of(const CommonOptions& o) {
    return o.format == "json" ? ae::ReportFormat::json : ae::ReportFormat::csv;
}

ae::Corpus gather(const CommonOptions& o) {
    ae::Corpus corpus;
    for (std::size_t k = 0; k < o.graph6.size(); ++k) {
        const std::string& text = o.graph6[k];
        try {
            corpus.graphs.push_back({text, ae::parse_graph6(text)});
        } catch (const ae::MalformedGraph6& e) {
            corpus.errors.push_back({"argument " + std::to_string(k + 1) + ":byte " + std::to_string(e.position()),
                                     e.what()});
        } catch (const ae::Error& e) {
            corpus.errors.push_back({"argument " + std::to_string(k + 1), e.what()});
        }
    }
    for (const std::string& path : o.inputs) {
        ae::Corpus part = ae::load_corpus_file(path);
        std::move(part.graphs.begin(), part.graphs.end(), std::back_inserter(corpus.graphs));
        std::move(part.errors.begin(), part.errors.end(), std::back_inserter(corpus.errors));
    }
    for (const std::string& text : o.families) {
        const auto families = ae::parse_families(text);
        ae::Corpus part = ae::corpus_from_families(families);
        std::move(part.graphs.begin(), part.graphs.end(), std::back_inserter(corpus.graphs));
        std::move(part.errors.begin(), part.errors.end(), std::back_inserter(corpus.errors));
    }
    for (const ae::SourceError& e : corpus.errors) {
        std::cerr << "alphaenergy: " << e.location << ": " << e.message << '\n';
    }
    return corpus;
}

// Strict gathering for single-graph commands: any bad record is fatal.
ae::Corpus gather_all_or_fail(const CommonOptions& o) {
    ae::Corpus corpus = gather(o);
    if (!corpus.errors.empty()) {
        throw UsageError(std::to_string(corpus.errors.size()) + " input record(s) failed to parse");
    }
    if (corpus.graphs.empty()) {
        throw UsageError("no graphs given");
    }
    return corpus;
}

template <typename Write>
void emit(const CommonOptions& o, Write&& write) {
    if (o.out.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + o.out + "' for writing");
    }
    write(file);
}

int cmd_spectrum(const CommonOptions& o) {
    const auto alphas = alphas_of(o);
    const ae::Corpus corpus = gather_all_or_fail(o);
    std::vector<ae::Report> rows;
    for (const ae::GraphSource& source : corpus.graphs) {
        for (double alpha : alphas) {
            rows.push_back(ae::run_spectrum(source, alpha));
        }
    }
    emit(o, [&](std::ostream& out) { ae::write_reports(out, rows, format_of(o)); });
    return ae::kExitOk;
}

int cmd_bounds(const CommonOptions& o) {
    const auto alphas = alphas_of(o);
    const ae::Corpus corpus = gather_all_or_fail(o);
    const ae::SweepResult result = ae::run_sweep(corpus.graphs, alphas, {tolerances_of(o), o.strict});
    emit(o, [&](std::ostream& out) { ae::write_reports(out, result.rows, format_of(o)); });
    return ae::exit_status(result.unexpected_violations);
}

int cmd_sweep(const CommonOptions& o) {
    const auto alphas = alphas_of(o);
    const ae::Corpus corpus = gather(o);
    if (corpus.graphs.empty()) {
        throw UsageError("the corpus is empty");
    }
    const ae::SweepResult result = ae::run_sweep(corpus.graphs, alphas, {tolerances_of(o), o.strict});
    emit(o, [&](std::ostream& out) { ae::write_reports(out, result.rows, format_of(o)); });
    ae::write_summary(std::cerr, result.summary);
    std::cerr << "graphs: " << corpus.graphs.size() << ", skipped: " << corpus.errors.size()
              << ", unexpected violations: " << result.unexpected_violations
              << ", documented-exception violations: " << result.expected_violations << '\n';
    return ae::exit_status(result.unexpected_violations);
}

struct FuzzCli {
    std::uint64_t seed = 42;
    std::size_t n_min = 4;
    std::size_t n_max = 10;
    std::size_t trials = 200;
    std::string rows_path;
};

int cmd_fuzz(const CommonOptions& o, const FuzzCli& f) {
    ae::FuzzOptions options;
    options.seed = f.seed;
    options.n_min = f.n_min;
    options.n_max = f.n_max;
    options.trials = f.trials;
    options.alphas = alphas_of(o);
    options.run = {tolerances_of(o), o.strict};
    options.keep_rows = !f.rows_path.empty();
    const ae::FuzzResult result = ae::run_fuzz(options);

    for (const std::string& failure : result.generation_failures) {
        std::cerr << "alphaenergy: skipped " << failure << '\n';
    }
    emit(o, [&](std::ostream& out) { ae::write_violations(out, result.violations, format_of(o)); });
    if (options.keep_rows) {
        std::ofstream rows(f.rows_path, std::ios::binary);
        if (!rows) {
            throw UsageError("cannot open '" + f.rows_path + "' for writing");
        }
        ae::write_reports(rows, result.rows, format_of(o));
    }
    ae::write_summary(std::cerr, result.summary);
    std::cerr << "graphs: " << result.graphs_tested << ", monotonicity checks: " << result.monotonicity_checks
              << ", unexpected violations: " << result.violations.size()
              << ", documented-exception violations: " << result.expected_violations << '\n';
    return ae::exit_status(result.violations.size());
}

int cmd_hunt(const CommonOptions& o, const std::string& bound_name) {
    const auto bound = ae::bound_from_string(bound_name);
    if (!bound) {
        throw UsageError("unknown bound id '" + bound_name + "'");
    }
    const auto alphas = alphas_of(o);
    const ae::Corpus corpus = gather(o);
    if (corpus.graphs.empty()) {
        throw UsageError("the corpus is empty");
    }
    const auto hits = ae::run_hunt_equality(corpus.graphs, alphas, *bound, tolerances_of(o));
    emit(o, [&](std::ostream& out) { ae::write_hits(out, hits, format_of(o)); });
    std::size_t contradictions = 0;
    for (const ae::EqualityHit& h : hits) {
        contradictions += h.contradicts_claim ? 1 : 0;
    }
    std::cerr << "hits: " << hits.size() << ", outside the stated extremal class: " << contradictions << '\n';
    return ae::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alpha-adjacency spectra, energies and energy bounds of graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "alphaenergy 0.1.0");

    CommonOptions common;
    FuzzCli fuzz;
    std::string hunt_bound;

    CLI::App* spectrum = app.add_subcommand("spectrum", "alpha-adjacency spectrum and energy of each graph");
    add_corpus_options(*spectrum, common);
    add_alpha_option(*spectrum, common);
    add_output_options(*spectrum, common);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate every bound on each graph");
    add_corpus_options(*bounds, common);
    add_alpha_option(*bounds, common);
    add_output_options(*bounds, common);
    add_tolerance_options(*bounds, common);
    bounds->add_flag("--strict", common.strict, "count documented-exception violations as failures");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate every bound over a corpus and an alpha grid");
    add_corpus_options(*sweep, common);
    add_alpha_option(*sweep, common);
    add_output_options(*sweep, common);
    add_tolerance_options(*sweep, common);
    sweep->add_flag("--strict", common.strict, "count documented-exception violations as failures");

    CLI::App* fuzzer = app.add_subcommand("fuzz", "check every bound on seeded random connected graphs");
    fuzzer->add_option("--seed", fuzz.seed, "master seed");
    fuzzer->add_option("--n-min", fuzz.n_min, "smallest order");
    fuzzer->add_option("--n-max", fuzz.n_max, "largest order");
    fuzzer->add_option("--trials", fuzz.trials, "number of graphs");
    fuzzer->add_option("--rows", fuzz.rows_path, "also write every report row to this file");
    add_alpha_option(*fuzzer, common);
    add_output_options(*fuzzer, common);
    add_tolerance_options(*fuzzer, common);
    fuzzer->add_flag("--strict", common.strict, "count documented-exception violations as failures");

    CLI::App* hunt = app.add_subcommand("hunt-equality", "list every graph and alpha where a bound is tight");
    hunt->add_option("-b,--bound", hunt_bound, "bound id")->required();
    add_corpus_options(*hunt, common);
    add_alpha_option(*hunt, common);
    add_output_options(*hunt, common);
    add_tolerance_options(*hunt, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ae::kExitUsage;
    }

    try {
        if (spectrum->parsed()) {
            return cmd_spectrum(common);
        }
        if (bounds->parsed()) {
            return cmd_bounds(common);
        }
        if (sweep->parsed()) {
            return cmd_sweep(common);
        }
        if (fuzzer->parsed()) {
            return cmd_fuzz(common, fuzz);
        }
        return cmd_hunt(common, hunt_bound);
    } catch (const std::exception& e) {
        std::cerr << "alphaenergy: " << e.what() << '\n';
        return ae::kExitUsage;
    }
}
