#include "alphaenergy/harness.hpp"

#include "alphaenergy/codec.hpp"
#include "alphaenergy/error.hpp"
#include "alphaenergy/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace alphaenergy {

namespace {

std::size_t bound_index(BoundId id) {
    return static_cast<std::size_t>(std::find(kAllBounds.begin(), kAllBounds.end(), id) - kAllBounds.begin());
}

// Adds one evaluation to the summary; returns true if it is a violation.
bool tally(Summary& summary, const BoundEvaluation& e) {
    if (!e.applicable) {
        return false;
    }
    BoundTally& t = summary[bound_index(e.id)];
    ++t.applicable;
    if (e.holds) {
        ++t.holds;
    } else {
        ++t.violations;
    }
    if (e.equality) {
        ++t.equalities;
    }
    return !e.holds;
}

bool counts_against(BoundId id, const RunOptions& options) {
    return options.strict || !is_documented_exception(id);
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

Corpus load_corpus(std::string_view text, std::string_view origin) {
    Corpus corpus;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return corpus;
    }
    const char lead = text[first];
    if ((lead >= '0' && lead <= '9') || lead == '#') {
        try {
            corpus.graphs.push_back({std::string(origin) + ":1", parse_edge_list(text)});
        } catch (const MalformedEdgeList& e) {
            corpus.errors.push_back({std::string(origin) + ":" + std::to_string(e.position()), e.what()});
        } catch (const Error& e) {
            corpus.errors.push_back({std::string(origin), e.what()});
        }
        return corpus;
    }

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view record = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (record.empty()) {
            continue;
        }
        const std::string location = std::string(origin) + ":" + std::to_string(line_no);
        try {
            corpus.graphs.push_back({std::string(record), parse_graph6(record)});
        } catch (const MalformedGraph6& e) {
            corpus.errors.push_back({location + ":byte " + std::to_string(e.position()), e.what()});
        } catch (const Error& e) {
            corpus.errors.push_back({location, e.what()});
        }
    }
    return corpus;
}

Corpus load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open input file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_corpus(buffer.str(), path.string());
}

Corpus corpus_from_families(std::span<const Family> families) {
    Corpus corpus;
    for (const Family& f : families) {
        try {
            corpus.graphs.push_back({describe(f), generate(f)});
        } catch (const Error& e) {
            corpus.errors.push_back({describe(f), e.what()});
        }
    }
    return corpus;
}

std::vector<double> default_alpha_grid() { return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}; }

std::vector<double> parse_alpha_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string item(trim(text.substr(start, comma - start)));
        start = comma + 1;
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw InvalidParameters("cannot parse alpha value '" + item + "'");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw AlphaOutOfRange("alpha must lie in [0, 1], got " + item);
        }
        out.push_back(value);
    }
    return out;
}

Report run_spectrum(const GraphSource& source, double alpha) {
    return make_report(source.id, alpha_spectrum(source.graph, alpha));
}

SweepResult run_sweep(std::span<const GraphSource> corpus, std::span<const double> alphas,
                      const RunOptions& options) {
    if (corpus.empty()) {
        throw InvalidParameters("sweep: the corpus is empty");
    }
    if (alphas.empty()) {
        throw InvalidParameters("sweep: no alpha values given");
    }
    SweepResult result;
    result.rows.reserve(corpus.size() * alphas.size());
    for (const GraphSource& source : corpus) {
        for (double alpha : alphas) {
            const Analysis analysis = analyze(source.graph, alpha, options.tolerances);
            for (const BoundEvaluation& e : analysis.evaluations) {
                if (tally(result.summary, e)) {
                    ++(counts_against(e.id, options) ? result.unexpected_violations : result.expected_violations);
                }
            }
            result.rows.push_back(make_report(source.id, analysis));
        }
    }
    return result;
}

double max_eigenvalue_increase(const Graph& g, Edge e, double alpha) {
    const auto before = alpha_spectrum(g, alpha).rho;
    const auto after = alpha_spectrum(delete_edge(g, e.u, e.v), alpha).rho;
    double worst = -INFINITY;
    for (std::size_t i = 0; i < before.size(); ++i) {
        worst = std::max(worst, after[i] - before[i]);
    }
    return worst;
}

namespace {

Graph fuzz_graph(std::size_t trial, std::size_t n, Rng& rng) {
    if (trial % 2 == 0) {
        const double p = 0.1 + 0.8 * rng.unit();
        return generate(family::ErdosRenyi{n, p, rng.next(), true});
    }
    // k in [2, n-1] with n*k even.
    std::vector<std::size_t> degrees;
    for (std::size_t k = 2; k < n; ++k) {
        if ((n * k) % 2 == 0) {
            degrees.push_back(k);
        }
    }
    const std::size_t k = degrees[rng.below(degrees.size())];
    for (int attempt = 0; attempt < 100; ++attempt) {
        Graph g = generate(family::RandomRegular{n, k, rng.next()});
        if (is_connected(g)) {
            return g;
        }
    }
    throw GenerationFailure("no connected " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                            " vertices after 100 samples");
}

} // namespace

FuzzResult run_fuzz(const FuzzOptions& options) {
    if (options.trials == 0) {
        throw InvalidParameters("fuzz: trials must be at least 1");
    }
    if (options.n_min < 3 || options.n_max > kGraph6MaxOrder || options.n_min > options.n_max) {
        throw InvalidParameters("fuzz: need 3 <= n_min <= n_max <= 62");
    }
    if (options.alphas.empty()) {
        throw InvalidParameters("fuzz: no alpha values given");
    }

    FuzzResult result;
    Rng rng(options.seed);
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const auto n = static_cast<std::size_t>(
            rng.between(static_cast<std::int64_t>(options.n_min), static_cast<std::int64_t>(options.n_max)));
        std::optional<Graph> graph;
        try {
            graph = fuzz_graph(trial, n, rng);
        } catch (const Error& e) {
            result.generation_failures.push_back("trial " + std::to_string(trial) + ": " + e.what());
            continue;
        }
        ++result.graphs_tested;
        const std::string g6 = serialize_graph6(*graph);

        for (double alpha : options.alphas) {
            const Analysis analysis = analyze(*graph, alpha, options.run.tolerances);
            for (const BoundEvaluation& e : analysis.evaluations) {
                if (!tally(result.summary, e)) {
                    continue;
                }
                if (counts_against(e.id, options.run)) {
                    result.violations.push_back({g6, alpha, std::string(to_string(e.id)), e.gap});
                } else {
                    ++result.expected_violations;
                }
            }
            if (options.keep_rows) {
                result.rows.push_back(make_report(g6, analysis));
            }
        }

        const auto edges = graph->edges();
        const Edge removed = edges[rng.below(edges.size())];
        for (double alpha : options.alphas) {
            if (alpha < 0.5) {
                continue;
            }
            ++result.monotonicity_checks;
            const double increase = max_eigenvalue_increase(*graph, removed, alpha);
            if (increase > kMonotonicityTolerance) {
                result.violations.push_back({g6, alpha, "edge_deletion_monotonicity", -increase});
            }
        }
    }
    return result;
}

std::vector<EqualityHit> run_hunt_equality(std::span<const GraphSource> corpus, std::span<const double> alphas,
                                           BoundId bound, const Tolerances& tolerances) {
    std::vector<EqualityHit> hits;
    for (const GraphSource& source : corpus) {
        for (double alpha : alphas) {
            const AlphaSpectrum sp = alpha_spectrum(source.graph, alpha);
            const ExtremalCertificate cert = certify(source.graph, sp);
            const BoundEvaluation e = evaluate(bound, source.graph, sp, cert, tolerances);
            if (!e.applicable || !e.equality) {
                continue;
            }
            hits.push_back({source.id, alpha, e, cert,
                            e.equality_claim_matched.has_value() && !*e.equality_claim_matched});
        }
    }
    return hits;
}

void write_hits(std::ostream& out, std::span<const EqualityHit> hits, ReportFormat format) {
    if (format == ReportFormat::csv) {
        out << "graph_id,alpha,bound_id,value,target,gap,is_connected,is_complete,is_regular,is_star,"
               "distinct_eigenvalues,inertia_positive,inertia_zero,inertia_negative,claim_contradicted\n";
        for (const EqualityHit& h : hits) {
            const ExtremalCertificate& c = h.certificate;
            out << h.graph_id << ',' << format_number(h.alpha) << ',' << to_string(h.evaluation.id) << ','
                << format_number(h.evaluation.value) << ',' << format_number(h.evaluation.target) << ','
                << format_number(h.evaluation.gap) << ',' << std::boolalpha << c.is_connected << ','
                << c.is_complete << ',' << c.is_regular << ',' << c.is_star << ','
                << c.distinct_alpha_eigenvalue_count << ',' << c.adjacency_inertia.positive << ','
                << c.adjacency_inertia.zero << ',' << c.adjacency_inertia.negative << ',' << h.contradicts_claim
                << std::noboolalpha << '\n';
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const EqualityHit& h : hits) {
        const ExtremalCertificate& c = h.certificate;
        rows.push_back({
            {"graph_id", h.graph_id},
            {"alpha", std::stod(format_number(h.alpha))},
            {"bound_id", to_string(h.evaluation.id)},
            {"value", std::stod(format_number(h.evaluation.value))},
            {"target", std::stod(format_number(h.evaluation.target))},
            {"gap", std::stod(format_number(h.evaluation.gap))},
            {"certificate",
             {
                 {"is_connected", c.is_connected},
                 {"is_complete", c.is_complete},
                 {"is_regular", c.is_regular},
                 {"is_star", c.is_star},
                 {"distinct_eigenvalues", c.distinct_alpha_eigenvalue_count},
                 {"inertia", {c.adjacency_inertia.positive, c.adjacency_inertia.zero, c.adjacency_inertia.negative}},
             }},
            {"claim_contradicted", h.contradicts_claim},
        });
    }
    out << rows.dump(2) << '\n';
}

void write_violations(std::ostream& out, std::span<const Violation> violations, ReportFormat format) {
    if (format == ReportFormat::csv) {
        out << "graph6,alpha,bound_id,gap\n";
        for (const Violation& v : violations) {
            out << v.graph6 << ',' << format_number(v.alpha) << ',' << v.bound << ',' << format_number(v.gap)
                << '\n';
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Violation& v : violations) {
        rows.push_back({{"graph6", v.graph6},
                        {"alpha", std::stod(format_number(v.alpha))},
                        {"bound_id", v.bound},
                        {"gap", std::stod(format_number(v.gap))}});
    }
    out << rows.dump(2) << '\n';
}

void write_summary(std::ostream& out, const Summary& summary) {
    out << std::left << std::setw(24) << "bound_id" << std::right << std::setw(12) << "applicable"
        << std::setw(10) << "holds" << std::setw(12) << "violations" << std::setw(12) << "equalities" << '\n';
    for (std::size_t i = 0; i < kAllBounds.size(); ++i) {
        const BoundTally& t = summary[i];
        out << std::left << std::setw(24) << to_string(kAllBounds[i]) << std::right << std::setw(12)
            << t.applicable << std::setw(10) << t.holds << std::setw(12) << t.violations << std::setw(12)
            << t.equalities << '\n';
    }
}

int exit_status(std::size_t unexpected_violations) {
    return unexpected_violations == 0 ? kExitOk : kExitViolations;
}

} // namespace alphaenergy
