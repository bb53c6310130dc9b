#ifndef ALPHAENERGY_HARNESS_HPP
#define ALPHAENERGY_HARNESS_HPP

#include "alphaenergy/bounds.hpp"
#include "alphaenergy/generators.hpp"
#include "alphaenergy/report.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alphaenergy {

/// A graph plus the identifier used in reports: its graph6 string, a
/// "file:line" location for edge lists, or a generator descriptor.
struct GraphSource {
    std::string id;
    Graph graph;
};

struct SourceError {
    std::string location;
    std::string message;
};

struct Corpus {
    std::vector<GraphSource> graphs;
    /// Records that failed to parse; they are skipped, not fatal.
    std::vector<SourceError> errors;
};

/// Auto-detects the format from the first non-blank byte: a digit or '#'
/// means a single edge-list graph, anything else one graph6 record per line.
Corpus load_corpus(std::string_view text, std::string_view origin);
/// Throws Error if the file cannot be read.
Corpus load_corpus_file(const std::filesystem::path& path);

Corpus corpus_from_families(std::span<const Family> families);

/// {0, 0.1, ..., 0.9, 0.95}.
std::vector<double> default_alpha_grid();

/// Comma-separated alphas; throws InvalidParameters on bad syntax and
/// AlphaOutOfRange outside [0, 1].
std::vector<double> parse_alpha_list(std::string_view text);

/// Spectrum-only report for one graph.
Report run_spectrum(const GraphSource& source, double alpha);

struct BoundTally {
    std::size_t applicable = 0;
    std::size_t holds = 0;
    std::size_t violations = 0;
    std::size_t equalities = 0;
};

/// Tallies indexed like kAllBounds.
using Summary = std::array<BoundTally, kAllBounds.size()>;

struct RunOptions {
    Tolerances tolerances;
    /// Count documented-exception violations as failures too.
    bool strict = false;
};

struct SweepResult {
    /// Corpus order x alpha order.
    std::vector<Report> rows;
    Summary summary{};
    std::size_t unexpected_violations = 0;
    std::size_t expected_violations = 0;
};

/// Throws InvalidParameters on an empty corpus or alpha list.
SweepResult run_sweep(std::span<const GraphSource> corpus, std::span<const double> alphas,
                      const RunOptions& options = {});

struct Violation {
    std::string graph6;
    double alpha = 0.0;
    /// A BoundId name, or "edge_deletion_monotonicity".
    std::string bound;
    double gap = 0.0;
};

struct FuzzOptions {
    std::size_t n_min = 4;
    std::size_t n_max = 10;
    std::size_t trials = 200;
    std::uint64_t seed = 42;
    std::vector<double> alphas = default_alpha_grid();
    RunOptions run;
    bool keep_rows = false;
};

struct FuzzResult {
    std::size_t graphs_tested = 0;
    std::vector<std::string> generation_failures;
    Summary summary{};
    /// Violations that count against the exit status.
    std::vector<Violation> violations;
    std::size_t expected_violations = 0;
    std::size_t monotonicity_checks = 0;
    std::vector<Report> rows;
};

/// Fuzzes even trials with connected Erdos-Renyi graphs and odd trials
/// with connected random regular graphs, n uniform in [n_min, n_max]. For
/// every alpha >= 1/2 of the grid it also deletes a random edge and
/// checks rho_i(G) >= rho_i(G - e). Throws InvalidParameters on a bad range
/// or zero trials.
FuzzResult run_fuzz(const FuzzOptions& options);

/// max_i (rho_i(G - e) - rho_i(G)); non-positive when deleting e lowers
/// every eigenvalue.
double max_eigenvalue_increase(const Graph& g, Edge e, double alpha);

inline constexpr double kMonotonicityTolerance = 1e-9;

struct EqualityHit {
    std::string graph_id;
    double alpha = 0.0;
    BoundEvaluation evaluation;
    ExtremalCertificate certificate;
    /// The stated extremal class does not contain this graph.
    bool contradicts_claim = false;
};

/// Every (graph, alpha) where `bound` is applicable and tight.
std::vector<EqualityHit> run_hunt_equality(std::span<const GraphSource> corpus, std::span<const double> alphas,
                                           BoundId bound, const Tolerances& tolerances = {});

/// One line per hit: graph_id, alpha, bound_id, value, target, gap, the
/// certificate fields and claim_contradicted.
void write_hits(std::ostream& out, std::span<const EqualityHit> hits, ReportFormat format);

/// graph6, alpha, bound_id, gap.
void write_violations(std::ostream& out, std::span<const Violation> violations, ReportFormat format);

/// Plain-text table of a Summary, one line per bound_id.
void write_summary(std::ostream& out, const Summary& summary);

/// 0 = no unexpected violations, 2 = violations found.
int exit_status(std::size_t unexpected_violations);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolations = 2;

} // namespace alphaenergy

#endif // ALPHAENERGY_HARNESS_HPP
