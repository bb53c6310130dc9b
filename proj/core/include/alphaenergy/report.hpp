#ifndef ALPHAENERGY_REPORT_HPP
#define ALPHAENERGY_REPORT_HPP

#include "alphaenergy/bounds.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace alphaenergy {

/// One (graph, alpha) row of a run.
struct Report {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t zagreb = 0;
    double alpha = 0.0;
    std::vector<double> spectrum;
    double energy = 0.0;
    std::size_t eta = 0;
    double shift = 0.0;
    double two_S = 0.0;
    double gamma_det = 0.0;
    double theta = 0.0;
    bool connected = false;
    /// Empty for spectrum-only reports; otherwise one entry per BoundId.
    std::vector<BoundEvaluation> evaluations;
};

Report make_report(std::string graph_id, const AlphaSpectrum& sp);
Report make_report(std::string graph_id, const Analysis& analysis);

/// "%.12g"; NaN becomes the empty string.
std::string format_number(double value);

enum class ReportFormat { csv, json };

/// Header plus one line per (graph, alpha, bound_id); spectrum-only reports
/// get a single line with empty bound columns. The spectrum column holds
/// the eigenvalues joined by ';'.
void write_csv(std::ostream& out, std::span<const Report> reports);

/// JSON array with one object per report. Numbers carry the same 12
/// significant digits as the CSV; NaN becomes null.
void write_json(std::ostream& out, std::span<const Report> reports);

void write_reports(std::ostream& out, std::span<const Report> reports, ReportFormat format);

} // namespace alphaenergy

#endif // ALPHAENERGY_REPORT_HPP
