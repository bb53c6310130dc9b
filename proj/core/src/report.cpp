#include "alphaenergy/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace alphaenergy {

namespace {

// The JSON number is the double that the 12-digit text denotes, so both
// formats carry the same value.
nlohmann::ordered_json json_number(double value) {
    if (std::isnan(value)) {
        return nullptr;
    }
    return std::stod(format_number(value));
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

} // namespace

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "";
    }
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

Report make_report(std::string graph_id, const AlphaSpectrum& sp) {
    Report r;
    r.graph_id = std::move(graph_id);
    r.n = sp.n;
    r.m = sp.m;
    r.zagreb = sp.zagreb;
    r.alpha = sp.alpha;
    r.spectrum = sp.rho;
    r.energy = sp.energy;
    r.eta = sp.eta;
    r.shift = sp.shift;
    r.two_S = sp.two_S;
    r.gamma_det = sp.gamma_det;
    r.theta = sp.theta;
    r.connected = sp.connected;
    return r;
}

Report make_report(std::string graph_id, const Analysis& analysis) {
    Report r = make_report(std::move(graph_id), analysis.spectrum);
    r.evaluations = analysis.evaluations;
    return r;
}

void write_csv(std::ostream& out, std::span<const Report> reports) {
    out << "graph_id,n,m,zagreb,alpha,energy,eta,shift,two_S,gamma_det,theta,connected,spectrum,"
           "id,kind,applicable,reason,value,holds,gap,equality,equality_claim_matched\n";
    for (const Report& r : reports) {
        std::string prefix = csv_field(r.graph_id) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
                             std::to_string(r.zagreb) + ',' + format_number(r.alpha) + ',' +
                             format_number(r.energy) + ',' + std::to_string(r.eta) + ',' + format_number(r.shift) +
                             ',' + format_number(r.two_S) + ',' + format_number(r.gamma_det) + ',' +
                             format_number(r.theta) + ',' + flag(r.connected) + ',';
        for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
            prefix += (i ? ";" : "") + format_number(r.spectrum[i]);
        }
        if (r.evaluations.empty()) {
            out << prefix << ",,,,,,,,,\n";
            continue;
        }
        for (const BoundEvaluation& e : r.evaluations) {
            out << prefix << ',' << to_string(e.id) << ',' << to_string(e.kind) << ',' << flag(e.applicable) << ','
                << csv_field(e.reason) << ',' << format_number(e.value) << ',' << flag(e.holds) << ','
                << format_number(e.gap) << ',' << flag(e.equality) << ','
                << (e.equality_claim_matched ? flag(*e.equality_claim_matched) : "") << '\n';
        }
    }
}

void write_json(std::ostream& out, std::span<const Report> reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const Report& r : reports) {
        nlohmann::ordered_json spectrum = nlohmann::ordered_json::array();
        for (double x : r.spectrum) {
            spectrum.push_back(json_number(x));
        }
        nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
        for (const BoundEvaluation& e : r.evaluations) {
            bounds.push_back({
                {"id", to_string(e.id)},
                {"kind", to_string(e.kind)},
                {"applicable", e.applicable},
                {"reason", e.reason},
                {"value", json_number(e.value)},
                {"holds", e.holds},
                {"gap", json_number(e.gap)},
                {"equality", e.equality},
                {"equality_claim_matched",
                 e.equality_claim_matched ? nlohmann::ordered_json(*e.equality_claim_matched) : nlohmann::ordered_json(nullptr)},
            });
        }
        rows.push_back({
            {"graph_id", r.graph_id},
            {"n", r.n},
            {"m", r.m},
            {"zagreb", r.zagreb},
            {"alpha", json_number(r.alpha)},
            {"spectrum", std::move(spectrum)},
            {"energy", json_number(r.energy)},
            {"eta", r.eta},
            {"shift", json_number(r.shift)},
            {"two_S", json_number(r.two_S)},
            {"gamma_det", json_number(r.gamma_det)},
            {"theta", json_number(r.theta)},
            {"connected", r.connected},
            {"bounds", std::move(bounds)},
        });
    }
    out << rows.dump(2) << '\n';
}

void write_reports(std::ostream& out, std::span<const Report> reports, ReportFormat format) {
    if (format == ReportFormat::csv) {
        write_csv(out, reports);
    } else {
        write_json(out, reports);
    }
}

} // namespace alphaenergy
