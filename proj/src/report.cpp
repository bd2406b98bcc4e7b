#include "mdlseg/report.hpp"

#include <cstdio>
#include <functional>
#include <utility>
#include <vector>

namespace mdlseg {

namespace {

ordered_json ratioJson(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

} // namespace

ordered_json dlJson(const DLReport& report) {
    return {{"wordInventoryBits", report.wordInventoryBits},
            {"codeInventoryBits", report.codeInventoryBits},
            {"sampleBits", report.sampleBits},
            {"totalBits", report.totalBits}};
}

ordered_json scoreJson(const Score& score) {
    return {{"hits", score.hits},
            {"misses", score.misses},
            {"falseAlarms", score.falseAlarms},
            {"recall", ratioJson(score.recall())},
            {"accuracy", ratioJson(score.accuracy())}};
}

ordered_json corpusJson(const Corpus& corpus) {
    return {{"utterances", corpus.utterances.size()},
            {"phonemes", corpus.phonemeCount},
            {"candidatePoints", corpus.candidatePositionCount()},
            {"goldPoints", corpus.gold.pointCount()}};
}

ordered_json traceJson(const SearchTrace& trace) {
    double finalDL = trace.initialDL;
    double bestDL = trace.initialDL;
    std::size_t pointsCommitted = 0;
    for (const TraceStep& s : trace.steps) {
        finalDL = s.committedDL;
        bestDL = s.bestDL;
        pointsCommitted += s.points.size();
    }
    return {{"steps", trace.steps.size()},
            {"pointsCommitted", pointsCommitted},
            {"initialDL", trace.initialDL},
            {"finalDL", finalDL},
            {"bestDL", bestDL},
            {"bestStep", trace.bestStep}};
}

ordered_json trialsJson(const TrialStats& stats) {
    ordered_json out{{"trials", stats.trials},
                     {"k", stats.k},
                     {"meanPlaced", stats.meanPlaced},
                     {"recallDefined", stats.recallDefined},
                     {"accuracyDefined", stats.accuracyDefined}};
    out["meanRecall"] =
        stats.recallDefined > 0 ? ordered_json(stats.meanRecall) : nullptr;
    out["meanAccuracy"] =
        stats.accuracyDefined > 0 ? ordered_json(stats.meanAccuracy) : nullptr;
    return out;
}

namespace {

using Row = std::pair<std::string, std::string>;

std::string scalarText(const ordered_json& v, bool roundDoubles) {
    if (v.is_null()) return "undefined";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float() && roundDoubles) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", v.get<double>());
        return buf;
    }
    return v.dump();
}

void flatten(const ordered_json& node, const std::string& prefix,
             bool roundDoubles, std::vector<Row>& rows) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            const std::string path =
                prefix.empty() ? key : prefix + "." + key;
            flatten(value, path, roundDoubles, rows);
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) {
            flatten(value, prefix + "[" + std::to_string(i) + "]",
                    roundDoubles, rows);
            ++i;
        }
    } else {
        rows.emplace_back(prefix, scalarText(node, roundDoubles));
    }
}

std::string csvField(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string renderTable(const ordered_json& report) {
    std::vector<Row> rows;
    flatten(report, "", true, rows);
    std::size_t width = 0;
    for (const Row& r : rows) width = std::max(width, r.first.size());
    std::string out;
    for (const Row& r : rows) {
        out += r.first;
        out.append(width - r.first.size() + 2, ' ');
        out += r.second;
        out += '\n';
    }
    return out;
}

std::string renderCsv(const ordered_json& report) {
    std::vector<Row> rows;
    flatten(report, "", false, rows);
    std::string out = "key,value\n";
    for (const Row& r : rows) {
        out += csvField(r.first);
        out += ',';
        out += csvField(r.second);
        out += '\n';
    }
    return out;
}

} // namespace mdlseg
