#pragma once

#include <string>

#include "json.hpp"
#include "mdlseg/corpus.hpp"
#include "mdlseg/evaluation.hpp"
#include "mdlseg/mdl.hpp"
#include "mdlseg/search.hpp"

namespace mdlseg {

// Reports are built as ordered JSON so a fixed config+seed always
// serializes to identical bytes.
using ordered_json = nlohmann::ordered_json;

ordered_json dlJson(const DLReport& report);
// Undefined ratios serialize as null, never as 0 or 100.
ordered_json scoreJson(const Score& score);
ordered_json corpusJson(const Corpus& corpus);
ordered_json traceJson(const SearchTrace& trace);
ordered_json trialsJson(const TrialStats& stats);

// Flat "key value" rows from a (possibly nested) report; numbers at one
// decimal place. JSON output keeps full precision.
std::string renderTable(const ordered_json& report);
// Same flattening as the table, as key,value CSV with full precision.
std::string renderCsv(const ordered_json& report);

} // namespace mdlseg
