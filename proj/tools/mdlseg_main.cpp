#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mdlseg/corpus.hpp"
#include "mdlseg/errors.hpp"
#include "mdlseg/evaluation.hpp"
#include "mdlseg/phonotactics.hpp"
#include "mdlseg/report.hpp"
#include "mdlseg/search.hpp"
#include "mdlseg/utf8.hpp"

namespace {

using namespace mdlseg;

void writeFileOrThrow(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ContractViolation("cannot open output file: " + path);
    out << text;
    if (!out) throw ContractViolation("cannot write output file: " + path);
}

void emit(const ordered_json& report, const std::string& format,
          const std::string& outPath) {
    std::string text;
    if (format == "json")
        text = report.dump(2) + "\n";
    else if (format == "csv")
        text = renderCsv(report);
    else
        text = renderTable(report);
    if (outPath.empty())
        std::cout << text;
    else
        writeFileOrThrow(outPath, text);
}

ordered_json segmentedLines(const Corpus& corpus, const Segmentation& seg) {
    std::istringstream lines(renderSegmented(corpus, seg));
    ordered_json out = ordered_json::array();
    std::string line;
    while (std::getline(lines, line)) out.push_back(line);
    return out;
}

ordered_json pathOrNull(const std::string& path) {
    if (path.empty()) return nullptr;
    return path;
}

struct CommonArgs {
    std::string corpusPath;
    std::string inventoryPath;
    std::string rulesPath;
    std::string outPath;
    std::string format = "table";
    int threads = 1;
};

void addCommonOptions(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--corpus", args.corpusPath, "corpus file")
        ->required();
    cmd->add_option("--inventory", args.inventoryPath,
                    "phoneme inventory file")
        ->required();
    cmd->add_option("--format", args.format, "report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", args.outPath,
                    "write the report here instead of stdout");
    cmd->add_option("--threads", args.threads,
                    "threads for candidate evaluation")
        ->envname("MDLSEG_THREADS")
        ->check(CLI::PositiveNumber);
}

Corpus loadInputs(const CommonArgs& args) {
    const PhonemeInventory inventory =
        PhonemeInventory::loadFile(args.inventoryPath);
    return loadCorpusFile(args.corpusPath, inventory);
}

// Phono modes need a rules file; rejecting that here keeps it a usage
// error (exit 1) rather than a late contract violation.
void requireRules(const std::string& mode, const std::string& rulesPath) {
    if (rulesPath.empty())
        throw CLI::ValidationError("--mode " + mode + " requires --rules");
}

int runSegment(const CommonArgs& args, const std::string& mode,
               const std::string& tracePath, const std::string& segOutPath,
               bool earlyStop) {
    const Corpus corpus = loadInputs(args);
    std::optional<ClusterRules> rules;
    if (mode == "dist-phono")
        rules = ClusterRules::loadFile(args.rulesPath, corpus.inventory);

    SearchConfig config;
    config.rules = rules ? &*rules : nullptr;
    config.earlyStop = earlyStop;
    config.threads = args.threads;
    const SearchResult result = greedySearch(corpus, config);

    const Hypothesis bestHyp(corpus, result.best);
    const Lexicon goldLexicon = buildLexicon(corpus, corpus.gold);
    const Score boundaries = boundaryScore(result.best, corpus.gold);
    const Score types = typeScore(bestHyp.lexicon(), goldLexicon);

    ordered_json report{
        {"command", "segment"},
        {"mode", mode},
        {"config",
         {{"corpus", args.corpusPath},
          {"inventory", args.inventoryPath},
          {"rules", pathOrNull(args.rulesPath)},
          {"threads", args.threads},
          {"earlyStop", earlyStop}}},
        {"corpus", corpusJson(corpus)},
        {"dl", dlJson(result.report)},
        {"search", traceJson(result.trace)},
        {"boundaries", scoreJson(boundaries)},
        {"types", scoreJson(types)},
    };

    if (!tracePath.empty()) {
        std::ostringstream csv;
        writeTraceCsv(csv, result.trace);
        writeFileOrThrow(tracePath, csv.str());
    }
    if (!segOutPath.empty())
        writeFileOrThrow(segOutPath, renderSegmented(corpus, result.best));
    emit(report, args.format, args.outPath);
    return 0;
}

int runBaseline(const CommonArgs& args, const std::string& mode,
                std::uint64_t seed, int trials, int kFlag) {
    const Corpus corpus = loadInputs(args);
    std::optional<ClusterRules> rules;
    if (mode == "rand-phono")
        rules = ClusterRules::loadFile(args.rulesPath, corpus.inventory);

    const int k =
        kFlag >= 0 ? kFlag : static_cast<int>(corpus.gold.pointCount());
    SearchConfig config;
    config.rules = rules ? &*rules : nullptr;
    const TrialStats stats = runTrials(corpus, k, config, trials, seed);

    const ordered_json report{
        {"command", "baseline"},
        {"mode", mode},
        {"config",
         {{"corpus", args.corpusPath},
          {"inventory", args.inventoryPath},
          {"rules", pathOrNull(args.rulesPath)},
          {"seed", seed},
          {"trials", trials},
          {"k", k}}},
        {"corpus", corpusJson(corpus)},
        {"baseline", trialsJson(stats)},
    };
    emit(report, args.format, args.outPath);
    return 0;
}

int runBrute(const CommonArgs& args, std::size_t limit) {
    const Corpus corpus = loadInputs(args);
    std::optional<ClusterRules> rules;
    if (!args.rulesPath.empty())
        rules = ClusterRules::loadFile(args.rulesPath, corpus.inventory);
    const ClusterRules* rulesPtr = rules ? &*rules : nullptr;

    const BruteResult brute = bruteForce(corpus, rulesPtr, limit);

    SearchConfig config;
    config.rules = rulesPtr;
    config.threads = args.threads;
    const SearchResult greedy = greedySearch(corpus, config);

    const std::int64_t greedyKey = dlCompareKey(greedy.report.totalBits);
    const std::int64_t bruteKey = dlCompareKey(brute.report.totalBits);
    const char* verdict = greedyKey == bruteKey ? "equal"
                          : greedyKey > bruteKey
                              ? "greedy-suboptimal"
                              : "inconsistent"; // brute is the global min

    const ordered_json report{
        {"command", "brute"},
        {"config",
         {{"corpus", args.corpusPath},
          {"inventory", args.inventoryPath},
          {"rules", pathOrNull(args.rulesPath)},
          {"limit", limit},
          {"threads", args.threads}}},
        {"corpus", corpusJson(corpus)},
        {"brute",
         {{"candidatePoints", brute.candidatePoints},
          {"hypothesesExamined", brute.hypothesesExamined},
          {"dl", dlJson(brute.report)},
          {"segmented", segmentedLines(corpus, brute.best)}}},
        {"greedy",
         {{"dl", dlJson(greedy.report)},
          {"search", traceJson(greedy.trace)},
          {"segmented", segmentedLines(corpus, greedy.best)}}},
        {"verdict", verdict},
    };
    emit(report, args.format, args.outPath);
    return 0;
}

int runScore(const CommonArgs& args, const std::string& hypPath) {
    const PhonemeInventory inventory =
        PhonemeInventory::loadFile(args.inventoryPath);
    const Corpus gold = loadCorpusFile(args.corpusPath, inventory);
    const Corpus hyp = loadCorpusFile(hypPath, inventory);
    if (hyp.utterances != gold.utterances)
        throw ContractViolation(
            "hypothesis and gold corpora differ once spacing is removed");

    const Score boundaries = boundaryScore(hyp.gold, gold.gold);
    const Lexicon hypLexicon = buildLexicon(gold, hyp.gold);
    const Lexicon goldLexicon = buildLexicon(gold, gold.gold);
    const Score types = typeScore(hypLexicon, goldLexicon);

    const ordered_json report{
        {"command", "score"},
        {"config",
         {{"corpus", args.corpusPath},
          {"hypothesis", hypPath},
          {"inventory", args.inventoryPath}}},
        {"corpus", corpusJson(gold)},
        {"boundaries", scoreJson(boundaries)},
        {"types", scoreJson(types)},
    };
    emit(report, args.format, args.outPath);
    return 0;
}

int runExtractRules(const std::string& corpusPath,
                    const std::string& inventoryPath,
                    const std::string& outPath) {
    const PhonemeInventory inventory =
        PhonemeInventory::loadFile(inventoryPath);
    const Corpus corpus = loadCorpusFile(corpusPath, inventory);
    const RuleExtraction extraction = extractRules(corpus);

    for (const std::u32string& word : extraction.vowellessWords)
        std::cerr << "warning: gold word without a vowel: "
                  << utf8::encode(word) << "\n";

    const std::string text = extraction.rules.format();
    if (outPath.empty())
        std::cout << text;
    else
        writeFileOrThrow(outPath, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MDL word segmentation over unsegmented phoneme corpora"};
    app.require_subcommand(1);

    CommonArgs segArgs;
    std::string segMode = "dist-free";
    std::string tracePath;
    std::string segOutPath;
    bool earlyStop = false;
    CLI::App* segment =
        app.add_subcommand("segment", "greedy MDL search (Dist-Free / Dist-Phono)");
    addCommonOptions(segment, segArgs);
    segment->add_option("--mode", segMode, "dist-free or dist-phono")
        ->check(CLI::IsMember({"dist-free", "dist-phono"}))
        ->capture_default_str();
    segment->add_option("--rules", segArgs.rulesPath,
                        "cluster rules file (dist-phono)");
    segment->add_option("--trace", tracePath, "write the step trace CSV here");
    segment->add_option("--seg-out", segOutPath,
                        "write the best segmentation as text");
    segment->add_flag("--early-stop", earlyStop,
                      "stop when no candidate improves the committed state");

    CommonArgs baseArgs;
    std::string baseMode = "rand-free";
    std::uint64_t seed = 0;
    int trials = 1000;
    int kFlag = -1;
    CLI::App* baseline = app.add_subcommand(
        "baseline", "random insertion baseline (Rand-Free / Rand-Phono)");
    addCommonOptions(baseline, baseArgs);
    baseline->add_option("--mode", baseMode, "rand-free or rand-phono")
        ->check(CLI::IsMember({"rand-free", "rand-phono"}))
        ->capture_default_str();
    baseline->add_option("--rules", baseArgs.rulesPath,
                         "cluster rules file (rand-phono)");
    baseline->add_option("--seed", seed, "base seed")->capture_default_str();
    baseline->add_option("--trials", trials, "number of trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    baseline->add_option(
        "--k", kFlag, "points to place (default: the gold boundary count)");

    CommonArgs bruteArgs;
    std::size_t limit = 20;
    CLI::App* brute = app.add_subcommand(
        "brute", "exhaustive minimum vs greedy search on a small corpus");
    addCommonOptions(brute, bruteArgs);
    brute->add_option("--rules", bruteArgs.rulesPath, "cluster rules file");
    brute->add_option("--limit", limit, "max candidate points")
        ->capture_default_str();

    CommonArgs scoreArgs;
    std::string hypPath;
    CLI::App* score = app.add_subcommand(
        "score", "score a segmented corpus file against the gold corpus");
    addCommonOptions(score, scoreArgs);
    score->add_option("--hyp", hypPath, "hypothesis segmentation file")
        ->required();

    std::string exCorpusPath, exInventoryPath, exOutPath;
    CLI::App* extract = app.add_subcommand(
        "extract-rules", "derive cluster rules from a gold-segmented corpus");
    extract->add_option("--corpus", exCorpusPath, "gold corpus file")
        ->required();
    extract->add_option("--inventory", exInventoryPath, "inventory file")
        ->required();
    extract->add_option("--out", exOutPath, "rules file to write");

    try {
        app.parse(argc, argv);

        if (segment->parsed()) {
            if (segMode == "dist-phono")
                requireRules(segMode, segArgs.rulesPath);
            return runSegment(segArgs, segMode, tracePath, segOutPath,
                              earlyStop);
        }
        if (baseline->parsed()) {
            if (baseMode == "rand-phono")
                requireRules(baseMode, baseArgs.rulesPath);
            return runBaseline(baseArgs, baseMode, seed, trials, kFlag);
        }
        if (brute->parsed()) return runBrute(bruteArgs, limit);
        if (score->parsed()) return runScore(scoreArgs, hypPath);
        if (extract->parsed())
            return runExtractRules(exCorpusPath, exInventoryPath, exOutPath);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
