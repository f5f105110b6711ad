#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "foulkes/blocks.hpp"
#include "foulkes/characters.hpp"
#include "foulkes/monomial.hpp"
#include "foulkes/oracle.hpp"

namespace foulkes {

using Json = nlohmann::ordered_json;

inline constexpr int kCorpusVersion = 1;

Json to_json(const DecompositionColumn& column);
DecompositionColumn column_from_json(const Json& j);

Json to_json(const CharacterVector& chi);
Json to_json(const CandidateSet& e, const std::vector<DominanceComponent>& components);
Json to_json(const VerifyReport& report);

struct StratifyReport {
    int m = 0;
    int k = 0;
    int r = 0;
    int p = 0;
    std::vector<int> t_range;
    std::vector<std::uint64_t> counts;     ///< |A_2t| for t = 0, 1, ...
    std::vector<std::uint64_t> predicted;  ///< product formula per t
    std::uint64_t fixed_total = 0;         ///< |Fix(R_r)| counted directly
    bool identity_checked = false;         ///< every count equals its prediction and the sum is fixed_total
};

StratifyReport stratify_report(int m, int k, int r, int p);
Json to_json(const StratifyReport& report);

struct ExpectedColumn {
    Partition label;
    ColumnStatus status = ColumnStatus::exact;
    std::vector<Partition> ones;
};

/// One line of the regression corpus.
struct CorpusEntry {
    int v = kCorpusVersion;
    std::string source;
    int p = 0;
    Partition core;
    int k = 0;
    int weight = 0;
    std::optional<int> size;                      ///< |E_k(core)|
    std::optional<std::vector<Partition>> members;
    std::optional<std::vector<ExpectedColumn>> columns;
    std::map<int, int> other_weights;             ///< further w_j(core) values
    std::optional<bool> hypothesis;
};

class CorpusParseError : public std::runtime_error {
public:
    CorpusParseError(int line, const std::string& what)
        : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

Json to_json(const CorpusEntry& entry);
CorpusEntry corpus_entry_from_json(const Json& j);

/// JSON-lines; blank lines and lines starting with '#' are skipped.
/// Throws CorpusParseError naming the offending line.
std::vector<CorpusEntry> corpus_parse(const std::string& text);
std::vector<CorpusEntry> corpus_load(const std::filesystem::path& path);

struct CorpusReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Recomputes every entry and lists each disagreement.
CorpusReport corpus_check(const std::vector<CorpusEntry>& entries);

/// Left-aligned columns separated by two spaces.
std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace foulkes
