#include "foulkes/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace foulkes {

namespace {

Json partition_list(const std::vector<Partition>& parts) {
    Json out = Json::array();
    for (const auto& x : parts) out.push_back(to_string(x));
    return out;
}

std::vector<Partition> parse_list(const Json& j) {
    std::vector<Partition> out;
    for (const auto& x : j) out.push_back(parse_partition(x.get<std::string>()));
    return out;
}

const char* status_name(ColumnStatus s) { return s == ColumnStatus::exact ? "exact" : "support-only"; }

ColumnStatus parse_status(const std::string& s) {
    if (s == "exact") return ColumnStatus::exact;
    if (s == "support-only") return ColumnStatus::support_only;
    throw std::invalid_argument("unknown column status '" + s + "'");
}

std::vector<Partition> sorted_desc(std::vector<Partition> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::string list_text(const std::vector<Partition>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " (" : "(") + to_display_string(v[i]) + ")";
    return out + "}";
}

}  // namespace

Json to_json(const DecompositionColumn& column) {
    Json j;
    j["p"] = column.block.p;
    j["core"] = to_string(column.block.core);
    j["weight"] = column.block.weight;
    j["label"] = to_string(column.label);
    j["status"] = status_name(column.status);
    j["ones"] = partition_list(column.ones);
    if (column.status == ColumnStatus::support_only) j["support"] = partition_list(column.support);
    return j;
}

DecompositionColumn column_from_json(const Json& j) {
    DecompositionColumn c;
    c.block = BlockLabel{j.at("p").get<int>(), parse_partition(j.at("core").get<std::string>()), j.at("weight").get<int>()};
    c.label = parse_partition(j.at("label").get<std::string>());
    c.status = parse_status(j.at("status").get<std::string>());
    c.ones = parse_list(j.at("ones"));
    c.support = j.contains("support") ? parse_list(j.at("support")) : c.ones;
    return c;
}

Json to_json(const CharacterVector& chi) {
    Json j;
    j["n"] = chi.degree();
    Json values = Json::object();
    for (const auto& [t, v] : chi.values()) values[to_string(t)] = v;
    j["values"] = std::move(values);
    return j;
}

Json to_json(const CandidateSet& e, const std::vector<DominanceComponent>& components) {
    Json j;
    j["p"] = e.p;
    j["core"] = to_string(e.gamma);
    j["k"] = e.k;
    j["weight"] = e.weight;
    j["members"] = partition_list(e.members);
    Json comps = Json::array();
    for (const auto& c : components) {
        Json cj;
        cj["members"] = partition_list(c.members);
        cj["maxima"] = partition_list(c.maxima);
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

Json to_json(const VerifyReport& report) {
    Json j;
    j["block"] = {{"p", report.column.block.p},
                  {"core", to_string(report.column.block.core)},
                  {"weight", report.column.block.weight}};
    j["column"] = to_string(report.column.label);
    j["status"] = status_name(report.column.status);
    j["checked_rows"] = report.checked_rows;
    Json mism = Json::array();
    for (const auto& m : report.mismatches) {
        mism.push_back({{"mu", to_string(m.mu)}, {"expected", m.expected}, {"found", m.found}});
    }
    j["mismatches"] = std::move(mism);
    j["unitriangular"] = report.unitriangular;
    return j;
}

StratifyReport stratify_report(int m, int k, int r, int p) {
    StratifyReport out{m, k, r, p, t_range(m, k, r, p), {}, {}, 0, true};
    const auto strata = stratify(m, k, r, p);
    out.fixed_total = fixed_point_count(m, k, PSubgroupSpec::rotation(r, p, 2 * m + k));
    std::uint64_t sum = 0;
    for (const auto& s : strata) {
        const std::uint64_t count = s.elements.size();
        const std::uint64_t predicted = stratum_size_predicted(m, k, r, s.t, p);
        out.counts.push_back(count);
        out.predicted.push_back(predicted);
        sum += count;
        const bool allowed = std::find(out.t_range.begin(), out.t_range.end(), s.t) != out.t_range.end();
        if (count != predicted || (count != 0 && !allowed)) out.identity_checked = false;
    }
    if (sum != out.fixed_total) out.identity_checked = false;
    return out;
}

Json to_json(const StratifyReport& report) {
    Json j;
    j["r"] = report.r;
    j["p"] = report.p;
    j["m"] = report.m;
    j["k"] = report.k;
    j["t_range"] = report.t_range;
    Json strata = Json::array();
    for (std::size_t t = 0; t < report.counts.size(); ++t) {
        strata.push_back({{"t", static_cast<int>(t)}, {"count", report.counts[t]}, {"predicted", report.predicted[t]}});
    }
    j["strata"] = std::move(strata);
    j["fixed_total"] = report.fixed_total;
    j["identity_checked"] = report.identity_checked;
    return j;
}

Json to_json(const CorpusEntry& e) {
    Json j;
    j["v"] = e.v;
    j["source"] = e.source;
    j["p"] = e.p;
    j["core"] = to_string(e.core);
    j["k"] = e.k;
    j["weight"] = e.weight;
    if (e.size) j["size"] = *e.size;
    if (e.members) j["members"] = partition_list(*e.members);
    if (e.columns) {
        Json cols = Json::array();
        for (const auto& c : *e.columns) {
            cols.push_back({{"label", to_string(c.label)}, {"status", status_name(c.status)}, {"ones", partition_list(c.ones)}});
        }
        j["columns"] = std::move(cols);
    }
    if (!e.other_weights.empty()) {
        Json w = Json::object();
        for (const auto& [k, v] : e.other_weights) w[std::to_string(k)] = v;
        j["other_weights"] = std::move(w);
    }
    if (e.hypothesis) j["hypothesis"] = *e.hypothesis;
    return j;
}

CorpusEntry corpus_entry_from_json(const Json& j) {
    CorpusEntry e;
    e.v = j.at("v").get<int>();
    if (e.v != kCorpusVersion) throw std::invalid_argument("unsupported corpus version " + std::to_string(e.v));
    e.source = j.at("source").get<std::string>();
    if (e.source.empty()) throw std::invalid_argument("empty source annotation");
    e.p = j.at("p").get<int>();
    e.core = parse_partition(j.at("core").get<std::string>());
    e.k = j.at("k").get<int>();
    e.weight = j.at("weight").get<int>();
    if (j.contains("size")) e.size = j.at("size").get<int>();
    if (j.contains("members")) e.members = parse_list(j.at("members"));
    if (j.contains("columns")) {
        std::vector<ExpectedColumn> cols;
        for (const auto& c : j.at("columns")) {
            cols.push_back({parse_partition(c.at("label").get<std::string>()),
                            parse_status(c.value("status", std::string("exact"))), parse_list(c.at("ones"))});
        }
        e.columns = std::move(cols);
    }
    if (j.contains("other_weights")) {
        for (const auto& [k, v] : j.at("other_weights").items()) e.other_weights[std::stoi(k)] = v.get<int>();
    }
    if (j.contains("hypothesis")) e.hypothesis = j.at("hypothesis").get<bool>();
    return e;
}

std::vector<CorpusEntry> corpus_parse(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(corpus_entry_from_json(Json::parse(line)));
        } catch (const std::exception& err) {
            throw CorpusParseError(number, err.what());
        }
    }
    return out;
}

std::vector<CorpusEntry> corpus_load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return corpus_parse(buffer.str());
}

CorpusReport corpus_check(const std::vector<CorpusEntry>& entries) {
    CorpusReport report;
    for (const auto& e : entries) {
        ++report.checked;
        const std::string where = e.source + " (p=" + std::to_string(e.p) + ", core (" + to_display_string(e.core) +
                                  "), k=" + std::to_string(e.k) + "): ";
        auto fail = [&](const std::string& what) { report.failures.push_back(where + what); };
        try {
            const CandidateSet set = candidate_set(e.core, e.k, e.p);
            if (set.weight != e.weight) {
                fail("weight " + std::to_string(set.weight) + ", expected " + std::to_string(e.weight));
            }
            if (e.size && static_cast<int>(set.members.size()) != *e.size) {
                fail("|E| = " + std::to_string(set.members.size()) + ", expected " + std::to_string(*e.size));
            }
            if (e.members && sorted_desc(*e.members) != set.members) {
                fail("members " + list_text(set.members) + ", expected " + list_text(sorted_desc(*e.members)));
            }
            for (const auto& [k, w] : e.other_weights) {
                const int got = weight_k(e.core, k, e.p).w;
                if (got != w) fail("w_" + std::to_string(k) + " = " + std::to_string(got) + ", expected " + std::to_string(w));
            }
            const HypothesisCheck h = hypothesis_holds(e.core, e.k, e.p);
            if (e.hypothesis && h.holds != *e.hypothesis) fail("hypothesis mismatch");
            if (e.columns) {
                if (!h.holds) {
                    fail("columns expected but the hypothesis fails");
                } else {
                    const auto cols = synthesize_columns(e.core, e.k, e.p);
                    bool same = cols.size() == e.columns->size();
                    for (std::size_t i = 0; same && i < cols.size(); ++i) {
                        const auto& want = (*e.columns)[i];
                        same = cols[i].label == want.label && cols[i].status == want.status &&
                               cols[i].ones == sorted_desc(want.ones);
                    }
                    if (!same) fail("columns differ");
                }
            }
        } catch (const std::exception& err) {
            fail(err.what());
        }
    }
    return report;
}

std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    measure(header);
    for (const auto& r : rows) measure(r);
    auto line = [&](const std::vector<std::string>& row) {
        std::string out;
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string cell = i < row.size() ? row[i] : "";
            out += cell;
            if (i + 1 < width.size()) out += std::string(width[i] - cell.size() + 2, ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };
    std::string out = line(header);
    for (const auto& r : rows) out += line(r);
    return out;
}

}  // namespace foulkes
