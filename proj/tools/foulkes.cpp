#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "foulkes/abacus.hpp"
#include "foulkes/blocks.hpp"
#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/io.hpp"
#include "foulkes/monomial.hpp"
#include "foulkes/oracle.hpp"

#ifndef FOULKES_CORPUS_PATH
#define FOULKES_CORPUS_PATH "data/corpus.jsonl"
#endif

using namespace foulkes;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRefused = 2, kMismatch = 3 };

struct Args {
    int p = 3;
    std::string core;
    std::string partition;
    int k = 0;
    int m = 0;
    int r = 1;
    std::uint64_t seed = 7;
    std::string format = "json";
    std::optional<int> cap;
    int nmax = 8;
    bool no_cache = false;
    std::string corpus = FOULKES_CORPUS_PATH;
    std::string route = "sum";
    int max_core = 4;
};

bool table(const Args& a) { return a.format == "table"; }

std::string join(const std::vector<Partition>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "  " : "") + to_display_string(v[i]);
    return out;
}

const char* status_text(ColumnStatus s) { return s == ColumnStatus::exact ? "exact" : "support-only"; }

int cmd_core(const Args& a) {
    const Partition lambda = parse_partition(a.partition);
    require_odd_prime(a.p);
    const CoreAndWeight cw = p_core(lambda, a.p);
    if (table(a)) {
        std::cout << format_table({"partition", "p", "core", "weight"},
                                  {{to_display_string(lambda), std::to_string(a.p), to_display_string(cw.core),
                                    std::to_string(cw.weight)}});
        std::cout << Abacus::from_partition(lambda, a.p).pretty();
        return kOk;
    }
    Json j;
    j["partition"] = to_string(lambda);
    j["p"] = a.p;
    j["core"] = to_string(cw.core);
    j["weight"] = cw.weight;
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_weights(const Args& a) {
    const Partition gamma = parse_partition(a.core);
    const WeightResult wr = weight_k(gamma, a.k, a.p, a.cap);
    const HypothesisCheck h = hypothesis_holds(gamma, a.k, a.p, a.cap);
    if (table(a)) {
        std::cout << format_table({"p", "core", "k", "w", "n", "w_{k-p}", "hypothesis"},
                                  {{std::to_string(a.p), to_display_string(gamma), std::to_string(a.k),
                                    std::to_string(wr.w), std::to_string(wr.n),
                                    h.w_k_minus_p ? std::to_string(*h.w_k_minus_p) : "-", h.holds ? "holds" : "fails"}});
        return kOk;
    }
    Json j;
    j["p"] = a.p;
    j["core"] = to_string(gamma);
    j["k"] = a.k;
    j["w"] = wr.w;
    j["n"] = wr.n;
    j["w_k_minus_p"] = h.w_k_minus_p ? Json(*h.w_k_minus_p) : Json(nullptr);
    j["hypothesis"] = h.holds;
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_candidates(const Args& a) {
    const CandidateSet e = candidate_set(parse_partition(a.core), a.k, a.p, a.cap);
    const auto comps = dominance_components(e);
    if (table(a)) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            for (const auto& mu : comps[i].members) {
                const bool maximal = std::find(comps[i].maxima.begin(), comps[i].maxima.end(), mu) != comps[i].maxima.end();
                rows.push_back({std::to_string(i + 1), to_display_string(mu), maximal ? "max" : ""});
            }
        }
        std::cout << "w = " << e.weight << ", |E| = " << e.members.size() << '\n';
        std::cout << format_table({"component", "partition", ""}, rows);
        return kOk;
    }
    std::cout << to_json(e, comps).dump() << '\n';
    return kOk;
}

int cmd_column(const Args& a) {
    const auto cols = synthesize_columns(parse_partition(a.core), a.k, a.p, a.cap);
    if (table(a)) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : cols) {
            rows.push_back({to_display_string(c.label), status_text(c.status), join(c.ones)});
        }
        std::cout << format_table({"label", "status", "ones"}, rows);
        return kOk;
    }
    for (const auto& c : cols) std::cout << to_json(c).dump() << '\n';
    return kOk;
}

int cmd_character(const Args& a) {
    const CharacterVector chi =
        a.route == "induced" ? foulkes_character_induced(a.m, a.k) : foulkes_character_sumform(a.m, a.k);
    if (table(a)) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [t, v] : chi.values()) rows.push_back({to_display_string(t), std::to_string(v)});
        std::cout << format_table({"cycle type", "value"}, rows);
        return kOk;
    }
    std::cout << to_json(chi).dump() << '\n';
    return kOk;
}

int cmd_brauer(const Args& a) {
    const StratifyReport report = stratify_report(a.m, a.k, a.r, a.p);
    if (table(a)) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t t = 0; t < report.counts.size(); ++t) {
            rows.push_back({std::to_string(t), std::to_string(report.counts[t]), std::to_string(report.predicted[t])});
        }
        std::cout << format_table({"t", "count", "predicted"}, rows);
        std::cout << "fixed points: " << report.fixed_total << ", identities "
                  << (report.identity_checked ? "hold" : "FAIL") << '\n';
        return kOk;
    }
    std::cout << to_json(report).dump() << '\n';
    return report.identity_checked ? kOk : kMismatch;
}

OracleOptions oracle_options(const Args& a, std::optional<RowCache>& cache) {
    OracleOptions o;
    o.seed = a.seed;
    o.cap = std::max(a.nmax, 1);
    if (!a.no_cache) {
        cache.emplace(RowCache::default_dir());
        o.cache = &*cache;
    }
    return o;
}

int cmd_oracle(const Args& a) {
    const Partition gamma = parse_partition(a.core);
    const WeightResult wr = weight_k(gamma, a.k, a.p, a.cap);
    if (wr.n > a.nmax) {
        std::cerr << "block degree " << wr.n << " exceeds --nmax " << a.nmax << '\n';
        return kUsage;
    }
    std::optional<RowCache> cache;
    const OracleOptions o = oracle_options(a, cache);
    const auto cols = synthesize_columns(gamma, a.k, a.p, a.cap);
    const auto rows = block_rows(cols.front().block, o);
    bool ok = true;
    std::vector<std::vector<std::string>> trows;
    for (const auto& c : cols) {
        const VerifyReport rep = verify_column(c, rows, a.p);
        ok = ok && rep.ok();
        if (table(a)) {
            trows.push_back({to_display_string(c.label), std::to_string(rep.checked_rows),
                             std::to_string(rep.mismatches.size()), rep.ok() ? "ok" : "MISMATCH"});
        } else {
            std::cout << to_json(rep).dump() << '\n';
        }
    }
    if (table(a)) std::cout << format_table({"column", "rows", "mismatches", "result"}, trows);
    if (!ok) std::cerr << "oracle disagrees with a synthesized column\n";
    return ok ? kOk : kMismatch;
}

int cmd_verify(const Args& a) {
    const auto entries = corpus_load(a.corpus);
    const CorpusReport corpus = corpus_check(entries);
    std::optional<RowCache> cache;
    const OracleOptions o = oracle_options(a, cache);
    const auto cases = oracle_sweep(a.p, a.max_core, {0, 1, 2}, a.nmax, o);

    int mismatches = 0;
    Json jcases = Json::array();
    std::vector<std::vector<std::string>> trows;
    for (const auto& c : cases) {
        Json cj;
        cj["core"] = to_string(c.core);
        cj["k"] = c.k;
        cj["n"] = c.n;
        cj["hypothesis"] = c.hypothesis;
        Json reps = Json::array();
        for (const auto& r : c.reports) {
            mismatches += static_cast<int>(r.mismatches.size()) + (r.unitriangular ? 0 : 1);
            reps.push_back(to_json(r));
        }
        cj["columns"] = std::move(reps);
        jcases.push_back(std::move(cj));
        trows.push_back({to_display_string(c.core), std::to_string(c.k), std::to_string(c.n),
                         c.hypothesis ? std::to_string(c.reports.size()) : "refused", c.ok() ? "ok" : "MISMATCH"});
    }
    const bool ok = corpus.ok() && mismatches == 0;
    if (table(a)) {
        std::cout << "corpus: " << corpus.checked << " entries, " << corpus.failures.size() << " failures\n";
        for (const auto& f : corpus.failures) std::cout << "  " << f << '\n';
        std::cout << format_table({"core", "k", "n", "columns", "result"}, trows);
        std::cout << (ok ? "ok" : "FAILED") << '\n';
    } else {
        Json j;
        j["corpus"] = {{"checked", corpus.checked}, {"failures", corpus.failures}};
        j["oracle"] = {{"p", a.p}, {"nmax", a.nmax}, {"seed", a.seed}, {"cases", std::move(jcases)}, {"mismatches", mismatches}};
        j["ok"] = ok;
        std::cout << j.dump() << '\n';
    }
    if (!ok) {
        std::cerr << "verify failed: " << corpus.failures.size() << " corpus failure(s), " << mismatches
                  << " oracle mismatch(es)\n";
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decomposition-matrix columns from twisted Foulkes modules"};
    app.require_subcommand(1);
    Args a;

    auto add_p = [&](CLI::App* s) { s->add_option("--p", a.p, "odd prime")->required(); };
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", a.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_core_k = [&](CLI::App* s) {
        add_p(s);
        s->add_option("--core", a.core, "p-core, e.g. 3,1,1 or 5,4,2,1^4")->required();
        s->add_option("--k", a.k, "number of odd parts")->required()->check(CLI::NonNegativeNumber);
        s->add_option("--cap", a.cap, "largest weight tried by the w_k search");
        add_format(s);
    };

    auto* core = app.add_subcommand("core", "p-core and weight of a partition");
    add_p(core);
    core->add_option("--partition", a.partition, "partition")->required();
    add_format(core);

    auto* weights = app.add_subcommand("weights", "w_k(core) and the hypothesis check");
    add_core_k(weights);
    auto* candidates = app.add_subcommand("candidates", "E_k(core) and its dominance components");
    add_core_k(candidates);
    auto* column = app.add_subcommand("column", "guaranteed decomposition-matrix columns, one JSON object per line");
    add_core_k(column);

    auto* character = app.add_subcommand("character", "character of the twisted Foulkes module");
    character->add_option("--m", a.m, "number of pairs")->required()->check(CLI::NonNegativeNumber);
    character->add_option("--k", a.k, "size of the sign factor")->required()->check(CLI::NonNegativeNumber);
    character->add_option("--route", a.route, "sum or induced")->check(CLI::IsMember({"sum", "induced"}));
    add_format(character);

    auto* brauer = app.add_subcommand("brauer", "fixed points of the rotation subgroup, by stratum");
    add_p(brauer);
    brauer->add_option("--m", a.m, "number of pairs")->required()->check(CLI::NonNegativeNumber);
    brauer->add_option("--k", a.k, "tail length")->required()->check(CLI::NonNegativeNumber);
    brauer->add_option("--r", a.r, "number of p-cycles")->required()->check(CLI::NonNegativeNumber);
    add_format(brauer);

    auto* oracle = app.add_subcommand("oracle", "check synthesized columns against Meataxe decomposition numbers");
    add_core_k(oracle);
    oracle->add_option("--seed", a.seed, "random seed");
    oracle->add_option("--nmax", a.nmax, "largest n for explicit modules (at most 12)")->check(CLI::Range(1, 12));
    oracle->add_flag("--no-cache", a.no_cache, "ignore and do not write the row cache");

    auto* verify = app.add_subcommand("verify", "corpus check plus the oracle sweep over small cores");
    add_p(verify);
    verify->add_option("--nmax", a.nmax, "largest block degree checked (at most 12)")->check(CLI::Range(1, 12));
    verify->add_option("--seed", a.seed, "random seed");
    verify->add_option("--corpus", a.corpus, "corpus file");
    verify->add_option("--max-core", a.max_core, "largest core size in the sweep");
    verify->add_flag("--no-cache", a.no_cache, "ignore and do not write the row cache");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*core) return cmd_core(a);
        if (*weights) return cmd_weights(a);
        if (*candidates) return cmd_candidates(a);
        if (*column) return cmd_column(a);
        if (*character) return cmd_character(a);
        if (*brauer) return cmd_brauer(a);
        if (*oracle) return cmd_oracle(a);
        if (*verify) return cmd_verify(a);
    } catch (const HypothesisViolation& e) {
        std::cerr << "refused: " << e.what() << " (w_k = " << e.w_k << ", w_{k-p} = " << e.w_k_minus_p << ")\n";
        return kRefused;
    } catch (const OracleMismatch& e) {
        std::cerr << "oracle mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
