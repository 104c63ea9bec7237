#pragma once

// Batch sweeps confronting every bound with the Specht oracle.

#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "crystal_depth.hpp"
#include "specht.hpp"

namespace symmod {

inline constexpr const char* tool_version = "0.3.1";

/// Selectable bound families; "B" expands to the entry of the chosen a-mode
/// plus the always-valid t = n - k entry.
inline const std::vector<std::string>& all_bound_families() {
    static const std::vector<std::string> families{"A", "james", "B", "C", "L1", "two_row", "first_row"};
    return families;
}

struct VerifyConfig {
    std::vector<int> primes{2, 3, 5};
    int max_n = 10;
    std::set<std::string> bounds{all_bound_families().begin(), all_bound_families().end()};
    AMode a_mode = AMode::oracle;
    OracleCaps caps;
    int parallelism = 1;
    std::uint64_t seed = 1;
    std::string output_path;
    std::string format = "json";
    std::string cache_path;
    bool trust_cache = false;

    void validate() const {
        if (max_n < 1)
            throw error(errc::bad_params, "max_n must be >= 1");
        if (primes.empty())
            throw error(errc::bad_params, "at least one prime is required");
        if (parallelism < 1)
            throw error(errc::bad_params, "parallelism must be >= 1");
        for (int p : primes)
            PrimeChar{p};
        for (const auto& b : bounds)
            if (std::find(all_bound_families().begin(), all_bound_families().end(), b) == all_bound_families().end())
                throw error(errc::bad_params, "unknown bound family '" + b + "'");
        if (format != "json" && format != "csv")
            throw error(errc::bad_params, "format must be json or csv");
    }
};

enum class CheckStatus { pass, vacuous_pass, fail };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::vacuous_pass: return "vacuous-pass";
    case CheckStatus::fail: return "fail";
    }
    return "?";
}

struct BoundCheck {
    BoundTag tag;
    ExactBound bound;
    CheckStatus status;
    bool guaranteed = true;
    std::string note;
};

struct VerifyRecord {
    int p = 2;
    Partition lambda;
    int dim = 0;
    int a_oracle = 0;
    int a_crystal = 0;
    int k = 0;
    bool js = false;
    std::vector<BoundCheck> checks;
    int balance_sum = 0;
    bool balance_ok = false;
    bool from_cache = false;
};

struct OutOfRange {
    int p;
    Partition lambda;
    std::string reason;
};

struct VerifySummary {
    std::size_t records = 0;
    std::size_t out_of_range = 0;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::size_t vacuous = 0;
    std::size_t unguaranteed_failures = 0;
    /// Sum of multiplicity * dim over restriction_factors differs from dim.
    std::size_t balance_failures = 0;
    /// The same sum exceeds dim, which no set of composition factors can do.
    std::size_t balance_overshoots = 0;
    std::size_t js_mismatches = 0;
    /// a_oracle < a_crystal: reported, not a failure.
    std::vector<std::string> a_gaps;
    /// a_oracle > a_crystal would contradict the socle argument.
    std::size_t a_inversions = 0;

    /// Bound violations or internal contradictions; drives the CLI exit code.
    bool consistent() const {
        return violations == 0 && a_inversions == 0 && js_mismatches == 0 && balance_overshoots == 0;
    }
    bool all_pass() const { return consistent() && balance_failures == 0; }
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<VerifyRecord> records;
    std::vector<OutOfRange> out_of_range;
    VerifySummary summary;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;
    std::string serialize() const { return config.format == "csv" ? to_csv() : to_json().dump(2) + "\n"; }
};

namespace detail {

struct cache_entry {
    int dim;
    int a;
};

using oracle_file_cache = std::map<std::pair<int, std::string>, cache_entry>;

/// JSON lines {"p":3,"lambda":"5,1","dim":4,"a":2}.
inline oracle_file_cache read_cache_file(const std::string& path) {
    oracle_file_cache out;
    std::ifstream in(path);
    if (!in)
        return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto j = nlohmann::json::parse(line);
        out[{j.at("p").get<int>(), j.at("lambda").get<std::string>()}] = {j.at("dim").get<int>(), j.at("a").get<int>()};
    }
    return out;
}

inline void write_cache_file(const std::string& path, const oracle_file_cache& entries) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::ios_base::failure("cannot write cache file " + path);
    for (const auto& [key, value] : entries) {
        nlohmann::ordered_json j{{"p", key.first}, {"lambda", key.second}, {"dim", value.dim}, {"a", value.a}};
        out << j.dump() << '\n';
    }
}

inline bool family_selected(const VerifyConfig& config, BoundTag tag) {
    switch (tag) {
    case BoundTag::A: return config.bounds.contains("A");
    case BoundTag::james: return config.bounds.contains("james");
    case BoundTag::B_safe:
    case BoundTag::B_oracle:
    case BoundTag::B_crystal: return config.bounds.contains("B");
    case BoundTag::C: return config.bounds.contains("C");
    case BoundTag::L1: return config.bounds.contains("L1");
    case BoundTag::two_row: return config.bounds.contains("two_row");
    case BoundTag::first_row: return config.bounds.contains("first_row");
    }
    return false;
}

inline VerifyRecord verify_one(const Partition& lambda, PrimeChar p, const VerifyConfig& config,
                               const oracle_file_cache* trusted) {
    VerifyRecord rec;
    rec.p = p.value();
    rec.lambda = lambda;
    const cache_entry* hit = nullptr;
    if (trusted) {
        auto it = trusted->find({p.value(), lambda.to_string()});
        if (it != trusted->end())
            hit = &it->second;
    }
    if (hit) {
        rec.dim = hit->dim;
        rec.a_oracle = hit->a;
        rec.from_cache = true;
    } else {
        auto module = irreducible_action(lambda, p, config.caps);
        rec.dim = static_cast<int>(module.dim);
        rec.a_oracle = minimal_a_of(module);
        global_dim_cache().insert({p.value(), lambda}, rec.dim);
    }
    rec.a_crystal = a_crystal(lambda, p);
    rec.k = std::max(lambda.first(), mullineux(lambda, p).first());

    std::optional<int> a_value;
    if (config.a_mode == AMode::oracle)
        a_value = rec.a_oracle;
    auto report = best_lower_bound(lambda, p, config.a_mode, a_value);
    Integer dim = rec.dim;
    for (const auto& entry : report.entries) {
        if (!entry.eval.applicable || !family_selected(config, entry.tag))
            continue;
        const auto& bound = *entry.eval.value;
        CheckStatus status = bound.vacuous() ? CheckStatus::vacuous_pass
                                             : (bound.satisfied_by(dim) ? CheckStatus::pass : CheckStatus::fail);
        rec.checks.push_back({entry.tag, bound, status, entry.guaranteed, entry.eval.note});
    }

    auto factors = restriction_factors(lambda, p);
    rec.balance_sum = 0;
    for (const auto& [mu, mult] : factors.entries) {
        int child = 1;
        if (!mu.empty()) {
            auto it = trusted ? trusted->find({p.value(), mu.to_string()}) : oracle_file_cache::const_iterator{};
            bool cached = trusted && it != trusted->end();
            child = cached ? it->second.dim : dim_irreducible(mu, p, config.caps);
        }
        rec.balance_sum += mult * child;
    }
    rec.balance_ok = rec.balance_sum == rec.dim;
    rec.js = is_js(lambda, p);
    return rec;
}

} // namespace detail

/// Runs every selected bound against the oracle for all p-regular partitions
/// of 1..max_n. Output is independent of parallelism.
inline VerifyReport run_verify(const VerifyConfig& config) {
    config.validate();
    clear_mullineux_cache();
    std::vector<std::pair<int, Partition>> tasks;
    for (int p : config.primes)
        for (int n = 1; n <= config.max_n; ++n)
            for (auto& lambda : regular_partitions_of(n, PrimeChar(p)))
                tasks.emplace_back(p, std::move(lambda));
    std::sort(tasks.begin(), tasks.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : graded_less{}(a.second, b.second);
    });

    detail::oracle_file_cache file_cache;
    if (!config.cache_path.empty())
        file_cache = detail::read_cache_file(config.cache_path);
    const detail::oracle_file_cache* trusted = config.trust_cache ? &file_cache : nullptr;

    std::vector<std::optional<VerifyRecord>> results(tasks.size());
    std::vector<std::string> failures(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            const auto& [p, lambda] = tasks[k];
            try {
                results[k] = detail::verify_one(lambda, PrimeChar(p), config, trusted);
            } catch (const error& e) {
                if (e.code() != errc::oracle_out_of_range)
                    throw;
                failures[k] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < config.parallelism; ++t)
        pool.emplace_back([&] {
            try {
                worker();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);

    VerifyReport report;
    report.config = config;
    auto& s = report.summary;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (!results[k]) {
            report.out_of_range.push_back({tasks[k].first, tasks[k].second, failures[k]});
            continue;
        }
        auto& rec = *results[k];
        for (const auto& c : rec.checks) {
            ++s.checks;
            if (c.status == CheckStatus::vacuous_pass)
                ++s.vacuous;
            if (c.status == CheckStatus::fail)
                ++(c.guaranteed ? s.violations : s.unguaranteed_failures);
        }
        if (!rec.balance_ok)
            ++s.balance_failures;
        if (rec.balance_sum > rec.dim)
            ++s.balance_overshoots;
        bool single = false;
        if (rec.lambda.size() > 0) {
            auto factors = restriction_factors(rec.lambda, PrimeChar(rec.p));
            single = factors.entries.size() == 1 && factors.entries[0].second == 1 &&
                     factors.entries[0].first == remove_node(rec.lambda, top_removable_node(rec.lambda));
        }
        if (single != rec.js)
            ++s.js_mismatches;
        if (rec.a_oracle < rec.a_crystal)
            s.a_gaps.push_back("p=" + std::to_string(rec.p) + " lambda=" + rec.lambda.to_string());
        if (rec.a_oracle > rec.a_crystal)
            ++s.a_inversions;
        if (!config.cache_path.empty() && !rec.from_cache)
            file_cache[{rec.p, rec.lambda.to_string()}] = {rec.dim, rec.a_oracle};
        report.records.push_back(std::move(rec));
    }
    s.records = report.records.size();
    s.out_of_range = report.out_of_range.size();
    if (!config.cache_path.empty())
        detail::write_cache_file(config.cache_path, file_cache);
    return report;
}

inline nlohmann::ordered_json VerifyReport::to_json() const {
    using json = nlohmann::ordered_json;
    json j;
    j["tool"] = "symmod";
    j["version"] = tool_version;
    json cfg;
    cfg["primes"] = config.primes;
    cfg["max_n"] = config.max_n;
    cfg["bounds"] = std::vector<std::string>(config.bounds.begin(), config.bounds.end());
    cfg["a_mode"] = to_string(config.a_mode);
    cfg["max_tableaux"] = config.caps.max_tableaux;
    cfg["max_tabloids"] = config.caps.max_tabloids;
    cfg["seed"] = config.seed;
    cfg["trust_cache"] = config.trust_cache;
    j["config"] = cfg;

    json sum;
    sum["records"] = summary.records;
    sum["out_of_range"] = summary.out_of_range;
    sum["checks"] = summary.checks;
    sum["violations"] = summary.violations;
    sum["vacuous"] = summary.vacuous;
    sum["unguaranteed_failures"] = summary.unguaranteed_failures;
    sum["balance_failures"] = summary.balance_failures;
    sum["balance_overshoots"] = summary.balance_overshoots;
    sum["js_mismatches"] = summary.js_mismatches;
    sum["a_inversions"] = summary.a_inversions;
    sum["a_gaps"] = summary.a_gaps;
    sum["all_pass"] = summary.all_pass();
    j["summary"] = sum;

    j["records"] = json::array();
    for (const auto& r : records) {
        json jr;
        jr["p"] = r.p;
        jr["lambda"] = r.lambda.to_string();
        jr["dim"] = r.dim;
        jr["a_oracle"] = r.a_oracle;
        jr["a_crystal"] = r.a_crystal;
        jr["k"] = r.k;
        jr["js"] = r.js;
        jr["balance"] = {{"sum", r.balance_sum}, {"ok", r.balance_ok}};
        jr["checks"] = json::array();
        for (const auto& c : r.checks) {
            json jc;
            jc["tag"] = to_string(c.tag);
            jc["bound"] = c.bound.to_json();
            jc["status"] = to_string(c.status);
            if (!c.guaranteed)
                jc["note"] = "not guaranteed by the theorem";
            if (c.status == CheckStatus::fail)
                jc["reproduce"] = "p=" + std::to_string(r.p) + " lambda=" + r.lambda.to_string() + " tag=" +
                                  std::string(to_string(c.tag)) + " dim=" + std::to_string(r.dim) +
                                  " bound=" + c.bound.to_string();
            jr["checks"].push_back(std::move(jc));
        }
        j["records"].push_back(std::move(jr));
    }
    j["out_of_range"] = json::array();
    for (const auto& o : out_of_range)
        j["out_of_range"].push_back({{"p", o.p}, {"lambda", o.lambda.to_string()}, {"reason", o.reason}});
    return j;
}

inline std::string VerifyReport::to_csv() const {
    std::ostringstream os;
    os << "p,lambda,dim,a_oracle,a_crystal,k,balance_ok,tag,bound,status\n";
    for (const auto& r : records)
        for (const auto& c : r.checks)
            os << r.p << ",\"" << r.lambda.to_string() << "\"," << r.dim << ',' << r.a_oracle << ',' << r.a_crystal
               << ',' << r.k << ',' << (r.balance_ok ? "true" : "false") << ',' << to_string(c.tag) << ",\""
               << c.bound.to_string() << "\"," << to_string(c.status) << '\n';
    for (const auto& o : out_of_range)
        os << o.p << ",\"" << o.lambda.to_string() << "\",,,,,,,,out-of-range\n";
    return os.str();
}

} // namespace symmod
