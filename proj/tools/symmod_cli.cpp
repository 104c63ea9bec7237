// Command-line front end: dim, bound, mullineux, js, normal, a, crystal, verify.
//
// Exit codes: 0 success, 1 bound violation in verify, 2 usage error,
// 3 oracle out of range, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmod/symmod.hpp"

namespace {

constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_out_of_range = 3;
constexpr int exit_io = 4;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json report_json(const symmod::NormalNodeReport& r) {
    auto nodes = [](const auto& seq) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : seq)
            arr.push_back({s.node.row, s.node.col});
        return arr;
    };
    nlohmann::ordered_json j;
    j["residue"] = r.residue.value();
    j["signature"] = symmod::signs_to_string(r.signature);
    j["signature_nodes"] = nodes(r.signature);
    j["reduced"] = symmod::signs_to_string(r.reduced);
    j["reduced_nodes"] = nodes(r.reduced);
    j["normal_nodes"] = nlohmann::ordered_json::array();
    for (const auto& a : r.normal_nodes)
        j["normal_nodes"].push_back({a.row, a.col});
    j["good_node"] = r.good_node ? nlohmann::ordered_json{r.good_node->row, r.good_node->col} : nullptr;
    j["cogood_node"] = r.cogood_node ? nlohmann::ordered_json{r.cogood_node->row, r.cogood_node->col} : nullptr;
    j["epsilon"] = r.epsilon;
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out || !(out << text))
        throw io_failure("cannot write " + path);
}

} // namespace

int main(int argc, char** argv) {
    using namespace symmod;

    CLI::App app{"Modular representations of symmetric groups: oracle dimensions, crystal combinatorics and lower bounds"};
    app.require_subcommand(1);

    int p = 2;
    std::string lambda_text;
    std::string which = "best";
    std::string a_mode_text = "oracle";
    OracleCaps caps;
    int residue = -1;
    int max_n = 10;
    std::string format;
    std::string out_path;
    int jobs = 1;
    std::uint64_t seed = 1;
    std::vector<int> primes{2, 3, 5};
    std::vector<std::string> families;
    std::string cache_path;
    bool trust_cache = false;

    auto add_lambda = [&](CLI::App* sub) {
        sub->add_option("--p", p, "characteristic (prime)")->required();
        sub->add_option("--lambda", lambda_text, "partition as a,b,c")->required();
    };
    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-tableaux", caps.max_tableaux, "oracle cap on standard tableaux");
        sub->add_option("--max-tabloids", caps.max_tabloids, "oracle cap on tabloids");
    };

    auto* dim_cmd = app.add_subcommand("dim", "dimension of D^lambda over F_p");
    add_lambda(dim_cmd);
    add_caps(dim_cmd);

    auto* bound_cmd = app.add_subcommand("bound", "evaluate a lower bound");
    add_lambda(bound_cmd);
    add_caps(bound_cmd);
    bound_cmd->add_option("--which", which, "A|james|B|C|L1|two_row|first_row|best")
        ->check(CLI::IsMember({"A", "james", "B", "C", "L1", "two_row", "first_row", "best"}));
    bound_cmd->add_option("--a-mode", a_mode_text, "safe|oracle|crystal")->check(CLI::IsMember({"safe", "oracle", "crystal"}));

    auto* mull_cmd = app.add_subcommand("mullineux", "the Mullineux image lambda^M");
    add_lambda(mull_cmd);

    auto* js_cmd = app.add_subcommand("js", "is lambda Jantzen-Seitz");
    add_lambda(js_cmd);

    auto* normal_cmd = app.add_subcommand("normal", "i-signature report");
    add_lambda(normal_cmd);
    normal_cmd->add_option("--i", residue, "residue (default: all)");

    auto* a_cmd = app.add_subcommand("a", "least restriction depth with a one-dimensional submodule");
    add_lambda(a_cmd);
    add_caps(a_cmd);

    auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph of p-regular partitions");
    crystal_cmd->add_option("--p", p, "characteristic (prime)")->required();
    crystal_cmd->add_option("--max-n", max_n, "largest size")->required();
    crystal_cmd->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    crystal_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "sweep all bounds against the oracle");
    verify_cmd->add_option("--p", primes, "primes, comma separated")->delimiter(',');
    verify_cmd->add_option("--max-n", max_n, "largest n");
    verify_cmd->add_option("--which", families, "bound families, comma separated")->delimiter(',');
    verify_cmd->add_option("--a-mode", a_mode_text, "safe|oracle|crystal")->check(CLI::IsMember({"safe", "oracle", "crystal"}));
    verify_cmd->add_option("--out", out_path, "report file (default stdout)");
    verify_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->add_option("--seed", seed, "seed echoed in the report");
    verify_cmd->add_option("--cache", cache_path, "JSON-lines oracle cache file");
    verify_cmd->add_flag("--trust-cache", trust_cache, "read oracle results from --cache instead of recomputing");
    add_caps(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        auto parse_lambda = [&] { return Partition::parse(lambda_text); };
        if (dim_cmd->parsed()) {
            std::cout << dim_irreducible(parse_lambda(), PrimeChar(p), caps) << '\n';
        } else if (bound_cmd->parsed()) {
            PrimeChar q(p);
            auto lambda = parse_lambda();
            auto mode = parse_a_mode(a_mode_text);
            std::optional<int> a_value;
            if (mode == AMode::oracle)
                a_value = minimal_a(lambda, q, caps);
            auto report = best_lower_bound(lambda, q, mode, a_value);
            if (which == "best") {
                std::cout << report.best.to_string() << '\n';
                std::cerr << "from " << report.best_tag << '\n';
                return 0;
            }
            BoundTag tag = BoundTag::A;
            if (which == "james") tag = BoundTag::james;
            else if (which == "B") tag = mode == AMode::safe ? BoundTag::B_safe : (mode == AMode::oracle ? BoundTag::B_oracle : BoundTag::B_crystal);
            else if (which == "C") tag = BoundTag::C;
            else if (which == "L1") tag = BoundTag::L1;
            else if (which == "two_row") tag = BoundTag::two_row;
            else if (which == "first_row") tag = BoundTag::first_row;
            const auto* entry = report.find(tag);
            if (!entry || !entry->eval.applicable) {
                std::cout << "not-applicable\n";
                if (entry)
                    std::cerr << entry->eval.note << '\n';
                return 0;
            }
            std::cout << entry->eval.value->to_string() << '\n';
            if (!entry->eval.note.empty())
                std::cerr << entry->eval.note << '\n';
        } else if (mull_cmd->parsed()) {
            std::cout << mullineux(parse_lambda(), PrimeChar(p)).to_string() << '\n';
        } else if (js_cmd->parsed()) {
            std::cout << (is_js(parse_lambda(), PrimeChar(p)) ? "true" : "false") << '\n';
        } else if (normal_cmd->parsed()) {
            PrimeChar q(p);
            auto lambda = parse_lambda();
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (int i = 0; i < p; ++i)
                if (residue < 0 || residue % p == i)
                    out.push_back(report_json(normal_report(lambda, ResidueClass(i, q), q)));
            std::cout << out.dump(2) << '\n';
        } else if (a_cmd->parsed()) {
            PrimeChar q(p);
            auto lambda = parse_lambda();
            nlohmann::ordered_json out{{"a_oracle", minimal_a(lambda, q, caps)}, {"a_crystal", a_crystal(lambda, q)}};
            std::cout << out.dump() << '\n';
        } else if (crystal_cmd->parsed()) {
            auto graph = crystal_graph(max_n, PrimeChar(p));
            write_output(out_path, format == "json" ? graph.to_json().dump(2) + "\n" : graph.to_dot());
        } else if (verify_cmd->parsed()) {
            VerifyConfig config;
            config.primes = primes;
            config.max_n = max_n;
            if (!families.empty())
                config.bounds = std::set<std::string>(families.begin(), families.end());
            config.a_mode = parse_a_mode(a_mode_text);
            config.caps = caps;
            config.parallelism = jobs;
            config.seed = seed;
            config.output_path = out_path;
            config.format = format.empty() ? "json" : format;
            config.cache_path = cache_path;
            config.trust_cache = trust_cache;
            if (trust_cache && cache_path.empty())
                throw error(errc::bad_params, "--trust-cache needs --cache");
            auto report = run_verify(config);
            write_output(out_path, report.serialize());
            const auto& s = report.summary;
            std::cerr << "records=" << s.records << " out_of_range=" << s.out_of_range << " checks=" << s.checks
                      << " violations=" << s.violations << " balance_mismatches=" << s.balance_failures
                      << " a_gaps=" << s.a_gaps.size() << '\n';
            return s.consistent() ? 0 : exit_violation;
        }
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == errc::oracle_out_of_range ? exit_out_of_range : exit_usage;
    } catch (const io_failure& e) {
        std::cerr << e.what() << '\n';
        return exit_io;
    } catch (const std::ios_base::failure& e) {
        std::cerr << e.what() << '\n';
        return exit_io;
    }
    return 0;
}
