#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latform/report.hpp"

namespace {

using namespace latform;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

IntegerLattice load_lattice(const std::string& spec) {
    for (const auto& name : builtin_lattice_names())
        if (spec == name) return builtin_lattice(spec);
    std::ifstream in(spec);
    if (!in)
        throw std::domain_error("unknown lattice name and unreadable file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return lattice_from_json_text(buf.str());
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

int run_snk(int k, int n_max, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n <= n_max; ++n)
            rows.push_back({{"n", n},
                            {"S", s_value(k, n).get_str()},
                            {"b", b_value(n).get_str()},
                            {"index", index_formula_value(k, n).get_str()}});
        os << nlohmann::json({{"k", k}, {"rows", rows}}).dump(2) << '\n';
    } else if (format == "csv") {
        os << "n,S,b,index\n";
        for (int n = 0; n <= n_max; ++n)
            os << n << ',' << s_value(k, n).get_str() << ',' << b_value(n).get_str() << ','
               << index_formula_value(k, n).get_str() << '\n';
    } else {
        os << "n\tS(k,n)\tb_n\tindex\n";
        for (int n = 0; n <= n_max; ++n)
            os << n << '\t' << s_value(k, n).get_str() << '\t' << b_value(n).get_str() << '\t'
               << index_formula_value(k, n).get_str() << '\n';
    }
    emit(out_path, os.str());
    return kExitOk;
}

template <typename Report>
bool row_matches(const Report& r, const std::string& mode) {
    if (mode == "S") return r.matches == "S" || r.matches == "S,2S";
    if (mode == "2S") return r.matches == "2S" || r.matches == "S,2S";
    return r.matches != "none" && !r.matches.empty();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinants and indices of graded integral forms over lattices"};
    app.require_subcommand(1);

    std::string lattice_spec, format = "plain", out_path, mode = "both";
    int n_max = 4, k = 1, jobs = 1;
    std::size_t budget = kDefaultBudget;

    auto add_common = [&](CLI::App* cmd, bool with_lattice) {
        if (with_lattice)
            cmd->add_option("--lattice", lattice_spec,
                            "built-in lattice name or JSON file path")
                ->required();
        cmd->add_option("--n-max", n_max, "largest weight to report");
        cmd->add_option("--mode", mode, "closed-form exponent mode: S, 2S or both")
            ->check(CLI::IsMember({"S", "2S", "both"}));
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        cmd->add_option("--budget", budget, "largest allowed graded dimension");
        cmd->add_option("--jobs", jobs, "worker threads for grid cells")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* snk = app.add_subcommand("snk", "table of S(k,n), b_n and the Schur/monomial index");
    snk->add_option("--k", k, "lattice rank")->required()->check(CLI::PositiveNumber);
    snk->add_option("--n-max", n_max, "largest weight");
    snk->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    snk->add_option("--out", out_path, "output file");

    auto* det_m1 = app.add_subcommand(
        "det-m1", "Gram-oracle determinants of the Schur form against both closed forms");
    add_common(det_m1, true);

    auto* det_voa = app.add_subcommand(
        "det-voa", "graded determinants of the standard integral form of the lattice VOA");
    add_common(det_voa, true);

    auto* verify = app.add_subcommand("verify-all", "run the full structural invariant grid");
    add_common(verify, false);
    int k_max = 2;
    std::vector<std::string> lattice_names = {"Z2", "A1", "A2", "A1A1"};
    verify->add_option("--k-max", k_max, "largest rank in the combinatorial checks");
    verify->add_option("--lattices", lattice_names, "built-in lattices for the grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (snk->parsed()) return run_snk(k, n_max, format, out_path);

        if (det_m1->parsed() || det_voa->parsed()) {
            IntegerLattice L = load_lattice(lattice_spec);
            std::ostringstream os;
            bool all_match = true;
            if (det_m1->parsed()) {
                auto reports = verify_m1_grid(L, n_max, budget);
                for (const auto& r : reports) all_match = all_match && row_matches(r, mode);
                if (format == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& r : reports) arr.push_back(to_json(r));
                    os << arr.dump(2) << '\n';
                } else if (format == "csv") {
                    os << det_reports_csv(reports);
                } else {
                    os << det_reports_table(reports);
                }
            } else {
                auto reports = verify_voa_grid(L, n_max, budget);
                for (const auto& r : reports) all_match = all_match && row_matches(r, mode);
                if (format == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& r : reports) arr.push_back(to_json(r));
                    os << arr.dump(2) << '\n';
                } else if (format == "csv") {
                    os << voa_reports_csv(reports);
                } else {
                    os << voa_reports_table(reports);
                }
            }
            emit(out_path, os.str());
            return all_match ? kExitOk : kExitMismatch;
        }

        if (verify->parsed()) {
            VerifyConfig config;
            config.k_max = k_max;
            config.n_max = n_max;
            config.lattices = lattice_names;
            config.budget = budget;
            config.jobs = jobs;
            VerifySummary summary = verify_all(config);
            std::ostringstream os;
            if (format == "json")
                os << to_json(summary).dump(2) << '\n';
            else if (format == "csv")
                os << summary_csv(summary);
            else
                os << summary_table(summary);
            emit(out_path, os.str());
            return summary.all_pass() ? kExitOk : kExitMismatch;
        }
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: lattice JSON parse failure: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
