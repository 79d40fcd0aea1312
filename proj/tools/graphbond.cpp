// graphbond: domination/bondage invariants, surface-embedding curvature
// checks, and the closed-form bondage bound table, from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bondage/harness.hpp"

namespace {

int run_table(int chi_min) {
    auto rows = bondage::bound_table(chi_min);
    std::cout << bondage::table_csv(rows);
    return 0;
}

int run_verify(const bondage::CampaignConfig& cfg) {
    auto result = bondage::run_campaign(cfg);
    if (cfg.format == "json")
        std::cout << bondage::campaign_json(result);
    else
        std::cout << bondage::campaign_csv(result);
    return result.summary.violations > 0 ? 2 : 0;
}

int run_curvature(const std::string& graph_path, const std::string& rotation_path) {
    std::ifstream gin(graph_path);
    if (!gin) throw std::runtime_error("cannot open graph file: " + graph_path);
    std::string line;
    if (!std::getline(gin, line)) throw std::runtime_error("empty graph file");
    bondage::Graph g = bondage::from_graph6(line);

    std::ifstream rin(rotation_path);
    if (!rin) throw std::runtime_error("cannot open rotation file: " + rotation_path);
    bondage::RotationSystem rot = bondage::parse_rotation_system(g, rin);

    auto rep = bondage::curvature_report(g, rot);
    std::cout << "faces: " << rep.faces << "\n";
    std::cout << "face degrees:";
    for (int d : rep.face_degrees) std::cout << " " << d;
    std::cout << "\nchi: " << rep.chi << "\n";
    for (const auto& [edge, w] : rep.per_edge)
        std::cout << "w(" << edge.first << "-" << edge.second << ") = " << w << "\n";
    std::cout << "sum: " << rep.sum << "\n";
    for (const auto& warning : rep.warnings) std::cout << "warning: " << warning << "\n";
    return 0;
}

int run_bound(int delta, std::optional<int> chi, std::optional<int> g, std::optional<int> h,
              std::optional<int> k) {
    bool printed = false;
    if (chi) {
        if (*chi > 2) throw CLI::ValidationError("--chi must be at most 2");
        std::cout << "h1 = " << bondage::h1_bound(delta, *chi) << "\n";
        printed = true;
        if (*chi <= 0) {
            std::cout << "h2 = " << bondage::h2_bound(delta, *chi) << "\n";
            std::cout << "sachs = " << bondage::sachs_bound(delta, *chi) << "\n";
            if (g) std::cout << "girth = " << bondage::girth_bound(delta, *chi, *g) << "\n";
        } else if (g) {
            throw CLI::ValidationError("--girth refinement needs chi <= 0");
        }
    } else if (g) {
        throw CLI::ValidationError("--girth needs --chi");
    }
    if (h || k) {
        std::cout << "gz = " << bondage::gz_bound(delta, h, k) << "\n";
        std::cout << "gz_improved = " << bondage::gz_improved_bound(delta, h, k) << "\n";
        printed = true;
    }
    if (!printed) throw CLI::ValidationError("nothing to compute: give --chi, --h, or --k");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bondage-number bound toolkit"};
    // the bound subcommand takes --h, so keep help on --help only
    app.set_help_flag("--help", "Print help");
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Print chi, r, floor(r) and the sqrt-form term");
    int chi_min = -21;
    table->add_option("--chi-min", chi_min, "Smallest chi (<= 0) to tabulate")->required();

    auto* verify = app.add_subcommand(
        "verify",
        "Run a bound-verification campaign over a graph6 catalog.\n"
        "CSV columns: id,graph6,n,m,max_deg,min_deg,girth,gamma,b,b_status,chi,chi_source,\n"
        "then value and pass/fail for each of hr,gz,ky,h1,h2,sachs,girth, then\n"
        "violation,findings,witness. JSON mirrors the same field names.");
    bondage::CampaignConfig cfg;
    std::optional<int> chi_override;
    std::string checks_arg;
    verify->add_option("--input", cfg.inputs, "graph6 input file(s)")->required();
    verify->add_option("--chi", chi_override, "Override chi instead of computing it");
    verify->add_option("--budget", cfg.bondage_budget, "Bondage search cardinality cap (default hr bound)");
    verify->add_option("--rot-budget", cfg.rotation_budget, "Rotation enumeration budget");
    verify->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--workers", cfg.workers, "Worker thread count");
    verify->add_option("--seed", cfg.seed, "Random seed (campaigns are deterministic per seed)");
    verify->add_option("--check", checks_arg,
                       "Comma-separated subset of hr,gz,ky,h1,h2,sachs,girth,conj (default all)");

    auto* curvature = app.add_subcommand("curvature", "Exact per-edge curvature on an embedding");
    std::string graph_path, rotation_path;
    curvature->add_option("--graph", graph_path, "graph6 file")->required();
    curvature->add_option("--rotation", rotation_path, "rotation-system file")->required();

    auto* bound = app.add_subcommand("bound", "Evaluate the closed-form bounds for given invariants");
    bound->set_help_flag("--help", "Print help");
    int delta = 0;
    std::optional<int> chi, girth_opt, h_opt, k_opt;
    bound->add_option("--delta", delta, "Maximum degree")->required();
    bound->add_option("--chi", chi, "Euler characteristic (<= 2)");
    bound->add_option("--girth", girth_opt, "Finite girth (>= 3)");
    bound->add_option("--h", h_opt, "Orientable genus");
    bound->add_option("--k", k_opt, "Non-orientable genus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            if (chi_min > 0) {
                std::cerr << "error: --chi-min must be <= 0\n";
                return 1;
            }
            return run_table(chi_min);
        }
        if (verify->parsed()) {
            cfg.chi_override = chi_override;
            if (!checks_arg.empty()) {
                std::stringstream ss(checks_arg);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.checks.insert(item);
            }
            return run_verify(cfg);
        }
        if (curvature->parsed()) return run_curvature(graph_path, rotation_path);
        if (bound->parsed()) return run_bound(delta, chi, girth_opt, h_opt, k_opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
