#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "bondage/bondage.hpp"
#include "bondage/bounds.hpp"
#include "bondage/domination.hpp"
#include "bondage/embedding.hpp"
#include "bondage/graph.hpp"

namespace bondage {

struct CampaignConfig {
    std::vector<std::string> inputs;
    std::optional<int> chi_override;
    int bondage_budget = 0;  // 0: default to hr_bound(G) per graph
    unsigned long long rotation_budget = 20'000'000ull;
    int workers = 1;
    std::string format = "csv";  // csv | json
    uint64_t seed = 0;
    std::set<std::string> checks;  // subset of {hr,gz,ky,h1,h2,sachs,girth,conj}; empty = all
};

struct BoundCheck {
    std::string name;
    int value = 0;
    bool pass = true;
};

struct BoundReport {
    int index = 0;
    std::string graph6;
    int n = 0, m = 0, max_deg = 0, min_deg = 0;
    std::optional<int> girth;      // nullopt: acyclic
    int gamma = 0;
    std::optional<int> b;          // nullopt: bondage budget exhausted
    EdgeList witness;
    std::optional<int> chi;        // orientable max over rotations, or supplied
    std::string chi_source;        // computed | supplied | unavailable
    std::vector<BoundCheck> checks;
    std::vector<std::string> findings;  // conjecture counterexample candidates
    bool violation = false;
};

struct CampaignSummary {
    int processed = 0;
    int violations = 0;
    int bondage_budget_exceeded = 0;
    int chi_unavailable = 0;
    int findings = 0;
};

namespace detail {

inline bool check_selected(const CampaignConfig& cfg, const std::string& name) {
    return cfg.checks.empty() || cfg.checks.count(name) > 0;
}

inline BoundReport analyze_graph(const CampaignConfig& cfg, int index, const std::string& g6) {
    BoundReport rep;
    rep.index = index;
    rep.graph6 = g6;
    Graph g = from_graph6(g6);
    rep.n = g.n();
    rep.m = g.m();
    if (g.n() > 0) {
        rep.max_deg = max_degree(g);
        rep.min_deg = min_degree(g);
    }
    rep.girth = girth(g);
    rep.gamma = domination_number(g).size();

    if (cfg.chi_override) {
        rep.chi = *cfg.chi_override;
        rep.chi_source = "supplied";
    } else if (g.m() > 0 && is_connected(g)) {
        try {
            rep.chi = max_euler_characteristic(g, cfg.rotation_budget, false);
            rep.chi_source = "computed";
        } catch (const budget_exceeded&) {
            rep.chi_source = "unavailable";
        }
    } else {
        // Euler-characteristic bounds are per-component statements; rows for
        // disconnected graphs only get chi when the caller supplies one.
        rep.chi_source = "unavailable";
    }

    if (g.m() == 0) return rep;  // no bondage number, nothing to check

    int budget = cfg.bondage_budget > 0 ? cfg.bondage_budget : hr_bound(g);
    if (auto res = bondage_number(g, budget)) {
        rep.b = res->b;
        rep.witness = res->witness;
    }

    if (!rep.b) return rep;
    int b = *rep.b;
    auto add_check = [&](const std::string& name, int value) {
        rep.checks.push_back({name, value, b <= value});
        if (b > value) rep.violation = true;
    };

    if (check_selected(cfg, "hr")) add_check("hr", hr_bound(g));
    if (rep.chi) {
        int chi = *rep.chi;
        if (chi >= 1) {
            if (check_selected(cfg, "gz")) {
                // chi = 2: sphere (h = 0); chi = 1: projective plane (k = 1)
                add_check("gz", chi == 2 ? gz_bound(rep.max_deg, 0, std::nullopt)
                                         : gz_bound(rep.max_deg, std::nullopt, 1));
            }
            if (chi == 2 && check_selected(cfg, "ky"))
                add_check("ky", std::min(rep.max_deg + 2, 8));
        } else {
            if (check_selected(cfg, "h1")) add_check("h1", h1_bound(rep.max_deg, chi));
            if (check_selected(cfg, "h2")) add_check("h2", h2_bound(rep.max_deg, chi));
            if (check_selected(cfg, "sachs")) add_check("sachs", sachs_bound(rep.max_deg, chi));
            if (check_selected(cfg, "girth") && rep.girth)
                add_check("girth", girth_bound(rep.max_deg, chi, *rep.girth));
        }
    }
    // Forests: b <= 2 regardless of the surface.
    if (!rep.girth && check_selected(cfg, "girth")) add_check("girth", 2);

    if (check_selected(cfg, "conj")) {
        if (2 * b > 3 * rep.max_deg)
            rep.findings.push_back("conjecture-1: b > 3/2 Delta");
        if (rep.chi && *rep.chi == 2 && b > rep.max_deg + 1)
            rep.findings.push_back("conjecture-2: planar with b > Delta+1");
    }
    return rep;
}

}  // namespace detail

struct CampaignResult {
    std::vector<BoundReport> rows;
    CampaignSummary summary;
};

inline CampaignResult run_campaign(const CampaignConfig& cfg, const std::vector<std::string>& g6_lines) {
    CampaignResult out;
    out.rows.resize(g6_lines.size());
    int workers = std::max(1, cfg.workers);
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= g6_lines.size()) return;
            out.rows[i] = detail::analyze_graph(cfg, static_cast<int>(i), g6_lines[i]);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& row : out.rows) {
        ++out.summary.processed;
        if (row.violation) ++out.summary.violations;
        if (row.m > 0 && !row.b) ++out.summary.bondage_budget_exceeded;
        if (row.chi_source == "unavailable") ++out.summary.chi_unavailable;
        out.summary.findings += static_cast<int>(row.findings.size());
    }
    return out;
}

inline CampaignResult run_campaign(const CampaignConfig& cfg) {
    std::vector<std::string> lines;
    for (const auto& path : cfg.inputs) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input: " + path);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
    }
    return run_campaign(cfg, lines);
}

// ---- report serialization (fixed column set, deterministic) ----

inline const std::vector<std::string>& report_check_names() {
    static const std::vector<std::string> names{"hr", "gz", "ky", "h1", "h2", "sachs", "girth"};
    return names;
}

namespace detail {

inline std::string witness_str(const EdgeList& w) {
    std::string s;
    for (auto [u, v] : w) {
        if (!s.empty()) s += ";";
        s += std::to_string(u) + "-" + std::to_string(v);
    }
    return s;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += sep;
        s += p;
    }
    return s;
}

}  // namespace detail

inline std::string campaign_csv(const CampaignResult& result) {
    std::ostringstream os;
    os << "id,graph6,n,m,max_deg,min_deg,girth,gamma,b,b_status,chi,chi_source";
    for (const auto& name : report_check_names()) os << "," << name << "," << name << "_ok";
    os << ",violation,findings,witness\n";
    for (const auto& r : result.rows) {
        os << r.index << "," << r.graph6 << "," << r.n << "," << r.m << "," << r.max_deg << ","
           << r.min_deg << ",";
        os << (r.girth ? std::to_string(*r.girth) : "inf") << "," << r.gamma << ",";
        os << (r.b ? std::to_string(*r.b) : "") << "," << (r.b ? "exact" : "budget-exceeded") << ",";
        os << (r.chi ? std::to_string(*r.chi) : "") << "," << r.chi_source;
        for (const auto& name : report_check_names()) {
            const BoundCheck* found = nullptr;
            for (const auto& c : r.checks)
                if (c.name == name) found = &c;
            if (found)
                os << "," << found->value << "," << (found->pass ? "pass" : "FAIL");
            else
                os << ",,";
        }
        os << "," << (r.violation ? "yes" : "no") << "," << detail::join(r.findings, ";") << ","
           << detail::witness_str(r.witness) << "\n";
    }
    const auto& s = result.summary;
    os << "# summary: processed=" << s.processed << " violations=" << s.violations
       << " bondage_budget_exceeded=" << s.bondage_budget_exceeded
       << " chi_unavailable=" << s.chi_unavailable << " findings=" << s.findings << "\n";
    return os.str();
}

inline std::string campaign_json(const CampaignResult& result) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        nlohmann::ordered_json row;
        row["id"] = r.index;
        row["graph6"] = r.graph6;
        row["n"] = r.n;
        row["m"] = r.m;
        row["max_deg"] = r.max_deg;
        row["min_deg"] = r.min_deg;
        if (r.girth)
            row["girth"] = *r.girth;
        else
            row["girth"] = "inf";
        row["gamma"] = r.gamma;
        if (r.b)
            row["b"] = *r.b;
        else
            row["b"] = nullptr;
        row["b_status"] = r.b ? "exact" : "budget-exceeded";
        if (r.chi)
            row["chi"] = *r.chi;
        else
            row["chi"] = nullptr;
        row["chi_source"] = r.chi_source;
        nlohmann::ordered_json checks = nlohmann::ordered_json::object();
        for (const auto& c : r.checks)
            checks[c.name] = {{"value", c.value}, {"pass", c.pass}};
        row["checks"] = checks;
        row["violation"] = r.violation;
        row["findings"] = r.findings;
        row["witness"] = detail::witness_str(r.witness);
        doc["rows"].push_back(row);
    }
    doc["summary"] = {{"processed", result.summary.processed},
                      {"violations", result.summary.violations},
                      {"bondage_budget_exceeded", result.summary.bondage_budget_exceeded},
                      {"chi_unavailable", result.summary.chi_unavailable},
                      {"findings", result.summary.findings}};
    return doc.dump(2) + "\n";
}

// ---- table command ----

struct TableRow {
    int chi;
    Real r;
    int floor_r;
    int h2_term;  // ceil(sqrt(12-6chi) - 1/2)
};

inline std::vector<TableRow> bound_table(int chi_min) {
    if (chi_min > 0) throw std::domain_error("table requires chi_min <= 0");
    std::vector<TableRow> rows;
    for (int chi = 0; chi >= chi_min; --chi)
        rows.push_back({chi, largest_root_r(chi).r, floor_root_r(chi), h2_bound(0, chi)});
    return rows;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "chi,r,floor_r,h2_term\n";
    os << std::fixed << std::setprecision(9);
    for (const auto& row : rows)
        os << row.chi << "," << static_cast<double>(row.r) << "," << row.floor_r << ","
           << row.h2_term << "\n";
    return os.str();
}

// ---- curvature command ----

struct CurvatureReport {
    int faces = 0;
    int chi = 0;
    std::vector<int> face_degrees;
    std::vector<std::pair<Edge, Rational>> per_edge;
    Rational sum;
    std::vector<std::string> warnings;  // side degree < 3 notices
};

inline CurvatureReport curvature_report(const Graph& g, const RotationSystem& r) {
    CurvatureReport rep;
    FaceSet fs = trace_faces(g, r);
    rep.faces = fs.face_count();
    rep.chi = g.n() - g.m() + fs.face_count();
    rep.face_degrees = fs.face_degree;
    auto edges = g.edges();
    for (int e = 0; e < g.m(); ++e) {
        Rational w = edge_curvature(g, r, fs, e);
        rep.per_edge.emplace_back(edges[static_cast<size_t>(e)], w);
        rep.sum += w;
        auto [mu, mv] = fs.side_degree[static_cast<size_t>(e)];
        if (mu < 3)
            rep.warnings.push_back("edge " + std::to_string(edges[static_cast<size_t>(e)].first) +
                                   "-" + std::to_string(edges[static_cast<size_t>(e)].second) +
                                   " has a face degree below 3 (m=" + std::to_string(mu) + ")");
    }
    return rep;
}

}  // namespace bondage
