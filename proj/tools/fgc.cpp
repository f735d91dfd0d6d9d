#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fgc/generators.hpp"
#include "fgc/graph.hpp"
#include "fgc/growth.hpp"
#include "fgc/oracle.hpp"
#include "fgc/recurrence.hpp"
#include "fgc/structures.hpp"
#include "fgc/verify.hpp"

namespace {

using nlohmann::json;

fgc::Family parse_family(const std::string& s) {
    if (s == "apollonian") return fgc::Family::Apollonian;
    if (s == "hanoi") return fgc::Family::Hanoi;
    if (s == "ext-hanoi") return fgc::Family::ExtHanoi;
    throw fgc::InputError("unknown family: " + s);
}

const char* family_name(fgc::Family f) {
    switch (f) {
        case fgc::Family::Apollonian: return "apollonian";
        case fgc::Family::Hanoi: return "hanoi";
        default: return "ext-hanoi";
    }
}

fgc::VertexId role_vertex(const fgc::LabeledGraph& g, const std::string& role) {
    using fgc::RoleKind;
    if (role == "X" || role == "Y" || role == "Z")
        return g.find_role(RoleKind::Outmost, role[0]);
    if (role == "O") return g.find_role(RoleKind::Center);
    if (role == "a" || role == "b" || role == "c")
        return g.find_role(RoleKind::Extreme, role[0]);
    if (role == "s") return g.find_role(RoleKind::Special);
    throw fgc::InputError("unknown role: " + role);
}

// `X=cover,Y=vacate` / `X=include,Y=exclude`, split by problem kind below
std::vector<std::pair<std::string, std::string>> parse_constraints(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw fgc::InputError("constraint must look like role=action: " + item);
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

std::string fixed10(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(10) << x;
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Apollonian / Tower of Hanoi graph matching and domination toolkit"};
    app.require_subcommand(1);

    std::string family = "apollonian", method = "iterative", format = "text";
    std::string out_path, problem = "matching", constraints_text, what = "pm";
    int n = 1, max_m = 13, max_oracle_n = 3, class_k = 1;
    bool size_only = false, inject_fault = false;

    auto add_family = [&](CLI::App* c) {
        c->add_option("--family", family)->check(CLI::IsMember({"apollonian", "hanoi", "ext-hanoi"}));
        c->add_option("--n", n)->required();
    };

    auto* c_gen = app.add_subcommand("generate", "emit a graph as edge list or JSON");
    add_family(c_gen);
    c_gen->add_option("--method", method)->check(CLI::IsMember({"iterative", "selfsimilar"}));
    c_gen->add_option("--format", format)->check(CLI::IsMember({"edgelist", "json"}));
    c_gen->add_option("--out", out_path);

    auto* c_solve = app.add_subcommand("solve", "run the exact search on one instance");
    add_family(c_solve);
    c_solve->add_option("--problem", problem)
        ->check(CLI::IsMember({"matching", "domination", "perfect-count"}));
    c_solve->add_option("--constraints", constraints_text);
    c_solve->add_flag("--size-only", size_only);

    auto* c_recur = app.add_subcommand("recur", "evaluate the recursions at one level");
    add_family(c_recur);
    c_recur->add_option("--problem", problem)
        ->check(CLI::IsMember({"matching", "domination"}));

    auto* c_table = app.add_subcommand("table1", "sizes and counts for n = 1..5");
    c_table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* c_growth = app.add_subcommand("growth", "bounds on the matching growth constant");
    c_growth->add_option("--max-m", max_m)->check(CLI::Range(3, 14));
    c_growth->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* c_wit = app.add_subcommand("witness", "emit a constructed matching or dominating set");
    add_family(c_wit);
    c_wit->add_option("--what", what)
        ->check(CLI::IsMember({"pm", "pm-minus-extremes", "mds", "code-class"}));
    c_wit->add_option("--k", class_k)->check(CLI::Range(1, 4));

    auto* c_verify = app.add_subcommand("verify", "run the full cross-validation suite");
    c_verify->add_option("--max-oracle-n", max_oracle_n)->check(CLI::Range(1, 6));
    c_verify->add_flag("--inject-fault", inject_fault)->group(""); // test-only, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    fgc::FamilySpec spec;
    spec.family = parse_family(family);
    spec.n = n;
    spec.method = method == "iterative" ? fgc::GenMethod::Iterative : fgc::GenMethod::SelfSimilar;

    if (c_gen->parsed()) {
        fgc::LabeledGraph g = fgc::generate(spec);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw fgc::InputError("cannot open output file: " + out_path);
        }
        std::ostream& os = out_path.empty() ? std::cout : file;
        if (format == "json")
            os << fgc::to_json(g).dump(2) << "\n";
        else
            fgc::write_edgelist(g, os);
        return 0;
    }

    if (c_solve->parsed()) {
        fgc::LabeledGraph g = fgc::generate(spec);
        json j;
        j["family"] = family_name(spec.family);
        j["n"] = n;
        j["mode"] = problem;
        j["constraints"] = constraints_text;
        if (problem == "matching") {
            std::map<fgc::VertexId, fgc::MatchConstraint> cs;
            for (auto& [role, action] : parse_constraints(constraints_text)) {
                if (action == "cover")
                    cs[role_vertex(g, role)] = fgc::MatchConstraint::MustCover;
                else if (action == "vacate")
                    cs[role_vertex(g, role)] = fgc::MatchConstraint::MustVacate;
                else
                    throw fgc::InputError("matching constraint must be cover|vacate");
            }
            if (size_only) {
                auto sz = fgc::max_matching_size(g, cs);
                if (!sz) throw fgc::InputError("constraint class is empty");
                j["size"] = *sz;
                j["count"] = nullptr;
            } else {
                auto r = fgc::max_matching_search(g, cs);
                if (!r.max_size) throw fgc::InputError("constraint class is empty");
                j["size"] = *r.max_size;
                j["count"] = r.count_at_max.str();
            }
        } else if (problem == "domination") {
            std::map<fgc::VertexId, fgc::DomConstraint> cs;
            for (auto& [role, action] : parse_constraints(constraints_text)) {
                if (action == "include")
                    cs[role_vertex(g, role)] = fgc::DomConstraint::MustInclude;
                else if (action == "exclude")
                    cs[role_vertex(g, role)] = fgc::DomConstraint::MustExclude;
                else
                    throw fgc::InputError("domination constraint must be include|exclude");
            }
            auto r = fgc::min_domination_search(g, cs);
            if (!r.min_size) throw fgc::InputError("constraint class is empty");
            j["size"] = *r.min_size;
            j["count"] = r.count_at_min.str();
        } else {
            fgc::BigInt c = fgc::count_perfect_matchings(g);
            j["size"] = g.vertex_count() / 2;
            j["count"] = c.str();
        }
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (c_recur->parsed()) {
        json j;
        j["family"] = family_name(spec.family);
        j["n"] = n;
        j["mode"] = problem;
        if (spec.family == fgc::Family::Apollonian && problem == "matching") {
            auto p = fgc::matching_profile(n);
            j["beta"] = {p.beta[0].str(), p.beta[1].str(), p.beta[2].str(), p.beta[3].str()};
            j["matching_number"] = p.matching_number.str();
            j["counts"] = {p.varphi.str(), p.theta.str(), p.phi.str(), p.tau.str()};
        } else if (spec.family == fgc::Family::Apollonian) {
            auto p = fgc::domination_profile(n);
            j["gamma"] = {p.gamma[0].str(), p.gamma[1].str(), p.gamma[2].str(),
                          p.gamma[3].str()};
            j["domination_number"] = p.domination_number.str();
            j["counts"] = {p.w.str(), p.x.str(), p.y.str(), p.z.str()};
        } else if (spec.family == fgc::Family::ExtHanoi && problem == "domination") {
            auto r = fgc::ext_hanoi_domination_number(n);
            j["domination_number"] = r.domination_number.str();
            j["mds_count"] = r.mds_count;
        } else if (problem == "matching") {
            auto h = fgc::hanoi_matching_counts(n);
            j["varphi"] = h.varphi.str();
            j["phi"] = h.phi.str();
            j["beta0"] = h.beta0.str();
            j["perfect_matchings_ext"] = h.spm.str();
        } else {
            throw fgc::InputError("no recursion for this family/problem combination");
        }
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (c_table->parsed()) {
        std::array<std::array<std::string, 5>, 5> cells;
        static const char* kRow[] = {"V", "varphi", "theta", "phi", "tau"};
        for (int i = 1; i <= 5; ++i) {
            auto p = fgc::matching_profile(i);
            cells[0][i - 1] = std::to_string((fgc::detail::ipow3(i) + 5) / 2);
            cells[1][i - 1] = p.varphi.str();
            cells[2][i - 1] = p.theta.str();
            cells[3][i - 1] = p.phi.str();
            cells[4][i - 1] = p.tau.str();
        }
        if (format == "csv") {
            std::cout << "quantity,n=1,n=2,n=3,n=4,n=5\n";
            for (int r = 0; r < 5; ++r) {
                std::cout << kRow[r];
                for (auto& c : cells[r]) std::cout << "," << c;
                std::cout << "\n";
            }
        } else {
            std::array<std::size_t, 5> w{};
            for (auto& row : cells)
                for (int c = 0; c < 5; ++c) w[c] = std::max(w[c], row[c].size());
            for (int r = 0; r < 5; ++r) {
                std::cout << std::left << std::setw(8) << kRow[r] << std::right;
                for (int c = 0; c < 5; ++c)
                    std::cout << "  " << std::setw(static_cast<int>(w[c])) << cells[r][c];
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (c_growth->parsed()) {
        const char sep = format == "csv" ? ',' : ' ';
        if (format == "csv")
            std::cout << "m,lower,upper,gap\n";
        else
            std::cout << "m   lower         upper         gap\n";
        for (int m = 3; m <= max_m; ++m) {
            auto b = fgc::z_bounds(m);
            if (format == "csv")
                std::cout << m << sep << fixed10(b.lower) << sep << fixed10(b.upper) << sep
                          << fixed10(b.upper - b.lower) << "\n";
            else
                std::cout << std::left << std::setw(3) << m << " " << fixed10(b.lower) << "  "
                          << fixed10(b.upper) << "  " << fixed10(b.upper - b.lower) << "\n";
        }
        std::cout << (format == "csv" ? "z_estimate," : "z_estimate = ")
                  << fixed10(fgc::z_estimate_scaled(max_m)) << "\n";
        return 0;
    }

    if (c_wit->parsed()) {
        json j;
        j["family"] = family_name(spec.family);
        j["n"] = n;
        j["what"] = what;
        if (what == "pm") {
            if (spec.family != fgc::Family::ExtHanoi)
                throw fgc::InputError("pm witness exists for ext-hanoi only");
            auto g = fgc::gen_ext_hanoi(n);
            auto m = fgc::build_perfect_matching_ext_hanoi(n);
            if (!fgc::is_matching(g, m) ||
                2 * static_cast<long long>(m.size()) != g.vertex_count())
                throw fgc::InvariantError("constructed matching failed validation");
            auto edges = json::array();
            for (auto [a, b] : m) edges.push_back({a, b});
            j["edges"] = edges;
        } else if (what == "pm-minus-extremes") {
            if (spec.family != fgc::Family::Hanoi)
                throw fgc::InputError("pm-minus-extremes witness exists for hanoi only");
            auto m = fgc::build_pm_hanoi_minus_extremes(n);
            auto edges = json::array();
            for (auto [a, b] : m) edges.push_back({a, b});
            j["edges"] = edges;
        } else if (what == "mds") {
            if (spec.family == fgc::Family::Apollonian) {
                j["vertices"] = fgc::build_apollonian_mds(n);
            } else if (spec.family == fgc::Family::ExtHanoi) {
                auto g = fgc::gen_ext_hanoi(n);
                auto cls = fgc::build_code_class(n, class_k);
                if (!fgc::is_dominating_set(g, cls))
                    throw fgc::InvariantError("constructed class failed validation");
                j["k"] = class_k;
                j["vertices"] = cls;
            } else {
                throw fgc::InputError("mds witness exists for apollonian and ext-hanoi");
            }
        } else { // code-class
            if (spec.family != fgc::Family::ExtHanoi)
                throw fgc::InputError("code classes exist for ext-hanoi only");
            j["k"] = class_k;
            j["vertices"] = fgc::build_code_class(n, class_k);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }

    // verify
    auto results = fgc::run_verification(max_oracle_n, inject_fault);
    bool all = true;
    for (auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "all checks passed\n" : "verification FAILED\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fgc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fgc::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
