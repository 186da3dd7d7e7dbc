#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qcox/pipeline.hpp"

using namespace qcox;

namespace {

std::size_t env_budget(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    return v ? (std::size_t)std::stoull(v) : fallback;
}

struct Args {
    std::string type;
    std::string cls;
    std::string format = "text";
    std::string flavor = "interval";
    bool count_only = false;
    std::uint64_t seed = 0;  // recorded for reproducibility; all phases are deterministic
};

const QuasiCoxeterClass& resolve_class(const CoxGroup& g,
                                       const std::vector<QuasiCoxeterClass>& cs,
                                       const std::string& name) {
    std::string type = g.roots().type_name();
    std::vector<std::string> tried = {name, type + "(" + name + ")"};
    if (name == "coxeter") tried.push_back(type);
    if (name.rfind("m=", 0) == 0)
        tried.push_back("Delta(" + name.substr(2) + "," + std::to_string(g.rank()) + ")");
    for (const auto& t : tried)
        for (const auto& c : cs)
            if (c.label == t) return c;
    std::string valid;
    for (const auto& c : cs) valid += (valid.empty() ? "" : ", ") + c.label;
    throw std::invalid_argument("unknown class '" + name + "' for type " + type +
                                "; valid: " + valid);
}

void emit(const Args& a, const nlohmann::json& j, const std::string& text) {
    if (a.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run(const Args& a, const std::string& cmd) {
    SurveyOptions sopt;
    sopt.interval_budget = env_budget("QCOX_BUDGET_INTERVAL", sopt.interval_budget);
    sopt.hurwitz_budget = env_budget("QCOX_BUDGET_HURWITZ", sopt.hurwitz_budget);
    VerifyOptions vopt;
    vopt.interval_budget = sopt.interval_budget;
    vopt.coset_budget = env_budget("QCOX_BUDGET_COSETS", vopt.coset_budget);
    vopt.budgets.search_nodes = env_budget("QCOX_BUDGET_SEARCH_NODES", vopt.budgets.search_nodes);
    vopt.budgets.search_tiers = env_budget("QCOX_BUDGET_SEARCH_TIERS", vopt.budgets.search_tiers);
    NonIsomOptions nopt;
    nopt.hom_budget = env_budget("QCOX_BUDGET_HOM", nopt.hom_budget);
    nopt.low_index = (int)env_budget("QCOX_BUDGET_LOW_INDEX", (std::size_t)nopt.low_index);
    nopt.interval_budget = sopt.interval_budget;

    if (cmd == "catalog") {
        nlohmann::json j;
        std::string text = "types: An (n>=2), Bn (n>=2), Dn (n>=4), E6, E7, E8, F4, H3, H4\n";
        j["types"] = {"An", "Bn", "Dn", "E6", "E7", "E8", "F4", "H3", "H4"};
        text += "diagram catalog:\n";
        for (const CatalogEntry& e : carter_catalog()) {
            j["diagrams"].push_back(e.label);
            text += "  " + e.label + "\n";
        }
        text += "class names: catalog labels above, the special triangle H3(a2), plus\n"
                "synthetic H3(a_i)/H4(a_i) labels ordered by element order; `--class a1`\n"
                "abbreviates `Type(a1)`, `--class m=2` abbreviates `Delta(2,n)`,\n"
                "`--class coxeter` names the Coxeter class\n";
        j["note"] = "H-type proper classes carry synthetic labels H3(a_i)/H4(a_i)";
        emit(a, j, text);
        return 0;
    }

    CoxGroup g = group_from_type(a.type);
    auto classes = quasi_coxeter_class_representatives(g);

    if (cmd == "classes") {
        nlohmann::json j = nlohmann::json::array();
        std::string text;
        for (const auto& c : classes) {
            j.push_back({{"label", c.label},
                         {"order", c.order},
                         {"diagram", classify_diagram(c.diagram)},
                         {"reflection_length", g.reflection_length(c.rep)}});
            text += c.label + "  order " + std::to_string(c.order) + "  diagram " +
                    classify_diagram(c.diagram) + "\n";
        }
        emit(a, j, text);
        return 0;
    }
    if (cmd == "survey") {
        SurveyReport r = survey(g, sopt);
        emit(a, survey_to_json(r), survey_to_text(r));
        return 0;
    }
    if (cmd == "verify-presentation") {
        PresentationMatrix m = verify_presentations(g, vopt);
        emit(a, presentation_matrix_to_json(m), presentation_matrix_to_text(m));
        for (const auto& c : m.cells)
            if (c.status == "failed") return 1;
        for (const auto& c : m.cells)
            if (c.status == "inconclusive" || c.status == "skipped") return 2;
        return 0;
    }
    if (cmd == "nonisom") {
        NonIsomorphismReport r = nonisomorphism_suite(g, resolve_class(g, classes, a.cls).label,
                                                      nopt);
        emit(a, nonisom_to_json(r), nonisom_to_text(r));
        return r.verdict == "separated" ? 0 : 2;
    }

    const QuasiCoxeterClass& cls = resolve_class(g, classes, a.cls);

    if (cmd == "interval") {
        IntervalPoset iv = build_interval(g, cls.rep, sopt.interval_budget);
        if (a.count_only) {
            std::cout << iv.elements.size() << "\n";
            return 0;
        }
        if (a.format == "dot") {
            std::cout << interval_to_dot(iv);
            return 0;
        }
        std::string text = cls.label + ": " + std::to_string(iv.elements.size()) +
                           " elements, top rank " + std::to_string(iv.top_rank()) + ", " +
                           std::to_string(iv.covers.size()) + " cover relations\n";
        emit(a, nlohmann::json::parse(interval_to_json(iv)), text);
        return 0;
    }
    if (cmd == "lattice") {
        IntervalPoset iv = build_interval(g, cls.rep, sopt.interval_budget);
        LatticeReport r = is_lattice(iv);
        nlohmann::json j{{"class", cls.label}, {"lattice", r.is_lattice}};
        std::string text = "lattice: " + std::string(r.is_lattice ? "true" : "false") + "\n";
        if (r.bowtie_witness) {
            j["bowtie_witness"] = std::vector<int>(r.bowtie_witness->begin(),
                                                   r.bowtie_witness->end());
            text += "bowtie witness (interval indices): ";
            for (int x : *r.bowtie_witness) text += std::to_string(x) + " ";
            text += "\n";
        }
        emit(a, j, text);
        return 0;
    }
    if (cmd == "diagram") {
        if (a.format == "dot") {
            std::cout << diagram_to_dot(cls.diagram);
            return 0;
        }
        nlohmann::json j{{"class", cls.label},
                         {"label", classify_diagram(cls.diagram)},
                         {"orders", cls.diagram.order},
                         {"roots", cls.diagram.roots}};
        std::string text = "diagram " + classify_diagram(cls.diagram) + "\n";
        for (auto [i, k] : cls.diagram.edges())
            text += "  " + std::to_string(i) + " -- " + std::to_string(k) + "  order " +
                    std::to_string(cls.diagram.order[(std::size_t)i][(std::size_t)k]) + "\n";
        emit(a, j, text);
        return 0;
    }
    if (cmd == "dual-presentation") {
        DualPresentation dp = dual_presentation(build_interval(g, cls.rep, sopt.interval_budget));
        if (a.count_only) {
            std::cout << dp.base.relators.size() << "\n";
            return 0;
        }
        nlohmann::json j = presentation_to_json(dp.base);
        std::string text = std::to_string(dp.base.num_generators()) + " generators, " +
                           std::to_string(dp.base.relators.size()) + " relators\n";
        emit(a, j, text);
        return 0;
    }
    if (cmd == "hurwitz") {
        HurwitzOrbits orb = hurwitz_orbits(g, cls.rep, sopt.hurwitz_budget);
        nlohmann::json j{{"class", cls.label},
                         {"transitive", orb.transitive},
                         {"orbit_sizes", orb.orbit_sizes}};
        std::string text = "orbits: " + std::to_string(orb.orbit_sizes.size()) + " (";
        for (std::size_t s : orb.orbit_sizes) text += std::to_string(s) + " ";
        text += ")\ntransitive: " + std::string(orb.transitive ? "true" : "false") + "\n";
        emit(a, j, text);
        return 0;
    }
    if (cmd == "rank-invariant") {
        NonIsomOptions ropt = nopt;
        ropt.rank_max_order = 1u << 30;  // the caller asked for the rank, compute it
        NonIsomorphismReport r = nonisomorphism_suite(g, cls.label, ropt);
        nlohmann::json j = nonisom_to_json(r);
        std::string text = nonisom_to_text(r);
        emit(a, j, text);
        return r.rank_interval ? 0 : 2;
    }
    throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval groups of quasi-Coxeter elements in finite Coxeter groups"};
    app.require_subcommand(1);
    Args a;

    std::vector<std::string> cmds = {"classes", "interval",       "lattice",
                                     "diagram", "dual-presentation", "verify-presentation",
                                     "hurwitz", "rank-invariant", "nonisom",
                                     "survey",  "catalog"};
    std::vector<CLI::App*> subs;
    for (const auto& c : cmds) {
        CLI::App* s = app.add_subcommand(c);
        s->add_option("--type", a.type, "Coxeter type label, e.g. D4, E6, H3");
        s->add_option("--class", a.cls, "class label (see `catalog`)");
        s->add_option("--format", a.format, "json, text or dot")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        s->add_option("--seed", a.seed, "seed recorded in reports (runs are deterministic)");
        s->add_flag("--count-only", a.count_only, "print only the headline count");
        subs.push_back(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return run(a, app.get_subcommands().front()->get_name());
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
