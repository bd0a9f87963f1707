#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "brunnian/brunnian.hpp"
#include "brunnian/families.hpp"
#include "brunnian/io.hpp"
#include "brunnian/sprime.hpp"

using namespace bf;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

LinkPresentation load(const std::string& path) { return read_presentation(slurp(path)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_as(const LinkPresentation& p, const std::string& format) {
    if (format == "json") return emit(to_json(p));
    std::string text = format == "pd" ? emit_pd(p.diagram) : emit_gauss(p.diagram);
    std::cout << text << (text.ends_with("\n") ? "" : "\n");
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brunnian link families, diagram tools and s-primeness certificates"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string family, format = "json", disk, witness;
    int n = 0, m = 0, pcopies = 0, sign = 1, N = 8;
    std::vector<int> indices;
    SimplifyBudget budget;
    bool all_rules = false;

    auto add_input = [&](CLI::App* c) { c->add_option("input", input, "presentation JSON, PD or Gauss code; - for stdin"); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--r3-depth", budget.max_r3_depth, "depth of the R3 search")->check(CLI::NonNegativeNumber);
        c->add_option("--max-states", budget.max_states, "states explored by the R3 search")->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "generate a family presentation");
    gen->add_option("--family", family, "lamp, milnor, w, debrunner, brunnchain, torusgrid, tube, carpet, hopf")->required();
    gen->add_option("--n", n, "size parameter");
    gen->add_option("--m", m, "second parameter (torusgrid, tube, carpet)");
    gen->add_option("--p", pcopies, "number of copies (carpet)");
    gen->add_option("--indices", indices, "lamp indices")->delimiter(',');
    gen->add_option("--sign", sign, "hopf sign");
    gen->add_option("--format", format, "json, pd or gauss")->check(CLI::IsMember({"json", "pd", "gauss"}));

    auto* validate_cmd = app.add_subcommand("validate", "check a diagram or presentation");
    auto* lk = app.add_subcommand("lk", "linking matrix");
    auto* alt = app.add_subcommand("alternating", "is the diagram alternating");
    auto* simp = app.add_subcommand("simplify", "Reidemeister simplification with a move trace");
    auto* brun = app.add_subcommand("brunnian", "deletion witnesses and nontriviality evidence");
    auto* stable = app.add_subcommand("stable", "stable-disk certificate");
    auto* sn = app.add_subcommand("sn", "(sN) condition for one disk");
    auto* sprime = app.add_subcommand("sprime", "splitting-torus case analysis certificate");
    auto* untied = app.add_subcommand("untied", "untiedness hypotheses certificate");
    auto* exp = app.add_subcommand("export", "write the diagram as PD, Gauss or JSON");
    for (auto* c : {validate_cmd, lk, alt, simp, brun, stable, sn, sprime, untied, exp}) add_input(c);
    for (auto* c : {simp, brun, sprime}) add_budget(c);
    stable->add_option("--disk", disk, "disk id")->required();
    sn->add_option("--disk", disk, "disk id")->required();
    sn->add_option("--N", N, "threshold")->check(CLI::PositiveNumber);
    std::vector<int> side;
    sprime->add_option("--side", side, "analyse only the splitting with these components on one side")->delimiter(',');
    sprime->add_flag("--all-rules", all_rules, "record every rule that fires, not only the first");
    untied->add_option("--witness", witness, "statement that the complement of the complex is a handlebody");
    exp->add_option("--format", format, "pd, gauss or json")->check(CLI::IsMember({"json", "pd", "gauss"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*gen) {
            FamilySpec spec{lower(family), {}};
            const std::string& f = spec.family;
            if (f == "lamp") spec.params = indices;
            else if (f == "hopf") spec.params = {sign};
            else if (f == "torusgrid" || f == "tube") spec.params = {m, n};
            else if (f == "carpet") spec.params = {m, n, pcopies};
            else spec.params = {n};
            LinkPresentation p = generate(spec);
            write_as(p, format);
            return 0;
        }
        LinkPresentation p = load(input);
        if (*validate_cmd) {
            emit({{"valid", true}, {"components", p.n()}, {"crossings", p.diagram.num_crossings()}, {"digest", digest(p)}});
            return 0;
        }
        if (*lk) {
            emit({{"linking_matrix", linking_matrix(p.diagram)}});
            return 0;
        }
        if (*alt) {
            bool a = is_alternating(p.diagram);
            emit({{"alternating", a}});
            return 0;
        }
        if (*simp) {
            SimplifyResult r = simplify(p.diagram, budget);
            json tr = json::array();
            for (const Move& mv : r.trace) tr.push_back(to_json(mv));
            emit({{"crossings", r.diagram.num_crossings()}, {"pd", emit_pd(r.diagram)}, {"trace", tr}});
            return 0;
        }
        if (*brun) {
            BrunnianReport r = brunnian_report(p, budget);
            emit(to_json(r));
            return r.brunnian_witnessed ? 0 : 1;
        }
        if (*stable) {
            StabilityVerdict v = stable_disk_certificate(p, disk);
            emit(to_json(v));
            return v.status == StabilityStatus::Certified ? 0 : 1;
        }
        if (*sn) {
            SnResult r = sn_check(p, disk, N);
            json j = to_json(r);
            j["disk"] = disk;
            emit(j);
            return r.holds ? 0 : 1;
        }
        if (*sprime) {
            if (!side.empty()) {
                Bipartition h;
                for (int c = 0; c < p.n(); ++c) (std::count(side.begin(), side.end(), c) ? h.I : h.J).push_back(c);
                if (h.I.size() != std::set<int>(side.begin(), side.end()).size())
                    throw std::invalid_argument("--side names a component out of range");
                CaseAnalysis ca = analyze_selected(p, {h}, budget, {all_rules});
                emit(sprime_certificate(p, ca, budget));
                return ca.orbits.front().refuted ? 0 : 1;
            }
            CaseAnalysis ca = analyze_sprime(p, budget, {all_rules});
            emit(sprime_certificate(p, ca, budget));
            return ca.sprime_modulo_assumptions ? 0 : 1;
        }
        if (*untied) {
            std::optional<std::string> w;
            if (!witness.empty()) w = witness;
            UntiedReport r = untied_check(p, w);
            emit(untied_certificate(p, r));
            return r.untied_modulo_assumptions ? 0 : 1;
        }
        if (*exp) {
            write_as(p, format);
            return 0;
        }
    } catch (const std::exception& e) {
        // schema, parse, unknown disk ids and out-of-range parameters all count as input errors
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "error: " << msg << "\n";
        return 2;
    }
    return 0;
}
