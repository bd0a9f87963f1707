#include "brunnian/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>

#include "brunnian/families.hpp"

namespace bf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw IoError("schema: " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where + " is not an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where + "." + key + " missing");
    return *it;
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + " is not an integer");
    return j.get<int>();
}

std::string as_str(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where + " is not a string");
    return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) bad(where + " is not a boolean");
    return j.get<bool>();
}

const json& as_array(const json& j, const std::string& where) {
    if (!j.is_array()) bad(where + " is not an array");
    return j;
}

std::vector<int> int_list(const json& j, const std::string& where) {
    std::vector<int> out;
    for (size_t i = 0; i < as_array(j, where).size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ComponentId key_component(const std::string& k, const std::string& where) {
    try {
        size_t pos = 0;
        int c = std::stoi(k, &pos);
        if (pos != k.size() || c < 0) throw std::invalid_argument(k);
        return c;
    } catch (const std::exception&) {
        bad(where + " key '" + k + "' is not a component index");
    }
}

json word_json(const Word& w) {
    json a = json::array();
    for (const Letter& l : w) a.push_back({l.gen, l.sign});
    return a;
}

Word word_from(const json& j, const std::string& where) {
    Word w;
    for (size_t i = 0; i < as_array(j, where).size(); ++i) {
        std::string at = where + "[" + std::to_string(i) + "]";
        const json& e = j[i];
        if (!e.is_array() || e.size() != 2) bad(at + " is not a [generator, sign] pair");
        int s = as_int(e[1], at + ".sign");
        if (s != 1 && s != -1) bad(at + ".sign must be 1 or -1");
        w.push_back({as_str(e[0], at + ".gen"), s});
    }
    return w;
}

json bip_json(const Bipartition& h) { return {{"I", h.I}, {"J", h.J}}; }

Bipartition bip_from(const json& j, const std::string& where) {
    Bipartition h{int_list(field(j, "I", where), where + ".I"), int_list(field(j, "J", where), where + ".J")};
    return h;
}

std::string sha256_hex(const std::string& s) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

// Digest of a certificate body: everything except the digest itself and any sidecar.
std::string body_digest(json cert) {
    cert.erase("digest");
    cert.erase("sidecar");
    return sha256_hex(cert.dump());
}

json assumptions_json(const std::vector<ManualAssumption>& v) {
    json a = json::array();
    for (const auto& m : v) a.push_back({{"ref", m.ref}, {"statement", m.statement}});
    return a;
}

}  // namespace

json to_json(const LinkDiagram& d) {
    json comps = json::array();
    for (const auto& c : d.components) {
        json a = json::array();
        for (const Passage& p : c) a.push_back({p.crossing, p.over ? "O" : "U"});
        comps.push_back(a);
    }
    json xs = json::array();
    for (const Crossing& x : d.crossings) xs.push_back({{"id", x.id}, {"sign", x.sign}});
    return {{"components", comps}, {"crossings", xs}};
}

LinkDiagram diagram_from_json(const json& j) {
    const json& comps = as_array(field(j, "components", "diagram"), "diagram.components");
    std::vector<std::vector<Passage>> cs;
    for (size_t i = 0; i < comps.size(); ++i) {
        std::string where = "diagram.components[" + std::to_string(i) + "]";
        std::vector<Passage> c;
        for (size_t k = 0; k < as_array(comps[i], where).size(); ++k) {
            const json& e = comps[i][k];
            std::string at = where + "[" + std::to_string(k) + "]";
            if (!e.is_array() || e.size() != 2) bad(at + " is not a [crossing, \"O\"|\"U\"] pair");
            std::string ou = as_str(e[1], at);
            if (ou != "O" && ou != "U") bad(at + " passage must be \"O\" or \"U\"");
            c.push_back({as_int(e[0], at), ou == "O"});
        }
        cs.push_back(std::move(c));
    }
    std::map<int, int> signs;
    const json& xs = as_array(field(j, "crossings", "diagram"), "diagram.crossings");
    for (size_t i = 0; i < xs.size(); ++i) {
        std::string at = "diagram.crossings[" + std::to_string(i) + "]";
        int id = as_int(field(xs[i], "id", at), at + ".id");
        int s = as_int(field(xs[i], "sign", at), at + ".sign");
        if (!signs.emplace(id, s).second) bad(at + " repeats crossing id " + std::to_string(id));
    }
    try {
        return LinkDiagram::from_passages(std::move(cs), signs);
    } catch (const DiagramException& e) {
        throw IoError(std::string("diagram: ") + e.what());
    }
}

json to_json(const LinkPresentation& p) {
    json disks = json::array();
    for (const Disk& d : p.registry.disks)
        disks.push_back({{"id", d.id}, {"boundary", d.boundary}, {"positive_side", d.positive_side}, {"system", d.system}});
    json pierce = json::object();
    for (const auto& [c, v] : p.registry.piercings) {
        json a = json::array();
        for (const Piercing& x : v) a.push_back({x.disk, x.sign});
        pierce[std::to_string(c)] = a;
    }
    json clasps = json::array();
    for (const ClaspPattern& c : p.registry.clasps) {
        json cl = json::array();
        for (const ClaspClause& k : c.clauses) cl.push_back({k.arc, k.partners});
        clasps.push_back({{"disk", c.disk}, {"component", c.component}, {"arcs", c.arcs}, {"clauses", cl}});
    }
    json words = json::object();
    for (const auto& [c, w] : p.designated_words) words[std::to_string(c)] = word_json(w);
    return {
        {"version", kFormatVersion},
        {"diagram", to_json(p.diagram)},
        {"registry", {{"disks", disks}, {"piercings", pierce}, {"disjoint", p.registry.disjoint}, {"clasps", clasps}}},
        {"words", words},
        {"symmetries", p.symmetries},
        {"meta",
         {{"family", p.meta.spec.family},
          {"params", p.meta.spec.params},
          {"count_formula", p.meta.count_formula},
          {"component_names", p.meta.component_names},
          {"regularity", p.meta.regularity},
          {"construction", p.meta.construction},
          {"word_system", p.word_system}}},
    };
}

LinkPresentation presentation_from_json(const json& j) {
    if (!j.is_object()) bad("document is not an object");
    if (!j.contains("version")) bad("version missing");
    if (as_int(j["version"], "version") != kFormatVersion) bad("unsupported version " + j["version"].dump());
    static const std::set<std::string> top = {"version", "diagram", "registry", "words", "symmetries", "meta"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!top.count(it.key())) bad("unknown field '" + it.key() + "'");

    LinkPresentation p;
    p.diagram = diagram_from_json(field(j, "diagram", "document"));

    const json& reg = field(j, "registry", "document");
    const json& disks = as_array(field(reg, "disks", "registry"), "registry.disks");
    for (size_t i = 0; i < disks.size(); ++i) {
        std::string at = "registry.disks[" + std::to_string(i) + "]";
        Disk d;
        d.id = as_str(field(disks[i], "id", at), at + ".id");
        d.boundary = as_int(field(disks[i], "boundary", at), at + ".boundary");
        d.positive_side = as_int(field(disks[i], "positive_side", at), at + ".positive_side");
        if (disks[i].contains("system")) d.system = as_str(disks[i]["system"], at + ".system");
        p.registry.disks.push_back(d);
    }
    const json& pierce = field(reg, "piercings", "registry");
    if (!pierce.is_object()) bad("registry.piercings is not an object");
    for (auto it = pierce.begin(); it != pierce.end(); ++it) {
        ComponentId c = key_component(it.key(), "registry.piercings");
        std::vector<Piercing> v;
        Word w = word_from(it.value(), "registry.piercings." + it.key());
        for (const Letter& l : w) v.push_back({l.gen, l.sign});
        p.registry.piercings[c] = v;
    }
    if (reg.contains("disjoint")) {
        const json& dj = reg["disjoint"];
        if (!dj.is_object()) bad("registry.disjoint is not an object");
        for (auto it = dj.begin(); it != dj.end(); ++it)
            p.registry.disjoint[it.key()] = as_bool(it.value(), "registry.disjoint." + it.key());
    }
    if (reg.contains("clasps")) {
        const json& cs = as_array(reg["clasps"], "registry.clasps");
        for (size_t i = 0; i < cs.size(); ++i) {
            std::string at = "registry.clasps[" + std::to_string(i) + "]";
            ClaspPattern c;
            c.disk = as_str(field(cs[i], "disk", at), at + ".disk");
            c.component = as_int(field(cs[i], "component", at), at + ".component");
            c.arcs = as_int(field(cs[i], "arcs", at), at + ".arcs");
            const json& cl = as_array(field(cs[i], "clauses", at), at + ".clauses");
            for (size_t k = 0; k < cl.size(); ++k) {
                std::string ak = at + ".clauses[" + std::to_string(k) + "]";
                if (!cl[k].is_array() || cl[k].size() != 2) bad(ak + " is not an [arc, partners] pair");
                c.clauses.push_back({as_int(cl[k][0], ak), int_list(cl[k][1], ak)});
            }
            p.registry.clasps.push_back(c);
        }
    }

    if (j.contains("words")) {
        const json& ws = j["words"];
        if (!ws.is_object()) bad("words is not an object");
        for (auto it = ws.begin(); it != ws.end(); ++it)
            p.designated_words[key_component(it.key(), "words")] = word_from(it.value(), "words." + it.key());
    }
    if (j.contains("symmetries")) {
        const json& ss = as_array(j["symmetries"], "symmetries");
        for (size_t i = 0; i < ss.size(); ++i) p.symmetries.push_back(int_list(ss[i], "symmetries[" + std::to_string(i) + "]"));
    }
    if (j.contains("meta")) {
        const json& m = j["meta"];
        if (!m.is_object()) bad("meta is not an object");
        if (m.contains("family")) p.meta.spec.family = as_str(m["family"], "meta.family");
        if (m.contains("params")) p.meta.spec.params = int_list(m["params"], "meta.params");
        if (m.contains("count_formula")) p.meta.count_formula = as_str(m["count_formula"], "meta.count_formula");
        if (m.contains("component_names")) {
            const json& names = as_array(m["component_names"], "meta.component_names");
            for (size_t i = 0; i < names.size(); ++i)
                p.meta.component_names.push_back(as_str(names[i], "meta.component_names[" + std::to_string(i) + "]"));
        }
        if (m.contains("regularity")) {
            if (!m["regularity"].is_object()) bad("meta.regularity is not an object");
            for (auto it = m["regularity"].begin(); it != m["regularity"].end(); ++it)
                p.meta.regularity[it.key()] = as_bool(it.value(), "meta.regularity." + it.key());
        }
        if (m.contains("construction")) p.meta.construction = as_str(m["construction"], "meta.construction");
        if (m.contains("word_system")) p.word_system = as_str(m["word_system"], "meta.word_system");
    }
    auto errs = validate_presentation(p);
    if (!errs.empty()) throw IoError("presentation: " + errs.front());
    return p;
}

LinkPresentation read_presentation(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw IoError("empty input");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw IoError(std::string("json: ") + e.what());
        }
        return presentation_from_json(j);
    }
    LinkPresentation p;
    try {
        p.diagram = text.find('[') != std::string::npos ? parse_pd(text) : parse_gauss(text);
    } catch (const DiagramException& e) {
        throw IoError(std::string("diagram: ") + e.what());
    }
    return p;
}

std::string certificate_digest(const json& cert) { return body_digest(cert); }

std::string digest(const LinkPresentation& p) { return sha256_hex(to_json(p).dump()); }

json to_json(const Move& m) { return {{"kind", to_string(m.kind)}, {"site", m.site}}; }

Move move_from_json(const json& j) {
    std::string k = as_str(field(j, "kind", "move"), "move.kind");
    Move m;
    if (k == "R1_remove") m.kind = MoveKind::R1_remove;
    else if (k == "R2_remove") m.kind = MoveKind::R2_remove;
    else if (k == "R3_slide") m.kind = MoveKind::R3_slide;
    else bad("unknown move kind '" + k + "'");
    m.site = int_list(field(j, "site", "move"), "move.site");
    return m;
}

json to_json(const Word& w) { return word_json(w); }

json to_json(const StabilityVerdict& v) {
    json cases = json::array();
    for (const auto& c : v.cases) {
        json sides = json::object();
        for (const auto& [g, s] : c.assignment.sides) sides[g] = to_string(s);
        cases.push_back({{"pierced", c.assignment.pierced},
                         {"pierced_positive_side", to_string(c.assignment.pierced_positive_side)},
                         {"sides", sides},
                         {"bound", c.bound}});
    }
    json j = {{"status", to_string(v.status)}, {"reason", to_string(v.reason)}, {"min_bound", v.min_bound},
              {"actual", v.actual}, {"cases", cases}};
    j["component"] = v.component ? json(*v.component) : json(nullptr);
    return j;
}

json to_json(const SnResult& r) {
    json j = {{"holds", r.holds}, {"total", r.total}, {"N", r.N}};
    j["verdict"] = r.holds ? "Holds" : "Unknown";
    j["via"] = r.via ? json(to_string(*r.via)) : json(nullptr);
    j["stability"] = r.stability ? to_json(*r.stability) : json(nullptr);
    j["clasp_bound"] = r.clasp_bound ? json(*r.clasp_bound) : json(nullptr);
    return j;
}

json to_json(const BrunnianReport& r) {
    json dels = json::array();
    for (const auto& d : r.deletions) {
        json tr = json::array();
        for (const Move& m : d.trace) tr.push_back(to_json(m));
        dels.push_back({{"deleted", d.deleted}, {"witnessed", d.witnessed}, {"trace", tr}});
    }
    const Nontriviality& n = r.nontriviality;
    json nt = {{"kind", to_string(n.kind)}};
    switch (n.kind) {
        case NontrivialityKind::NonzeroLinking: nt["i"] = n.i; nt["j"] = n.j; nt["lk"] = n.lk; break;
        case NontrivialityKind::NonemptyReducedWord:
            nt["component"] = n.component;
            nt["reduced"] = format_word(n.reduced);
            break;
        case NontrivialityKind::StablePositiveDisk:
            nt["disk"] = n.disk;
            nt["method"] = n.stable.method;
            nt["bound"] = n.stable.bound;
            nt["actual"] = n.stable.actual;
            break;
        case NontrivialityKind::Unknown: break;
    }
    return {{"verdict", r.brunnian_witnessed ? "BrunnianWitnessed" : "Unknown"}, {"deletions", dels}, {"nontriviality", nt}};
}

json to_json(const InteriorReport& r) {
    json disks = json::array();
    for (const auto& d : r.disks)
        disks.push_back({{"disk", d.disk}, {"role", to_string(d.role)}, {"role_ok", d.role_ok}, {"sn", to_json(d.sn)}});
    return {{"disks", disks}, {"disjoint_declared", r.disjoint_declared}, {"machine_checks_pass", r.machine_checks_pass},
            {"errors", r.errors}, {"obligations", assumptions_json(r.obligations)}};
}

json to_json(const Refutation& r) {
    json ev = nullptr;
    if (r.cross) {
        json per = json::object();
        for (const auto& [c, k] : r.cross->per_component) per[std::to_string(c)] = k;
        ev = {{"disk", r.cross->disk}, {"role", to_string(r.cross->role)}, {"total", r.cross->total},
              {"threshold", r.cross->threshold}, {"per_component", per}};
    } else if (r.discard) {
        json tr = json::array();
        for (const Move& m : r.discard->trace) tr.push_back(to_json(m));
        ev = {{"oriented", bip_json(r.discard->oriented)}, {"deleted", r.discard->deleted}, {"trace", tr},
              {"partition", r.discard->partition}, {"merged", r.discard->merged}, {"split_part", r.discard->split_part}};
    } else if (r.symmetry) {
        const auto& s = r.symmetry.value();
        ev = {{"perm", s.perm}, {"image", bip_json(s.image)}, {"I_I", s.ii}, {"I_J", s.ij}, {"J_I", s.ji}, {"J_J", s.jj}};
    }
    return {{"rule", to_string(r.rule)}, {"evidence", ev}, {"assumptions", assumptions_json(r.assumptions)}};
}

json sprime_certificate(const LinkPresentation& p, const CaseAnalysis& ca, const SimplifyBudget& b) {
    json orbits = json::array();
    std::vector<json> unresolved;
    for (const OrbitRecord& o : ca.orbits) {
        json rec = {{"I", o.h.I}, {"J", o.h.J}, {"status", o.refuted ? "Refuted" : "Unresolved"}};
        std::vector<std::string> app;
        for (Rule r : o.applicable) app.push_back(to_string(r));
        rec["applicable"] = app;
        if (o.refutation) rec["refutation"] = to_json(*o.refutation);
        if (!o.refuted) {
            rec["reason"] = o.reason;
            json labels = json::object();
            for (const auto& [d, ls] : o.case_labels) labels[d] = ls;
            rec["case_labels"] = labels;
            rec["interior"] = o.interior ? to_json(*o.interior) : json(nullptr);
            rec["obligations"] = assumptions_json(o.obligations);
            unresolved.push_back(bip_json(o.h));
        }
        orbits.push_back(rec);
    }
    json verdict = !ca.exhaustive ? json{{"kind", "Selected"}, {"unresolved", unresolved}}
                   : ca.sprime_modulo_assumptions
                       ? json{{"kind", "SPrimeModuloAssumptions"}, {"assumptions", assumptions_json(ca.assumptions)}}
                       : json{{"kind", "Incomplete"}, {"unresolved", unresolved}};
    json cert = {{"version", kFormatVersion},
                 {"kind", "sprime"},
                 {"presentation_digest", digest(p)},
                 {"scope", ca.exhaustive ? "all-orbits" : "selected"},
                 {"budget", {{"r3_depth", b.max_r3_depth}, {"max_states", b.max_states}}},
                 {"orbits", orbits},
                 {"assumptions", assumptions_json(ca.assumptions)},
                 {"verdict", verdict}};
    cert["digest"] = body_digest(cert);
    return cert;
}

json untied_certificate(const LinkPresentation& p, const UntiedReport& r) {
    json disks = json::array();
    for (const auto& d : r.disks) disks.push_back({{"disk", d.disk}, {"sn", to_json(d.sn)}});
    json cert = {{"version", kFormatVersion},
                 {"kind", "untied"},
                 {"presentation_digest", digest(p)},
                 {"threshold", r.threshold},
                 {"disks", disks},
                 {"regularity", r.regularity},
                 {"witness", r.witness ? json(*r.witness) : json(nullptr)},
                 {"assumptions", assumptions_json(r.assumptions)},
                 {"missing", r.missing},
                 {"verdict", {{"kind", r.untied_modulo_assumptions ? "UntiedModuloAssumptions" : "HypothesesIncomplete"}}}};
    cert["digest"] = body_digest(cert);
    return cert;
}

namespace {

struct Replayer {
    const LinkPresentation& p;
    ReplayResult& out;

    void fail(const std::string& s) {
        out.ok = false;
        out.problems.push_back(s);
    }

    static bool has(const std::vector<int>& v, int c) { return std::find(v.begin(), v.end(), c) != v.end(); }

    void cross(const json& ev, const Bipartition& h, const std::string& rule, const std::string& tag) {
        std::string id = ev.at("disk").get<std::string>();
        const Disk* d = p.registry.find(id);
        if (!d || d->system != kComplexSystem) return fail(tag + ": disk " + id + " is not a complex disk");
        std::string role = to_string(disk_role(p, id, h));
        int total = p.registry.total(id);
        int threshold = role == "ExteriorCross" ? 4 : role == "FreeCross" ? 6 : 0;
        if (role != ev.at("role").get<std::string>()) fail(tag + ": role of " + id + " is " + role);
        if (total != ev.at("total").get<int>()) fail(tag + ": total of " + id + " is " + std::to_string(total));
        if (threshold != ev.at("threshold").get<int>()) fail(tag + ": wrong threshold");
        if (!threshold || total >= threshold) fail(tag + ": bound does not fire");
        if (rule != (threshold == 4 ? "CrossBound4" : "CrossBound6")) fail(tag + ": rule name mismatch");
    }

    void discard(const json& ev, const Bipartition& h, const std::string& tag) {
        Bipartition o = bip_from(ev.at("oriented"), tag);
        if (!(o == h) && !(o == Bipartition{h.J, h.I})) return fail(tag + ": orientation is not the splitting");
        int x = ev.at("deleted").get<int>();
        if (!has(o.I, x)) return fail(tag + ": deleted component not on the oriented I side");
        // a deletable circle bounds no complex disk and meets none
        for (const Disk& d : p.registry.disks) {
            if (d.system != kComplexSystem) continue;
            auto pc = p.registry.piercing_components(d.id);
            if (d.boundary == x && !pc.empty()) return fail(tag + ": deleted component bounds a pierced disk");
            if (has(pc, x)) return fail(tag + ": deleted component pierces " + d.id);
        }
        bool cross_disk = false;
        for (const Disk& d : p.registry.disks)
            if (d.system == kComplexSystem && has(o.I, d.boundary)) {
                DiskRole r = disk_role(p, d.id, o);
                cross_disk = cross_disk || r == DiskRole::ExteriorCross || r == DiskRole::FreeCross;
            }
        if (!cross_disk) return fail(tag + ": no cross disk bounded on the oriented I side");
        std::vector<Move> trace;
        for (const json& m : ev.at("trace")) trace.push_back(move_from_json(m));
        LinkDiagram fin;
        try {
            fin = replay_trace(delete_component(p.diagram, x), trace);
        } catch (const std::exception& e) {
            return fail(tag + ": trace does not replay: " + e.what());
        }
        std::vector<std::vector<int>> parts;
        for (auto& part : split_families(fin)) {
            std::vector<int> q;
            for (int c : part) q.push_back(c < x ? c : c + 1);
            parts.push_back(q);
        }
        if (parts != ev.at("partition").get<std::vector<std::vector<int>>>()) fail(tag + ": partition differs");
        std::vector<int> parent(p.n());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
        for (auto& part : parts)
            for (int c : part) parent[find(c)] = find(part.front());
        for (const Disk& d : p.registry.disks)
            if (d.system == kComplexSystem)
                for (int c : p.registry.piercing_components(d.id))
                    if (c != x && d.boundary != x) parent[find(c)] = find(d.boundary);
        auto split = ev.at("split_part").get<std::vector<int>>();
        if (split.empty()) return fail(tag + ": empty split part");
        std::vector<int> cls;
        for (int c = 0; c < p.n(); ++c)
            if (c != x && find(c) == find(split.front())) cls.push_back(c);
        if (cls != split) fail(tag + ": split part is not a merged class");
        for (int c : split)
            if (!has(o.J, c)) fail(tag + ": split part leaves J");
    }

    void symmetry(const json& ev, const Bipartition& h, const std::vector<std::vector<int>>& group, const std::string& tag) {
        auto perm = ev.at("perm").get<std::vector<int>>();
        if (std::find(group.begin(), group.end(), perm) == group.end()) return fail(tag + ": permutation not a declared symmetry");
        SymmetryEvidence e = symmetry_quadruple(h, perm);
        if (!quadruple_incompatible(e)) fail(tag + ": quadruple has an empty intersection");
        if (e.ii != ev.at("I_I").get<std::vector<int>>() || e.ij != ev.at("I_J").get<std::vector<int>>() ||
            e.ji != ev.at("J_I").get<std::vector<int>>() || e.jj != ev.at("J_J").get<std::vector<int>>())
            fail(tag + ": quadruple differs");
    }

    // Every splitting must be the image of some listed orbit under the group.
    void coverage(const std::vector<Bipartition>& listed, const std::vector<std::vector<int>>& group) {
        auto norm = [&](std::vector<int> a) {
            std::sort(a.begin(), a.end());
            if (has(a, 0)) return a;
            std::vector<int> b;
            for (int c = 0; c < p.n(); ++c)
                if (!has(a, c)) b.push_back(c);
            return b;
        };
        std::set<std::vector<int>> seen;
        for (const auto& h : listed) seen.insert(norm(h.I));
        for (const auto& h : all_bipartitions(p.n())) {
            bool hit = false;
            for (const auto& g : group) {
                std::vector<int> img;
                for (int c : h.I) img.push_back(g[c]);
                if (seen.count(norm(img))) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                fail("orbit cover misses a splitting");
                return;
            }
        }
    }

    void sprime(const json& cert) {
        auto group = symmetry_group(p);
        std::vector<Bipartition> listed;
        bool all = true;
        for (size_t i = 0; i < cert.at("orbits").size(); ++i) {
            const json& o = cert["orbits"][i];
            std::string tag = "orbit " + std::to_string(i);
            Bipartition h{o.at("I").get<std::vector<int>>(), o.at("J").get<std::vector<int>>()};
            listed.push_back(h);
            std::string status = o.at("status").get<std::string>();
            if (status != "Refuted") {
                all = false;
                continue;
            }
            if (!o.contains("refutation")) {
                fail(tag + ": refuted without evidence");
                continue;
            }
            const json& r = o["refutation"];
            std::string rule = r.at("rule").get<std::string>();
            const json& ev = r.at("evidence");
            if (ev.is_null()) fail(tag + ": missing evidence");
            else if (rule == "CrossBound4" || rule == "CrossBound6") cross(ev, h, rule, tag);
            else if (rule == "ComponentDiscard") discard(ev, h, tag);
            else if (rule == "SymmetryUniqueness") symmetry(ev, h, group, tag);
            else fail(tag + ": unknown rule " + rule);
        }
        std::string kind = cert.at("verdict").at("kind").get<std::string>();
        if (cert.at("scope").get<std::string>() == "selected") {
            if (kind != "Selected") fail("a selected-scope certificate cannot carry an overall verdict");
            return;
        }
        coverage(listed, group);
        if ((kind == "SPrimeModuloAssumptions") != all) fail("verdict inconsistent with orbit statuses");
    }

    void untied(const json& cert) {
        std::optional<std::string> w;
        if (cert.contains("witness") && cert["witness"].is_string()) w = cert["witness"].get<std::string>();
        UntiedReport r = untied_check(p, w);
        if (r.threshold != cert.at("threshold").get<int>()) fail("threshold differs");
        const json& disks = cert.at("disks");
        if (disks.size() != r.disks.size()) return fail("disk list differs");
        for (size_t i = 0; i < disks.size(); ++i) {
            if (disks[i].at("disk").get<std::string>() != r.disks[i].disk) fail("disk order differs");
            if (disks[i].at("sn").at("holds").get<bool>() != r.disks[i].sn.holds)
                fail("sn verdict differs for " + r.disks[i].disk);
        }
        std::string kind = cert.at("verdict").at("kind").get<std::string>();
        if ((kind == "UntiedModuloAssumptions") != r.untied_modulo_assumptions) fail("verdict differs");
    }
};

}  // namespace

ReplayResult replay_certificate(const json& cert, const LinkPresentation& p) {
    ReplayResult out;
    Replayer r{p, out};
    try {
        if (cert.at("version").get<int>() != kFormatVersion) r.fail("unsupported version");
        if (cert.at("presentation_digest").get<std::string>() != digest(p)) r.fail("presentation digest mismatch");
        if (cert.at("digest").get<std::string>() != body_digest(cert)) r.fail("certificate digest mismatch");
        std::string kind = cert.at("kind").get<std::string>();
        if (kind == "sprime") r.sprime(cert);
        else if (kind == "untied") r.untied(cert);
        else r.fail("unknown certificate kind " + kind);
    } catch (const std::exception& e) {
        r.fail(std::string("malformed certificate: ") + e.what());
    }
    return out;
}

}  // namespace bf
