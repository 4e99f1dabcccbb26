#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ifcolor/coloring.hpp"
#include "ifcolor/discharging.hpp"
#include "ifcolor/generators.hpp"
#include "ifcolor/io.hpp"
#include "ifcolor/reducibility.hpp"
#include "ifcolor/structures.hpp"
#include "ifcolor/suite.hpp"

using namespace ifcolor;
using nlohmann::json;

namespace {

const std::vector<std::string> kReducibleIds = {"L2",   "L4:7", "L4:8", "L4:9", "L5:3",
                                                "L5:4", "L5:5", "L6:7", "L6:8", "L6:9"};

struct Global {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool quiet = false;
    bool data() const { return format == "data"; }
};

PlaneGraph input_graph(const std::string& path) {
    if (path != "-") return load_graph(path);
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_graph(ss.str());
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw GraphError(Errc::PARSE_ERROR, "bad vertex id '" + tok + "'");
        }
    }
    if (out.empty()) throw GraphError(Errc::PARSE_ERROR, "empty vertex list");
    return out;
}

std::string join(const std::vector<int>& vs, char sep = '-') {
    std::string s;
    for (int v : vs) s += (s.empty() ? std::string() : std::string(1, sep)) + std::to_string(v);
    return s;
}

json coloring_json(const Coloring& phi) {
    json a = json::array();
    for (char c : phi.col) a.push_back(c ? json(std::string(1, c)) : json(nullptr));
    return a;
}

void print_coloring(const Coloring& phi) {
    for (size_t v = 0; v < phi.col.size(); ++v)
        if (phi.col[v]) std::cout << v << ' ' << phi.col[v] << '\n';
}

json ds_json(int d) { return d == kInfDist ? json("INF") : json(d); }

// ---- subcommand bodies ------------------------------------------------------

int cmd_check_class(const Global& g, const std::string& path) {
    PlaneGraph G = input_graph(path);
    InClassResult r = in_class(G);
    std::string ds = r.d_star == kInfDist ? "INF" : std::to_string(r.d_star);
    if (g.data()) {
        json j{{"ok", r.ok}, {"d_star", ds_json(r.d_star)}};
        if (r.witness) j["witness"] = {r.witness->first.verts, r.witness->second.verts};
        std::cout << j.dump() << '\n';
    } else if (r.ok) {
        std::cout << "in-class d*=" << ds << '\n';
    } else {
        std::cout << "out-of-class d*=" << ds << " witness=" << join(r.witness->first.verts)
                  << '|' << join(r.witness->second.verts) << '\n';
    }
    return r.ok ? 0 : 1;
}

json cycle_report_json(const StructureReport& rep, const std::vector<int>& C) {
    json j{{"cycle", C}, {"length", rep.length}, {"class", cycle_class_name(rep.cls)}};
    j["chords"] = json::array();
    for (const auto& c : rep.chords)
        j["chords"].push_back({{"edge", {c.edge.first, c.edge.second}},
                               {"splits", {c.splits.first, c.splits.second}}});
    j["claws"] = json::array();
    for (const auto& c : rep.claws)
        j["claws"].push_back({{"center", c.center},
                              {"attach", c.attach},
                              {"parts", c.parts},
                              {"inside", c.inside}});
    j["triclaws"] = json::array();
    for (const auto& t : rep.triclaws)
        j["triclaws"].push_back({{"triangle", t.triangle},
                                 {"attach", t.attach},
                                 {"parts", t.parts},
                                 {"inside", t.inside}});
    if (rep.bad_vertices) j["bad_vertices"] = {rep.bad_vertices->first, rep.bad_vertices->second};
    return j;
}

void print_cycle_report(const StructureReport& rep, const std::vector<int>& C) {
    std::cout << "cycle " << join(C) << " length " << rep.length << " class "
              << cycle_class_name(rep.cls) << '\n';
    for (const auto& c : rep.chords)
        std::cout << "chord " << c.edge.first << '-' << c.edge.second << " splits "
                  << c.splits.first << '/' << c.splits.second << '\n';
    for (const auto& c : rep.claws)
        std::cout << "claw center " << c.center << " attach " << c.attach[0] << ','
                  << c.attach[1] << ',' << c.attach[2] << " parts " << c.parts[0] << ','
                  << c.parts[1] << ',' << c.parts[2] << (c.inside ? " inside" : " outside")
                  << '\n';
    for (const auto& t : rep.triclaws)
        std::cout << "triclaw triangle " << t.triangle[0] << '-' << t.triangle[1] << '-'
                  << t.triangle[2] << " attach " << t.attach[0] << ',' << t.attach[1] << ','
                  << t.attach[2] << " parts " << t.parts[0] << ',' << t.parts[1] << ','
                  << t.parts[2] << (t.inside ? " inside" : " outside") << '\n';
    if (rep.bad_vertices)
        std::cout << "bad-vertices " << rep.bad_vertices->first << ' '
                  << rep.bad_vertices->second << '\n';
}

int cmd_detect(const Global& g, const std::string& path, const std::string& cycle_arg,
               bool all9, bool faces) {
    PlaneGraph G = input_graph(path);
    json j;
    if (!cycle_arg.empty()) {
        std::vector<int> C = parse_vertex_list(cycle_arg);
        StructureReport rep = analyze_cycle(G, C);
        if (g.data()) j["cycle_report"] = cycle_report_json(rep, C);
        else print_cycle_report(rep, C);
    }
    if (all9) {
        json arr = json::array();
        int count = 0;
        for (const Cycle& c : enumerate_short_cycles(G, 9)) {
            if (c.length() != 9) continue;
            StructureReport rep = analyze_cycle(G, c.verts);
            ++count;
            if (g.data())
                arr.push_back({{"cycle", c.verts}, {"class", cycle_class_name(rep.cls)}});
            else
                std::cout << "9-cycle " << join(c.verts) << " class "
                          << cycle_class_name(rep.cls) << '\n';
        }
        if (g.data()) j["nine_cycles"] = arr;
        else std::cout << "9-cycles " << count << '\n';
    }
    if (faces) {
        FaceRoles roles = classify_faces(G);
        json arr = json::array();
        for (int f = 0; f < G.face_count(); ++f) {
            const FaceWalk& fw = G.face(f);
            if (g.data()) {
                arr.push_back({{"id", f},
                               {"degree", fw.degree()},
                               {"walk", fw.walk},
                               {"outer", f == G.outer_face()},
                               {"internal", (bool)roles.internal_face[f]},
                               {"in_F1", (bool)roles.in_F1[f]},
                               {"special3", (bool)roles.special3[f]},
                               {"special6", (bool)roles.special6[f]},
                               {"bad", (bool)roles.bad[f]},
                               {"pendent", roles.pendent_vertices[f]}});
                continue;
            }
            std::cout << "face f" << f << " deg " << fw.degree() << " walk " << join(fw.walk);
            if (f == G.outer_face()) std::cout << " outer";
            if (roles.internal_face[f]) std::cout << " internal";
            if (roles.in_F1[f]) std::cout << " in-F1";
            if (roles.special3[f]) std::cout << " special3";
            if (roles.special6[f]) std::cout << " special6";
            if (roles.bad[f]) std::cout << " bad";
            std::cout << '\n';
        }
        for (auto [roof, base] : roles.roof_base) {
            if (g.data()) j["roofs"].push_back({{"roof", roof}, {"base", base}});
            else std::cout << "roof " << roof << " base f" << base << '\n';
        }
        if (g.data()) j["faces"] = arr;
    }
    if (cycle_arg.empty() && !all9 && !faces) {
        InClassResult r = in_class(G);
        if (g.data()) {
            j["summary"] = {{"n", G.n()},
                            {"m", G.m()},
                            {"faces", G.face_count()},
                            {"outer", G.outer_face()},
                            {"d_star", ds_json(r.d_star)},
                            {"in_class", r.ok}};
        } else {
            std::cout << "n=" << G.n() << " m=" << G.m() << " faces=" << G.face_count()
                      << " outer=f" << G.outer_face() << " d*="
                      << (r.d_star == kInfDist ? "INF" : std::to_string(r.d_star))
                      << (r.ok ? " in-class" : " out-of-class") << '\n';
        }
    }
    if (g.data()) std::cout << j.dump() << '\n';
    return 0;
}

int cmd_color(const Global& g, const std::string& path) {
    PlaneGraph G = input_graph(path);
    std::optional<Coloring> sol = solve_if(G);
    if (g.data()) {
        json j{{"status", sol ? "colored" : "none"}};
        if (sol) j["coloring"] = coloring_json(*sol);
        std::cout << j.dump() << '\n';
    } else if (!sol) {
        std::cout << "NONE\n";
    } else if (g.quiet) {
        std::cout << "colored\n";
    } else {
        print_coloring(*sol);
    }
    return sol ? 0 : 1;
}

int cmd_extend(const Global& g, const std::string& path, const std::string& cycle_arg,
               const std::string& precolor_arg) {
    PlaneGraph G = input_graph(path);
    std::vector<int> C = parse_vertex_list(cycle_arg);
    Coloring phi0(G.n());
    std::istringstream in(precolor_arg);
    for (std::string tok; std::getline(in, tok, ',');) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || (tok.substr(eq + 1) != "I" && tok.substr(eq + 1) != "F"))
            throw GraphError(Errc::PARSE_ERROR, "expected v=I or v=F, got '" + tok + "'");
        int v;
        try {
            v = std::stoi(tok.substr(0, eq));
        } catch (const std::exception&) {
            throw GraphError(Errc::PARSE_ERROR, "bad vertex id in '" + tok + "'");
        }
        if (v < 0 || v >= G.n())
            throw GraphError(Errc::PARSE_ERROR, "vertex " + std::to_string(v) + " out of range");
        phi0.col[v] = tok[eq + 1];
    }
    ExtendResult ext = extend_super(G, C, phi0);
    if (g.data()) {
        json j{{"status", ext.coloring ? "colored" : "none"},
               {"c0_has_chords", ext.c0_has_chords}};
        if (ext.coloring) j["coloring"] = coloring_json(*ext.coloring);
        std::cout << j.dump() << '\n';
        return ext.coloring ? 0 : 1;
    }
    if (ext.c0_has_chords) std::cout << "note: cycle has chords\n";
    if (!ext.coloring) {
        std::cout << "NONE\n";
        return 1;
    }
    if (g.quiet) std::cout << "colored\n";
    else print_coloring(*ext.coloring);
    return 0;
}

int cmd_verify(const Global& g, const std::string& path, const std::string& col_path,
               bool super, const std::string& cycle_arg) {
    PlaneGraph G = input_graph(path);
    Coloring phi(G.n());
    for (auto [v, c] : parse_coloring_lines(read_file(col_path))) {
        if (v < 0 || v >= G.n())
            throw GraphError(Errc::PARSE_ERROR, "vertex " + std::to_string(v) + " out of range");
        phi.col[v] = c;
    }
    std::vector<Violation> bad;
    if (super) bad = verify_super(G, parse_vertex_list(cycle_arg), phi);
    else bad = verify_if(G, phi);
    if (g.data()) {
        json arr = json::array();
        for (const auto& v : bad)
            arr.push_back({{"kind", violation_name(v.kind)}, {"witness", v.witness}});
        std::cout << json{{"ok", bad.empty()}, {"violations", arr}}.dump() << '\n';
    } else if (bad.empty()) {
        std::cout << "ok\n";
    } else {
        for (const auto& v : bad)
            std::cout << "violation " << violation_name(v.kind) << ' ' << join(v.witness)
                      << '\n';
    }
    return bad.empty() ? 0 : 1;
}

int cmd_discharge(const Global& g, const std::string& path, const std::string& cycle_arg,
                  bool log) {
    PlaneGraph G = input_graph(path);
    ChargeLedger led = apply_rules(G);
    AuditReport rep = audit(G);
    std::vector<int> C0 = cycle_arg.empty() ? G.outer_walk().walk : parse_vertex_list(cycle_arg);
    json j;
    if (!g.data()) {
        for (const auto& [e, q] : led.final_charges())
            if (!g.quiet || !(q == Rational(0)))
                std::cout << "charge " << elem_name(e) << ' ' << q.str() << '\n';
        if (log)
            for (const Transfer& t : led.transfers)
                std::cout << "transfer " << t.rule << ' ' << elem_name(t.from) << " -> "
                          << elem_name(t.to) << ' ' << t.amount.str() << '\n';
    } else {
        json fin = json::object(), init = json::object();
        for (const auto& [e, q] : led.final_charges()) fin[elem_name(e)] = q.str();
        for (const auto& [e, q] : led.initial) init[elem_name(e)] = q.str();
        j["initial"] = init;
        j["final"] = fin;
        if (log) {
            json arr = json::array();
            for (const Transfer& t : led.transfers)
                arr.push_back({{"rule", t.rule},
                               {"from", elem_name(t.from)},
                               {"to", elem_name(t.to)},
                               {"amount", t.amount.str()}});
            j["transfers"] = arr;
        }
    }
    try {
        OuterAccounting acc = outer_accounting(G, C0);
        if (g.data()) {
            j["accounting"] = {{"d_D", acc.d_D},         {"tau3", acc.tau3},
                               {"tau6", acc.tau6},       {"e_prime", acc.e_prime},
                               {"p", acc.p.str()},       {"mu_star_D", acc.mu_star_D.str()},
                               {"rhs", acc.rhs.str()},   {"identity", acc.identity},
                               {"ineq2", acc.ineq2},     {"ineq3", acc.ineq3},
                               {"ineq5", acc.ineq5},
                               {"r4_distinction_matters", acc.r4_distinction_matters}};
        } else {
            std::cout << "accounting d(D)=" << acc.d_D << " tau3=" << acc.tau3
                      << " tau6=" << acc.tau6 << " e'=" << acc.e_prime << " p=" << acc.p.str()
                      << " mu*(D)=" << acc.mu_star_D.str() << " rhs=" << acc.rhs.str()
                      << " identity=" << (acc.identity ? "yes" : "no")
                      << " ineq2=" << (acc.ineq2 ? "yes" : "no")
                      << " ineq3=" << (acc.ineq3 ? "yes" : "no")
                      << " ineq5=" << (acc.ineq5 ? "yes" : "no") << '\n';
        }
    } catch (const GraphError& e) {
        if (!cycle_arg.empty()) throw; // an explicit cycle must be usable
        if (g.data()) j["accounting"] = nullptr;
        else std::cout << "accounting skipped: " << e.what() << '\n';
    }
    if (g.data()) {
        json negs = json::array();
        for (const AuditEntry& ent : rep.negatives) {
            json ex = json::array();
            for (const ConfigMatch& m : ent.explains) ex.push_back({{"id", m.id}, {"verts", m.verts}});
            negs.push_back({{"element", elem_name(ent.element)},
                            {"charge", ent.final_charge.str()},
                            {"explains", ex}});
        }
        j["audit"] = {{"negatives", negs}, {"all_explained", rep.all_explained}};
        std::cout << j.dump() << '\n';
    } else {
        for (const AuditEntry& ent : rep.negatives) {
            std::cout << "negative " << elem_name(ent.element) << ' ' << ent.final_charge.str();
            if (ent.explains.empty()) {
                std::cout << " UNEXPLAINED";
            } else {
                for (const ConfigMatch& m : ent.explains)
                    std::cout << ' ' << m.id << '{' << join(m.verts, ',') << '}';
            }
            std::cout << '\n';
        }
        std::cout << "audit negatives=" << rep.negatives.size() << " all-explained="
                  << (rep.all_explained ? "yes" : "no") << '\n';
    }
    return 0;
}

std::string boundary_state_str(const Gadget& gad, const std::vector<BoundaryState>& states) {
    std::string s;
    for (size_t i = 0; i < states.size(); ++i) {
        if (i) s += ' ';
        s += "v" + std::to_string(gad.boundary[i]) + "=" + states[i].color +
             (states[i].outside_I ? "*" : "");
    }
    return s;
}

int cmd_reduce_check(const Global& g, std::string lemma, const std::string& par, bool all) {
    std::vector<std::string> ids;
    if (all || lemma.empty()) {
        ids = kReducibleIds;
    } else {
        if (!par.empty()) {
            auto eq = par.find('=');
            lemma += ":" + (eq == std::string::npos ? par : par.substr(eq + 1));
        }
        if (lemma == "L4" || lemma == "L5" || lemma == "L6") {
            for (const std::string& id : kReducibleIds)
                if (id.substr(0, 2) == lemma) ids.push_back(id);
        } else {
            ids.push_back(lemma);
        }
    }
    int rc = 0;
    json arr = json::array();
    for (const std::string& id : ids) {
        Gadget gad = build_gadget(id);
        ReduceResult r = verify_reducible(gad);
        if (!r.ok) rc = 1;
        if (g.data()) {
            json j{{"id", id},
                   {"ok", r.ok},
                   {"patterns_valid", r.patterns_valid},
                   {"patterns_total", r.patterns_total}};
            if (r.counterexample) {
                json st = json::array();
                for (size_t i = 0; i < r.counterexample->size(); ++i)
                    st.push_back({{"vertex", gad.boundary[i]},
                                  {"color", std::string(1, (*r.counterexample)[i].color)},
                                  {"outside_I", (*r.counterexample)[i].outside_I}});
                j["counterexample"] = st;
            }
            arr.push_back(j);
            continue;
        }
        std::cout << id << (r.ok ? " ok" : " FAIL") << " patterns=" << r.patterns_valid << '/'
                  << r.patterns_total << '\n';
        if (!r.ok && r.counterexample && !g.quiet)
            std::cout << "  counterexample " << boundary_state_str(gad, *r.counterexample)
                      << '\n';
    }
    if (g.data()) std::cout << arr.dump() << '\n';
    return rc;
}

int cmd_find_configs(const Global& g, const std::string& path) {
    PlaneGraph G = input_graph(path);
    std::vector<ConfigMatch> ms = find_configs(G);
    if (g.data()) {
        json arr = json::array();
        for (const ConfigMatch& m : ms) {
            json inj = json::object();
            for (const auto& [name, v] : m.injection) inj[name] = v;
            arr.push_back({{"id", m.id}, {"verts", m.verts}, {"injection", inj}});
        }
        std::cout << arr.dump() << '\n';
    } else if (ms.empty()) {
        std::cout << "none\n";
    } else {
        for (const ConfigMatch& m : ms) std::cout << m.id << " verts=" << join(m.verts, ',') << '\n';
    }
    return 0;
}

int cmd_gen(const Global& g, const std::string& kind, int rows, int cols, int n,
            std::uint64_t seed, const std::string& id, const std::string& out_path) {
    PlaneGraph G = [&] {
        if (kind == "hex_patch") return gen_hex_patch(rows, cols);
        if (kind == "random_inclass") return gen_random_inclass(n, seed);
        if (kind == "random_plane") return gen_random_plane(n, seed);
        return gen_gadget(id);
    }();
    std::string text = g.data() ? serialize_graph_json(G) + "\n" : serialize_graph(G);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw GraphError(Errc::PARSE_ERROR, "cannot write " + out_path);
        out << text;
    }
    return 0;
}

int cmd_suite(const Global& g, const std::string& path, bool no_timings) {
    SuiteReport rep = run_suite_file(path);
    if (g.data()) {
        json arr = json::array();
        for (const SuiteInstance& ins : rep.instances) {
            json checks = json::array();
            for (const SuiteCheck& c : ins.checks)
                checks.push_back({{"kind", c.kind},
                                  {"pass", c.pass},
                                  {"seconds", c.seconds},
                                  {"note", c.note}});
            arr.push_back({{"name", ins.name}, {"describe", ins.describe}, {"checks", checks}});
        }
        std::cout << json{{"schema", "ifcolor-suite 1"},
                          {"instances", arr},
                          {"failed", rep.checks_failed()}}
                         .dump()
                  << '\n';
    } else if (g.quiet) {
        std::string text = rep.to_text(!no_timings);
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            if (line.rfind("summary", 0) == 0 || line.find(" fail ") != std::string::npos)
                std::cout << line << '\n';
    } else {
        std::cout << rep.to_text(!no_timings);
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar independent-set/forest partition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "data"}));
    app.add_option("--seed", g.seed, "default seed for generators");
    app.add_flag("--quiet,-q", g.quiet, "terse output");

    int rc = 0;
    std::string path, cycle_arg, precolor_arg, col_path, lemma, par, id, out_path, kind;
    bool all9 = false, faces = false, super = false, log = false, all = false,
         no_timings = false;
    int rows = 1, cols = 1, n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* cc = app.add_subcommand("check-class", "pairwise distance of short cycles");
    cc->add_option("graph", path, "graph file, - for stdin")->required();
    cc->callback([&] { rc = cmd_check_class(g, path); });

    auto* det = app.add_subcommand("detect", "cycle and face structure reports");
    det->add_option("graph", path)->required();
    det->add_option("--cycle", cycle_arg, "analyze one cycle, comma-separated vertices");
    det->add_flag("--all-9", all9, "classify all 9-cycles");
    det->add_flag("--faces", faces, "face role table");
    det->callback([&] { rc = cmd_detect(g, path, cycle_arg, all9, faces); });

    auto* col = app.add_subcommand("color", "search for a full partition");
    col->add_option("graph", path)->required();
    col->callback([&] { rc = cmd_color(g, path); });

    auto* ext = app.add_subcommand("extend", "extend a precolored cycle");
    ext->add_option("graph", path)->required();
    ext->add_option("--cycle", cycle_arg)->required();
    ext->add_option("--precolor", precolor_arg, "v=I,v=F,... on the cycle")->required();
    ext->callback([&] { rc = cmd_extend(g, path, cycle_arg, precolor_arg); });

    auto* ver = app.add_subcommand("verify", "check a coloring file");
    ver->add_option("graph", path)->required();
    ver->add_option("coloring", col_path, "lines 'v I' / 'v F'")->required();
    auto* sup = ver->add_flag("--super", super, "also reject splitting F-paths of --cycle");
    ver->add_option("--cycle", cycle_arg)->needs(sup);
    sup->needs(ver->get_option("--cycle"));
    ver->callback([&] { rc = cmd_verify(g, path, col_path, super, cycle_arg); });

    auto* dis = app.add_subcommand("discharge", "charge ledger, accounting and audit");
    dis->add_option("graph", path)->required();
    dis->add_option("--cycle", cycle_arg, "accounting cycle, default: outer walk");
    dis->add_flag("--log", log, "print the transfer log");
    dis->callback([&] { rc = cmd_discharge(g, path, cycle_arg, log); });

    auto* red = app.add_subcommand("reduce-check", "gadget reducibility certificates");
    red->add_option("--lemma", lemma, "gadget family or id (L4, L5:3, FIG2A, ...)");
    red->add_option("--param", par, "family parameter, e.g. t=9");
    red->add_flag("--all", all, "all certified gadgets (default)");
    red->callback([&] { rc = cmd_reduce_check(g, lemma, par, all); });

    auto* fc = app.add_subcommand("find-configs", "locate forbidden configurations");
    fc->add_option("graph", path)->required();
    fc->callback([&] { rc = cmd_find_configs(g, path); });

    auto* gen = app.add_subcommand("gen", "emit a generated instance");
    gen->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"hex_patch", "random_inclass", "random_plane", "gadget"}));
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--n", n, "vertex count for random generators");
    auto* seed_opt = gen->add_option("--seed", seed, "overrides the global --seed");
    gen->add_option("--id", id, "gadget id");
    gen->add_option("-o,--out", out_path, "output file, default stdout");
    gen->callback([&] {
        seed_given = seed_opt->count() > 0;
        rc = cmd_gen(g, kind, rows, cols, n, seed_given ? seed : g.seed, id, out_path);
    });

    auto* su = app.add_subcommand("suite", "run a spec of instances and checks");
    su->add_option("spec", path, "suite spec file")->required();
    su->add_flag("--no-timings", no_timings, "stable output for diffing");
    su->callback([&] { rc = cmd_suite(g, path, no_timings); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0, bad usage exits 2
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
