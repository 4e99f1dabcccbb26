#include "ifcolor/suite.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <filesystem>
#include <set>
#include <sstream>

#include "ifcolor/coloring.hpp"
#include "ifcolor/discharging.hpp"
#include "ifcolor/generators.hpp"
#include "ifcolor/io.hpp"
#include "ifcolor/reducibility.hpp"
#include "ifcolor/structures.hpp"

namespace ifcolor {

namespace {

const std::set<std::string> kGenerators = {"hex_patch", "random_inclass", "random_plane",
                                           "gadget", "file"};
const std::set<std::string> kChecks = {"class", "color", "extend", "discharge", "reduce"};
const std::set<std::string> kExpects = {"expect_class", "expect_dstar", "expect_color",
                                        "expect_reduce", "expect_identity"};

[[noreturn]] void spec_error(const std::string& name, int line, const std::string& msg) {
    throw GraphError(Errc::PARSE_ERROR, name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string tok; std::getline(in, tok, sep);) out.push_back(tok);
    return out;
}

const std::string* param(const InstanceSpec& s, const std::string& key) {
    for (const auto& [k, v] : s.params)
        if (k == key) return &v;
    return nullptr;
}

long long num_param(const InstanceSpec& s, const std::string& spec_name, const std::string& key,
                    long long missing) {
    const std::string* v = param(s, key);
    if (!v) {
        if (missing == LLONG_MIN) spec_error(spec_name, s.line, "missing " + key + "=");
        return missing;
    }
    try {
        size_t used = 0;
        long long r = std::stoll(*v, &used);
        if (used != v->size()) throw std::invalid_argument(*v);
        return r;
    } catch (const std::exception&) {
        spec_error(spec_name, s.line, "bad number for " + key + "=: '" + *v + "'");
    }
}

std::string req_param(const InstanceSpec& s, const std::string& spec_name,
                      const std::string& key) {
    const std::string* v = param(s, key);
    if (!v) spec_error(spec_name, s.line, "missing " + key + "=");
    return *v;
}

// --- individual checks ------------------------------------------------------

std::string expect_of(const InstanceSpec& s, const std::string& key, const std::string& dflt) {
    auto it = s.expect.find(key);
    return it == s.expect.end() ? dflt : it->second;
}

std::string verts_name(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : "-") + std::to_string(v);
    return s;
}

SuiteCheck check_class(const PlaneGraph& G, const InstanceSpec& s) {
    SuiteCheck c{"class", false, 0, ""};
    InClassResult r = in_class(G);
    std::string ds = r.d_star == kInfDist ? "INF" : std::to_string(r.d_star);
    bool want_in = expect_of(s, "expect_class", "in") != "out";
    c.pass = r.ok == want_in;
    c.note = "d*=" + ds;
    if (c.pass && s.expect.count("expect_dstar") && s.expect.at("expect_dstar") != ds) {
        c.pass = false;
        c.note += " expected d*=" + s.expect.at("expect_dstar");
    }
    if (!c.pass && r.witness)
        c.note += " witness=" + verts_name(r.witness->first.verts) + "|" +
                  verts_name(r.witness->second.verts);
    return c;
}

SuiteCheck check_color(const PlaneGraph& G, const InstanceSpec& s) {
    SuiteCheck c{"color", false, 0, ""};
    std::optional<Coloring> sol = solve_if(G);
    if (expect_of(s, "expect_color", "some") == "none") {
        c.pass = !sol;
        c.note = sol ? "unexpected coloring found" : "unsatisfiable as expected";
        return c;
    }
    if (!sol) {
        c.note = "solver found no coloring";
        return c;
    }
    auto bad = verify_if(G, *sol);
    c.pass = bad.empty();
    c.note = bad.empty() ? "colored" : std::string("violates ") + violation_name(bad[0].kind);
    return c;
}

SuiteCheck check_extend(const PlaneGraph& G, const InstanceSpec& s) {
    SuiteCheck c{"extend", false, 0, ""};
    (void)s;
    const std::vector<int>& C0 = G.outer_walk().walk;
    const int k = (int)C0.size();
    G.require_cycle(C0); // throws if the outer walk repeats a vertex
    if (k > 9) {
        c.note = "outer cycle longer than 9";
        return c;
    }
    StructureReport rep = analyze_cycle(G, C0);
    if (!rep.chords.empty()) {
        c.note = "outer cycle has a chord";
        return c;
    }
    if (k == 9 && rep.cls != CycleClass::GOOD) {
        c.note = std::string("outer 9-cycle is ") + cycle_class_name(rep.cls);
        return c;
    }
    long long valid = 0;
    for (int mask = 0; mask < (1 << k); ++mask) {
        Coloring phi0(G.n());
        bool ok = mask != 0; // all-F closes an F-cycle on C0
        for (int i = 0; i < k && ok; ++i) {
            bool I = mask >> i & 1;
            if (I && (mask >> ((i + 1) % k) & 1)) ok = false;
            phi0.col[C0[i]] = I ? 'I' : 'F';
        }
        if (!ok) continue;
        ++valid;
        ExtendResult ext = extend_super(G, C0, phi0);
        if (!ext.coloring) {
            c.note = "unextendable phi0 at mask " + std::to_string(mask);
            return c;
        }
        if (!verify_super(G, C0, *ext.coloring).empty()) {
            c.note = "extension fails verify_super at mask " + std::to_string(mask);
            return c;
        }
    }
    c.pass = true;
    c.note = "phi0=" + std::to_string(valid) + "/" + std::to_string(1LL << k);
    return c;
}

SuiteCheck check_discharge(const PlaneGraph& G, const InstanceSpec& s) {
    SuiteCheck c{"discharge", false, 0, ""};
    ChargeLedger led = apply_rules(G);
    Rational sum;
    for (const auto& [e, q] : led.final_charges()) sum = sum + q;
    if (!(sum == Rational(0))) {
        c.note = "final charges sum to " + sum.str();
        return c;
    }
    AuditReport audit_rep = audit(G); // throws logic_error on a leak
    c.pass = true;
    c.note = "sum=0 negatives=" + std::to_string(audit_rep.negatives.size());
    if (s.expect.count("expect_identity")) {
        OuterAccounting acc = outer_accounting(G, G.outer_walk().walk);
        bool want = s.expect.at("expect_identity") == "1";
        if (acc.identity != want) {
            c.pass = false;
            c.note = std::string("identity=") + (acc.identity ? "1" : "0") + " expected " +
                     s.expect.at("expect_identity");
        } else if (want && !acc.ineq3) {
            c.pass = false;
            c.note = "2e' >= tau6 fails";
        }
    }
    return c;
}

SuiteCheck check_reduce(const InstanceSpec& s) {
    SuiteCheck c{"reduce", false, 0, ""};
    ReduceResult r = verify_reducible(build_gadget(*param(s, "id")));
    bool want_ok = expect_of(s, "expect_reduce", "ok") != "fail";
    c.pass = r.ok == want_ok;
    c.note = "patterns=" + std::to_string(r.patterns_valid) + "/" +
             std::to_string(r.patterns_total) + (r.ok ? " ok" : " counterexample");
    return c;
}

} // namespace

int SuiteReport::checks_total() const {
    int k = 0;
    for (const auto& ins : instances) k += (int)ins.checks.size();
    return k;
}

int SuiteReport::checks_failed() const {
    int k = 0;
    for (const auto& ins : instances)
        for (const auto& c : ins.checks) k += !c.pass;
    return k;
}

std::string SuiteReport::to_text(bool timings) const {
    std::ostringstream out;
    out << "ifcolor-suite 1\n";
    for (const auto& ins : instances) {
        out << "instance " << ins.name << ' ' << ins.describe << '\n';
        for (const auto& c : ins.checks) {
            out << "check " << ins.name << ' ' << c.kind << ' ' << (c.pass ? "pass" : "fail")
                << ' ';
            if (timings) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3fs", c.seconds);
                out << buf;
            } else {
                out << '-';
            }
            if (!c.note.empty()) out << ' ' << c.note;
            out << '\n';
        }
    }
    out << "summary instances=" << instances.size() << " checks=" << checks_total()
        << " failed=" << checks_failed() << '\n';
    return out.str();
}

std::vector<InstanceSpec> parse_suite_spec(const std::string& text, const std::string& name) {
    std::vector<InstanceSpec> specs;
    std::set<std::string> names;
    std::istringstream in(text);
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string head;
        if (!(toks >> head)) continue;
        if (head != "instance") spec_error(name, ln, "expected 'instance', got '" + head + "'");
        InstanceSpec s;
        s.line = ln;
        if (!(toks >> s.name >> s.generator))
            spec_error(name, ln, "expected: instance <name> <generator> ...");
        if (!names.insert(s.name).second) spec_error(name, ln, "duplicate name '" + s.name + "'");
        if (!kGenerators.count(s.generator))
            spec_error(name, ln, "unknown generator '" + s.generator + "'");
        for (std::string kv; toks >> kv;) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                spec_error(name, ln, "expected key=value, got '" + kv + "'");
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "checks") {
                for (const std::string& k : split(val, ',')) {
                    if (!kChecks.count(k)) spec_error(name, ln, "unknown check '" + k + "'");
                    s.checks.push_back(k);
                }
            } else if (kExpects.count(key)) {
                s.expect[key] = val;
            } else {
                s.params.emplace_back(key, val);
            }
        }
        if (s.checks.empty()) spec_error(name, ln, "instance needs checks=");
        if (s.generator != "gadget" &&
            std::find(s.checks.begin(), s.checks.end(), "reduce") != s.checks.end())
            spec_error(name, ln, "reduce check needs a gadget instance");
        specs.push_back(std::move(s));
    }
    return specs;
}

PlaneGraph materialize(const InstanceSpec& s, const std::string& spec_name,
                       const std::string& base_dir) {
    auto known = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : s.params)
            if (std::find_if(keys.begin(), keys.end(),
                             [&](const char* a) { return k == a; }) == keys.end())
                spec_error(spec_name, s.line, "unknown key '" + k + "' for " + s.generator);
    };
    // extract parameters first: their errors already carry spec:line
    int rows = 0, cols = 0, n = 0;
    std::uint64_t seed = 0;
    std::string id, path;
    if (s.generator == "hex_patch") {
        known({"rows", "cols"});
        rows = (int)num_param(s, spec_name, "rows", LLONG_MIN);
        cols = (int)num_param(s, spec_name, "cols", LLONG_MIN);
    } else if (s.generator == "random_inclass" || s.generator == "random_plane") {
        known({"n", "seed"});
        n = (int)num_param(s, spec_name, "n", LLONG_MIN);
        seed = (std::uint64_t)num_param(s, spec_name, "seed", 0);
    } else if (s.generator == "gadget") {
        known({"id"});
        id = req_param(s, spec_name, "id");
    } else {
        known({"path"});
        std::filesystem::path p = req_param(s, spec_name, "path");
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        path = p.string();
    }
    try {
        if (s.generator == "hex_patch") return gen_hex_patch(rows, cols);
        if (s.generator == "random_inclass") return gen_random_inclass(n, seed);
        if (s.generator == "random_plane") return gen_random_plane(n, seed);
        if (s.generator == "gadget") return gen_gadget(id);
        return load_graph(path);
    } catch (const GraphError& e) {
        spec_error(spec_name, s.line, e.what());
    }
}

SuiteReport run_suite(const std::string& spec_text, const std::string& spec_name,
                      const std::string& base_dir) {
    std::vector<InstanceSpec> specs = parse_suite_spec(spec_text, spec_name);
    std::vector<PlaneGraph> graphs;
    graphs.reserve(specs.size());
    SuiteReport rep;
    rep.instances.resize(specs.size());
    for (size_t i = 0; i < specs.size(); ++i) {
        graphs.push_back(materialize(specs[i], spec_name, base_dir));
        rep.instances[i].name = specs[i].name;
        std::string d = specs[i].generator;
        for (const auto& [k, v] : specs[i].params) d += " " + k + "=" + v;
        rep.instances[i].describe = d;
    }

    using clock = std::chrono::steady_clock;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)specs.size(); ++i) {
        for (const std::string& kind : specs[i].checks) {
            auto t0 = clock::now();
            SuiteCheck c;
            try {
                if (kind == "class") c = check_class(graphs[i], specs[i]);
                else if (kind == "color") c = check_color(graphs[i], specs[i]);
                else if (kind == "extend") c = check_extend(graphs[i], specs[i]);
                else if (kind == "discharge") c = check_discharge(graphs[i], specs[i]);
                else c = check_reduce(specs[i]);
            } catch (const std::exception& e) {
                c = SuiteCheck{kind, false, 0, e.what()};
            }
            c.seconds = std::chrono::duration<double>(clock::now() - t0).count();
            rep.instances[i].checks.push_back(std::move(c));
        }
    }
    return rep;
}

SuiteReport run_suite_file(const std::string& path) {
    return run_suite(read_file(path), path, std::filesystem::path(path).parent_path().string());
}

} // namespace ifcolor
