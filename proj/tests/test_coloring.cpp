#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "ifcolor/coloring.hpp"
#include "oracles.hpp"

using namespace ifcolor;

namespace {

PlaneGraph cycle_graph(int k) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        pts.push_back(fixtures::polar(360.0 * i / k, 1.0));
        edges.push_back({i, (i + 1) % k});
    }
    return build_from_points(pts, edges);
}

// unit square 0..3 with an interior two-vertex tail 4 (adj 0), 5 (adj 4, 2);
// extra edges let individual tests add a shortcut or a chord
PlaneGraph square_gadget(bool shortcut_4_2, bool chord_0_2) {
    std::vector<std::pair<double, double>> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                                  {0.4, 0.2}, {0.75, 0.5}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                              {0, 4}, {4, 5}, {5, 2}};
    if (shortcut_4_2) edges.push_back({4, 2});
    if (chord_0_2) edges.push_back({0, 2});
    std::vector<int> outer{0, 1, 2, 3};
    return build_from_points(pts, edges, &outer);
}

Coloring make(const PlaneGraph& G, const std::string& s) {
    Coloring phi(G.n());
    for (int v = 0; v < (int)s.size(); ++v)
        if (s[v] != '.') phi.col[v] = s[v];
    return phi;
}

} // namespace

TEST_CASE("triangle admits exactly three colorings") {
    auto G = cycle_graph(3);
    CHECK(count_if_colorings(G) == 3);
    CHECK(oracle::count_colorings(G) == 3);
    auto phi = solve_if(G);
    REQUIRE(phi.has_value());
    CHECK(verify_if(G, *phi).empty());
}

TEST_CASE("K4 admits none") {
    auto G = fixtures::k4();
    CHECK(oracle::count_colorings(G) == 0); // all 16 assignments rejected
    CHECK(count_if_colorings(G) == 0);
    CHECK_FALSE(solve_if(G).has_value());
    CHECK_FALSE(brute_force_if(G).has_value());
}

TEST_CASE("verify_if witnesses") {
    auto G = fixtures::hub9();
    auto phi = make(G, "IIFFFFFFII"); // rim 0,1 and hub all I -> 0-1 clash
    phi.col[9] = 'I';
    auto v = verify_if(G, phi);
    bool saw_ii = false;
    for (auto& viol : v)
        if (viol.kind == Violation::ADJACENT_I && viol.witness == std::vector<int>{0, 1})
            saw_ii = true;
    CHECK(saw_ii);

    Coloring allF(G.n());
    std::fill(allF.col.begin(), allF.col.end(), 'F');
    auto v2 = verify_if(G, allF);
    REQUIRE_FALSE(v2.empty());
    bool saw_cycle = false;
    for (auto& viol : v2)
        if (viol.kind == Violation::F_CYCLE) {
            saw_cycle = true;
            REQUIRE(viol.witness.size() >= 3);
            for (size_t i = 0; i < viol.witness.size(); ++i)
                CHECK(G.has_edge(viol.witness[i], viol.witness[(i + 1) % viol.witness.size()]));
        }
    CHECK(saw_cycle);

    Coloring partial(G.n());
    CHECK_THROWS_WITH_AS(verify_if(G, partial), doctest::Contains("PARTIAL_COLORING"),
                         GraphError);
}

TEST_CASE("splitting path enumeration") {
    std::vector<int> Q{0, 1, 2, 3};

    auto A = square_gadget(false, false);
    auto phiA = make(A, "FIFIFF");
    CHECK(verify_if(A, phiA).empty());
    auto pa = splitting_f_paths(A, Q, phiA);
    REQUIRE(pa.size() == 1);
    CHECK(pa[0] == std::vector<int>{0, 4, 5, 2});
    auto sup = verify_super(A, Q, phiA);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0].kind == Violation::SPLITTING_F_PATH);

    // shortcut edge 4-2 kills minimality of the long path
    auto B = square_gadget(true, false);
    auto pb = splitting_f_paths(B, Q, make(B, "FIFIFF"));
    REQUIRE(pb.size() == 1);
    CHECK(pb[0] == std::vector<int>{0, 4, 2});

    // an edge joining the two endpoints is allowed by minimality
    auto C = square_gadget(false, true);
    auto pc = splitting_f_paths(C, Q, make(C, "FIFIFF"));
    REQUIRE(pc.size() == 1);
    CHECK(pc[0] == std::vector<int>{0, 4, 5, 2});

    // oracle agreement: minimal paths match, and every oracle path that is
    // minimal appears
    for (auto* G : {&A, &B, &C}) {
        auto phi = make(*G, "FIFIFF");
        auto got = splitting_f_paths(*G, Q, phi);
        std::set<std::vector<int>> want;
        for (auto& [p, minimal] : oracle::splitting_paths(*G, Q, phi))
            if (minimal) want.insert(p);
        CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == want);
    }

    // turning vertex 5 to I removes every path
    auto phiI = make(A, "FIFIFI");
    CHECK(splitting_f_paths(A, Q, phiI).empty());
    CHECK(verify_super(A, Q, phiI).empty());
}

TEST_CASE("nicely coloring") {
    // path 0-1-2 colored in order: I, then F (next to I), then I again
    std::vector<std::pair<double, double>> pts = {{0, 0}, {1, 0}, {2, 0}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
    auto P = build_from_points(pts, edges);
    auto phi = nicely_color(P, Coloring(3), {0, 1, 2});
    CHECK(phi.col[0] == 'I');
    CHECK(phi.col[1] == 'F');
    CHECK(phi.col[2] == 'I');
    CHECK_THROWS_WITH_AS(nicely_color(P, phi, {1}), doctest::Contains("ALREADY_COLORED"),
                         GraphError);
}

TEST_CASE("adding vertices nicely never creates a barrier") {
    auto A = square_gadget(false, false);
    std::vector<int> Q{0, 1, 2, 3};
    auto phi0 = make(A, "FIFI..");
    auto r = check_prop1(A, phi0, Q, {4, 5});
    CHECK(r.ok);

    // three colored neighbors break the hypothesis
    auto G = fixtures::hub9();
    Coloring rim(G.n());
    for (int i = 0; i < 9; ++i) rim.col[i] = i % 2 ? 'I' : 'F';
    rim.col[8] = 'F';
    std::vector<int> rimQ{0, 1, 2, 3, 4, 5, 6, 7, 8};
    CHECK_THROWS_WITH_AS(check_prop1(G, rim, rimQ, {9}),
                         doctest::Contains("HYPOTHESIS_VIOLATED"), GraphError);

    // exhaustively: every valid precoloring of the square and every order of
    // the tail keeps the promise
    for (long long mask = 0; mask < 16; ++mask) {
        Coloring phi(A.n());
        for (int i = 0; i < 4; ++i) phi.col[i] = (mask >> i) & 1 ? 'F' : 'I';
        bool ok_pre = true;
        for (int i = 0; i < 4; ++i)
            if (phi.is(i, 'I') && phi.is((i + 1) % 4, 'I')) ok_pre = false;
        if (mask == 15 || !ok_pre) continue; // all-F square is an F-cycle
        for (auto seq : {std::vector<int>{4, 5}, std::vector<int>{5, 4}})
            CHECK(check_prop1(A, phi, Q, seq).ok);
    }
}

TEST_CASE("solver agrees with exhaustive search") {
    for (const PlaneGraph& G :
         {fixtures::hub9(), fixtures::chord9(2), fixtures::triclaw9(),
          fixtures::hexprism_roof(), fixtures::two_triangles(3), fixtures::k4(),
          cycle_graph(5), square_gadget(true, true)}) {
        auto a = solve_if(G);
        auto b = brute_force_if(G);
        CHECK(a.has_value() == b.has_value());
        if (a) {
            CHECK(verify_if(G, *a).empty());
            CHECK(oracle::valid_if(G, *a));
        }
        if (b) CHECK(oracle::valid_if(G, *b));
    }
}

TEST_CASE("parallel and serial exhaustive search return the same coloring") {
    for (const PlaneGraph& G : {fixtures::hub9(), fixtures::k4(), cycle_graph(6),
                                square_gadget(true, false)}) {
        auto s = brute_force_if_serial(G);
        auto p = brute_force_if(G);
        CHECK(s.has_value() == p.has_value());
        if (s && p) CHECK(s->col == p->col);
    }
    auto G = fixtures::hub9();
    std::vector<int> rimQ{0, 1, 2, 3, 4, 5, 6, 7, 8};
    auto phi0 = make(G, "FIFIFIFIF.");
    auto s = brute_force_if_serial(G, &rimQ, &phi0);
    auto p = brute_force_if(G, &rimQ, &phi0);
    CHECK(s.has_value() == p.has_value());
    if (s && p) CHECK(s->col == p->col);
}

TEST_CASE("extension respects super constraints") {
    auto G = fixtures::hub9();
    std::vector<int> rim{0, 1, 2, 3, 4, 5, 6, 7, 8};

    auto ext = extend_super(G, rim, make(G, "IFIFIFIFF."));
    CHECK_FALSE(ext.c0_has_chords);
    REQUIRE(ext.coloring.has_value());
    CHECK(verify_super(G, rim, *ext.coloring).empty());
    CHECK(oracle::valid_super(G, rim, *ext.coloring));

    // rim0 and rim4 both F with rim5 = I leave the hub stuck: I clashes with
    // rim5, F opens a splitting path 0-hub-4
    auto stuck = make(G, "FIFIFIFIF.");
    auto ext2 = extend_super(G, rim, stuck);
    CHECK_FALSE(ext2.coloring.has_value());
    CHECK_FALSE(brute_force_if(G, &rim, &stuck).has_value());
    // ... although a plain IF extension does exist
    CHECK(brute_force_if(G, nullptr, &stuck).has_value());

    CHECK_THROWS_WITH_AS(extend_super(G, rim, make(G, "IIFIFIFIF.")),
                         doctest::Contains("INVALID_PRECOLORING"), GraphError);
    Coloring allF(G.n());
    for (int i = 0; i < 9; ++i) allF.col[i] = 'F';
    CHECK_THROWS_WITH_AS(extend_super(G, rim, allF),
                         doctest::Contains("INVALID_PRECOLORING"), GraphError);
    CHECK_THROWS_WITH_AS(extend_super(G, rim, make(G, "IFIFIFIF..")),
                         doctest::Contains("INVALID_PRECOLORING"), GraphError);

    // chord flag
    auto Gc = fixtures::chord9(2);
    auto extc = extend_super(Gc, rim, make(Gc, "IFFFIFIFF"));
    CHECK(extc.c0_has_chords);
}

TEST_CASE("exhaustive search size guard") {
    auto G = cycle_graph(26);
    CHECK_THROWS_WITH_AS(brute_force_if(G), doctest::Contains("TOO_LARGE"), GraphError);
    CHECK_THROWS_WITH_AS(count_if_colorings(G), doctest::Contains("TOO_LARGE"), GraphError);
}

TEST_CASE("removing an edge never loses colorings") {
    for (const PlaneGraph& G :
         {fixtures::hub9(), square_gadget(true, true), cycle_graph(7)}) {
        long long base = count_if_colorings(G);
        for (int u = 0; u < G.n(); ++u)
            for (int v : G.neighbors(u)) {
                if (v < u) continue;
                std::vector<std::vector<int>> rot;
                for (int w = 0; w < G.n(); ++w) rot.push_back(G.rotation(w));
                std::erase(rot[u], v);
                std::erase(rot[v], u);
                try {
                    auto H = PlaneGraph::build(rot);
                    CHECK(count_if_colorings(H) >= base);
                } catch (const GraphError&) {
                    // removal may disconnect the graph; nothing to compare
                }
            }
    }
}
