#include <doctest.h>

#include <functional>
#include <set>

#include "simploop/corpus.hpp"
#include "simploop/groups.hpp"
#include "simploop/stone.hpp"

using namespace simploop;

namespace {

// Exhaustive independent oracle over raw part tuples, no shared pruning.
long long brute_force_chain_count(const SimplicialComplex& x, int k, int max_dim) {
    auto by_dim = x.simplices_up_to(x.vertex_count() - 1);
    std::vector<VertexSet> parts;
    for (const auto& lvl : by_dim)
        for (const auto& s : lvl) parts.push_back(s);
    long long count = 0;
    std::vector<int> pick(static_cast<size_t>(k) - 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == k - 1) {
            int dim = 0;
            for (int t : pick) dim += static_cast<int>(parts[static_cast<size_t>(t)].size()) - 1;
            if (dim > max_dim) return;
            VertexSet prev{x.basepoint()};
            for (int t : pick) {
                VertexSet u = prev;
                for (int v : parts[static_cast<size_t>(t)]) u.push_back(v);
                std::sort(u.begin(), u.end());
                u.erase(std::unique(u.begin(), u.end()), u.end());
                if (!x.is_simplex(u)) return;
                prev = parts[static_cast<size_t>(t)];
            }
            VertexSet last = prev;
            last.push_back(x.basepoint());
            std::sort(last.begin(), last.end());
            last.erase(std::unique(last.begin(), last.end()), last.end());
            if (!x.is_simplex(last)) return;
            ++count;
            return;
        }
        for (size_t t = 0; t < parts.size(); ++t) {
            pick[static_cast<size_t>(i)] = static_cast<int>(t);
            rec(i + 1);
        }
    };
    if (k == 1) return 1;
    rec(0);
    return count;
}

} // namespace

TEST_CASE("chain enumeration") {
    SUBCASE("length one is a single empty chain") {
        auto x = corpus_complex("c4");
        auto chains = enumerate_chains(x, 1, 5);
        REQUIRE(chains.size() == 1);
        CHECK(chains[0].parts.empty());
        CHECK(chains[0].dim() == 0);
    }
    SUBCASE("4-cycle chains cross-checked by brute force") {
        auto x = corpus_complex("c4");
        for (int k : {2, 3, 4}) {
            auto chains = enumerate_chains(x, k, 6);
            CHECK(static_cast<long long>(chains.size()) == brute_force_chain_count(x, k, 6));
        }
    }
    SUBCASE("hollow 3-simplex chains at length two") {
        auto x = corpus_complex("k4hollow");
        auto chains = enumerate_chains(x, 2, 6);
        CHECK(static_cast<long long>(chains.size()) == brute_force_chain_count(x, 2, 6));
        // every part must sit in a facet containing the basepoint
        for (const auto& c : chains) {
            VertexSet u = c.parts[0];
            u.push_back(x.basepoint());
            std::sort(u.begin(), u.end());
            u.erase(std::unique(u.begin(), u.end()), u.end());
            CHECK(x.is_simplex(u));
        }
    }
    SUBCASE("dimension cap filters cells") {
        auto x = corpus_complex("k4hollow");
        auto small = enumerate_chains(x, 3, 1);
        for (const auto& c : small) CHECK(c.dim() <= 1);
    }
    SUBCASE("componentwise faces stay inside the enumeration") {
        auto x = corpus_complex("k4hollow");
        auto chains = enumerate_chains(x, 3, 3);
        std::set<StoneChain> have(chains.begin(), chains.end());
        for (const auto& c : chains)
            for (size_t j = 0; j < c.parts.size(); ++j) {
                if (c.parts[j].size() <= 1) continue;
                for (size_t t = 0; t < c.parts[j].size(); ++t) {
                    StoneChain face = c;
                    face.parts[j].erase(face.parts[j].begin() + static_cast<long>(t));
                    CHECK(have.count(face) == 1);
                }
            }
    }
}

TEST_CASE("prodsimplicial boundary squares to zero") {
    for (const char* name : {"c3", "c4", "k4hollow"}) {
        auto x = corpus_complex(name);
        auto sc = chain_complex_of_stone(x, 3, 3);
        CHECK_NOTHROW(sc.graded.assert_dd_zero());
    }
}

TEST_CASE("homology of the bundled complexes") {
    auto check_h = [](const char* name, std::vector<long long> betti,
                      std::vector<std::vector<Int>> torsion) {
        auto x = corpus_complex(name);
        auto h = simplicial_homology(x, static_cast<int>(betti.size()) - 1);
        CHECK(h.betti == betti);
        CHECK(h.torsion == torsion);
    };
    check_h("point", {1, 0}, {{}, {}});
    check_h("c3", {1, 1}, {{}, {}});
    check_h("c4", {1, 1}, {{}, {}});
    check_h("delta3", {1, 0, 0, 0}, {{}, {}, {}, {}});
    check_h("k4hollow", {1, 0, 1}, {{}, {}, {}});
    check_h("rp2", {1, 0, 0}, {{}, {Int(2)}, {}});
    check_h("torus7", {1, 2, 1}, {{}, {}, {}});
}

TEST_CASE("first homology equals the abelianized edge group") {
    for (const auto& name : corpus_names()) {
        auto x = corpus_complex(name);
        auto inv = abelianization(edge_group_presentation(x).presentation);
        auto h = simplicial_homology(x, 1);
        CHECK(h.betti[1] == inv.rank);
        CHECK(h.torsion[1] == inv.torsion);
    }
}

TEST_CASE("stone complex homology mirrors the loop-space truncation") {
    SUBCASE("length one approximates a point") {
        auto x = corpus_complex("c4");
        auto sc = chain_complex_of_stone(x, 1, 2);
        auto h = sc.graded.homology(1);
        CHECK(h.betti == std::vector<long long>{1, 0});
    }
    SUBCASE("4-cycle at length four has three pieces") {
        auto x = corpus_complex("c4");
        auto sc = chain_complex_of_stone(x, 4, 3);
        auto h = sc.graded.homology(2);
        CHECK(h.betti[0] == 3);
        auto s = OmegaSkeleton::build(x, 4, 3);
        CHECK(h.betti[0] == s.components().count());
    }
    SUBCASE("hollow 3-simplex connects at length three") {
        auto x = corpus_complex("k4hollow");
        auto sc = chain_complex_of_stone(x, 3, 3);
        auto h = sc.graded.homology(2);
        CHECK(h.betti[0] == 1);
    }
}

TEST_CASE("loop-space and stone homology agree at small caps") {
    for (const char* name : {"c3", "c4"}) {
        auto x = corpus_complex(name);
        for (int k : {1, 2, 3}) {
            auto s = OmegaSkeleton::build(x, k, 3);
            auto hs = simplicial_homology(s, 2);
            auto sc = chain_complex_of_stone(x, k, 3);
            auto hn = sc.graded.homology(2);
            CHECK(hs.betti == hn.betti);
            CHECK(hs.torsion == hn.torsion);
        }
    }
}

TEST_CASE("vertex-level image of the loop space in the chains") {
    auto x = corpus_complex("c4");
    SUBCASE("basepoint loop maps to the constant chain") {
        auto img = stone_vertex_image(constant_loop(x, 0), 4);
        REQUIRE(img.parts.size() == 3);
        for (const auto& p : img.parts) CHECK(p == VertexSet{x.basepoint()});
    }
    SUBCASE("winding loop maps to its vertex chain") {
        auto w = validate_loop(x, {x.vertex("x0"), x.vertex("v1"), x.vertex("v2"), x.vertex("v3"),
                                   x.vertex("x0")});
        auto img = stone_vertex_image(w, 4);
        CHECK(img.parts ==
              std::vector<VertexSet>{{x.vertex("v1")}, {x.vertex("v2")}, {x.vertex("v3")}});
    }
    SUBCASE("length above the cap is rejected") {
        CHECK_THROWS_AS(stone_vertex_image(constant_loop(x, 5), 4), ValidationError);
    }
    SUBCASE("components correspond bijectively, lengths four to six") {
        for (int k : {4, 5, 6}) {
            auto s = OmegaSkeleton::build(x, k, 1);
            auto comps = s.components();
            auto sc = chain_complex_of_stone(x, k, 1);
            auto [ncomp, cell_comp] = sc.graded.components();
            REQUIRE(ncomp == comps.count());
            // map each skeleton vertex to its 0-cell and collect the pairing
            std::vector<int> pair_of(static_cast<size_t>(comps.count()), -1);
            for (int v = 0; v < s.vertex_count(); ++v) {
                auto chain = stone_vertex_image(s.loop(v), k);
                auto it = sc.index.find(chain);
                REQUIRE(it != sc.index.end());
                REQUIRE(it->second.first == 0);
                int cc = cell_comp[static_cast<size_t>(it->second.second)];
                int oc = comps.comp_of[static_cast<size_t>(v)];
                if (pair_of[static_cast<size_t>(oc)] < 0) pair_of[static_cast<size_t>(oc)] = cc;
                REQUIRE(pair_of[static_cast<size_t>(oc)] == cc); // well-defined
            }
            std::set<int> hit(pair_of.begin(), pair_of.end());
            CHECK(static_cast<int>(hit.size()) == ncomp); // injective + surjective
        }
    }
    SUBCASE("skeleton edges keep endpoints in one chain component") {
        auto s = OmegaSkeleton::build(x, 4, 1);
        auto sc = chain_complex_of_stone(x, 4, 1);
        auto [ncomp, cell_comp] = sc.graded.components();
        for (const auto& e : s.simplices(1)) {
            auto ca = sc.index.at(stone_vertex_image(s.loop(e[0]), 4));
            auto cb = sc.index.at(stone_vertex_image(s.loop(e[1]), 4));
            CHECK(cell_comp[static_cast<size_t>(ca.second)] == cell_comp[static_cast<size_t>(cb.second)]);
        }
    }
}

TEST_CASE("cycle classifier on the hollow 3-simplex") {
    auto x = corpus_complex("k4hollow");
    CycleClassifier h2(x, 2);
    CHECK(h2.betti() == 1);

    // fundamental cycle: boundary of the solid simplex with alternating signs
    std::map<VertexSet, Int> z;
    auto by_dim = x.simplices_up_to(2);
    int sign = 1;
    VertexSet all{0, 1, 2, 3};
    for (size_t t = 0; t < 4; ++t) {
        VertexSet tri;
        for (size_t i = 0; i < 4; ++i)
            if (i != t) tri.push_back(all[i]);
        z[tri] = (t % 2 == 0) ? 1 : -1;
        (void)sign;
    }
    auto cls = h2.classify(z);
    CHECK_FALSE(cls.is_zero());
    REQUIRE(cls.free_part.size() == 1);
    CHECK(abs(cls.free_part[0]) == 1);

    // the zero chain is the zero class, and non-cycles are rejected
    CHECK(h2.classify({}).is_zero());
    std::map<VertexSet, Int> notcycle{{{0, 1, 2}, Int(1)}};
    CHECK_THROWS_AS(h2.classify(notcycle), ValidationError);
}
