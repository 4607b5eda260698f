#include <doctest.h>

#include "simploop/corpus.hpp"

using namespace simploop;

namespace {
const char* kHollow = "basepoint x0\nx0 v1 v2\nx0 v1 v3\nx0 v2 v3\nv1 v2 v3\n";
const char* kC4 = "basepoint x0\nx0 v1\nv1 v2\nv2 v3\nv3 x0\n";
}

TEST_CASE("load: hollow 3-simplex") {
    auto x = SimplicialComplex::load(kHollow);
    CHECK(x.vertex_count() == 4);
    CHECK(x.facets().size() == 4);
    CHECK(x.is_simplex({x.vertex("x0"), x.vertex("v1"), x.vertex("v2")}));
    CHECK_FALSE(x.is_simplex({x.vertex("x0"), x.vertex("v1"), x.vertex("v2"), x.vertex("v3")}));
}

TEST_CASE("load: point complex") {
    auto x = SimplicialComplex::load("basepoint x0\nx0\n");
    CHECK(x.vertex_count() == 1);
    CHECK(x.is_simplex({x.basepoint()}));
}

TEST_CASE("load: C4 cycle, no triangles") {
    auto x = SimplicialComplex::load(kC4);
    CHECK(x.vertex_count() == 4);
    CHECK(x.facets().size() == 4);
    CHECK_FALSE(x.is_simplex({x.vertex("v1"), x.vertex("v3")}));
    CHECK(x.is_simplex({x.vertex("v1"), x.vertex("v2")}));
}

TEST_CASE("load errors") {
    CHECK_THROWS_AS(SimplicialComplex::load("x0 v1\n"), ValidationError);            // no basepoint
    CHECK_THROWS_AS(SimplicialComplex::load("basepoint zz\nx0 v1\n"), ValidationError);
    CHECK_THROWS_AS(SimplicialComplex::load("basepoint x0\nx0 x0\n"), ValidationError); // dup in facet
}

TEST_CASE("maximalization is idempotent; non-maximal input accepted") {
    auto x = SimplicialComplex::load("basepoint x0\nx0 v1\nx0 v1 v2\n");
    CHECK(x.facets().size() == 1);
    auto y = SimplicialComplex::load(x.to_text());
    CHECK(x == y);
}

TEST_CASE("is_simplex is monotone on subsets") {
    auto x = SimplicialComplex::load(kHollow);
    for (const auto& f : x.facets()) {
        CHECK(x.is_simplex(f));
        for (size_t drop = 0; drop < f.size(); ++drop) {
            VertexSet sub = f;
            sub.erase(sub.begin() + static_cast<long>(drop));
            if (!sub.empty()) CHECK(x.is_simplex(sub));
        }
    }
}

TEST_CASE("check_simplicial") {
    auto x = SimplicialComplex::load(kC4);
    CHECK(check_simplicial(identity_map(x)).ok);

    // v1 -> v3, everything else fixed: still simplicial on C4.
    SimplicialMap f{&x, &x, {}};
    f.image = {x.vertex("x0"), x.vertex("v3"), x.vertex("v2"), x.vertex("v3")};
    std::vector<int> ident{0, 1, 2, 3};
    SimplicialMap g{&x, &x, ident};
    for (int v = 0; v < 4; ++v) g.image[static_cast<size_t>(v)] = v;
    f.image.assign(4, 0);
    f.image[static_cast<size_t>(x.vertex("x0"))] = x.vertex("x0");
    f.image[static_cast<size_t>(x.vertex("v1"))] = x.vertex("v3");
    f.image[static_cast<size_t>(x.vertex("v2"))] = x.vertex("v2");
    f.image[static_cast<size_t>(x.vertex("v3"))] = x.vertex("v3");
    CHECK(check_simplicial(f).ok);

    // constant map to the basepoint
    SimplicialMap c{&x, &x, std::vector<int>(4, x.basepoint())};
    CHECK(check_simplicial(c).ok);

    // an actually broken map: neighbors of x0 to opposite corners
    SimplicialMap b{&x, &x, {}};
    b.image.assign(4, 0);
    b.image[static_cast<size_t>(x.vertex("x0"))] = x.vertex("x0");
    b.image[static_cast<size_t>(x.vertex("v1"))] = x.vertex("v2");
    b.image[static_cast<size_t>(x.vertex("v2"))] = x.vertex("v2");
    b.image[static_cast<size_t>(x.vertex("v3"))] = x.vertex("v3");
    auto chk = check_simplicial(b);
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.witness_facet.empty());
}

TEST_CASE("bundled corpus loads and basic facts hold") {
    for (const auto& name : corpus_names()) {
        auto x = corpus_complex(name);
        CHECK(x.vertex_count() >= 1);
        CHECK(x.is_simplex({x.basepoint()}));
    }
    CHECK(corpus_complex("rp2").vertex_count() == 6);
    CHECK(corpus_complex("torus7").vertex_count() == 7);
    CHECK(corpus_complex("torus7").facets().size() == 14);
}
