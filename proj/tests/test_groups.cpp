#include <doctest.h>

#include "simploop/corpus.hpp"
#include "simploop/gen.hpp"
#include "simploop/groups.hpp"

using namespace simploop;

namespace {

std::vector<int> seq_of(const SimplicialComplex& x, std::initializer_list<const char*> labels) {
    std::vector<int> out;
    for (const char* lab : labels) out.push_back(x.vertex(lab));
    return out;
}

} // namespace

TEST_CASE("word operations") {
    Word w{{1, -1, 2}};
    CHECK(free_reduce(w).letters == std::vector<int>{2});
    CHECK(inverse_word(Word{{1, 2}}).letters == std::vector<int>{-2, -1});
    CHECK(concat_words(Word{{1, 2}}, Word{{-2, 3}}).letters == std::vector<int>{1, 3});
    CHECK(cyclic_reduce(Word{{1, 2, -1}}).letters == std::vector<int>{2});
}

TEST_CASE("edge group of the 4-cycle is free of rank one") {
    auto c4 = corpus_complex("c4");
    auto data = edge_group_presentation(c4);
    CHECK(data.presentation.generators.size() == 4);
    CHECK(data.presentation.relators.size() == 3); // spanning tree only, no triangles

    auto simplified = tietze_simplify(data.presentation);
    CHECK(simplified.generators.size() == 1);
    CHECK(simplified.relators.empty());

    auto inv = abelianization(data.presentation);
    CHECK(inv.rank == 1);
    CHECK(inv.torsion.empty());
}

TEST_CASE("simply connected complexes give the trivial group") {
    for (const char* name : {"k4hollow", "delta3", "point"}) {
        auto x = corpus_complex(name);
        auto data = edge_group_presentation(x);
        auto simplified = tietze_simplify(data.presentation);
        CHECK(simplified.generators.empty());
        auto inv = abelianization(data.presentation);
        CHECK(inv.rank == 0);
        CHECK(inv.torsion.empty());
    }
}

TEST_CASE("loop_to_word") {
    auto c4 = corpus_complex("c4");
    auto data = edge_group_presentation(c4);
    CHECK(data.read_word(constant_loop(c4, 5).seq).empty());

    auto w = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
    auto word = data.read_word(w.seq);
    CHECK(word.letters.size() == 1);

    auto cancel = data.read_word(concatenate(w, reverse(w)).seq);
    CHECK(cancel.empty());
}

TEST_CASE("loop_to_word respects concatenation and reversal") {
    for (const char* name : {"c4", "k4hollow", "torus7", "rp2"}) {
        auto x = corpus_complex(name);
        auto data = edge_group_presentation(x);
        Rng rng(5);
        for (int t = 0; t < 30; ++t) {
            auto a = random_based_loop(x, 1 + rng.uniform(0, 4), rng);
            auto b = random_based_loop(x, 1 + rng.uniform(0, 4), rng);
            CHECK(data.read_word(concatenate(a, b).seq) ==
                  concat_words(data.read_word(a.seq), data.read_word(b.seq)));
            CHECK(data.read_word(reverse(a).seq) == inverse_word(data.read_word(a.seq)));
        }
    }
}

TEST_CASE("word class is invariant under single moves") {
    for (const char* name : {"c4", "k4hollow", "rp2", "torus7"}) {
        auto x = corpus_complex(name);
        auto data = edge_group_presentation(x);
        AbelianStructure ab(data.presentation);
        Rng rng(11);
        for (int t = 0; t < 30; ++t) {
            auto l = random_based_loop(x, 1 + rng.uniform(0, 4), rng);
            // single extension: the free word itself is unchanged
            int i = rng.uniform(0, l.length());
            CHECK(data.read_word(extend_once(l, i).seq) == data.read_word(l.seq));
            // single contiguity move: equal in the abelianization
            auto nb = random_contiguous_loop(l, rng, false);
            REQUIRE(nb.has_value());
            CHECK(ab.classify(data.read_word(l.seq)) == ab.classify(data.read_word(nb->seq)));
        }
    }
}

TEST_CASE("change of basepoint") {
    auto c4 = corpus_complex("c4");
    auto data = edge_group_presentation(c4);
    SUBCASE("constant path is the identity") {
        auto phi = change_of_basepoint(data, std::vector<int>{c4.basepoint()});
        Word w{{1, -2}};
        CHECK(phi.apply(w) == free_reduce(w));
    }
    SUBCASE("conjugation followed by the reverse conjugation is the identity") {
        auto eta = seq_of(c4, {"x0", "v1", "v2"});
        auto phi = change_of_basepoint(data, eta);
        BasepointConjugation back{inverse_word(phi.eta_word)};
        Rng rng(3);
        for (int t = 0; t < 20; ++t) {
            auto l = random_based_loop(c4, rng.uniform(1, 5), rng);
            Word w = data.read_word(l.seq);
            CHECK(back.apply(phi.apply(w)) == w);
        }
    }
    SUBCASE("winding word maps to a conjugate of itself") {
        auto eta = seq_of(c4, {"x0", "v1"});
        auto phi = change_of_basepoint(data, eta);
        auto w = data.read_word(validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"})).seq);
        AbelianStructure ab(data.presentation);
        CHECK(ab.classify(phi.apply(w)) == ab.classify(w));
    }
}

TEST_CASE("induced homomorphisms") {
    auto c4 = corpus_complex("c4");
    auto data = edge_group_presentation(c4);
    SUBCASE("identity map induces the identity") {
        auto h = induced_hom(identity_map(c4), data, data);
        Rng rng(17);
        for (int t = 0; t < 10; ++t) {
            auto l = random_based_loop(c4, rng.uniform(1, 6), rng);
            Word w = data.read_word(l.seq);
            CHECK(h.apply(w) == w);
        }
    }
    SUBCASE("constant map induces the trivial homomorphism") {
        SimplicialMap c{&c4, &c4, std::vector<int>(4, c4.basepoint())};
        auto h = induced_hom(c, data, data);
        auto w = data.read_word(validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"})).seq);
        CHECK(h.apply(w).empty());
    }
    SUBCASE("rotation conjugates the winding class") {
        // unbased rotation composed with the change of basepoint back to x0
        SimplicialMap rot{&c4, &c4, {}};
        rot.image.assign(4, 0);
        rot.image[static_cast<size_t>(c4.vertex("x0"))] = c4.vertex("v1");
        rot.image[static_cast<size_t>(c4.vertex("v1"))] = c4.vertex("v2");
        rot.image[static_cast<size_t>(c4.vertex("v2"))] = c4.vertex("v3");
        rot.image[static_cast<size_t>(c4.vertex("v3"))] = c4.vertex("x0");
        REQUIRE(check_simplicial(rot).ok);
        auto l = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
        std::vector<int> image;
        for (int v : l.seq) image.push_back(rot(v));
        std::vector<int> eta = seq_of(c4, {"x0", "v1"}); // x0 to rot(x0)
        std::vector<int> conj = eta;
        conj.insert(conj.end(), image.begin(), image.end());
        std::vector<int> back(eta.rbegin(), eta.rend());
        conj.insert(conj.end(), back.begin(), back.end());
        AbelianStructure ab(data.presentation);
        CHECK(ab.classify(data.read_word(conj)) == ab.classify(data.read_word(l.seq)));
    }
}

TEST_CASE("tietze_simplify") {
    SUBCASE("drops a generator named by a relator") {
        Presentation p{{"a", "b"}, {Word{{2}}}};
        auto q = tietze_simplify(p);
        CHECK(q.generators == std::vector<std::string>{"a"});
        CHECK(q.relators.empty());
    }
    SUBCASE("torus presentation collapses to two generators and one relator") {
        auto t = corpus_complex("torus7");
        auto data = edge_group_presentation(t);
        auto q = tietze_simplify(data.presentation);
        CHECK(q.generators.size() == 2);
        CHECK(q.relators.size() == 1);
        auto inv = abelianization(q);
        CHECK(inv.rank == 2);
        CHECK(inv.torsion.empty());
    }
    SUBCASE("abelian invariants are preserved exactly") {
        for (const auto& name : corpus_names()) {
            auto x = corpus_complex(name);
            auto p = edge_group_presentation(x).presentation;
            CHECK(abelianization(p) == abelianization(tietze_simplify(p)));
        }
    }
}

TEST_CASE("abelianization of the corpus") {
    auto check_inv = [](const char* name, int rank, std::vector<Int> torsion) {
        auto inv = abelianization(edge_group_presentation(corpus_complex(name)).presentation);
        CHECK(inv.rank == rank);
        CHECK(inv.torsion == torsion);
    };
    check_inv("point", 0, {});
    check_inv("c3", 1, {});
    check_inv("c4", 1, {});
    check_inv("delta3", 0, {});
    check_inv("k4hollow", 0, {});
    check_inv("rp2", 0, {Int(2)});
    check_inv("torus7", 2, {});
}
