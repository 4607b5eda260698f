#include <doctest.h>

#include "simploop/corpus.hpp"
#include "simploop/gen.hpp"
#include "simploop/paths.hpp"
#include "simploop/search.hpp"

using namespace simploop;

namespace {

// Independent winding-number oracle for the 4-cycle: signed count of
// forward steps around the cycle, divided by its length.
int c4_winding(const SimplicialComplex& x, const EdgeLoop& l) {
    auto idx = [&x](int v) {
        const std::string& lab = x.label(v);
        return lab == "x0" ? 0 : static_cast<int>(lab[1] - '0');
    };
    int total = 0;
    for (int i = 0; i < l.length(); ++i) {
        int a = idx(l.at(i)), b = idx(l.at(i + 1));
        if ((a + 1) % 4 == b) ++total;
        else if ((b + 1) % 4 == a) --total;
    }
    REQUIRE(total % 4 == 0);
    return total / 4;
}

std::vector<int> seq_of(const SimplicialComplex& x, std::initializer_list<const char*> labels) {
    std::vector<int> out;
    for (const char* lab : labels) out.push_back(x.vertex(lab));
    return out;
}

} // namespace

TEST_CASE("validate_loop") {
    auto hollow = corpus_complex("k4hollow");
    auto c4 = corpus_complex("c4");
    CHECK(validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"})).length() == 3);
    CHECK(validate_loop(hollow, {hollow.basepoint()}).length() == 0);
    CHECK_THROWS_WITH_AS(validate_loop(c4, seq_of(c4, {"x0", "v2", "x0"})),
                         doctest::Contains("position 0"), ValidationError);
    CHECK_THROWS_AS(validate_loop(c4, seq_of(c4, {"x0", "v1"})), ValidationError); // endpoint
}

TEST_CASE("contiguous_paths examples") {
    auto hollow = corpus_complex("k4hollow");
    auto c4 = corpus_complex("c4");
    auto l1 = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
    auto l2 = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v1", "x0"}));
    CHECK(contiguous_paths(l1, l2));
    CHECK(contiguous_paths(l1, l1));
    auto w = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
    CHECK_FALSE(contiguous_paths(w, constant_loop(c4, 4)));
    CHECK_THROWS_AS(contiguity_check(l1, constant_loop(hollow, 5)), ValidationError);
}

TEST_CASE("extensions") {
    auto hollow = corpus_complex("k4hollow");
    auto l = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "x0"}));
    auto e = extend(l, ExtensionIndexList(2, {1}));
    CHECK(e.seq == seq_of(hollow, {"x0", "v1", "v1", "x0"}));

    CHECK(trivial_extend(constant_loop(hollow, 0), 2).seq == std::vector<int>(3, hollow.basepoint()));

    auto l2 = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
    auto e2 = extend(l2, ExtensionIndexList(3, {0, 3}));
    CHECK(e2.seq == seq_of(hollow, {"x0", "x0", "v1", "v2", "v2", "x0"}));

    CHECK_THROWS_AS(ExtensionIndexList(3, {5}), ValidationError);
    CHECK_THROWS_AS(ExtensionIndexList(3, {0, 9}), ValidationError);
}

TEST_CASE("reverse and concatenate") {
    auto hollow = corpus_complex("k4hollow");
    auto p = constant_loop(hollow, 0);
    CHECK(concatenate(p, p).length() == 1);

    auto a = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "x0"}));
    auto b = validate_loop(hollow, seq_of(hollow, {"x0", "v3", "x0"}));
    auto ab = concatenate(a, b);
    CHECK(ab.length() == 5);
    CHECK(ab.seq == seq_of(hollow, {"x0", "v1", "x0", "x0", "v3", "x0"}));

    auto l = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
    CHECK(reverse(l).seq == seq_of(hollow, {"x0", "v2", "v1", "x0"}));
    CHECK(reverse(reverse(l)) == l);
}

TEST_CASE("reverse_inverse_chain validates on the corpus") {
    SUBCASE("length one is immediate") {
        auto hollow = corpus_complex("k4hollow");
        auto chain = reverse_inverse_chain(constant_loop(hollow, 1));
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].seq == chain[1].seq);
    }
    SUBCASE("explicit loops") {
        auto hollow = corpus_complex("k4hollow");
        auto l = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
        auto chain = reverse_inverse_chain(l);
        REQUIRE(chain.size() == static_cast<size_t>(l.length()) + 1);
        for (const auto& c : chain) CHECK(c.length() == 2 * l.length() + 1);
        for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(contiguous_paths(chain[i], chain[i + 1]));
        CHECK(chain.back() == concatenate(reverse(l), l));

        auto c4 = corpus_complex("c4");
        auto w = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
        auto wc = reverse_inverse_chain(w);
        for (size_t i = 0; i + 1 < wc.size(); ++i) CHECK(contiguous_paths(wc[i], wc[i + 1]));
        CHECK(wc.front() == constant_loop(c4, 9));
        CHECK(wc.back() == concatenate(reverse(w), w));
    }
    SUBCASE("one hundred random loops per bundled complex") {
        for (const auto& name : corpus_names()) {
            auto x = corpus_complex(name);
            Rng rng(0xC0FFEE);
            for (int t = 0; t < 100; ++t) {
                auto l = random_based_loop(x, 1 + rng.uniform(0, 5), rng);
                auto chain = reverse_inverse_chain(l);
                for (size_t i = 0; i + 1 < chain.size(); ++i)
                    REQUIRE(contiguous_paths(chain[i], chain[i + 1]));
                REQUIRE(chain.back() == concatenate(reverse(l), l));
            }
        }
    }
}

TEST_CASE("alpha shift chains validate") {
    for (const auto& name : {"c4", "k4hollow", "torus7"}) {
        auto x = corpus_complex(name);
        Rng rng(7);
        for (int t = 0; t < 20; ++t) {
            auto l = random_based_loop(x, 2 + rng.uniform(0, 3), rng);
            int i = rng.uniform(0, l.length());
            int j = rng.uniform(0, l.length());
            auto chain = alpha_shift_chain(l, i, j);
            for (size_t k = 0; k + 1 < chain.size(); ++k)
                REQUIRE(contiguous_paths(chain[k], chain[k + 1]));
        }
    }
}

TEST_CASE("contiguity is reflexive and symmetric on random loops") {
    for (const auto& name : corpus_names()) {
        auto x = corpus_complex(name);
        Rng rng(42);
        for (int t = 0; t < 25; ++t) {
            auto l = random_based_loop(x, 1 + rng.uniform(0, 4), rng);
            CHECK(contiguous_paths(l, l));
            auto nb = random_contiguous_loop(l, rng, false);
            REQUIRE(nb.has_value());
            CHECK(contiguous_paths(l, *nb));
            CHECK(contiguous_paths(*nb, l));
        }
    }
}

TEST_CASE("same-length search") {
    auto hollow = corpus_complex("k4hollow");
    SUBCASE("loop to itself is the empty chain") {
        auto l = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
        auto r = contiguity_chain_search(hollow, l.seq, l.seq, 10);
        CHECK(r.status == SearchStatus::Found);
        CHECK(r.chain.size() == 1);
    }
    SUBCASE("simply connected case finds a chain and it re-validates") {
        auto a = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
        auto b = validate_loop(hollow, seq_of(hollow, {"x0", "v3", "v3", "x0"}));
        auto r = contiguity_chain_search(hollow, a.seq, b.seq, 10000);
        REQUIRE(r.status == SearchStatus::Found);
        for (size_t i = 0; i + 1 < r.chain.size(); ++i)
            CHECK(contiguous_paths(EdgeLoop{&hollow, r.chain[i]}, EdgeLoop{&hollow, r.chain[i + 1]}));
    }
    SUBCASE("winding classes of the 4-cycle never meet") {
        auto c4 = corpus_complex("c4");
        auto w = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
        auto r = contiguity_chain_search(c4, w.seq, constant_loop(c4, 4).seq, 1000000);
        CHECK(r.status == SearchStatus::ExhaustedNotFound);
        CHECK(c4_winding(c4, w) == 1);
    }
}

TEST_CASE("extension-contiguity search") {
    auto c4 = corpus_complex("c4");
    SUBCASE("trivial extensions are tautologically equivalent") {
        auto l = validate_loop(c4, seq_of(c4, {"x0", "v1", "x0", "x0"}));
        auto e = trivial_extend(l, 2);
        auto r = extension_contiguity_search(c4, l.seq, e.seq, l.length() + 2, 1000);
        CHECK(r.status == SearchStatus::Found);
    }
    SUBCASE("winding-separated loops stay separated at every cap") {
        auto w = validate_loop(c4, seq_of(c4, {"x0", "v1", "v2", "v3", "x0"}));
        auto r = extension_contiguity_search(c4, w.seq, constant_loop(c4, 4).seq, 7, 1000000);
        CHECK(r.status == SearchStatus::ExhaustedNotFound);
    }
    SUBCASE("found certificates re-validate stepwise") {
        auto hollow = corpus_complex("k4hollow");
        auto a = validate_loop(hollow, seq_of(hollow, {"x0", "v1", "v2", "x0"}));
        auto b = validate_loop(hollow, seq_of(hollow, {"x0", "v3", "x0"}));
        auto r = extension_contiguity_search(hollow, a.seq, b.seq, 5, 100000);
        REQUIRE(r.status == SearchStatus::Found);
        const auto& cert = *r.certificate;
        REQUIRE(cert.chain.front() ==
                same_size(a, cert.common_length).seq);
        REQUIRE(cert.chain.back() == same_size(b, cert.common_length).seq);
        for (size_t i = 0; i + 1 < cert.chain.size(); ++i)
            CHECK(contiguous_paths(EdgeLoop{&hollow, cert.chain[i]}, EdgeLoop{&hollow, cert.chain[i + 1]}));
    }
}
