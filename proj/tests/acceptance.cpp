// Acceptance suite: one criterion per run line, integer computations exact.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "simploop/corpus.hpp"
#include "simploop/facegroup.hpp"
#include "simploop/gen.hpp"
#include "simploop/groups.hpp"
#include "simploop/stone.hpp"

using namespace simploop;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << std::fixed
              << std::setprecision(2) << secs << "s)";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

struct Failure : std::runtime_error {
    explicit Failure(const std::string& m) : std::runtime_error(m) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

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
    return total / 4;
}

FaceSphere degree_one_sphere(const SimplicialComplex& hollow) {
    return sphere_from_rows(hollow, {{"x0", "x0", "x0", "x0"},
                                     {"x0", "v1", "v2", "x0"},
                                     {"x0", "v3", "v3", "x0"},
                                     {"x0", "x0", "x0", "x0"}});
}

} // namespace

int main() {
    criterion(1, "pairwise-adjacent loop triple is not a simplex, witness columns (2,3)", [] {
        auto t0 = Clock::now();
        auto x = corpus_complex("k4hollow");
        auto l1 = parse_loop(x, "[x0,v1,v2,x0]");
        auto l2 = parse_loop(x, "[x0,v1,v1,x0]");
        auto l3 = parse_loop(x, "[x0,v1,v3,x0]");
        const EdgeLoop p12[2] = {l1, l2}, p13[2] = {l1, l3}, p23[2] = {l2, l3};
        require(omega_is_simplex(x, p12) && omega_is_simplex(x, p13) && omega_is_simplex(x, p23),
                "pairs must be edges");
        const EdgeLoop triple[3] = {l1, l2, l3};
        auto chk = omega_simplex_check(x, triple);
        require(!chk.ok, "triple must not be a simplex");
        require(chk.bad_col == 2, "witness must be the column pair (2,3)");
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        require(secs < 1.0, "exceeded one second");
        return "witness columns (2,3)";
    });

    criterion(2, "component counts of the truncated loop space follow the winding classes", [] {
        auto t0 = Clock::now();
        auto x = corpus_complex("c4");
        auto data = edge_group_presentation(x);
        AbelianStructure ab(data.presentation);
        std::ostringstream detail;
        for (int k = 4; k <= 8; ++k) {
            auto s = OmegaSkeleton::build(x, k, 1);
            auto comps = s.components();
            int want = 2 * (k / 4) + 1;
            require(comps.count() == want,
                    "k=" + std::to_string(k) + ": " + std::to_string(comps.count()) + " components");
            // representatives pairwise separated by the word oracle, and the
            // word class is constant across each component
            std::set<std::pair<std::vector<Int>, std::vector<Int>>> classes;
            for (int c = 0; c < comps.count(); ++c) {
                auto cls = ab.classify(
                    data.read_word(s.loop(comps.representative[static_cast<size_t>(c)]).seq));
                classes.insert({cls.torsion_part, cls.free_part});
            }
            require(static_cast<int>(classes.size()) == comps.count(),
                    "representatives not separated at k=" + std::to_string(k));
            for (int v = 0; v < s.vertex_count(); ++v) {
                int c = comps.comp_of[static_cast<size_t>(v)];
                require(c4_winding(x, s.loop(v)) ==
                            c4_winding(x, s.loop(comps.representative[static_cast<size_t>(c)])),
                        "winding not constant on a component");
            }
            detail << (k > 4 ? " " : "") << "k" << k << "=" << comps.count();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        require(secs < 30.0, "exceeded thirty seconds");
        return detail.str();
    });

    criterion(3, "loop-space truncation and chain approximation share betti numbers and torsion", [] {
        std::ostringstream detail;
        for (const char* name : {"c3", "c4", "k4hollow"}) {
            auto x = corpus_complex(name);
            for (int k = 1; k <= 4; ++k) {
                auto s = OmegaSkeleton::build(x, k, 3);
                auto hs = simplicial_homology(s, 2);
                auto hn = chain_complex_of_stone(x, k, 3).graded.homology(2);
                require(hs.betti == hn.betti, std::string(name) + " k=" + std::to_string(k) +
                                                  " betti " + hs.to_string() + " vs " + hn.to_string());
                require(hs.torsion == hn.torsion,
                        std::string(name) + " k=" + std::to_string(k) + " torsion");
            }
            detail << name << " ";
        }
        return detail.str() + "k=1..4, dims 0..2 equal";
    });

    criterion(4, "second-homotopy signal: nontrivial sphere class visible in the loop-space edge group", [] {
        auto x = corpus_complex("k4hollow");
        auto deg1 = degree_one_sphere(x);
        CycleClassifier h2(x, 2);
        auto cls = sphere_class(h2, deg1);
        require(!cls.is_zero(), "degree oracle must certify nontriviality");
        int observed = -1;
        int rank_at = 0;
        for (int k = 3; k <= 4 && observed < 0; ++k) {
            auto s = OmegaSkeleton::build(x, k, 2);
            auto data = edge_group_data(s, s.basepoint_vertex());
            AbelianStructure ab(data.presentation);
            auto path = phi_path(deg1, s);
            auto w = data.read_word(std::vector<int>(path.begin(), path.end()));
            if (!ab.classify(w).is_zero()) {
                observed = k;
                rank_at = ab.invariants().rank;
            }
        }
        require(observed >= 0, "no nontrivial image up to the resource cap");
        require(rank_at >= 1, "rank must be at least one at the observed cap");
        return "observed k=" + std::to_string(observed) + ", rank " + std::to_string(rank_at) +
               ", sphere class nonzero";
    });

    criterion(5, "constructive chains: inverses, small families, shifts, normalization", [] {
        long long chains = 0, families = 0, shifts = 0, norms = 0;
        for (const auto& name : corpus_names()) {
            auto x = corpus_complex(name);
            Rng rng(1001);
            for (int t = 0; t < 100; ++t) {
                auto l = random_based_loop(x, 1 + rng.uniform(0, 5), rng);
                auto chain = reverse_inverse_chain(l);
                for (size_t i = 0; i + 1 < chain.size(); ++i)
                    require(contiguous_paths(chain[i], chain[i + 1]), "inverse chain broke");
                require(chain.back() == concatenate(reverse(l), l), "inverse chain endpoint");
                ++chains;
            }
        }
        for (const char* name : {"c3", "c4", "k4hollow", "rp2", "torus7"}) {
            auto x = corpus_complex(name);
            Rng rng(1002);
            for (int t = 0; t < 100; ++t) {
                int m = 2 + rng.uniform(0, 2);
                auto a = random_based_loop(x, m, rng);
                auto b = random_contiguous_loop(a, rng, false);
                require(b.has_value(), "sampling failed");
                three_simplex_family_a(a, *b);
                three_simplex_family_c(a, *b, rng.uniform(0, m - 1));
                auto mixed = random_mixed_edge(x, m, rng);
                require(mixed.has_value(), "mixed edge sampling failed");
                three_simplex_family_b(mixed->first, mixed->second);
                three_simplex_family_d(a, *b, mixed->first, mixed->second);
                ++families;
                auto shift = alpha_shift_chain(a, rng.uniform(0, m), rng.uniform(0, m));
                for (size_t i = 0; i + 1 < shift.size(); ++i)
                    require(contiguous_paths(shift[i], shift[i + 1]), "shift chain broke");
                ++shifts;
            }
        }
        for (const char* name : {"c4", "k4hollow"}) {
            auto x = corpus_complex(name);
            auto s = OmegaSkeleton::build(x, 4, 2);
            Rng rng(1003);
            for (int t = 0; t < 50; ++t) {
                auto p = random_omega_loop(s, 2 + rng.uniform(0, 6), rng);
                auto norm = normalize_loop_in_omega(s, p);
                validate_certificate(s, norm.log);
                require(norm.log.start == p && norm.log.final() == norm.normal, "log endpoints");
                for (int id : norm.middle)
                    require(s.loop(id).length() == norm.peak_length, "middle left its stratum");
                ++norms;
            }
        }
        std::ostringstream d;
        d << chains << " inverse chains, " << families << " families, " << shifts << " shifts, "
          << norms << " normalizations";
        return d.str();
    });

    criterion(6, "loop-space image of a product is the product of images, by validated moves", [] {
        Rng rng(1004);
        int total = 0, inconclusive = 0, hollow_inconclusive = 0;
        auto run_pairs = [&](const std::string& name, int count, int mdim, int ndim) {
            auto x = corpus_complex(name);
            auto s = OmegaSkeleton::build(x, 2 * mdim + 1, 1);
            for (int t = 0; t < count; ++t) {
                auto f = random_face_sphere(x, mdim, ndim, rng);
                auto g = random_face_sphere(x, mdim, ndim, rng);
                ++total;
                try {
                    auto cert = phi_product_certificate(f, g, s);
                    validate_certificate(s, cert);
                    OmegaPath start = phi_path(f, s);
                    auto tail = phi_path(g, s);
                    start.insert(start.end(), tail.begin(), tail.end());
                    require(cert.start == start, "certificate start");
                    require(cert.final() == phi_path(fs_product(f, g), s), "certificate end");
                } catch (const std::exception&) {
                    ++inconclusive;
                    if (name == "k4hollow") ++hollow_inconclusive;
                }
            }
        };
        run_pairs("k4hollow", 8, 2, 2);
        run_pairs("c3", 3, 2, 2);
        run_pairs("c4", 3, 2, 2);
        run_pairs("rp2", 3, 1, 2);
        run_pairs("torus7", 3, 1, 2);
        require(total == 20, "expected twenty sampled pairs");
        require(hollow_inconclusive == 0, "inconclusive on the hollow 3-simplex");
        require(inconclusive == 0, "inconclusive rate nonzero");
        return "20 pairs, inconclusive rate 0/20 (hollow 0/8)";
    });

    criterion(7, "loop-space functor: identity and composition agree on every stored cell", [] {
        auto x = corpus_complex("k4hollow");
        auto s = OmegaSkeleton::build(x, 3, 2);
        auto ident = omega_map(identity_map(x), s);
        for (int v = 0; v < s.vertex_count(); ++v)
            require(ident.vertex_image[static_cast<size_t>(v)] == s.loop(v), "identity image");
        Rng rng(1005);
        long long simplices_checked = 0;
        for (int t = 0; t < 10; ++t) {
            auto f = random_based_self_map(x, rng);
            auto g = random_based_self_map(x, rng);
            auto rf = omega_map(f, s);
            auto rgf = omega_map(compose(g, f), s);
            for (int v = 0; v < s.vertex_count(); ++v) {
                std::vector<int> via;
                for (int w : rf.vertex_image[static_cast<size_t>(v)].seq) via.push_back(g(w));
                require(via == rgf.vertex_image[static_cast<size_t>(v)].seq, "vertex composite");
            }
            for (int d = 1; d <= s.max_dim(); ++d)
                for (const auto& sx : s.simplices(d)) {
                    std::vector<EdgeLoop> lhs, rhs;
                    for (int v : sx) {
                        std::vector<int> via;
                        for (int w : rf.vertex_image[static_cast<size_t>(v)].seq) via.push_back(g(w));
                        lhs.push_back(EdgeLoop{&x, via});
                        rhs.push_back(rgf.vertex_image[static_cast<size_t>(v)]);
                    }
                    for (size_t i = 0; i < lhs.size(); ++i)
                        require(lhs[i] == rhs[i], "simplex image composite");
                    ++simplices_checked;
                }
        }
        return "10 map pairs, " + std::to_string(simplices_checked) + " simplex images compared";
    });

    criterion(8, "first homology equals the abelianized edge group on the whole corpus", [] {
        std::ostringstream d;
        for (const auto& name : corpus_names()) {
            auto x = corpus_complex(name);
            auto inv = abelianization(edge_group_presentation(x).presentation);
            auto h = simplicial_homology(x, 1);
            require(h.betti[1] == inv.rank, name + ": rank mismatch");
            require(h.torsion[1] == inv.torsion, name + ": torsion mismatch");
        }
        auto rp2 = abelianization(edge_group_presentation(corpus_complex("rp2")).presentation);
        require(rp2.torsion == std::vector<Int>{Int(2)}, "projective plane torsion");
        return "all seven complexes, including torsion [2]";
    });

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
