#include "simploop/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "simploop/corpus.hpp"
#include "simploop/facegroup.hpp"
#include "simploop/gen.hpp"
#include "simploop/groups.hpp"
#include "simploop/search.hpp"
#include "simploop/stone.hpp"

namespace simploop {

bool SuiteReport::has_fail() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool SuiteReport::has_mandatory_inconclusive() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Inconclusive && c.mandatory;
    });
}

int SuiteReport::exit_code() const {
    if (has_fail()) return 1;
    if (has_mandatory_inconclusive()) return 2;
    return 0;
}

namespace {

struct Checker {
    SuiteReport& report;

    void run(const std::string& name, bool mandatory, const std::function<CheckResult()>& body) {
        CheckResult r;
        r.name = name;
        r.mandatory = mandatory;
        try {
            r = body();
            r.name = name;
            r.mandatory = mandatory;
        } catch (const CapError&) {
            throw; // resource exhaustion has its own exit code
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.detail = e.what();
        }
        report.checks.push_back(std::move(r));
    }
    void check(const std::string& name, const std::function<bool(std::string&)>& body,
               bool mandatory = true) {
        run(name, mandatory, [&body]() {
            CheckResult r;
            std::string detail;
            r.status = body(detail) ? CheckStatus::Pass : CheckStatus::Fail;
            r.detail = detail;
            return r;
        });
    }
};

std::vector<std::string> small_corpus() { return {"c3", "c4", "k4hollow"}; }

SimplicialComplex suite_complex(const VerifyConfig& cfg, const std::string& fallback) {
    if (cfg.input_text) return SimplicialComplex::load(*cfg.input_text);
    return corpus_complex(fallback);
}

// ---------------------------------------------------------------- contiguity

void suite_contiguity(Checker& ck, const VerifyConfig& cfg) {
    for (const auto& name : corpus_names()) {
        ck.check("reverse-concatenation chain validates pairwise [" + name + "]", [&](std::string& d) {
            auto x = corpus_complex(name);
            Rng rng(cfg.seed);
            for (int t = 0; t < 100; ++t) {
                auto l = random_based_loop(x, 1 + rng.uniform(0, 5), rng);
                auto chain = reverse_inverse_chain(l);
                for (size_t i = 0; i + 1 < chain.size(); ++i)
                    if (!contiguous_paths(chain[i], chain[i + 1])) {
                        d = "pair " + std::to_string(i) + " for " + l.to_literal();
                        return false;
                    }
                if (!(chain.back() == concatenate(reverse(l), l))) {
                    d = "endpoint mismatch";
                    return false;
                }
            }
            return true;
        });
    }
    for (const auto& name : small_corpus()) {
        ck.check("repeat-index shift chains validate [" + name + "]", [&](std::string& d) {
            auto x = corpus_complex(name);
            Rng rng(cfg.seed + 1);
            for (int t = 0; t < 50; ++t) {
                auto l = random_based_loop(x, 2 + rng.uniform(0, 3), rng);
                auto chain = alpha_shift_chain(l, rng.uniform(0, l.length()), rng.uniform(0, l.length()));
                for (size_t i = 0; i + 1 < chain.size(); ++i)
                    if (!contiguous_paths(chain[i], chain[i + 1])) {
                        d = "shift chain broke at " + std::to_string(i);
                        return false;
                    }
            }
            return true;
        });
    }
    ck.check("bounded searches return stepwise-valid certificates", [&](std::string& d) {
        auto x = corpus_complex("k4hollow");
        auto a = parse_loop(x, "[x0,v1,v2,x0]");
        auto b = parse_loop(x, "[x0,v3,v3,x0]");
        auto r = contiguity_chain_search(x, a.seq, b.seq, cfg.budget);
        if (r.status != SearchStatus::Found) {
            d = "expected a chain";
            return false;
        }
        for (size_t i = 0; i + 1 < r.chain.size(); ++i)
            if (!contiguous_paths(EdgeLoop{&x, r.chain[i]}, EdgeLoop{&x, r.chain[i + 1]})) return false;
        return true;
    });
    ck.check("winding-separated loops stay separated under search", [&](std::string& d) {
        auto x = corpus_complex("c4");
        auto w = parse_loop(x, "[x0,v1,v2,v3,x0]");
        auto r = extension_contiguity_search(x, w.seq, constant_loop(x, 4).seq, 7, cfg.budget);
        if (r.status == SearchStatus::Found) {
            d = "found an impossible chain";
            return false;
        }
        d = r.status == SearchStatus::ExhaustedNotFound ? "class exhausted" : "budget out";
        return r.status == SearchStatus::ExhaustedNotFound;
    });
}

// --------------------------------------------------------------------- omega

void suite_omega(Checker& ck, const VerifyConfig& cfg) {
    ck.check("triple of pairwise-adjacent loops fails the column condition", [&](std::string& d) {
        auto x = corpus_complex("k4hollow");
        auto l1 = parse_loop(x, "[x0,v1,v2,x0]");
        auto l2 = parse_loop(x, "[x0,v1,v1,x0]");
        auto l3 = parse_loop(x, "[x0,v1,v3,x0]");
        const EdgeLoop p12[2] = {l1, l2}, p13[2] = {l1, l3}, p23[2] = {l2, l3};
        if (!omega_is_simplex(x, p12) || !omega_is_simplex(x, p13) || !omega_is_simplex(x, p23)) {
            d = "expected pairwise edges";
            return false;
        }
        const EdgeLoop triple[3] = {l1, l2, l3};
        auto chk = omega_simplex_check(x, triple);
        d = "witness column pair (" + std::to_string(chk.bad_col) + "," +
            std::to_string(chk.bad_col + 1) + ")";
        return !chk.ok && chk.bad_col == 2;
    });
    ck.check("vertex counts match the enumeration oracle", [&](std::string& d) {
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            int cap = name == "k4hollow" ? 3 : 4;
            auto s = OmegaSkeleton::build(x, cap, 1, {}, cfg.workers);
            for (int m = 0; m <= cap; ++m) {
                long long brute = 0;
                std::vector<int> seq(static_cast<size_t>(m) + 1);
                std::function<void(int)> rec = [&](int i) {
                    if (i == m + 1) {
                        if (seq.front() != x.basepoint() || seq.back() != x.basepoint()) return;
                        for (int t = 0; t + 1 <= m; ++t) {
                            int a = seq[static_cast<size_t>(t)], b = seq[static_cast<size_t>(t) + 1];
                            if (a != b && !x.is_simplex({a, b})) return;
                        }
                        ++brute;
                        return;
                    }
                    for (int v = 0; v < x.vertex_count(); ++v) {
                        seq[static_cast<size_t>(i)] = v;
                        rec(i + 1);
                    }
                };
                rec(0);
                if (brute != static_cast<long long>(s.stratum(m).size())) {
                    d = name + " stratum " + std::to_string(m);
                    return false;
                }
            }
        }
        return true;
    });
    ck.check("stored simplices re-validate and close under faces", [&](std::string& d) {
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            auto s = OmegaSkeleton::build(x, 3, 3, {}, cfg.workers);
            for (int dd = 1; dd <= 3; ++dd)
                for (const auto& sx : s.simplices(dd)) {
                    if (!s.is_simplex(sx)) {
                        d = "stored set not a simplex";
                        return false;
                    }
                    for (size_t drop = 0; drop < sx.size(); ++drop) {
                        auto face = sx;
                        face.erase(face.begin() + static_cast<long>(drop));
                        if (!s.is_simplex(face)) {
                            d = "face closure violated";
                            return false;
                        }
                    }
                }
        }
        return true;
    });
    ck.check("equal-length simplices extend by trivial extension", [&](std::string& d) {
        Rng rng(cfg.seed + 2);
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            for (int t = 0; t < 50; ++t) {
                auto l = random_based_loop(x, 2 + rng.uniform(0, 2), rng);
                auto nb = random_contiguous_loop(l, rng, false);
                if (!nb) continue;
                const EdgeLoop sigma[2] = {l, *nb};
                sigma_union_extension(x, sigma);
            }
        }
        (void)d;
        return true;
    });
    ck.check("guaranteed small-simplex families emit simplices", [&](std::string& d) {
        Rng rng(cfg.seed + 3);
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            for (int t = 0; t < 100; ++t) {
                int m = 2 + rng.uniform(0, 2);
                auto a = random_based_loop(x, m, rng);
                auto b = random_contiguous_loop(a, rng, false);
                if (!b) continue;
                three_simplex_family_a(a, *b);
                three_simplex_family_c(a, *b, rng.uniform(0, m - 1));
                auto mixed = random_mixed_edge(x, m, rng);
                if (mixed) {
                    three_simplex_family_b(mixed->first, mixed->second);
                    three_simplex_family_d(a, *b, mixed->first, mixed->second);
                }
            }
        }
        (void)d;
        return true;
    });
    ck.check("functor preserves identity and composition", [&](std::string& d) {
        Rng rng(cfg.seed + 4);
        auto x = corpus_complex("k4hollow");
        auto s = OmegaSkeleton::build(x, 3, 2, {}, cfg.workers);
        auto ident = omega_map(identity_map(x), s);
        for (int v = 0; v < s.vertex_count(); ++v)
            if (!(ident.vertex_image[static_cast<size_t>(v)] == s.loop(v))) {
                d = "identity image differs";
                return false;
            }
        for (int t = 0; t < 10; ++t) {
            auto f = random_based_self_map(x, rng);
            auto g = random_based_self_map(x, rng);
            auto rf = omega_map(f, s);
            auto rgf = omega_map(compose(g, f), s);
            for (int v = 0; v < s.vertex_count(); ++v) {
                std::vector<int> via;
                for (int w : rf.vertex_image[static_cast<size_t>(v)].seq) via.push_back(g(w));
                if (via != rgf.vertex_image[static_cast<size_t>(v)].seq) {
                    d = "composite mismatch";
                    return false;
                }
            }
        }
        return true;
    });
}

// ---------------------------------------------------------------- components

int expected_cycle_components(const std::string& name, int k) {
    if (name == "c4") return 2 * (k / 4) + 1;
    if (name == "c3") return 2 * (k / 3) + 1;
    return -1;
}

void suite_components(Checker& ck, const VerifyConfig& cfg) {
    if (cfg.input_text) {
        int k = cfg.max_len >= 0 ? cfg.max_len : 4;
        ck.run("component report for " + cfg.input_name + " at cap " + std::to_string(k), true,
               [&]() {
                   auto x = suite_complex(cfg, "c4");
                   auto s = OmegaSkeleton::build(x, k, 1, {}, cfg.workers);
                   auto comps = s.components();
                   CheckResult r;
                   r.status = CheckStatus::Pass;
                   r.detail = "components=" + std::to_string(comps.count());
                   return r;
               });
        ck.check("word class is constant on each component", [&](std::string& d) {
            auto x = suite_complex(cfg, "c4");
            int k = cfg.max_len >= 0 ? cfg.max_len : 4;
            auto s = OmegaSkeleton::build(x, k, 1, {}, cfg.workers);
            auto comps = s.components();
            auto data = edge_group_presentation(x);
            AbelianStructure ab(data.presentation);
            std::vector<std::optional<AbelianClass>> cls(static_cast<size_t>(comps.count()));
            for (int v = 0; v < s.vertex_count(); ++v) {
                auto c = ab.classify(data.read_word(s.loop(v).seq));
                auto& slot = cls[static_cast<size_t>(comps.comp_of[static_cast<size_t>(v)])];
                if (!slot) slot = c;
                else if (!(*slot == c)) {
                    d = "component mixes classes";
                    return false;
                }
            }
            return true;
        });
        return;
    }

    for (const char* name : {"c4", "c3"}) {
        ck.check(std::string("component counts follow the winding formula [") + name + "]",
                 [&, name](std::string& d) {
                     auto x = corpus_complex(name);
                     int hi = cfg.max_len >= 0 ? cfg.max_len : 8;
                     for (int k = 3; k <= hi; ++k) {
                         auto s = OmegaSkeleton::build(x, k, 1, {}, cfg.workers);
                         int got = s.components().count();
                         int want = expected_cycle_components(name, k);
                         if (got != want) {
                             d = "k=" + std::to_string(k) + ": " + std::to_string(got) + " != " +
                                 std::to_string(want);
                             return false;
                         }
                     }
                     return true;
                 });
    }
    ck.check("hollow 3-simplex stays connected", [&](std::string& d) {
        auto x = corpus_complex("k4hollow");
        for (int k = 0; k <= 3; ++k)
            if (OmegaSkeleton::build(x, k, 1, {}, cfg.workers).components().count() != 1) {
                d = "k=" + std::to_string(k);
                return false;
            }
        return true;
    });
    ck.check("component count equals the number of word-oracle classes", [&](std::string& d) {
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            auto data = edge_group_presentation(x);
            AbelianStructure ab(data.presentation);
            int k = name == "k4hollow" ? 3 : 6;
            auto s = OmegaSkeleton::build(x, k, 1, {}, cfg.workers);
            std::set<std::pair<std::vector<Int>, std::vector<Int>>> classes;
            for (int v = 0; v < s.vertex_count(); ++v) {
                auto c = ab.classify(data.read_word(s.loop(v).seq));
                classes.insert({c.torsion_part, c.free_part});
            }
            if (static_cast<int>(classes.size()) != s.components().count()) {
                d = name;
                return false;
            }
        }
        return true;
    });
    ck.check("left translation respects components and validates simplices", [&](std::string& d) {
        auto x = corpus_complex("c4");
        auto s3 = OmegaSkeleton::build(x, 3, 2, {}, cfg.workers);
        auto s8 = OmegaSkeleton::build(x, 8, 2, {}, cfg.workers);
        auto ell = parse_loop(x, "[x0,v1,v2,v3,x0]");
        auto t = left_translate(s3, ell, s8);
        auto src = s3.components();
        auto dst = s8.components();
        for (int c = 0; c < src.count(); ++c) {
            int expect = -1;
            for (int v = 0; v < s3.vertex_count(); ++v) {
                if (src.comp_of[static_cast<size_t>(v)] != c) continue;
                int got = dst.comp_of[static_cast<size_t>(t.image[static_cast<size_t>(v)])];
                if (expect < 0) expect = got;
                if (got != expect) {
                    d = "component image split";
                    return false;
                }
            }
        }
        return true;
    });
    ck.run("per-component edge-group invariants (report)", false, [&]() {
        auto x = corpus_complex("c4");
        auto s = OmegaSkeleton::build(x, 4, 2, {}, cfg.workers);
        auto comps = s.components();
        std::ostringstream out;
        for (int c = 0; c < comps.count(); ++c) {
            auto data = edge_group_data(s, comps.representative[static_cast<size_t>(c)], true);
            out << (c ? "; " : "") << "comp" << c << ": "
                << AbelianStructure(data.presentation).invariants().to_string();
        }
        CheckResult r;
        r.status = CheckStatus::Pass;
        r.detail = out.str();
        return r;
    });
    ck.check("interpolation between left and right translation validates", [&](std::string& d) {
        auto x = corpus_complex("k4hollow");
        auto s2 = OmegaSkeleton::build(x, 2, 3, {}, cfg.workers);
        auto s3 = OmegaSkeleton::build(x, 3, 3, {}, cfg.workers);
        auto chain = alpha_star_chain(s2, 2, s3);
        d = "checked " + std::to_string(chain.checked) + " contiguity sets";
        return chain.images.size() == 3;
    });
}

// ----------------------------------------------------------------- facegroup

void suite_facegroup(Checker& ck, const VerifyConfig& cfg) {
    auto hollow = corpus_complex("k4hollow");
    const FaceSphere deg1 = sphere_from_rows(hollow, {{"x0", "x0", "x0", "x0"},
                                                      {"x0", "v1", "v2", "x0"},
                                                      {"x0", "v3", "v3", "x0"},
                                                      {"x0", "x0", "x0", "x0"}});
    ck.check("grid validation accepts and rejects correctly", [&](std::string& d) {
        if (!face_sphere_check(hollow, 3, 3, deg1.grid).ok) {
            d = "degree-one grid rejected";
            return false;
        }
        auto c4 = corpus_complex("c4");
        std::vector<int> bad(16, c4.basepoint());
        bad[5] = c4.vertex("v2");
        if (face_sphere_check(c4, 3, 3, bad).ok) {
            d = "invalid grid accepted";
            return false;
        }
        return true;
    });
    ck.check("repeating adjacent rows or columns gives contiguous grids", [&](std::string& d) {
        Rng rng(cfg.seed + 5);
        for (int t = 0; t < 20; ++t) {
            auto f = random_face_sphere(hollow, 3, 3, rng);
            int i = rng.uniform(0, f.m - 1), j = rng.uniform(0, f.n - 1);
            if (!fs_contiguous(fs_repeat_col(f, i), fs_repeat_col(f, i + 1)) ||
                !fs_contiguous(fs_repeat_row(f, j), fs_repeat_row(f, j + 1))) {
                d = "repetition not contiguous";
                return false;
            }
        }
        return true;
    });
    ck.check("product dimensions and the constant-factor case", [&](std::string& d) {
        Rng rng(cfg.seed + 6);
        auto f = random_face_sphere(hollow, 2, 2, rng);
        auto g = random_face_sphere(hollow, 3, 2, rng);
        auto p = fs_product(f, g);
        if (p.m != f.m + g.m + 1 || p.n != f.n + g.n + 1) {
            d = "dimension formula";
            return false;
        }
        auto q = fs_product(f, constant_sphere(hollow, 1, 1));
        auto r = fs_equivalent(f, q, SphereSearchCaps{-1, -1, cfg.budget});
        d = "constant factor search dequeued " + std::to_string(r.dequeued);
        return r.status == SphereEquivStatus::Found;
    });
    ck.check("rows-of-sphere and loop-of-rows invert each other", [&](std::string& d) {
        Rng rng(cfg.seed + 7);
        for (int t = 0; t < 100; ++t) {
            auto f = random_face_sphere(hollow, 2 + rng.uniform(0, 2), 2 + rng.uniform(0, 2), rng);
            if (!(omega_loop_to_fs(sphere_rows(f)) == f)) {
                d = "round trip failed";
                return false;
            }
        }
        return true;
    });
    ck.check("contiguity transfers between grids and row loops, both ways", [&](std::string& d) {
        Rng rng(cfg.seed + 8);
        for (int t = 0; t < 30; ++t) {
            auto f = random_face_sphere(hollow, 3, 3, rng);
            auto g = random_contiguous_sphere(f, rng, false);
            if (!g) continue;
            auto rf = sphere_rows(f), rg = sphere_rows(*g);
            for (size_t j = 0; j + 1 < rf.size(); ++j) {
                std::vector<EdgeLoop> quad{rf[j], rf[j + 1], rg[j], rg[j + 1]};
                if (!omega_is_simplex(hollow, quad)) {
                    d = "grid contiguity did not transfer to rows";
                    return false;
                }
            }
            if (!fs_contiguous(omega_loop_to_fs(rf), omega_loop_to_fs(rg))) {
                d = "row contiguity did not transfer to grids";
                return false;
            }
        }
        return true;
    });
    ck.run("product associativity on sampled triples", false, [&]() {
        Rng rng(cfg.seed + 9);
        CheckResult r;
        int inconclusive = 0;
        for (int t = 0; t < 5; ++t) {
            auto f = random_face_sphere(hollow, 2, 2, rng);
            auto g = random_face_sphere(hollow, 2, 2, rng);
            auto h = random_face_sphere(hollow, 1, 1, rng);
            auto lhs = fs_product(fs_product(f, g), h);
            auto rhs = fs_product(f, fs_product(g, h));
            auto res = fs_equivalent(lhs, rhs, SphereSearchCaps{-1, -1, 2000});
            if (res.status == SphereEquivStatus::BudgetNotFound) ++inconclusive;
            else if (res.status != SphereEquivStatus::Found) {
                r.status = CheckStatus::Fail;
                return r;
            }
        }
        r.status = inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
        r.detail = "inconclusive " + std::to_string(inconclusive) + "/5";
        return r;
    });
    ck.check("degree pairing separates the one-sphere from constants", [&](std::string& d) {
        CycleClassifier h2(hollow, 2);
        auto r = fs_equivalent(deg1, constant_sphere(hollow, 3, 3), SphereSearchCaps{}, &h2);
        d = "definite negative via the pairing";
        return r.status == SphereEquivStatus::DistinctClass;
    });
}

// ----------------------------------------------------------------------- phi

void suite_phi(Checker& ck, const VerifyConfig& cfg) {
    auto hollow = corpus_complex("k4hollow");
    const FaceSphere deg1 = sphere_from_rows(hollow, {{"x0", "x0", "x0", "x0"},
                                                      {"x0", "v1", "v2", "x0"},
                                                      {"x0", "v3", "v3", "x0"},
                                                      {"x0", "x0", "x0", "x0"}});
    ck.check("contiguous spheres map to pathwise-contiguous loops", [&](std::string& d) {
        Rng rng(cfg.seed + 10);
        for (int t = 0; t < 20; ++t) {
            auto f = random_face_sphere(hollow, 3, 3, rng);
            auto g = random_contiguous_sphere(f, rng, false);
            if (!g) continue;
            auto a = phi_loops(f), b = phi_loops(*g);
            for (size_t i = 0; i + 1 < a.size(); ++i) {
                std::vector<EdgeLoop> quad{a[i], a[i + 1], b[i], b[i + 1]};
                if (!omega_is_simplex(hollow, quad)) {
                    d = "image not contiguous at " + std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });
    ck.check("trivial extensions reduce through repeats and one move", [&](std::string& d) {
        Rng rng(cfg.seed + 11);
        auto s = OmegaSkeleton::build(hollow, 4, 1, {}, cfg.workers);
        for (int t = 0; t < 10; ++t) {
            auto f = random_face_sphere(hollow, 2 + rng.uniform(0, 1), 2, rng);
            // row extension: literally one repeated vertex
            auto ext = fs_repeat_row(f, f.n);
            auto a = phi_loops(f), b = phi_loops(ext);
            if (b.size() != a.size() + 1) {
                d = "row extension length";
                return false;
            }
            b.erase(b.begin() + f.m + f.n);
            if (a != b) {
                d = "row extension shape";
                return false;
            }
            auto cert = phi_column_extension_cert(f, s);
            validate_certificate(s, cert);
        }
        return true;
    });
    ck.run("multiplicativity certificates across the corpus", true, [&]() {
        CheckResult r;
        Rng rng(cfg.seed + 12);
        int total = 0, failed = 0, hollow_failed = 0;
        auto run_pairs = [&](const std::string& name, int count, int mdim, int ndim) {
            auto x = corpus_complex(name);
            int M = 2 * mdim + 1;
            auto s = OmegaSkeleton::build(x, M, 1, {}, cfg.workers);
            for (int t = 0; t < count; ++t) {
                auto f = random_face_sphere(x, mdim, ndim, rng);
                auto g = random_face_sphere(x, mdim, ndim, rng);
                ++total;
                try {
                    auto cert = phi_product_certificate(f, g, s);
                    validate_certificate(s, cert);
                } catch (const std::exception&) {
                    ++failed;
                    if (name == "k4hollow") ++hollow_failed;
                }
            }
        };
        run_pairs("k4hollow", 8, 2, 2);
        run_pairs("c4", 3, 2, 2);
        run_pairs("c3", 3, 2, 2);
        run_pairs("rp2", 3, 1, 2);
        run_pairs("torus7", 3, 1, 2);
        r.detail = "inconclusive " + std::to_string(failed) + "/" + std::to_string(total) +
                   " (hollow " + std::to_string(hollow_failed) + ")";
        r.status = failed == 0 ? CheckStatus::Pass
                               : (hollow_failed == 0 ? CheckStatus::Inconclusive : CheckStatus::Fail);
        return r;
    });
    ck.run("second-homotopy signal of the hollow 3-simplex", true, [&]() {
        CheckResult r;
        CycleClassifier h2(hollow, 2);
        if (sphere_class(h2, deg1).is_zero()) {
            r.status = CheckStatus::Fail;
            r.detail = "degree oracle lost the fundamental class";
            return r;
        }
        int observed = -1;
        std::string inv_detail;
        for (int k = 3; k <= 4 && observed < 0; ++k) {
            auto s = OmegaSkeleton::build(hollow, k, 2, {}, cfg.workers);
            auto comps = s.components();
            auto data = edge_group_data(s, s.basepoint_vertex());
            AbelianStructure ab(data.presentation);
            auto path = phi_path(deg1, s);
            auto word = data.read_word(std::vector<int>(path.begin(), path.end()));
            auto cls = ab.classify(word);
            (void)comps;
            if (!cls.is_zero() && ab.invariants().rank >= 1) {
                observed = k;
                inv_detail = ab.invariants().to_string();
            }
        }
        if (observed < 0) {
            r.status = CheckStatus::Inconclusive;
            r.detail = "no nontrivial class up to the cap";
        } else {
            r.status = CheckStatus::Pass;
            r.detail = "observed cap k=" + std::to_string(observed) + "; " + inv_detail;
        }
        return r;
    });
    ck.check("normalized loops factor through spheres", [&](std::string& d) {
        auto s = OmegaSkeleton::build(hollow, 3, 3, {}, cfg.workers);
        Rng rng(cfg.seed + 13);
        for (int t = 0; t < 25; ++t) {
            auto p = random_omega_loop(s, 2 + rng.uniform(0, 5), rng);
            auto norm = normalize_loop_in_omega(s, p);
            validate_certificate(s, norm.log);
            auto f = omega_loop_to_fs(s, norm.middle);
            if (phi_path(f, s) != norm.normal) {
                d = "factorization mismatch";
                return false;
            }
        }
        return true;
    });
}

// --------------------------------------------------------------------- stone

void suite_stone(Checker& ck, const VerifyConfig& cfg) {
    ck.check("boundary operators square to zero", [&](std::string& d) {
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            for (int k = 1; k <= 3; ++k) chain_complex_of_stone(x, k, 3);
        }
        (void)d;
        return true; // construction asserts dd = 0
    });
    ck.check("truncated loop space and chain approximation have equal homology", [&](std::string& d) {
        int hi = cfg.max_len >= 0 ? cfg.max_len : 4;
        for (const auto& name : small_corpus()) {
            auto x = corpus_complex(name);
            for (int k = 1; k <= hi; ++k) {
                auto s = OmegaSkeleton::build(x, k, 3, {}, cfg.workers);
                auto hs = simplicial_homology(s, 2);
                auto hn = chain_complex_of_stone(x, k, 3).graded.homology(2);
                if (!(hs == hn)) {
                    d = name + " k=" + std::to_string(k) + ": " + hs.to_string() + " vs " +
                        hn.to_string();
                    return false;
                }
            }
        }
        return true;
    });
    ck.check("first homology equals the abelianized edge group", [&](std::string& d) {
        for (const auto& name : corpus_names()) {
            auto x = corpus_complex(name);
            auto inv = abelianization(edge_group_presentation(x).presentation);
            auto h = simplicial_homology(x, 1);
            if (h.betti[1] != inv.rank || h.torsion[1] != inv.torsion) {
                d = name;
                return false;
            }
        }
        return true;
    });
    ck.check("vertex-level image matches components bijectively", [&](std::string& d) {
        auto x = corpus_complex("c4");
        int hi = cfg.max_len >= 0 ? cfg.max_len : 8;
        for (int k = 4; k <= hi; ++k) {
            auto s = OmegaSkeleton::build(x, k, 1, {}, cfg.workers);
            auto comps = s.components();
            auto sc = chain_complex_of_stone(x, k, 1);
            auto [ncomp, cell_comp] = sc.graded.components();
            if (ncomp != comps.count()) {
                d = "k=" + std::to_string(k) + " counts differ";
                return false;
            }
            std::vector<int> pair_of(static_cast<size_t>(comps.count()), -1);
            std::set<int> hit;
            for (int v = 0; v < s.vertex_count(); ++v) {
                auto cell = sc.index.at(stone_vertex_image(s.loop(v), k));
                int cc = cell_comp[static_cast<size_t>(cell.second)];
                int oc = comps.comp_of[static_cast<size_t>(v)];
                if (pair_of[static_cast<size_t>(oc)] < 0) pair_of[static_cast<size_t>(oc)] = cc;
                if (pair_of[static_cast<size_t>(oc)] != cc) {
                    d = "image not constant on a component";
                    return false;
                }
                hit.insert(cc);
            }
            if (static_cast<int>(hit.size()) != ncomp) {
                d = "not a bijection";
                return false;
            }
        }
        return true;
    });
    ck.run("betti stabilization scan (report)", false, [&]() {
        auto x = corpus_complex("c4");
        std::ostringstream out;
        for (int k = 1; k <= 6; ++k) {
            auto s = OmegaSkeleton::build(x, k, 2, {}, cfg.workers);
            auto h = simplicial_homology(s, 1);
            out << (k > 1 ? "; " : "") << "k=" << k << ": b0=" << h.betti[0] << " b1=" << h.betti[1];
        }
        CheckResult r;
        r.status = CheckStatus::Pass;
        r.detail = out.str();
        return r;
    });
}

} // namespace

std::vector<std::string> suite_names() {
    return {"contiguity", "omega", "components", "facegroup", "phi", "stone", "all"};
}

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
    SuiteReport report;
    report.suite = suite;
    Checker ck{report};
    bool known = false;
    auto want = [&suite, &known](const char* name) {
        bool match = suite == name || suite == "all";
        known = known || suite == name;
        return match;
    };
    if (want("contiguity")) suite_contiguity(ck, cfg);
    if (want("omega")) suite_omega(ck, cfg);
    if (want("components")) suite_components(ck, cfg);
    if (want("facegroup")) suite_facegroup(ck, cfg);
    if (want("phi")) suite_phi(ck, cfg);
    if (want("stone")) suite_stone(ck, cfg);
    if (!known && suite != "all") throw ValidationError("unknown suite '" + suite + "'");
    return report;
}

std::string report_to_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite: " << r.suite << "\n";
    for (const auto& c : r.checks) {
        const char* tag = c.status == CheckStatus::Pass          ? "PASS"
                          : c.status == CheckStatus::Inconclusive ? "INCONCLUSIVE"
                                                                   : "FAIL";
        out << "[" << tag << "] " << c.name;
        if (!c.mandatory) out << " (informational)";
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
    out << "result: exit " << r.exit_code() << "\n";
    return out.str();
}

Json report_to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = c.status == CheckStatus::Pass          ? "pass"
                      : c.status == CheckStatus::Inconclusive ? "inconclusive"
                                                               : "fail";
        e["mandatory"] = c.mandatory;
        e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["exit_code"] = r.exit_code();
    return j;
}

} // namespace simploop
