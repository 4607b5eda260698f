#include "simploop/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

namespace simploop {

Word free_reduce(Word w) {
    std::vector<int> out;
    for (int x : w.letters) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w.letters = std::move(out);
    return w;
}

Word inverse_word(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word concat_words(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(std::move(out));
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
    }
    return w;
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream out;
    out << "rank " << rank << ", torsion [";
    for (size_t i = 0; i < torsion.size(); ++i) out << (i ? "," : "") << torsion[i];
    out << "]";
    return out.str();
}

bool AbelianClass::is_zero() const {
    for (const Int& v : torsion_part)
        if (v != 0) return false;
    for (const Int& v : free_part)
        if (v != 0) return false;
    return true;
}

AbelianStructure::AbelianStructure(const Presentation& p) : gens_(static_cast<int>(p.generators.size())) {
    // Columns of R^T are relators (exponent sums); cokernel of R^T is H1.
    Mat rt(gens_, static_cast<int>(p.relators.size()));
    for (int j = 0; j < rt.cols(); ++j)
        for (int x : p.relators[static_cast<size_t>(j)].letters) {
            int g = std::abs(x) - 1;
            rt.at(g, j) += x > 0 ? 1 : -1;
        }
    SmithForm snf = smith_normal_form(std::move(rt), true);
    diag_ = snf.diag;
    u_ = std::move(snf.U);
    inv_.rank = gens_ - snf.rank;
    inv_.torsion = snf.torsion();
}

AbelianClass AbelianStructure::classify(const Word& w) const {
    std::vector<Int> exp(static_cast<size_t>(gens_));
    for (int x : w.letters) exp[static_cast<size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    std::vector<Int> u(static_cast<size_t>(gens_));
    if (gens_ > 0)
        for (int i = 0; i < gens_; ++i)
            for (int j = 0; j < gens_; ++j)
                if (u_.at(i, j) != 0 && exp[static_cast<size_t>(j)] != 0)
                    u[static_cast<size_t>(i)] += u_.at(i, j) * exp[static_cast<size_t>(j)];
    AbelianClass out;
    int rank = static_cast<int>(diag_.size());
    for (int i = 0; i < rank; ++i) {
        if (diag_[static_cast<size_t>(i)] > 1) {
            Int r = u[static_cast<size_t>(i)] % diag_[static_cast<size_t>(i)];
            if (r < 0) r += diag_[static_cast<size_t>(i)];
            out.torsion_part.push_back(r);
        }
    }
    for (int i = rank; i < gens_; ++i) out.free_part.push_back(u[static_cast<size_t>(i)]);
    return out;
}

AbelianInvariants abelianization(const Presentation& p) { return AbelianStructure(p).invariants(); }

Word EdgeGroupData::read_word(std::span<const int> seq) const {
    Word w;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        int a = seq[i], b = seq[i + 1];
        if (a == b) continue;
        auto key = std::minmax(a, b);
        auto it = gen_of_edge.find({key.first, key.second});
        if (it == gen_of_edge.end())
            throw ValidationError("walk uses {" + std::to_string(a) + "," + std::to_string(b) +
                                  "}, not an edge of the basepoint component");
        if (tree_gen[static_cast<size_t>(it->second)]) continue;
        w.letters.push_back(a < b ? it->second + 1 : -(it->second + 1));
    }
    return free_reduce(std::move(w));
}

std::vector<int> EdgeGroupData::tree_path_from_base(int v) const {
    if (!in_component[static_cast<size_t>(v)])
        throw ValidationError("vertex " + std::to_string(v) + " not in basepoint component");
    std::vector<int> path{v};
    while (path.back() != base) path.push_back(tree_parent[static_cast<size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace detail {

EdgeGroupData edge_group_from_graph(int base, int vertex_count,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::array<int, 3>>& triangles,
                                    const std::vector<std::vector<int>>& closed_nbrs,
                                    bool allow_isolated) {
    EdgeGroupData data;
    data.base = base;
    data.in_component.assign(static_cast<size_t>(vertex_count), 0);
    data.tree_parent.assign(static_cast<size_t>(vertex_count), -1);

    if (!allow_isolated && closed_nbrs[static_cast<size_t>(base)].size() <= 1 && vertex_count > 1) {
        bool isolated = true;
        for (auto [a, b] : edges)
            if (a == base || b == base) { isolated = false; break; }
        if (isolated) throw ValidationError("basepoint is isolated");
    }

    std::deque<int> queue{base};
    data.in_component[static_cast<size_t>(base)] = 1;
    std::vector<std::pair<int, int>> tree_edges;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : closed_nbrs[static_cast<size_t>(v)]) {
            if (w == v || data.in_component[static_cast<size_t>(w)]) continue;
            data.in_component[static_cast<size_t>(w)] = 1;
            data.tree_parent[static_cast<size_t>(w)] = v;
            tree_edges.emplace_back(std::min(v, w), std::max(v, w));
            queue.push_back(w);
        }
    }

    for (auto [a, b] : edges) {
        if (!data.in_component[static_cast<size_t>(a)] || !data.in_component[static_cast<size_t>(b)]) continue;
        int gen = static_cast<int>(data.edge_of_gen.size());
        data.edge_of_gen.emplace_back(a, b);
        data.gen_of_edge[{a, b}] = gen;
    }
    data.tree_gen.assign(data.edge_of_gen.size(), 0);
    data.presentation.generators.reserve(data.edge_of_gen.size());
    for (auto [a, b] : data.edge_of_gen)
        data.presentation.generators.push_back("e" + std::to_string(a) + "_" + std::to_string(b));

    for (auto e : tree_edges) {
        int gen = data.gen_of_edge.at(e);
        data.tree_gen[static_cast<size_t>(gen)] = 1;
        data.presentation.relators.push_back(Word{{gen + 1}});
    }
    for (const auto& t : triangles) {
        if (!data.in_component[static_cast<size_t>(t[0])]) continue;
        int gab = data.gen_of_edge.at({t[0], t[1]});
        int gbc = data.gen_of_edge.at({t[1], t[2]});
        int gac = data.gen_of_edge.at({t[0], t[2]});
        data.presentation.relators.push_back(free_reduce(Word{{gab + 1, gbc + 1, -(gac + 1)}}));
    }
    return data;
}

} // namespace detail

BasepointConjugation change_of_basepoint(const EdgeGroupData& data, std::span<const int> eta) {
    if (eta.empty()) throw ValidationError("empty basepoint path");
    if (eta.front() != data.base)
        throw ValidationError("basepoint path must start at the presentation base");
    return BasepointConjugation{data.read_word(eta)};
}

Word InducedHom::apply(const Word& w) const {
    Word out;
    for (int x : w.letters) {
        const Word& img = gen_images.at(static_cast<size_t>(std::abs(x) - 1));
        Word piece = x > 0 ? img : inverse_word(img);
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return free_reduce(std::move(out));
}

InducedHom induced_hom(const SimplicialMap& f, const EdgeGroupData& px, const EdgeGroupData& py) {
    if (!f.is_based()) throw ValidationError("induced homomorphism needs a based map");
    auto chk = check_simplicial(f);
    if (!chk.ok) throw ValidationError("map is not simplicial");
    InducedHom out;
    for (auto [a, b] : px.edge_of_gen) {
        // Embed the generator as a based loop through the tree, then push
        // it through f and read the image word.
        std::vector<int> loop = px.tree_path_from_base(a);
        loop.push_back(b);
        auto back = px.tree_path_from_base(b);
        std::reverse(back.begin(), back.end());
        loop.insert(loop.end(), back.begin(), back.end());
        std::vector<int> image;
        image.reserve(loop.size());
        for (int v : loop) image.push_back(f(v));
        out.gen_images.push_back(py.read_word(image));
    }
    return out;
}

namespace {

// Canonical representative among all rotations of w and of its inverse;
// used to deduplicate relators.
Word canonical_cyclic(const Word& w) {
    Word best = w;
    auto consider_rotations = [&best](const Word& base) {
        Word rot = base;
        for (size_t i = 0; i < std::max<size_t>(rot.letters.size(), 1); ++i) {
            if (rot.letters < best.letters) best = rot;
            if (rot.letters.empty()) break;
            std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        }
    };
    consider_rotations(w);
    consider_rotations(inverse_word(w));
    return best;
}

void substitute_generator(std::vector<Word>& relators, int gen, const Word& image) {
    for (Word& r : relators) {
        Word out;
        for (int x : r.letters) {
            if (std::abs(x) - 1 == gen) {
                Word piece = x > 0 ? image : inverse_word(image);
                out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
            } else {
                out.letters.push_back(x);
            }
        }
        r = cyclic_reduce(std::move(out));
    }
}

void drop_generator(Presentation& p, int gen) {
    p.generators.erase(p.generators.begin() + gen);
    for (Word& r : p.relators)
        for (int& x : r.letters) {
            int g = std::abs(x) - 1;
            if (g > gen) x = x > 0 ? x - 1 : x + 1;
        }
}

void cleanup(Presentation& p) {
    for (Word& r : p.relators) r = canonical_cyclic(cyclic_reduce(std::move(r)));
    std::sort(p.relators.begin(), p.relators.end(),
              [](const Word& a, const Word& b) {
                  return a.letters.size() != b.letters.size() ? a.letters.size() < b.letters.size()
                                                              : a.letters < b.letters;
              });
    p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());
    std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
}

} // namespace

Presentation tietze_simplify(Presentation p, long long effort) {
    cleanup(p);
    long long steps = 0;
    for (;;) {
        if (steps >= effort) break;
        // Pick the (relator, generator) pair with a single occurrence of the
        // generator, preferring short relators; deterministic tie-breaking.
        int best_rel = -1, best_gen = -1;
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            const Word& r = p.relators[ri];
            std::map<int, int> count;
            for (int x : r.letters) ++count[std::abs(x) - 1];
            for (int x : r.letters) {
                int g = std::abs(x) - 1;
                if (count[g] != 1) continue;
                if (best_rel < 0 ||
                    p.relators[static_cast<size_t>(best_rel)].letters.size() > r.letters.size() ||
                    (p.relators[static_cast<size_t>(best_rel)].letters.size() == r.letters.size() &&
                     g < best_gen)) {
                    best_rel = static_cast<int>(ri);
                    best_gen = g;
                }
            }
        }
        if (best_rel < 0) break;
        ++steps;

        // Rotate so the eliminated generator leads, solve for it, substitute.
        Word r = p.relators[static_cast<size_t>(best_rel)];
        size_t pos = 0;
        while (std::abs(r.letters[pos]) - 1 != best_gen) ++pos;
        std::rotate(r.letters.begin(), r.letters.begin() + static_cast<long>(pos), r.letters.end());
        int sign = r.letters[0] > 0 ? 1 : -1;
        Word rest{std::vector<int>(r.letters.begin() + 1, r.letters.end())};
        Word image = sign > 0 ? inverse_word(rest) : rest;
        p.relators.erase(p.relators.begin() + best_rel);
        substitute_generator(p.relators, best_gen, image);
        drop_generator(p, best_gen);
        cleanup(p);
    }
    return p;
}

} // namespace simploop
