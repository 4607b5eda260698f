#include "simploop/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace simploop {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::load(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> facets;
    std::string basepoint;
    bool saw_basepoint = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "basepoint") {
            if (toks.size() != 2)
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": basepoint line needs exactly one label");
            if (saw_basepoint)
                throw ValidationError("line " + std::to_string(lineno) + ": duplicate basepoint line");
            basepoint = toks[1];
            saw_basepoint = true;
            continue;
        }
        facets.push_back(std::move(toks));
    }
    if (!saw_basepoint) throw ValidationError("missing `basepoint <label>` line");
    return from_facets(facets, basepoint);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets,
                                                 const std::string& basepoint) {
    SimplicialComplex x;
    auto intern = [&x](const std::string& lab) {
        auto it = x.label_index_.find(lab);
        if (it != x.label_index_.end()) return it->second;
        int id = static_cast<int>(x.labels_.size());
        if (id >= 64) throw CapError("complex has too many vertices for bitset storage", id + 1, 64);
        x.labels_.push_back(lab);
        x.label_index_.emplace(lab, id);
        return id;
    };

    std::vector<std::uint64_t> masks;
    for (const auto& f : facets) {
        if (f.empty()) throw ValidationError("empty facet line");
        std::uint64_t m = 0;
        for (const auto& lab : f) {
            int id = intern(lab);
            std::uint64_t bit = 1ULL << id;
            if (m & bit) throw ValidationError("duplicate vertex '" + lab + "' within one facet");
            m |= bit;
        }
        masks.push_back(m);
    }

    auto it = x.label_index_.find(basepoint);
    if (it == x.label_index_.end())
        throw ValidationError("basepoint label '" + basepoint + "' not a vertex of any facet");
    x.basepoint_ = it->second;

    // Maximalize: drop any facet contained in another.
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    for (std::uint64_t m : masks) {
        bool contained = false;
        for (std::uint64_t kept : x.facet_masks_)
            if ((m & kept) == m) { contained = true; break; }
        if (!contained) x.facet_masks_.push_back(m);
    }
    std::sort(x.facet_masks_.begin(), x.facet_masks_.end());

    x.finalize();
    return x;
}

void SimplicialComplex::finalize() {
    int n = vertex_count();
    facets_of_vertex_.assign(static_cast<size_t>(n), {});
    for (int fi = 0; fi < static_cast<int>(facet_masks_.size()); ++fi)
        for (int v = 0; v < n; ++v)
            if (facet_masks_[static_cast<size_t>(fi)] >> v & 1)
                facets_of_vertex_[static_cast<size_t>(v)].push_back(fi);

    closed_nbrs_.assign(static_cast<size_t>(n), {});
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = 0;
        for (int fi : facets_of_vertex_[static_cast<size_t>(v)]) m |= facet_masks_[static_cast<size_t>(fi)];
        m |= 1ULL << v; // isolated vertices still neighbor themselves
        auto& nb = closed_nbrs_[static_cast<size_t>(v)];
        for (int w = 0; w < n; ++w)
            if (m >> w & 1) nb.push_back(w);
    }

    base_dist_.assign(static_cast<size_t>(n), -1);
    std::deque<int> queue{basepoint_};
    base_dist_[static_cast<size_t>(basepoint_)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : closed_nbrs_[static_cast<size_t>(v)])
            if (base_dist_[static_cast<size_t>(w)] < 0) {
                base_dist_[static_cast<size_t>(w)] = base_dist_[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
}

int SimplicialComplex::vertex(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) throw ValidationError("unknown vertex label '" + label + "'");
    return it->second;
}

std::optional<int> SimplicialComplex::find_vertex(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t SimplicialComplex::mask_of(std::span<const int> vertices) const {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= vertex_count())
            throw ValidationError("vertex id " + std::to_string(v) + " not in complex");
        m |= 1ULL << v;
    }
    return m;
}

bool SimplicialComplex::is_simplex(std::span<const int> vertices) const {
    if (vertices.empty()) throw ValidationError("is_simplex: empty vertex set");
    return simplex_mask(mask_of(vertices));
}

bool SimplicialComplex::simplex_mask(std::uint64_t mask) const {
    if (mask == 0) return false;
    int v = std::countr_zero(mask);
    for (int fi : facets_of_vertex_[static_cast<size_t>(v)])
        if ((mask & facet_masks_[static_cast<size_t>(fi)]) == mask) return true;
    return false;
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    std::vector<VertexSet> out;
    out.reserve(facet_masks_.size());
    for (std::uint64_t m : facet_masks_) {
        VertexSet s;
        for (int v = 0; v < vertex_count(); ++v)
            if (m >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

const std::vector<int>& SimplicialComplex::closed_neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw ValidationError("vertex id " + std::to_string(v) + " not in complex");
    return closed_nbrs_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> SimplicialComplex::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b : closed_nbrs_[static_cast<size_t>(a)])
            if (b > a) out.emplace_back(a, b);
    return out;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::simplices_up_to(int max_dim) const {
    std::vector<std::vector<std::uint64_t>> by_dim(static_cast<size_t>(max_dim) + 1);
    // Enumerate subsets of each facet; dedupe via sort+unique per dimension.
    for (std::uint64_t f : facet_masks_) {
        std::vector<int> verts;
        for (int v = 0; v < vertex_count(); ++v)
            if (f >> v & 1) verts.push_back(v);
        int n = static_cast<int>(verts.size());
        for (std::uint64_t sub = 1; sub < (1ULL << n); ++sub) {
            int d = std::popcount(sub) - 1;
            if (d > max_dim) continue;
            std::uint64_t m = 0;
            for (int i = 0; i < n; ++i)
                if (sub >> i & 1) m |= 1ULL << verts[static_cast<size_t>(i)];
            by_dim[static_cast<size_t>(d)].push_back(m);
        }
    }
    std::vector<std::vector<VertexSet>> out(static_cast<size_t>(max_dim) + 1);
    for (int d = 0; d <= max_dim; ++d) {
        auto& v = by_dim[static_cast<size_t>(d)];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        for (std::uint64_t m : v) {
            VertexSet s;
            for (int w = 0; w < vertex_count(); ++w)
                if (m >> w & 1) s.push_back(w);
            out[static_cast<size_t>(d)].push_back(std::move(s));
        }
    }
    return out;
}

std::string SimplicialComplex::to_text() const {
    std::ostringstream out;
    out << "basepoint " << label(basepoint_) << "\n";
    for (const auto& f : facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << label(f[i]);
        out << "\n";
    }
    return out.str();
}

SimplicialCheck check_simplicial(const SimplicialMap& f) {
    if (!f.source || !f.target) throw ValidationError("map missing source or target");
    if (f.image.size() != static_cast<size_t>(f.source->vertex_count()))
        throw ValidationError("vertex assignment not total on source vertices");
    for (int v : f.image)
        if (v < 0 || v >= f.target->vertex_count())
            throw ValidationError("vertex assignment hits id outside target");
    for (const auto& facet : f.source->facets()) {
        std::uint64_t img = 0;
        for (int v : facet) img |= 1ULL << f.image[static_cast<size_t>(v)];
        if (!f.target->simplex_mask(img)) return {false, facet};
    }
    return {};
}

SimplicialMap identity_map(const SimplicialComplex& x) {
    SimplicialMap f{&x, &x, {}};
    f.image.resize(static_cast<size_t>(x.vertex_count()));
    for (int v = 0; v < x.vertex_count(); ++v) f.image[static_cast<size_t>(v)] = v;
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target != g.source) throw ValidationError("compose: inner target differs from outer source");
    SimplicialMap h{f.source, g.target, {}};
    h.image.reserve(f.image.size());
    for (int v : f.image) h.image.push_back(g.image.at(static_cast<size_t>(v)));
    return h;
}

} // namespace simploop
