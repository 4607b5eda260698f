#include "simploop/jsonio.hpp"

#include <sstream>

#include "simploop/version.hpp"

namespace simploop {

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << h;
    return out.str();
}

Json artifact_envelope(const Json& config, const std::string& input_bytes) {
    Json j;
    j["tool"] = "simploop";
    j["version"] = kVersion;
    j["config"] = config;
    j["input_digest"] = digest(input_bytes);
    return j;
}

Json complex_to_json(const SimplicialComplex& x) {
    Json j;
    j["vertices"] = x.labels();
    Json facets = Json::array();
    for (const auto& f : x.facets()) {
        Json row = Json::array();
        for (int v : f) row.push_back(x.label(v));
        facets.push_back(row);
    }
    j["facets"] = facets;
    j["basepoint"] = x.label(x.basepoint());
    return j;
}

Json loop_to_json(const EdgeLoop& l) { return l.to_literal(); }

Json chain_to_json(std::span<const EdgeLoop> chain) {
    Json j = Json::array();
    for (const auto& l : chain) j.push_back(l.to_literal());
    return j;
}

Json skeleton_to_json(const OmegaSkeleton& s) {
    Json j;
    j["max_len"] = s.max_len();
    j["max_dim"] = s.max_dim();
    Json verts = Json::array();
    for (int v = 0; v < s.vertex_count(); ++v) verts.push_back(s.loop(v).to_literal());
    j["vertices"] = verts;
    Json simp;
    for (int d = 1; d <= s.max_dim(); ++d) simp[std::to_string(d)] = s.simplices(d);
    j["simplices"] = simp;
    return j;
}

Json components_to_json(const OmegaSkeleton& s) {
    auto comps = s.components();
    Json j;
    j["count"] = comps.count();
    Json list = Json::array();
    for (int c = 0; c < comps.count(); ++c) {
        Json e;
        e["id"] = c;
        e["size"] = comps.size[static_cast<size_t>(c)];
        e["representative"] = s.loop(comps.representative[static_cast<size_t>(c)]).to_literal();
        list.push_back(e);
    }
    j["components"] = list;
    return j;
}

Json presentation_to_json(const Presentation& p) {
    Json j;
    j["generators"] = p.generators;
    Json rel = Json::array();
    for (const auto& w : p.relators) rel.push_back(w.letters);
    j["relators"] = rel;
    return j;
}

Json abelian_to_json(const AbelianInvariants& a) {
    Json j;
    j["rank"] = a.rank;
    Json t = Json::array();
    for (const auto& d : a.torsion) t.push_back(d.str());
    j["torsion"] = t;
    return j;
}

Json homology_to_json(const HomologyResult& h) {
    Json j;
    for (size_t d = 0; d < h.betti.size(); ++d) {
        Json e;
        e["betti"] = h.betti[d];
        Json t = Json::array();
        for (const auto& v : h.torsion[d]) t.push_back(v.str());
        e["torsion"] = t;
        j[std::to_string(d)] = e;
    }
    return j;
}

Json cert_to_json(const OmegaSkeleton& s, const OmegaPathCert& cert) {
    auto path_json = [&s](const OmegaPath& p) {
        Json arr = Json::array();
        for (int id : p) arr.push_back(s.loop(id).to_literal());
        return arr;
    };
    Json j;
    j["start"] = path_json(cert.start);
    Json steps = Json::array();
    for (const auto& st : cert.steps) {
        Json e;
        switch (st.kind) {
        case OmegaPathStep::Kind::Extend: e["kind"] = "extend"; e["pos"] = st.pos; break;
        case OmegaPathStep::Kind::Contract: e["kind"] = "contract"; e["pos"] = st.pos; break;
        case OmegaPathStep::Kind::Move: e["kind"] = "move"; break;
        }
        e["result"] = path_json(st.result);
        steps.push_back(e);
    }
    j["steps"] = steps;
    return j;
}

Json sphere_to_json(const FaceSphere& f) {
    Json rows = Json::array();
    for (int j = 0; j <= f.n; ++j) {
        Json row = Json::array();
        for (int i = 0; i <= f.m; ++i) row.push_back(f.cx->label(f.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

FaceSphere sphere_from_json(const SimplicialComplex& x, const Json& j) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : j) {
        std::vector<std::string> r;
        for (const auto& cell : row) r.push_back(cell.get<std::string>());
        rows.push_back(std::move(r));
    }
    return sphere_from_rows(x, rows);
}

} // namespace simploop
