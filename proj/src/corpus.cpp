#include "simploop/corpus.hpp"

namespace simploop {

const std::vector<CorpusEntry>& bundled_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"point", "basepoint x0\nx0\n"},
        {"c3", "basepoint x0\nx0 v1\nv1 v2\nv2 x0\n"},
        {"c4", "basepoint x0\nx0 v1\nv1 v2\nv2 v3\nv3 x0\n"},
        {"delta3", "basepoint x0\nx0 v1 v2 v3\n"},
        {"k4hollow", "basepoint x0\nx0 v1 v2\nx0 v1 v3\nx0 v2 v3\nv1 v2 v3\n"},
        // 6-vertex projective plane: 1-skeleton K6, every edge in two
        // triangles, Euler characteristic 1.
        {"rp2",
         "basepoint x0\n"
         "x0 v1 v2\nx0 v1 v3\nx0 v2 v4\nx0 v3 v5\nx0 v4 v5\n"
         "v1 v2 v5\nv1 v3 v4\nv1 v4 v5\nv2 v3 v4\nv2 v3 v5\n"},
        // 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
        {"torus7",
         "basepoint x0\n"
         "x0 v1 v3\nv1 v2 v4\nv2 v3 v5\nv3 v4 v6\nv4 v5 x0\nv5 v6 v1\nv6 x0 v2\n"
         "x0 v2 v3\nv1 v3 v4\nv2 v4 v5\nv3 v5 v6\nv4 v6 x0\nv5 x0 v1\nv6 v1 v2\n"},
    };
    return corpus;
}

SimplicialComplex corpus_complex(const std::string& name) {
    for (const auto& e : bundled_corpus())
        if (e.name == name) return SimplicialComplex::load(e.text);
    throw ValidationError("unknown bundled complex '" + name + "'");
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& e : bundled_corpus()) out.push_back(e.name);
    return out;
}

} // namespace simploop
