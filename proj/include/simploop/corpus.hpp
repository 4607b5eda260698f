#ifndef SIMPLOOP_CORPUS_HPP
#define SIMPLOOP_CORPUS_HPP

#include <string>
#include <vector>

#include "simploop/complex.hpp"

namespace simploop {

/// The complexes every verification suite runs over: a point, the 3- and
/// 4-cycles, the solid and hollow 3-simplex, the 6-vertex projective
/// plane, and the 7-vertex torus.  They cover trivial, free, torsion and
/// simply connected edge groups.
struct CorpusEntry {
    std::string name;
    std::string text; // facet-list format
};

const std::vector<CorpusEntry>& bundled_corpus();
SimplicialComplex corpus_complex(const std::string& name);
std::vector<std::string> corpus_names();

} // namespace simploop

#endif
