#ifndef SIMPLOOP_JSONIO_HPP
#define SIMPLOOP_JSONIO_HPP

#include <json.hpp>

#include "simploop/facegroup.hpp"
#include "simploop/groups.hpp"
#include "simploop/omega.hpp"
#include "simploop/stone.hpp"

namespace simploop {

using Json = nlohmann::ordered_json;

/// FNV-1a fingerprint of raw bytes, hex-encoded; identifies inputs in
/// artifact envelopes.
std::string digest(const std::string& bytes);

/// Envelope every artifact carries: tool version, the effective
/// configuration, and the input digest.
Json artifact_envelope(const Json& config, const std::string& input_bytes);

Json complex_to_json(const SimplicialComplex& x);
Json skeleton_to_json(const OmegaSkeleton& s);
Json components_to_json(const OmegaSkeleton& s);
Json presentation_to_json(const Presentation& p);
Json abelian_to_json(const AbelianInvariants& a);
Json homology_to_json(const HomologyResult& h);
Json loop_to_json(const EdgeLoop& l);          // literal string
Json chain_to_json(std::span<const EdgeLoop> chain);
Json cert_to_json(const OmegaSkeleton& s, const OmegaPathCert& cert);
Json sphere_to_json(const FaceSphere& f);
FaceSphere sphere_from_json(const SimplicialComplex& x, const Json& j);

} // namespace simploop

#endif
