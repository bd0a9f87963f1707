#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "brunnian/brunnian.hpp"
#include "brunnian/presentation.hpp"
#include "brunnian/sprime.hpp"

namespace bf {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const json& j);
json to_json(const LinkPresentation& p);
// Schema-checked; throws IoError on any structural problem.
LinkPresentation presentation_from_json(const json& j);

// Accepts a presentation JSON document, a PD code or Gauss code. Diagram-only
// inputs become a presentation with an empty registry.
LinkPresentation read_presentation(const std::string& text);

// SHA-256 of the compact serialization.
std::string digest(const LinkPresentation& p);

json to_json(const Move& m);
Move move_from_json(const json& j);
json to_json(const Word& w);
json to_json(const StabilityVerdict& v);
json to_json(const SnResult& r);
json to_json(const BrunnianReport& r);
json to_json(const InteriorReport& r);
json to_json(const Refutation& r);

json sprime_certificate(const LinkPresentation& p, const CaseAnalysis& ca, const SimplifyBudget& b);
json untied_certificate(const LinkPresentation& p, const UntiedReport& r);

// Digest over everything except the "digest" and "sidecar" fields.
std::string certificate_digest(const json& cert);

struct ReplayResult {
    bool ok = true;
    std::vector<std::string> problems;
};

// Re-verifies every machine-checkable claim of a certificate against the
// presentation alone (digest, evidence payloads, orbit cover, verdict).
ReplayResult replay_certificate(const json& cert, const LinkPresentation& p);

}  // namespace bf
