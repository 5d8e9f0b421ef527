#pragma once

#include <string>

#include <json.hpp>

#include "motive/certificate.hpp"

namespace motive::report {

using Json = nlohmann::ordered_json;

extern const char* const kToolVersion;

Json invariants_json(int level);
Json lattice_json(int level);
Json certificate_json(const Certificate& c);
Json decompose_json(int level, bool threefold);
Json filtration_json(int level, bool threefold);
Json experimental_json(int level);

struct Result {
  Json json;
  std::size_t failures = 0;  // non-experimental failures only
};

// Every table and certificate for one level. Certificates run concurrently;
// the output order is fixed.
Result run_report(int level);

// Surface certificate, plus the threefold one when requested.
Result run_verify(int level, bool threefold);

// Aligned plain-text renderings for --format text.
std::string invariants_text(int level);
std::string lattice_text(int level);
std::string decompose_text(int level, bool threefold);
std::string filtration_text(int level, bool threefold);
std::string certificate_text(const Json& certificates);

}  // namespace motive::report
