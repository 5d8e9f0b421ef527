#include "motive/certificate.hpp"

#include <cstdint>
#include <cstdio>

namespace motive {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Recorded: return "recorded";
    case Status::Experimental: return "experimental";
  }
  return "fail";
}

std::size_t Certificate::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.status == Status::Fail) ++n;
  return n;
}

std::string digest_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render_terms(const std::vector<std::pair<std::string, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string full;
  bool first = true;
  for (const auto& [coeff, atom] : terms) {
    bool negative = !coeff.empty() && coeff[0] == '-';
    std::string mag = negative ? coeff.substr(1) : coeff;
    if (first) {
      if (negative) full += "-";
    } else {
      full += negative ? " - " : " + ";
    }
    if (mag != "1") full += mag + "*";
    full += atom;
    first = false;
  }
  if (terms.size() <= kRenderTermLimit) return full;
  return "<" + std::to_string(terms.size()) + " terms, fnv1a " + digest_hex(full) + ">";
}

}  // namespace motive
