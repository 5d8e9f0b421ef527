#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace motive {

enum class Status { Pass, Fail, Recorded, Experimental };

std::string status_name(Status s);

struct CertEntry {
  std::string name;
  std::string lemma;  // the statement this entry instantiates
  std::string lhs;
  std::string rhs;
  Status status = Status::Fail;
};

struct Certificate {
  std::string subject;
  long level = 0;
  std::vector<CertEntry> entries;

  void add(std::string name, std::string lemma, std::string lhs, std::string rhs, bool ok) {
    entries.push_back({std::move(name), std::move(lemma), std::move(lhs), std::move(rhs),
                       ok ? Status::Pass : Status::Fail});
  }
  void record(std::string name, std::string lemma, std::string statement) {
    entries.push_back({std::move(name), std::move(lemma), std::move(statement), "", Status::Recorded});
  }
  void append(const Certificate& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

// Formal sums longer than this are rendered as a term count plus digest.
inline constexpr std::size_t kRenderTermLimit = 48;

std::string digest_hex(const std::string& text);

// Joins rendered "coefficient*atom" terms; handles signs, 1 and -1 and zero.
std::string render_terms(const std::vector<std::pair<std::string, std::string>>& coeff_and_atom);

}  // namespace motive
