#pragma once

#include <optional>
#include <string>

#include "redform/core.hpp"

namespace redform {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk instance document: type labels, priors as "p/q" strings, the
// alternative set with its k0 label, and optional interim / expost sections.
struct InstanceFile {
  Instance inst;
  std::optional<InterimRule> interim;
  std::optional<ExPostRule> expost;
};

InstanceFile parse_instance_file(const std::string& text);
std::string write_instance_file(const InstanceFile& f);

// FNV-1a over the canonical serialization; echoed in reports so fuzz
// failures are addressable.
std::uint64_t content_hash(const std::string& text);
std::string hash_hex(std::uint64_t h);

std::string format_set1(const Instance& inst, std::uint32_t mask);  // E1
std::string format_set2(const Instance& inst, std::uint32_t mask);  // E2
std::string format_alt_set(const Instance& inst, std::uint32_t gmask);
std::string format_violation(const Instance& inst, const Violation& v);

}  // namespace redform
