#include "rackmod/report.hpp"

#include <algorithm>

namespace rackmod {

void ValidationReport::add(std::string rule, std::vector<std::int64_t> witness) {
  if (listed_.size() < kMaxListed) {
    listed_.push_back({std::move(rule), std::move(witness)});
  } else {
    ++truncated_;
  }
}

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  for (const auto& v : other.listed_) {
    std::string rule = prefix.empty() ? v.rule : std::string(prefix) + ":" + v.rule;
    add(std::move(rule), v.witness);
  }
  truncated_ += other.truncated_;
}

bool ValidationReport::has(std::string_view rule) const {
  return std::any_of(listed_.begin(), listed_.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::string out = std::to_string(total()) + " violation(s); first: " + listed_.front().rule;
  if (!listed_.front().witness.empty()) {
    out += " [";
    for (std::size_t i = 0; i < listed_.front().witness.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(listed_.front().witness[i]);
    }
    out += "]";
  }
  return out;
}

}  // namespace rackmod
