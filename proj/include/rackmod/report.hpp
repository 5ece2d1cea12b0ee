#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rackmod {

/// One failing instance of an axiom, e.g. rule "self-distributive" with
/// witness {a, b, c}.
struct Violation {
  std::string rule;
  std::vector<std::int64_t> witness;

  bool operator==(const Violation&) const = default;
};

/// Outcome of a validator. At most kMaxListed violations are stored; the rest
/// are only counted.
class ValidationReport {
 public:
  static constexpr std::size_t kMaxListed = 100;

  void add(std::string rule, std::vector<std::int64_t> witness = {});
  /// Appends the violations of `other`, prefixing their rule names.
  void merge(const ValidationReport& other, std::string_view prefix = {});

  bool valid() const noexcept { return listed_.empty() && truncated_ == 0; }
  explicit operator bool() const noexcept { return valid(); }

  const std::vector<Violation>& violations() const noexcept { return listed_; }
  std::size_t truncated() const noexcept { return truncated_; }
  std::size_t total() const noexcept { return listed_.size() + truncated_; }

  bool has(std::string_view rule) const;
  std::string summary() const;

 private:
  std::vector<Violation> listed_;
  std::size_t truncated_ = 0;
};

}  // namespace rackmod
