#pragma once

// Verification reports shared by every checker. Failures are report entries,
// never exceptions.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfcheck/gmod.hpp"

namespace hopf {

enum class Status {
  Pass,                 // identity verified
  NonidentityVerified,  // an expected nonzero value was confirmed
  Fail,
  NotChecked,
};

std::string to_string(Status s);

/// The first failing input and the offending value, serialised as
/// label -> coefficient lists.
struct Witness {
  std::string input;
  std::vector<std::pair<std::string, std::string>> value;
  std::string rendered;

  static Witness of(std::string input, const Element& value);
  static Witness of(std::string input, const Tensor2Element& value);
  static Witness of(std::string input, const RingElement& value);
  static Witness note(std::string input, std::string text);
};

struct CheckEntry {
  CheckEntry() = default;
  CheckEntry(std::string c, std::string a, Status s = Status::Pass, std::optional<Witness> w = std::nullopt,
             std::string d = {})
      : claim(std::move(c)), anchor(std::move(a)), status(s), witness(std::move(w)), detail(std::move(d)) {}

  std::string claim;
  std::string anchor;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string detail;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }

  /// A Fail entry must carry a witness; std::logic_error otherwise.
  void add(CheckEntry e);
  void append(const VerificationReport& other);

  /// No entry has status Fail.
  bool ok() const;
  std::size_t count(Status s) const;
  const CheckEntry* find(std::string_view claim) const;
  const CheckEntry* first_failure() const;

  /// Deterministic JSON text (keys in insertion order, two-space indent).
  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<CheckEntry> entries_;
};

/// Runs `probe` on every label; the first label returning a witness fails the
/// check. An empty label list passes.
CheckEntry check_labels(std::string claim, std::string anchor, std::span<const LabelId> labels,
                        const std::function<std::optional<Witness>(LabelId)>& probe,
                        std::string detail = {});

}  // namespace hopf
