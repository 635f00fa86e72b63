#include "hopfcheck/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hopf {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::NonidentityVerified: return "nonidentity-verified";
    case Status::Fail: return "fail";
    case Status::NotChecked: return "not-checked";
  }
  return "?";
}

Witness Witness::of(std::string input, const Element& value) {
  Witness w;
  w.input = std::move(input);
  for (const auto& [id, c] : value.terms()) w.value.emplace_back(value.basis()->label(id), c.to_string());
  w.rendered = value.to_string();
  return w;
}

Witness Witness::of(std::string input, const Tensor2Element& value) {
  Witness w;
  w.input = std::move(input);
  for (const auto& [k, c] : value.terms())
    w.value.emplace_back(value.basis()->label(k.first) + "|" + value.basis()->label(k.second), c.to_string());
  w.rendered = value.to_string();
  return w;
}

Witness Witness::of(std::string input, const RingElement& value) {
  Witness w;
  w.input = std::move(input);
  w.value.emplace_back("", value.to_string());
  w.rendered = value.pretty();
  return w;
}

Witness Witness::note(std::string input, std::string text) {
  Witness w;
  w.input = std::move(input);
  w.rendered = std::move(text);
  return w;
}

void VerificationReport::add(CheckEntry e) {
  if (e.status == Status::Fail && !e.witness)
    throw std::logic_error("failing check '" + e.claim + "' without witness");
  entries_.push_back(std::move(e));
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& e : other.entries_) add(e);
}

bool VerificationReport::ok() const { return count(Status::Fail) == 0; }

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const CheckEntry& e) { return e.status == s; }));
}

const CheckEntry* VerificationReport::find(std::string_view claim) const {
  for (const auto& e : entries_)
    if (e.claim == claim) return &e;
  return nullptr;
}

const CheckEntry* VerificationReport::first_failure() const {
  for (const auto& e : entries_)
    if (e.status == Status::Fail) return &e;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json je;
    je["claim"] = e.claim;
    je["anchor"] = e.anchor;
    je["status"] = to_string(e.status);
    if (!e.detail.empty()) je["detail"] = e.detail;
    if (e.witness) {
      nlohmann::ordered_json w;
      w["input"] = e.witness->input;
      auto terms = nlohmann::ordered_json::array();
      for (const auto& [label, coeff] : e.witness->value) terms.push_back({label, coeff});
      w["value"] = terms;
      w["rendered"] = e.witness->rendered;
      je["witness"] = w;
    }
    arr.push_back(je);
  }
  j["entries"] = arr;
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "== " << suite_ << " (" << (ok() ? "ok" : "FAILED") << ")\n";
  for (const auto& e : entries_) {
    os << "  [" << to_string(e.status) << "] " << e.claim;
    if (!e.anchor.empty()) os << "  {" << e.anchor << "}";
    if (!e.detail.empty()) os << "  " << e.detail;
    os << '\n';
    if (e.witness) os << "      at " << e.witness->input << ": " << e.witness->rendered << '\n';
  }
  return os.str();
}

CheckEntry check_labels(std::string claim, std::string anchor, std::span<const LabelId> labels,
                        const std::function<std::optional<Witness>(LabelId)>& probe, std::string detail) {
  CheckEntry e{std::move(claim), std::move(anchor), Status::Pass, std::nullopt, std::move(detail)};
  for (LabelId id : labels) {
    if (auto w = probe(id)) {
      e.status = Status::Fail;
      e.witness = std::move(w);
      break;
    }
  }
  return e;
}

}  // namespace hopf
