#include "knotzeta/verdict.hpp"

#include <utility>

namespace knotzeta {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Verdict compare(std::string check, bool equal, std::string lhs, std::string rhs, std::string horizon,
                std::string detail) {
  return Verdict{std::move(check), equal ? Status::pass : Status::fail, std::move(lhs), std::move(rhs),
                 std::move(horizon), std::move(detail)};
}

Verdict skipped(std::string check, std::string reason, std::string horizon) {
  return Verdict{std::move(check), Status::skipped, {}, {}, std::move(horizon), std::move(reason)};
}

Verdict combine(std::string check, const std::vector<Verdict>& parts) {
  Verdict v;
  v.check = std::move(check);
  bool any_pass = false;
  for (const auto& p : parts) {
    if (p.failed()) {
      v.status = Status::fail;
      if (v.lhs.empty()) {
        v.lhs = p.lhs;
        v.rhs = p.rhs;
      }
    }
    any_pass = any_pass || p.passed();
    if (!v.horizon.empty() && !p.horizon.empty()) v.horizon += "; ";
    v.horizon += p.horizon;
    std::string line = p.check + ": " + std::string(to_string(p.status));
    if (!p.detail.empty()) line += " (" + p.detail + ")";
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += line;
  }
  if (v.status != Status::fail) {
    v.status = any_pass ? Status::pass : Status::skipped;
    if (!parts.empty()) {
      for (const auto& p : parts) {
        if (p.passed()) {
          v.lhs = p.lhs;
          v.rhs = p.rhs;
          break;
        }
      }
    }
  }
  return v;
}

}  // namespace knotzeta
