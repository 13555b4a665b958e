#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotzeta {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// Outcome of comparing two computations. A failed verdict always carries
/// both sides; a skipped one carries the reason in `detail`.
struct Verdict {
  std::string check;
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  std::string horizon;
  std::string detail;

  bool passed() const noexcept { return status == Status::pass; }
  bool failed() const noexcept { return status == Status::fail; }
};

Verdict compare(std::string check, bool equal, std::string lhs, std::string rhs, std::string horizon = {},
                std::string detail = {});
Verdict skipped(std::string check, std::string reason, std::string horizon = {});

/// Pass when no part failed; the parts' details are joined into `detail`.
Verdict combine(std::string check, const std::vector<Verdict>& parts);

}  // namespace knotzeta
