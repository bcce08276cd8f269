#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pseries {

enum class Status { Irreducible, Reducible, Inconclusive, PreconditionFailed };

inline std::string status_str(Status s) {
  switch (s) {
    case Status::Irreducible: return "Irreducible";
    case Status::Reducible: return "Reducible";
    case Status::Inconclusive: return "Inconclusive";
    case Status::PreconditionFailed: return "PreconditionFailed";
  }
  return "?";
}

struct Witness {
  std::string kind;  // "pair" | "root" | "weyl" | "subset" | "coordinate" | "chain" | "bullet"
  std::vector<int> indices;
  std::string text;
};

struct TraceEntry {
  std::string condition_id;
  std::string text;
  bool holds = false;
  std::optional<Witness> witness;
};

struct Verdict {
  Status status = Status::Inconclusive;
  std::string theorem_id;
  std::vector<TraceEntry> trace;
  std::optional<Witness> witness;       // the deciding witness, when one exists
  std::vector<std::string> notes;       // informational flags, never decisive
  std::string message;                  // human summary

  TraceEntry& add(const std::string& id, const std::string& text, bool holds,
                  std::optional<Witness> w = std::nullopt) {
    trace.push_back({id, text, holds, std::move(w)});
    return trace.back();
  }
};

}  // namespace pseries
