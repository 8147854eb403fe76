#pragma once

// Line-delimited JSON wire protocol and the serialized admission stage.
//
// One UTF-8 JSON object per newline-terminated line, "v" always 1:
//   speaker:    {"v":1,"type":"speaker","ts":<ms>,"pid":"..","speaking":<bool>}
//   transcript: {"v":1,"type":"transcript","ts_start":<ms>,"ts_end":<ms>,
//                "pid":"..","text":".."}
//   pose:       {"v":1,"type":"pose","ts":<ms>,"pid":"..","x":<m>,"y":<m>,
//                "yaw_deg":<deg>}
//   action:     {"v":1,"type":"action","ts":<ms>,"pid":"..","label":"..",
//                "confidence":<0..1>}
//   control:    {"v":1,"type":"session","ts":<ms>,"op":"start"|"end"}
// Unknown extra fields are ignored.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "huddle/domain.hpp"

namespace huddle {

enum class ParseStatus {
  Ok,
  MalformedLine,    // not valid JSON, invalid UTF-8, or not an object
  SchemaViolation,  // missing or ill-typed field (offender in error_field)
  UnknownType,      // unrecognized "type" discriminator
};

struct ParsedLine {
  ParseStatus status = ParseStatus::MalformedLine;
  std::string error_field;  // set for SchemaViolation
  FeatureEvent event;       // valid when status == Ok
};

ParsedLine parse_event(std::string_view line);

// Inverse of parse_event for valid events; parse(serialize(e)) == e.
std::string serialize_event(const FeatureEvent& event);

enum class AdmitStatus {
  Admitted,
  DroppedDuplicate,
  DroppedLate,
  UnknownParticipant,
  BeforeSession,  // non-control event timestamped before session start
};

// Line counters for one session.
//
// Reconciliation: accepted + malformed_lines + unknown_type + dropped_late
// + duplicates == total lines received. Schema violations, unknown
// participants, and before-session events all count under malformed_lines;
// control lines count under accepted.
struct IngestStats {
  std::uint64_t accepted = 0;
  std::uint64_t malformed_lines = 0;
  std::uint64_t unknown_type = 0;
  std::uint64_t dropped_late = 0;
  std::uint64_t duplicates = 0;
  TimestampMs watermark = 0;

  std::uint64_t total() const {
    return accepted + malformed_lines + unknown_type + dropped_late +
           duplicates;
  }
};

// Single-writer admission stage: dedupe on (kind, ts, pid), bounded-lateness
// watermark. Control events bypass the late check so a session end is never
// lost; they still dedupe and advance the watermark.
class Admitter {
 public:
  explicit Admitter(const SessionConfig& cfg) : cfg_(&cfg) {}

  AdmitStatus admit(const FeatureEvent& event);

  // Session-start control: zero the counters and forget admission history.
  void reset();

  const IngestStats& stats() const { return stats_; }
  IngestStats& stats() { return stats_; }
  TimestampMs watermark() const { return stats_.watermark; }

 private:
  const SessionConfig* cfg_;
  IngestStats stats_;
  std::unordered_set<std::string> seen_;
};

}  // namespace huddle
