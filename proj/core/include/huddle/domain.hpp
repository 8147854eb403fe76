#pragma once

// Core value types shared by every pipeline stage.
//
// Units policy:
// - timestamps and durations are integral milliseconds (int64)
// - distances in metres, angles in degrees

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace huddle {

using TimestampMs = std::int64_t;
using DurationMs = std::int64_t;
using ParticipantId = std::string;

// ---------------------------------------------------------------------------
// Errors

struct EventBeforeSession : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidPose : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateGeometry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDistance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScriptError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndefinedMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientExamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StorageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ChecksumMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BackendError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Indicator vocabulary
//
// Orderings are fixed per session; vector block layouts derive from them.

struct IndicatorVocabulary {
  std::vector<std::string> speaking_states{"silent", "low", "moderate", "high"};
  std::vector<std::string> speech_acts{"question", "statement", "affirmation",
                                       "disagreement", "none"};
  std::vector<std::string> proximity_states{"close", "social", "far"};
  std::vector<std::string> actions{"writing", "gesturing", "manipulating_object",
                                   "idle", "other"};

  // Block dimensions derived from the vocabulary.
  std::size_t d_s() const { return 2 + speaking_states.size(); }
  std::size_t d_c() const { return speech_acts.size(); }
  std::size_t d_p() const { return 3 + proximity_states.size(); }
  std::size_t d_a() const { return actions.size(); }
  std::size_t pattern_dim() const { return d_s() + d_c() + d_p() + d_a(); }
};

// ---------------------------------------------------------------------------
// Session configuration

struct SessionConfig {
  std::string session_id;
  TimestampMs start_ts = 0;  // 0 = fixed by the session-start control event
  std::vector<ParticipantId> participants;

  DurationMs bucket_len_ms = 60000;
  DurationMs hop_ms = 30000;
  DurationMs late_tolerance_ms = 5000;

  double proximity_close_m = 1.0;
  double proximity_social_m = 2.5;
  double facing_threshold_deg = 30.0;
  double speaking_low = 0.2;
  double speaking_high = 0.6;
  double min_action_confidence = 0.2;

  // Normalization caps keeping pattern entries in the unit box.
  int turn_count_cap = 10;
  double distance_norm_cap_m = 5.0;

  DurationMs insight_timeout_ms = 10000;
  int insight_parallelism = 2;
  int few_shot_k = 2;

  IndicatorVocabulary vocab;

  bool has_participant(const ParticipantId& pid) const {
    for (const auto& p : participants)
      if (p == pid) return true;
    return false;
  }

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Feature events

enum class EventKind { Speaker, Transcript, Pose, Action, Control };

enum class ControlOp { Start, End };

struct SpeakerLabel {
  bool speaking = false;
};

struct TranscriptSegment {
  TimestampMs ts_end = 0;  // segment start lives in FeatureEvent::ts
  std::string text;
};

struct PoseSample {
  double x = 0.0;        // metres
  double y = 0.0;        // metres
  double yaw_deg = 0.0;  // [0, 360)
};

struct ActionLabel {
  std::string label;
  double confidence = 1.0;  // [0, 1]
};

struct SessionControl {
  ControlOp op = ControlOp::Start;
};

struct FeatureEvent {
  EventKind kind = EventKind::Speaker;
  TimestampMs ts = 0;  // transcripts: ts_start
  ParticipantId pid;   // empty for control events
  std::variant<SpeakerLabel, TranscriptSegment, PoseSample, ActionLabel,
               SessionControl>
      payload;

  const SpeakerLabel& speaker() const { return std::get<SpeakerLabel>(payload); }
  const TranscriptSegment& transcript() const {
    return std::get<TranscriptSegment>(payload);
  }
  const PoseSample& pose() const { return std::get<PoseSample>(payload); }
  const ActionLabel& action() const { return std::get<ActionLabel>(payload); }
  const SessionControl& control() const {
    return std::get<SessionControl>(payload);
  }
};

const char* to_string(EventKind kind);

// ---------------------------------------------------------------------------
// Bucket aggregates

struct ModalityAggregate {
  std::vector<std::pair<TimestampMs, bool>> speaker_samples;  // ts order
  double speaking_ratio = 0.0;
  int turn_count = 0;
  std::string transcript;  // overlapping segments, ts_start order, space-joined
  struct Pose {
    TimestampMs ts;
    double x, y, yaw_deg;
  };
  std::vector<Pose> pose_samples;  // ts order
  std::vector<std::pair<TimestampMs, std::string>> action_labels;
  std::string dominant_action = "idle";
};

struct TimeBucket {
  std::int64_t index = 0;
  TimestampMs window_start = 0;
  TimestampMs window_end = 0;  // exclusive
  std::map<ParticipantId, ModalityAggregate> per_participant;
  bool finalized = false;
};

// ---------------------------------------------------------------------------
// Behavior pattern vector P = s || c || p || a

struct BehaviorPattern {
  ParticipantId pid;
  std::int64_t bucket_index = 0;
  std::vector<double> s;  // speaking block
  std::vector<double> c;  // content block
  std::vector<double> p;  // proximity block
  std::vector<double> a;  // action block

  std::vector<double> concat() const {
    std::vector<double> out;
    out.reserve(s.size() + c.size() + p.size() + a.size());
    out.insert(out.end(), s.begin(), s.end());
    out.insert(out.end(), c.begin(), c.end());
    out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), a.begin(), a.end());
    return out;
  }
};

// ---------------------------------------------------------------------------
// Window geometry
//
// Half-open windows [start + k*hop, start + k*hop + bucket_len). An event at
// a shared boundary belongs only to the later window.

// All bucket indices whose window contains ts, ascending.
// Throws EventBeforeSession when ts < cfg.start_ts.
std::vector<std::int64_t> windows_containing(TimestampMs ts,
                                             const SessionConfig& cfg);

// Indices of windows overlapped by the half-open interval [ts_start, ts_end).
std::vector<std::int64_t> windows_overlapping(TimestampMs ts_start,
                                              TimestampMs ts_end,
                                              const SessionConfig& cfg);

// Number of complete windows in a session of the given length; 0 when the
// session is shorter than one bucket.
std::int64_t bucket_count(DurationMs session_len_ms, const SessionConfig& cfg);

}  // namespace huddle
