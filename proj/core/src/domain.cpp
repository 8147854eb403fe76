#include "huddle/domain.hpp"

#include <set>

namespace huddle {

void SessionConfig::validate() const {
  if (session_id.empty()) throw ConfigError("session_id must be non-empty");
  if (bucket_len_ms <= 0) throw ConfigError("bucket_len_ms must be > 0");
  if (hop_ms <= 0) throw ConfigError("hop_ms must be > 0");
  if (hop_ms > bucket_len_ms)
    throw ConfigError("hop_ms must not exceed bucket_len_ms");
  if (participants.empty()) throw ConfigError("participants must be non-empty");
  std::set<ParticipantId> uniq(participants.begin(), participants.end());
  if (uniq.size() != participants.size())
    throw ConfigError("participant ids must be unique");
  if (!(0.0 < speaking_low && speaking_low < speaking_high &&
        speaking_high < 1.0))
    throw ConfigError("speaking thresholds must satisfy 0 < low < high < 1");
  if (!(0.0 < proximity_close_m && proximity_close_m < proximity_social_m))
    throw ConfigError("proximity thresholds must satisfy 0 < close < social");
  if (late_tolerance_ms < 0) throw ConfigError("late_tolerance_ms must be >= 0");
  if (insight_timeout_ms <= 0)
    throw ConfigError("insight_timeout_ms must be > 0");
  if (insight_parallelism < 1)
    throw ConfigError("insight_parallelism must be >= 1");
  if (few_shot_k < 0) throw ConfigError("few_shot_k must be >= 0");
  if (turn_count_cap < 1) throw ConfigError("turn_count_cap must be >= 1");
  if (distance_norm_cap_m <= 0.0)
    throw ConfigError("distance_norm_cap_m must be > 0");
  if (!(0.0 <= min_action_confidence && min_action_confidence <= 1.0))
    throw ConfigError("min_action_confidence must be in [0,1]");
  if (vocab.actions.empty() || vocab.speech_acts.empty() ||
      vocab.speaking_states.empty() || vocab.proximity_states.empty())
    throw ConfigError("vocabulary lists must be non-empty");
  bool has_idle = false, has_other = false;
  for (const auto& a : vocab.actions) {
    if (a == "idle") has_idle = true;
    if (a == "other") has_other = true;
  }
  if (!has_idle || !has_other)
    throw ConfigError("action vocabulary must contain \"idle\" and \"other\"");
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Speaker: return "speaker";
    case EventKind::Transcript: return "transcript";
    case EventKind::Pose: return "pose";
    case EventKind::Action: return "action";
    case EventKind::Control: return "session";
  }
  return "unknown";
}

std::vector<std::int64_t> windows_containing(TimestampMs ts,
                                             const SessionConfig& cfg) {
  if (ts < cfg.start_ts)
    throw EventBeforeSession("event timestamp precedes session start");
  const std::int64_t offset = ts - cfg.start_ts;
  const std::int64_t first =
      offset >= cfg.bucket_len_ms
          ? (offset - cfg.bucket_len_ms) / cfg.hop_ms + 1
          : 0;
  const std::int64_t last = offset / cfg.hop_ms;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t k = first; k <= last; ++k) out.push_back(k);
  return out;
}

std::vector<std::int64_t> windows_overlapping(TimestampMs ts_start,
                                              TimestampMs ts_end,
                                              const SessionConfig& cfg) {
  if (ts_start < cfg.start_ts)
    throw EventBeforeSession("segment start precedes session start");
  if (ts_end <= ts_start) return {};
  const std::int64_t o_start = ts_start - cfg.start_ts;
  const std::int64_t o_end = ts_end - cfg.start_ts;
  const std::int64_t first =
      o_start >= cfg.bucket_len_ms
          ? (o_start - cfg.bucket_len_ms) / cfg.hop_ms + 1
          : 0;
  // Window k overlaps iff k*hop < o_end, i.e. k <= floor((o_end-1)/hop).
  const std::int64_t last = (o_end - 1) / cfg.hop_ms;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (std::int64_t k = first; k <= last; ++k) out.push_back(k);
  return out;
}

std::int64_t bucket_count(DurationMs session_len_ms, const SessionConfig& cfg) {
  if (session_len_ms < cfg.bucket_len_ms) return 0;
  return (session_len_ms - cfg.bucket_len_ms) / cfg.hop_ms + 1;
}

}  // namespace huddle
