#include "huddle/ingest.hpp"

#include <cmath>

#include <json.hpp>

namespace huddle {

namespace {

using nlohmann::json;

bool get_int(const json& obj, const char* key, std::int64_t& out) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) return false;
  out = it->get<std::int64_t>();
  return true;
}

bool get_double(const json& obj, const char* key, double& out) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) return false;
  out = it->get<double>();
  return std::isfinite(out);
}

bool get_string(const json& obj, const char* key, std::string& out) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return false;
  out = it->get<std::string>();
  return true;
}

bool get_bool(const json& obj, const char* key, bool& out) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_boolean()) return false;
  out = it->get<bool>();
  return true;
}

ParsedLine schema_error(const char* field) {
  ParsedLine out;
  out.status = ParseStatus::SchemaViolation;
  out.error_field = field;
  return out;
}

double wrap_yaw(double yaw) {
  double w = std::fmod(yaw, 360.0);
  if (w < 0.0) w += 360.0;
  return w;
}

}  // namespace

ParsedLine parse_event(std::string_view line) {
  ParsedLine out;
  json obj = json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) {
    out.status = ParseStatus::MalformedLine;
    return out;
  }

  std::int64_t version = 0;
  if (!get_int(obj, "v", version) || version != 1) return schema_error("v");

  std::string type;
  if (!get_string(obj, "type", type)) return schema_error("type");

  FeatureEvent ev;
  if (type == "speaker") {
    ev.kind = EventKind::Speaker;
    if (!get_int(obj, "ts", ev.ts) || ev.ts < 0) return schema_error("ts");
    if (!get_string(obj, "pid", ev.pid) || ev.pid.empty())
      return schema_error("pid");
    SpeakerLabel p;
    if (!get_bool(obj, "speaking", p.speaking)) return schema_error("speaking");
    ev.payload = p;
  } else if (type == "transcript") {
    ev.kind = EventKind::Transcript;
    TranscriptSegment p;
    if (!get_int(obj, "ts_start", ev.ts) || ev.ts < 0)
      return schema_error("ts_start");
    if (!get_int(obj, "ts_end", p.ts_end) || p.ts_end <= ev.ts)
      return schema_error("ts_end");
    if (!get_string(obj, "pid", ev.pid) || ev.pid.empty())
      return schema_error("pid");
    if (!get_string(obj, "text", p.text)) return schema_error("text");
    ev.payload = std::move(p);
  } else if (type == "pose") {
    ev.kind = EventKind::Pose;
    if (!get_int(obj, "ts", ev.ts) || ev.ts < 0) return schema_error("ts");
    if (!get_string(obj, "pid", ev.pid) || ev.pid.empty())
      return schema_error("pid");
    PoseSample p;
    if (!get_double(obj, "x", p.x)) return schema_error("x");
    if (!get_double(obj, "y", p.y)) return schema_error("y");
    if (!get_double(obj, "yaw_deg", p.yaw_deg)) return schema_error("yaw_deg");
    p.yaw_deg = wrap_yaw(p.yaw_deg);
    ev.payload = p;
  } else if (type == "action") {
    ev.kind = EventKind::Action;
    if (!get_int(obj, "ts", ev.ts) || ev.ts < 0) return schema_error("ts");
    if (!get_string(obj, "pid", ev.pid) || ev.pid.empty())
      return schema_error("pid");
    ActionLabel p;
    if (!get_string(obj, "label", p.label) || p.label.empty())
      return schema_error("label");
    if (!get_double(obj, "confidence", p.confidence) || p.confidence < 0.0 ||
        p.confidence > 1.0)
      return schema_error("confidence");
    ev.payload = std::move(p);
  } else if (type == "session") {
    ev.kind = EventKind::Control;
    if (!get_int(obj, "ts", ev.ts) || ev.ts < 0) return schema_error("ts");
    std::string op;
    if (!get_string(obj, "op", op)) return schema_error("op");
    SessionControl p;
    if (op == "start") {
      p.op = ControlOp::Start;
    } else if (op == "end") {
      p.op = ControlOp::End;
    } else {
      return schema_error("op");
    }
    ev.payload = p;
  } else {
    out.status = ParseStatus::UnknownType;
    return out;
  }

  out.status = ParseStatus::Ok;
  out.event = std::move(ev);
  return out;
}

std::string serialize_event(const FeatureEvent& event) {
  json obj;
  obj["v"] = 1;
  switch (event.kind) {
    case EventKind::Speaker:
      obj["type"] = "speaker";
      obj["ts"] = event.ts;
      obj["pid"] = event.pid;
      obj["speaking"] = event.speaker().speaking;
      break;
    case EventKind::Transcript:
      obj["type"] = "transcript";
      obj["ts_start"] = event.ts;
      obj["ts_end"] = event.transcript().ts_end;
      obj["pid"] = event.pid;
      obj["text"] = event.transcript().text;
      break;
    case EventKind::Pose:
      obj["type"] = "pose";
      obj["ts"] = event.ts;
      obj["pid"] = event.pid;
      obj["x"] = event.pose().x;
      obj["y"] = event.pose().y;
      obj["yaw_deg"] = event.pose().yaw_deg;
      break;
    case EventKind::Action:
      obj["type"] = "action";
      obj["ts"] = event.ts;
      obj["pid"] = event.pid;
      obj["label"] = event.action().label;
      obj["confidence"] = event.action().confidence;
      break;
    case EventKind::Control:
      obj["type"] = "session";
      obj["ts"] = event.ts;
      obj["op"] = event.control().op == ControlOp::Start ? "start" : "end";
      break;
  }
  return obj.dump();
}

AdmitStatus Admitter::admit(const FeatureEvent& event) {
  const bool control = event.kind == EventKind::Control;

  if (!control) {
    if (!cfg_->has_participant(event.pid)) return AdmitStatus::UnknownParticipant;
    if (event.ts < cfg_->start_ts) return AdmitStatus::BeforeSession;
  }

  std::string key = std::string(to_string(event.kind)) + '\x1f' +
                    std::to_string(event.ts) + '\x1f' + event.pid;
  if (seen_.contains(key)) return AdmitStatus::DroppedDuplicate;

  if (!control && stats_.accepted > 0 &&
      event.ts < stats_.watermark - cfg_->late_tolerance_ms)
    return AdmitStatus::DroppedLate;

  seen_.insert(std::move(key));
  ++stats_.accepted;
  if (event.ts > stats_.watermark) stats_.watermark = event.ts;
  return AdmitStatus::Admitted;
}

void Admitter::reset() {
  stats_ = IngestStats{};
  seen_.clear();
}

}  // namespace huddle
