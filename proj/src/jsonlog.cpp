#include "cegis/jsonlog.hpp"

#include <cstdio>

#include "json.hpp"

namespace cegis {

namespace {

using Json = nlohmann::ordered_json;

Json natural_or_null(const std::optional<Natural>& v) {
  if (!v) return nullptr;
  return *v;
}

void put_decoded(Json& line, const char* key, const Family& family,
                 const std::optional<Natural>& code) {
  if (!code) {
    if (family.decode(0)) line[key] = nullptr;
    return;
  }
  if (const auto d = family.decode(*code)) line[key] = Json::array({d->first, d->second});
}

}  // namespace

std::string iteration_line(const Family& family, const IterationRecord& record,
                           std::string_view run) {
  Json line = Json::object();
  if (!run.empty()) line["run"] = std::string(run);
  line["iter"] = record.iter;
  line["trace_entry"] = natural_or_null(record.trace_entry);
  put_decoded(line, "trace_decoded", family, record.trace_entry);
  line["candidate"] = family.describe(record.candidate);
  const std::optional<Natural> cex =
      record.verdict ? record.verdict->value() : std::optional<Natural>{};
  line["cex"] = natural_or_null(cex);
  put_decoded(line, "cex_decoded", family, cex);
  if (!record.verdict) {
    line["verdict"] = nullptr;
  } else {
    line["verdict"] = record.verdict->has_counterexample() ? "cex" : "none";
  }
  line["event"] = std::string(to_string(record.event));
  return line.dump();
}

std::string micro_line(const Family& family, const MicroStep& step) {
  Json line = Json::object();
  line["iter"] = step.iter;
  line["trace_entry"] = step.consumed ? natural_or_null(step.trace_entry) : Json(nullptr);
  put_decoded(line, "trace_decoded", family,
              step.consumed ? step.trace_entry : std::optional<Natural>{});
  line["consumed"] = step.consumed;
  line["checked"] = step.checked;
  line["candidate"] = step.candidate;
  line["cex"] = natural_or_null(step.verdict.value());
  put_decoded(line, "cex_decoded", family, step.verdict.value());
  line["verdict"] = step.verdict.has_counterexample() ? "cex" : "none";
  line["case"] = std::string(to_string(step.sim_case));
  line["mu"] = step.mu;
  line["done"] = step.done_length;
  line["frozen"] = step.frozen;
  return line.dump();
}

std::string run_log(const Family& family, const EngineRun& run, std::string_view tag) {
  std::string out;
  for (const auto& record : run.iterations) {
    out += iteration_line(family, record, tag);
    out += '\n';
  }
  return out;
}

std::string micro_log(const Family& family, const EngineRun& run) {
  std::string out;
  for (const auto& step : run.micro_steps) {
    out += micro_line(family, step);
    out += '\n';
  }
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

}  // namespace cegis
