#pragma once

#include <atomic>
#include <optional>
#include <string>

namespace gamedyn {

enum class Trend { Rising, Falling, Flat };

enum class FeedbackSource { Stub, Remote };

const char* to_string(Trend t);

// Snapshot of the simulation handed to the feedback generator. Fields mirror
// the trace row that triggered the message.
struct FeedbackContext {
  int step = 0;
  double engagement = 0.0;
  double difficulty = 0.0;
  double performance = 0.0;
  Trend trend = Trend::Flat;
  std::string preset_name;
};

struct FeedbackMessage {
  std::string id;    // stable content hash of (context, source, template version)
  std::string text;
  FeedbackSource source = FeedbackSource::Stub;
  std::string template_key;  // "trend/band" for stub templates, empty for remote text
};

// The LLM integration point. Implementations must be safe to call from
// concurrent sweep runs.
class ContentProvider {
 public:
  virtual ~ContentProvider() = default;
  virtual FeedbackMessage generate_feedback(const FeedbackContext& context) const = 0;
  virtual int warning_count() const { return 0; }
};

// Deterministic template provider. Picks one of nine templates keyed by
// (trend, performance band) and fills in the numbers.
class StubContentProvider final : public ContentProvider {
 public:
  FeedbackMessage generate_feedback(const FeedbackContext& context) const override;
};

struct RemoteConfig {
  std::string base_url;        // e.g. http://localhost:8080 or http://host/v1
  std::string api_key;         // bearer token, empty for none
  std::string model = "default";
  int timeout_seconds = 5;
  int max_retries = 1;
};

// Reads GAMEDYN_LLM_URL / GAMEDYN_LLM_KEY / GAMEDYN_LLM_MODEL; empty when the
// URL is not set.
std::optional<RemoteConfig> remote_config_from_env();

// Chat-completion HTTP adapter. Any network or protocol failure logs a
// warning and falls back to the stub's exact message.
class RemoteContentProvider final : public ContentProvider {
 public:
  explicit RemoteContentProvider(RemoteConfig cfg);
  FeedbackMessage generate_feedback(const FeedbackContext& context) const override;
  int warning_count() const override { return warnings_.load(); }

 private:
  RemoteConfig cfg_;
  StubContentProvider fallback_;
  mutable std::atomic<int> warnings_{0};
};

}  // namespace gamedyn
