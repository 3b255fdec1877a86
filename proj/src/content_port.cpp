#include "gamedyn/content_port.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "gamedyn/errors.hpp"

namespace gamedyn {

namespace {

// Bump when template texts or the remote prompt format change, so message ids
// change with them.
constexpr const char* kTemplateVersion = "1";

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void check_context(const FeedbackContext& ctx) {
  if (!std::isfinite(ctx.engagement) || !std::isfinite(ctx.difficulty) ||
      !std::isfinite(ctx.performance) || ctx.step < 0) {
    throw InvalidInputError("feedback context has non-finite or negative fields");
  }
}

std::string message_id(const FeedbackContext& ctx, const char* source) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "v%s|%s|step=%d|e=%.17g|T=%.17g|u=%.17g|trend=%s|",
                kTemplateVersion, source, ctx.step, ctx.engagement, ctx.difficulty,
                ctx.performance, to_string(ctx.trend));
  return hex64(fnv1a64(std::string(buf) + ctx.preset_name));
}

const char* band_of(double u) {
  if (u < 0.4) return "low";
  if (u <= 0.7) return "mid";
  return "high";
}

// Nine fixed templates keyed by (trend, performance band), numeric
// placeholders filled from the context.
std::string stub_text(const FeedbackContext& ctx, Trend trend, const char* band) {
  char buf[320];
  const int step = ctx.step;
  const double diff = ctx.difficulty;
  const double pct = ctx.performance * 100.0;
  const bool low = band[0] == 'l';
  const bool mid = band[0] == 'm';
  switch (trend) {
    case Trend::Falling:
      if (low) {
        std::snprintf(buf, sizeof(buf),
                      "Tough stretch at step %d. Difficulty sits at %.1f; shake it off, "
                      "the next attempt is a fresh start.", step, diff);
      } else if (mid) {
        std::snprintf(buf, sizeof(buf),
                      "Momentum dipped around step %d. You are still clearing %.0f%% of "
                      "tasks at difficulty %.1f; stay with it.", step, pct, diff);
      } else {
        std::snprintf(buf, sizeof(buf),
                      "Even strong runs wobble. You are winning %.0f%% at difficulty %.1f; "
                      "one steady step brings the streak back.", pct, diff);
      }
      break;
    case Trend::Rising:
      if (low) {
        std::snprintf(buf, sizeof(buf),
                      "Nice recovery at step %d. Tasks at difficulty %.1f are still hard, "
                      "and you are already climbing.", step, diff);
      } else if (mid) {
        std::snprintf(buf, sizeof(buf),
                      "Good climb around step %d: %.0f%% success at difficulty %.1f. Keep "
                      "stacking those wins.", step, pct, diff);
      } else {
        std::snprintf(buf, sizeof(buf),
                      "You are on a roll: %.0f%% success at difficulty %.1f and rising. "
                      "Ready for a bigger challenge?", pct, diff);
      }
      break;
    case Trend::Flat:
    default:
      if (low) {
        std::snprintf(buf, sizeof(buf),
                      "Step %d checkpoint: difficulty %.1f is a stretch right now. Small "
                      "consistent tries move the needle.", step, diff);
      } else if (mid) {
        std::snprintf(buf, sizeof(buf),
                      "Holding steady at %.0f%% success on difficulty %.1f. A focused push "
                      "could tip this upward.", pct, diff);
      } else {
        std::snprintf(buf, sizeof(buf),
                      "Cruising at %.0f%% success on difficulty %.1f. Consider raising the "
                      "bar to keep things interesting.", pct, diff);
      }
      break;
  }
  return buf;
}

struct ParsedUrl {
  std::string host_part;  // scheme://host:port
  std::string path;       // leading path or empty
  bool ok = false;
};

ParsedUrl split_url(const std::string& url) {
  ParsedUrl out;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    return out;
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    out.host_part = url;
  } else {
    out.host_part = url.substr(0, path_start);
    out.path = url.substr(path_start);
    while (!out.path.empty() && out.path.back() == '/') {
      out.path.pop_back();
    }
  }
  out.ok = !out.host_part.empty();
  return out;
}

}  // namespace

const char* to_string(Trend t) {
  switch (t) {
    case Trend::Rising: return "rising";
    case Trend::Falling: return "falling";
    case Trend::Flat:
    default: return "flat";
  }
}

FeedbackMessage StubContentProvider::generate_feedback(const FeedbackContext& ctx) const {
  check_context(ctx);
  const char* band = band_of(ctx.performance);
  FeedbackMessage msg;
  msg.text = stub_text(ctx, ctx.trend, band);
  msg.id = message_id(ctx, "stub");
  msg.source = FeedbackSource::Stub;
  msg.template_key = std::string(to_string(ctx.trend)) + "/" + band;
  return msg;
}

std::optional<RemoteConfig> remote_config_from_env() {
  const char* url = std::getenv("GAMEDYN_LLM_URL");
  if (url == nullptr || url[0] == '\0') {
    return std::nullopt;
  }
  RemoteConfig cfg;
  cfg.base_url = url;
  if (const char* key = std::getenv("GAMEDYN_LLM_KEY")) {
    cfg.api_key = key;
  }
  if (const char* model = std::getenv("GAMEDYN_LLM_MODEL")) {
    if (model[0] != '\0') {
      cfg.model = model;
    }
  }
  return cfg;
}

RemoteContentProvider::RemoteContentProvider(RemoteConfig cfg) : cfg_(std::move(cfg)) {}

FeedbackMessage RemoteContentProvider::generate_feedback(const FeedbackContext& ctx) const {
  check_context(ctx);

  char prompt[512];
  std::snprintf(prompt, sizeof(prompt),
                "Step %d of a gamified session (scenario: %s). Engagement %.2f and %s over "
                "the last 5 steps. Task difficulty %.2f, success measure %.2f. Write one "
                "short encouraging message for this user.",
                ctx.step, ctx.preset_name.empty() ? "default" : ctx.preset_name.c_str(),
                ctx.engagement, to_string(ctx.trend), ctx.difficulty, ctx.performance);

  nlohmann::json body = {
      {"model", cfg_.model},
      {"messages",
       {{{"role", "system"},
         {"content", "You write one short, upbeat coaching message. Reply with the message only."}},
        {{"role", "user"}, {"content", prompt}}}},
  };

  ParsedUrl url = split_url(cfg_.base_url);
  std::string failure;
  if (!url.ok) {
    failure = "malformed GAMEDYN_LLM_URL '" + cfg_.base_url + "'";
  } else {
    std::string endpoint = url.path;
    if (endpoint.empty()) {
      endpoint = "/v1/chat/completions";
    } else if (endpoint.size() < 17 ||
               endpoint.compare(endpoint.size() - 17, 17, "/chat/completions") != 0) {
      endpoint += "/chat/completions";
    }

    const int attempts = 1 + std::max(0, cfg_.max_retries);
    for (int attempt = 0; attempt < attempts; ++attempt) {
      // A fresh client per request keeps concurrent sweep runs independent.
      httplib::Client client(url.host_part);
      client.set_connection_timeout(cfg_.timeout_seconds, 0);
      client.set_read_timeout(cfg_.timeout_seconds, 0);
      client.set_write_timeout(cfg_.timeout_seconds, 0);
      httplib::Headers headers;
      if (!cfg_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + cfg_.api_key);
      }
      auto res = client.Post(endpoint, headers, body.dump(), "application/json");
      if (!res) {
        failure = "no response from " + cfg_.base_url;
        continue;
      }
      if (res->status != 200) {
        failure = "HTTP " + std::to_string(res->status) + " from " + cfg_.base_url;
        continue;
      }
      try {
        auto reply = nlohmann::json::parse(res->body);
        std::string text = reply.at("choices").at(0).at("message").at("content").get<std::string>();
        FeedbackMessage msg;
        msg.id = message_id(ctx, "remote");
        msg.text = std::move(text);
        msg.source = FeedbackSource::Remote;
        return msg;
      } catch (const std::exception& e) {
        failure = std::string("bad completion payload: ") + e.what();
      }
    }
  }

  warnings_.fetch_add(1);
  std::fprintf(stderr, "warning: remote feedback failed (%s); using stub fallback\n",
               failure.c_str());
  return fallback_.generate_feedback(ctx);
}

}  // namespace gamedyn
