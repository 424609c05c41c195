#pragma once

// Chat and embedding endpoints. Live requests go to an OpenAI-compatible
// HTTP API; replay serves recorded responses from a fixture directory keyed
// by request hash, so tests and CI never touch the network.

#include "arckit/core/codec.hpp"
#include "arckit/core/error.hpp"
#include "arckit/core/hash.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace arckit::synth {

struct Message {
    std::string role;
    std::string content;
    friend bool operator==(const Message&, const Message&) = default;
};

inline json messages_to_json(const std::vector<Message>& messages) {
    json arr = json::array();
    for (const auto& m : messages) arr.push_back({{"role", m.role}, {"content", m.content}});
    return arr;
}

struct ChatConfig {
    std::string model = "gpt-4o-mini";
    double temperature = 0.8;
    int max_tokens = 2048;
};

struct EmbeddingConfig {
    std::string model = "text-embedding-ada-002";
};

/// Answers raw request bodies for one endpoint path ("chat/completions" or
/// "embeddings").
class Backend {
public:
    virtual ~Backend() = default;
    virtual json post(const std::string& path, const json& body) = 0;
};

/// Fixture key: hash of the endpoint path plus the request body serialized
/// with sorted keys.
inline std::string request_key(const std::string& path, const json& body) {
    return hash_text(path + "\n" + body.dump()).hex();
}

struct HttpSettings {
    std::string base_url;  // e.g. https://api.openai.com/v1
    std::string api_key;
    int timeout_s = 120;
    int retries = 3;

    /// ARCKIT_API_BASE (default https://api.openai.com/v1) and ARCKIT_API_KEY.
    static HttpSettings from_env() {
        HttpSettings s;
        const char* base = std::getenv("ARCKIT_API_BASE");
        s.base_url = base && *base ? base : "https://api.openai.com/v1";
        const char* key = std::getenv("ARCKIT_API_KEY");
        if (!key || !*key) throw EndpointError("live mode needs ARCKIT_API_KEY in the environment");
        s.api_key = key;
        return s;
    }
};

class HttpBackend : public Backend {
public:
    explicit HttpBackend(HttpSettings settings) : settings_(std::move(settings)) {
        const auto scheme_end = settings_.base_url.find("://");
        if (scheme_end == std::string::npos) throw EndpointError("base URL needs a scheme: " + settings_.base_url);
        const auto path_start = settings_.base_url.find('/', scheme_end + 3);
        host_ = settings_.base_url.substr(0, path_start);
        prefix_ = path_start == std::string::npos ? "" : settings_.base_url.substr(path_start);
        if (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
    }

    json post(const std::string& path, const json& body) override {
        httplib::Client client(host_);
        client.set_read_timeout(settings_.timeout_s, 0);
        client.set_connection_timeout(30, 0);
        httplib::Headers headers{{"Authorization", "Bearer " + settings_.api_key}};
        std::string last;
        for (int attempt = 0; attempt <= settings_.retries; ++attempt) {
            if (attempt) std::this_thread::sleep_for(std::chrono::seconds(1 << std::min(attempt, 5)));
            auto res = client.Post(prefix_ + "/" + path, headers, body.dump(), "application/json");
            if (!res) {
                last = httplib::to_string(res.error());
                continue;
            }
            if (res->status == 200) {
                try {
                    return json::parse(res->body);
                } catch (const json::exception& e) {
                    throw EndpointError(std::string("endpoint returned malformed JSON: ") + e.what());
                }
            }
            last = "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 300);
            if (res->status < 500 && res->status != 429) break;
        }
        throw EndpointError("request to " + path + " failed: " + last);
    }

private:
    HttpSettings settings_;
    std::string host_;
    std::string prefix_;
};

/// Serves recorded responses; a request without a fixture is an endpoint error.
class ReplayBackend : public Backend {
public:
    explicit ReplayBackend(std::filesystem::path dir) : dir_(std::move(dir)) {
        if (!std::filesystem::is_directory(dir_)) throw EndpointError("fixture store not found: " + dir_.string());
    }

    json post(const std::string& path, const json& body) override {
        const auto file = dir_ / (request_key(path, body) + ".json");
        std::ifstream f(file);
        if (!f) throw EndpointError("no fixture for request " + file.filename().string());
        try {
            return json::parse(f).at("response");
        } catch (const json::exception& e) {
            throw EndpointError("bad fixture " + file.string() + ": " + e.what());
        }
    }

private:
    std::filesystem::path dir_;
};

/// Forwards to another backend and stores every answer as a fixture.
class RecordingBackend : public Backend {
public:
    RecordingBackend(std::unique_ptr<Backend> inner, std::filesystem::path dir)
        : inner_(std::move(inner)), dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    json post(const std::string& path, const json& body) override {
        json response = inner_->post(path, body);
        write_fixture(dir_, path, body, response);
        return response;
    }

    static void write_fixture(const std::filesystem::path& dir, const std::string& path, const json& body,
                              const json& response) {
        std::ofstream f(dir / (request_key(path, body) + ".json"));
        f << json{{"path", path}, {"request", body}, {"response", response}}.dump(2) << "\n";
    }

private:
    std::unique_ptr<Backend> inner_;
    std::filesystem::path dir_;
};

/// Test double driven by a function of (path, body).
class ScriptedBackend : public Backend {
public:
    using Script = std::function<json(const std::string&, const json&)>;
    explicit ScriptedBackend(Script script) : script_(std::move(script)) {}
    json post(const std::string& path, const json& body) override { return script_(path, body); }

private:
    Script script_;
};

enum class ClientMode { Live, Replay, Record };

inline ClientMode client_mode_from_name(std::string_view name) {
    if (name == "live") return ClientMode::Live;
    if (name == "replay") return ClientMode::Replay;
    if (name == "record") return ClientMode::Record;
    throw std::invalid_argument("unknown client mode: " + std::string(name));
}

class ModelClient {
public:
    ModelClient(std::unique_ptr<Backend> backend, ChatConfig chat = {}, EmbeddingConfig embedding = {})
        : backend_(std::move(backend)), chat_(std::move(chat)), embedding_(std::move(embedding)) {}

    /// Live: credentials from the environment. Replay/record: fixtures in `fixtures`.
    static ModelClient create(ClientMode mode, const std::filesystem::path& fixtures, ChatConfig chat = {},
                              EmbeddingConfig embedding = {}) {
        switch (mode) {
        case ClientMode::Replay:
            return ModelClient(std::make_unique<ReplayBackend>(fixtures), chat, embedding);
        case ClientMode::Record:
            if (fixtures.empty()) throw EndpointError("record mode needs a fixture directory");
            return ModelClient(std::make_unique<RecordingBackend>(std::make_unique<HttpBackend>(HttpSettings::from_env()),
                                                                  fixtures),
                               chat, embedding);
        case ClientMode::Live:
            break;
        }
        return ModelClient(std::make_unique<HttpBackend>(HttpSettings::from_env()), chat, embedding);
    }

    const ChatConfig& chat_config() const { return chat_; }

    static json chat_request(const ChatConfig& cfg, const std::vector<Message>& messages) {
        return {{"model", cfg.model},
                {"messages", messages_to_json(messages)},
                {"temperature", cfg.temperature},
                {"max_tokens", cfg.max_tokens}};
    }

    static json embedding_request(const EmbeddingConfig& cfg, const std::vector<std::string>& texts) {
        return {{"model", cfg.model}, {"input", texts}};
    }

    /// Text of the first choice.
    std::string chat(const std::vector<Message>& messages) {
        const json res = post("chat/completions", chat_request(chat_, messages));
        try {
            return res.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const json::exception& e) {
            throw EndpointError(std::string("unexpected chat response shape: ") + e.what());
        }
    }

    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) {
        const json res = post("embeddings", embedding_request(embedding_, texts));
        std::vector<std::vector<double>> out(texts.size());
        try {
            for (const auto& item : res.at("data")) {
                const auto idx = item.contains("index") ? item.at("index").get<std::size_t>() : 0;
                if (idx >= out.size()) throw EndpointError("embedding index out of range");
                out[idx] = item.at("embedding").get<std::vector<double>>();
            }
        } catch (const json::exception& e) {
            throw EndpointError(std::string("unexpected embedding response shape: ") + e.what());
        }
        for (const auto& v : out)
            if (v.empty()) throw EndpointError("embedding response is missing entries");
        return out;
    }

    /// Raw request, for callers that need more than the first choice.
    json post(const std::string& path, const json& body) {
        std::lock_guard lock(*mutex_);
        return backend_->post(path, body);
    }

private:
    std::unique_ptr<Backend> backend_;
    ChatConfig chat_;
    EmbeddingConfig embedding_;
    std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
};

/// Response bodies in the shape the client parses, for fixtures and scripts.
inline json chat_response(const std::string& content) {
    return {{"choices", json::array({{{"index", 0}, {"message", {{"role", "assistant"}, {"content", content}}}}})}};
}

inline json embedding_response(const std::vector<std::vector<double>>& vectors) {
    json data = json::array();
    for (std::size_t i = 0; i < vectors.size(); ++i) data.push_back({{"index", i}, {"embedding", vectors[i]}});
    return {{"data", data}};
}

} // namespace arckit::synth
