#include "smellcloze/inference.hpp"

#include <httplib.h>
#include <json.hpp>

#include <sstream>

namespace smellcloze::inference {

using json = nlohmann::ordered_json;

namespace {

struct Target {
    std::string base; // scheme://host:port
    std::string prefix; // path prefix without trailing '/'
};

Target split_endpoint(const std::string& endpoint) {
    auto scheme = endpoint.find("://");
    const bool http = scheme != std::string::npos &&
                      (endpoint.compare(0, scheme, "http") == 0 || endpoint.compare(0, scheme, "https") == 0);
    if (!http || scheme + 3 >= endpoint.size() || endpoint[scheme + 3] == '/')
        throw ConfigError("scorer endpoint must look like http://host:port[/prefix], got '" + endpoint + "'");
    auto path = endpoint.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    Target t{endpoint, ""};
    if (path != std::string::npos) {
        t.base = endpoint.substr(0, path);
        t.prefix = endpoint.substr(path);
        while (!t.prefix.empty() && t.prefix.back() == '/')
            t.prefix.pop_back();
    }
    return t;
}

json request_body(const ScoreRequest& req) {
    json j;
    j["text"] = req.text;
    j["candidates"] = req.candidates;
    j["max_seq_length"] = req.max_seq_length;
    j["truncate_method"] = to_string(req.truncate_method);
    if (req.checkpoint_id)
        j["checkpoint_id"] = *req.checkpoint_id;
    return j;
}

std::vector<double> probs_from(const json& j) {
    if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array())
        throw InvalidDistribution("scorer response lacks a 'probs' array");
    std::vector<double> out;
    out.reserve(j["probs"].size());
    for (const auto& p : j["probs"]) {
        if (!p.is_number())
            throw InvalidDistribution("non-numeric probability in scorer response");
        out.push_back(p.get<double>());
    }
    return out;
}

class Connection {
public:
    Connection(const std::string& endpoint, std::chrono::seconds timeout)
        : target_(split_endpoint(endpoint)), client_(target_.base), endpoint_(endpoint) {
        if (!client_.is_valid())
            throw ConfigError("invalid scorer endpoint '" + endpoint + "'");
        client_.set_connection_timeout(timeout);
        client_.set_read_timeout(timeout);
        client_.set_write_timeout(timeout);
    }

    json get(const std::string& path) { return check(client_.Get(target_.prefix + path), path); }

    json post(const std::string& path, const json& body) {
        return check(client_.Post(target_.prefix + path, body.dump(), "application/json"), path);
    }

private:
    json check(const httplib::Result& res, const std::string& path) {
        if (!res)
            throw ScorerUnavailable("cannot reach scorer at " + endpoint_ + ": " + httplib::to_string(res.error()));
        if (res->status == 503)
            throw ScorerUnavailable("scorer at " + endpoint_ + " is not ready (503)");
        if (res->status != 200) {
            std::string body = res->body.substr(0, 200);
            throw ScorerError("scorer " + path + " returned HTTP " + std::to_string(res->status) +
                              (body.empty() ? "" : ": " + body));
        }
        try {
            return json::parse(res->body);
        } catch (const json::parse_error&) {
            throw InvalidDistribution("scorer " + path + " returned malformed JSON");
        }
    }

    Target target_;
    httplib::Client client_;
    std::string endpoint_;
};

} // namespace

std::string request_to_json(const ScoreRequest& req) {
    return request_body(req).dump();
}

std::string train_request_to_json(const TrainRequest& req) {
    std::ostringstream rows;
    dataset::write_jsonl(rows, req.data);
    json config;
    try {
        config = json::parse(req.config_json);
    } catch (const json::parse_error&) {
        throw ConfigError("training config is not valid JSON");
    }
    json j;
    j["dataset_jsonl"] = rows.str();
    j["template"] = req.template_spec;
    j["verbalizer"] = json::parse(prompt::to_json(req.verbalizer));
    j["config"] = std::move(config);
    return j.dump();
}

RemoteScorer::RemoteScorer(std::string endpoint, std::chrono::seconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {
    Connection probe(endpoint_, timeout_); // rejects malformed URLs early
}

Capabilities RemoteScorer::health() {
    auto j = Connection(endpoint_, timeout_).get("/health");
    Capabilities caps;
    if (j.is_object()) {
        caps.model = j.value("model", "");
        caps.mask_token = j.value("mask_token", "");
        caps.multiword_mode = j.value("multiword_mode", "");
    }
    if (caps.multiword_mode != "single_token" && caps.multiword_mode != "subword_mean")
        throw ScorerError("scorer health response has no valid multiword_mode");
    return caps;
}

std::vector<double> RemoteScorer::raw_scores(const ScoreRequest& req) {
    return probs_from(Connection(endpoint_, timeout_).post("/score", request_body(req)));
}

std::vector<std::vector<double>> RemoteScorer::raw_scores_batch(std::span<const ScoreRequest> reqs) {
    if (reqs.size() == 1)
        return {raw_scores(reqs.front())};
    json body = json::array();
    for (const auto& r : reqs)
        body.push_back(request_body(r));
    auto j = Connection(endpoint_, timeout_).post("/score_batch", body);
    const json& results = j.is_object() && j.contains("results") ? j["results"] : j;
    if (!results.is_array())
        throw InvalidDistribution("score_batch response is not a list");
    std::vector<std::vector<double>> out;
    out.reserve(results.size());
    for (const auto& r : results)
        out.push_back(probs_from(r));
    return out;
}

std::string RemoteScorer::train(const TrainRequest& req) {
    if (req.data.empty())
        throw EmptyInput("cannot train on an empty dataset");
    auto j = Connection(endpoint_, timeout_).post("/train", json::parse(train_request_to_json(req)));
    if (!j.is_object() || !j.contains("checkpoint_id") || !j["checkpoint_id"].is_string())
        throw ScorerError("train response lacks a checkpoint_id");
    return j["checkpoint_id"].get<std::string>();
}

} // namespace smellcloze::inference
