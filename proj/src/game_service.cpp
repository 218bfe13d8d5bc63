#include "nbox/game_service.hpp"

#include "nbox/error.hpp"
#include "nbox/formulas.hpp"

#include <httplib.h>
#include <json.hpp>

#include <vector>

namespace nbox {

using nlohmann::json;

std::optional<std::uint64_t> known_n(std::size_t k, std::size_t d)
{
    if (k == 0 || k > d || d >= 64)
        return std::nullopt;
    if (k == 1)
        return d + 1;
    if (k == d)
        return std::uint64_t{1} << d;
    if (k + 1 == d)
        return 3 * (std::uint64_t{1} << (d - 2));
    if (k == 2 && d <= 7)
        return seq_b(d);
    return std::nullopt;
}

namespace {

struct BadRequest : Error {
    using Error::Error;
};

ServiceResponse reply(int status, const json& j)
{
    return {status, j.dump()};
}

ServiceResponse error_reply(int status, std::string message)
{
    return reply(status, json{{"error", std::move(message)}});
}

json state_json(const GameState& s)
{
    json strings = json::array();
    for (const auto& v : s.code())
        strings.push_back(v.to_string());
    json reference;
    reference["b_d"] = s.d() >= 2 ? json(seq_b(s.d())) : json(nullptr);
    const auto n = known_n(s.k(), s.d());
    reference["n_kd_if_known"] = n ? json(*n) : json(nullptr);
    return json{{"k", s.k()},
                {"d", s.d()},
                {"strings", std::move(strings)},
                {"score", s.score()},
                {"terminal", s.terminal()},
                {"reference", std::move(reference)}};
}

json move_json(const Move& m)
{
    return json{{"index", m.string_index}, {"position", m.position}};
}

std::vector<std::string_view> segments(std::string_view path)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < path.size()) {
        if (path[i] == '/') {
            ++i;
            continue;
        }
        const std::size_t j = std::min(path.find('/', i), path.size());
        out.push_back(path.substr(i, j - i));
        i = j;
    }
    return out;
}

json parse_body(std::string_view body)
{
    if (body.empty())
        return json::object();
    json j = json::parse(body);
    if (!j.is_object())
        throw BadRequest("request body must be a JSON object");
    return j;
}

std::size_t field(const json& j, const char* name)
{
    if (!j.contains(name))
        throw BadRequest(std::string("missing field '") + name + "'");
    const json& v = j.at(name);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw BadRequest(std::string("field '") + name + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

std::size_t GameService::session_count() const
{
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) const
{
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

ServiceResponse GameService::create(std::string_view body)
{
    const json req = parse_body(body);
    const std::size_t k = field(req, "k");
    const std::size_t d = field(req, "d");
    if (d > 16)
        return error_reply(400, "d must be at most 16");
    auto session = std::make_shared<Session>(GameState(k, d));
    std::string id;
    {
        std::unique_lock lock(sessions_mutex_);
        id = "g" + std::to_string(next_id_++);
        sessions_.emplace(id, session);
    }
    return reply(200, json{{"session", id}, {"state", state_json(session->state)}});
}

ServiceResponse GameService::handle(std::string_view method, std::string_view path, std::string_view body)
{
    const auto seg = segments(path);
    if (seg.empty() || seg[0] != "game" || seg.size() > 3)
        return error_reply(404, "no such endpoint");

    try {
        if (seg.size() == 1) {
            if (method != "POST")
                return error_reply(405, "use POST /game");
            return create(body);
        }

        auto session = find(std::string(seg[1]));
        if (!session)
            return error_reply(404, "unknown session '" + std::string(seg[1]) + "'");
        std::lock_guard lock(session->mutex);
        GameState& state = session->state;

        if (seg.size() == 2) {
            if (method != "GET")
                return error_reply(405, "use GET /game/{id}");
            return reply(200, state_json(state));
        }

        const std::string_view action = seg[2];
        if (action == "moves") {
            if (method != "GET")
                return error_reply(405, "use GET /game/{id}/moves");
            json moves = json::array();
            for (const auto& m : state.legal_moves())
                moves.push_back(move_json(m));
            return reply(200, moves);
        }
        if (method != "POST")
            return error_reply(405, "use POST");
        if (action == "move") {
            const json req = parse_body(body);
            const Move m{field(req, "index"), field(req, "position")};
            if (auto rejection = state.check(m)) {
                json pair = nullptr;
                if (rejection->pair)
                    pair = json::array({rejection->pair->first, rejection->pair->second});
                return reply(422, json{{"error", rejection->reason},
                                       {"violating_pair", std::move(pair)},
                                       {"distance", rejection->distance}});
            }
            state = state.apply(m);
            return reply(200, state_json(state));
        }
        if (action == "undo") {
            if (state.history().empty())
                return error_reply(409, "nothing to undo");
            state = state.undo();
            return reply(200, state_json(state));
        }
        if (action == "hint") {
            const json req = parse_body(body);
            const std::size_t budget = req.contains("budget_ms") ? field(req, "budget_ms") : 1000;
            if (budget == 0)
                return error_reply(400, "budget_ms must be positive");
            const auto m = hint(state, std::chrono::milliseconds(budget));
            return reply(200, m ? move_json(*m) : json(nullptr));
        }
        return error_reply(404, "no such endpoint");
    } catch (const json::exception& e) {
        return error_reply(400, std::string("bad request: ") + e.what());
    } catch (const BadRequest& e) {
        return error_reply(400, std::string("bad request: ") + e.what());
    } catch (const Error& e) {
        return error_reply(400, e.what());
    }
}

// ---------------------------------------------------------------------------
// HTTP

struct GameServer::Impl {
    GameService& service;
    httplib::Server server;

    explicit Impl(GameService& s) : service(s)
    {
        auto forward = [this](const httplib::Request& req, httplib::Response& res) {
            const auto r = service.handle(req.method, req.path, req.body);
            res.status = r.status;
            res.set_content(r.body, "application/json");
        };
        server.Get(".*", forward);
        server.Post(".*", forward);
    }
};

GameServer::GameServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {}

GameServer::~GameServer() = default;

bool GameServer::listen(const std::string& host, int port)
{
    return impl_->server.listen(host, port);
}

int GameServer::bind(const std::string& host, int port)
{
    if (port == 0)
        return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool GameServer::serve()
{
    return impl_->server.listen_after_bind();
}

void GameServer::stop()
{
    impl_->server.stop();
}

void GameServer::wait_until_ready() const
{
    impl_->server.wait_until_ready();
}

}  // namespace nbox
