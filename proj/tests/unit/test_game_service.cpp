#include "nbox/game_service.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <thread>

using namespace nbox;
using nlohmann::json;

namespace {

struct Client {
    GameService service;

    std::pair<int, json> call(std::string_view method, std::string_view path, const json& body = nullptr)
    {
        const auto r = service.handle(method, path, body.is_null() ? "" : body.dump());
        return {r.status, json::parse(r.body)};
    }

    std::string create(int k, int d)
    {
        auto [status, j] = call("POST", "/game", {{"k", k}, {"d", d}});
        REQUIRE(status == 200);
        return j.at("session").get<std::string>();
    }
};

const std::vector<std::pair<int, int>> figure5{{0, 1}, {0, 2}, {0, 2}, {0, 3}, {0, 3}};

}  // namespace

TEST_CASE("known values of n(k,d)")
{
    CHECK(known_n(1, 5) == 6u);
    CHECK(known_n(4, 4) == 16u);
    CHECK(known_n(3, 4) == 12u);
    CHECK(known_n(2, 7) == 21u);
    CHECK(known_n(2, 3) == 6u);
    CHECK(!known_n(2, 8));
    CHECK(!known_n(3, 6));
    CHECK(!known_n(0, 3));
    CHECK(!known_n(4, 3));
}

TEST_CASE("create and inspect a session")
{
    Client c;
    auto [status, j] = c.call("POST", "/game", {{"k", 2}, {"d", 3}});
    REQUIRE(status == 200);
    const std::string id = j["session"];
    const json state = j["state"];
    CHECK(state["k"] == 2);
    CHECK(state["d"] == 3);
    CHECK(state["strings"] == json::array({"***"}));
    CHECK(state["score"] == 1);
    CHECK(state["terminal"] == false);
    CHECK(state["reference"]["b_d"] == 6);
    CHECK(state["reference"]["n_kd_if_known"] == 6);

    auto [s2, got] = c.call("GET", "/game/" + id);
    CHECK(s2 == 200);
    CHECK(got == state);

    auto [s3, moves] = c.call("GET", "/game/" + id + "/moves");
    CHECK(s3 == 200);
    CHECK(moves == json::parse(R"([{"index":0,"position":1},{"index":0,"position":2},{"index":0,"position":3}])"));

    const std::string other = c.create(2, 8);
    auto [s4, st] = c.call("GET", "/game/" + other);
    CHECK(st["reference"]["b_d"] == 27);
    CHECK(st["reference"]["n_kd_if_known"].is_null());
    CHECK(c.service.session_count() == 2);
    CHECK(other != id);
}

TEST_CASE("replay the Figure 5 line")
{
    Client c;
    const std::string id = c.create(2, 3);
    json state;
    for (std::size_t i = 0; i < figure5.size(); ++i) {
        auto [status, j] = c.call("POST", "/game/" + id + "/move",
                                  {{"index", figure5[i].first}, {"position", figure5[i].second}});
        REQUIRE(status == 200);
        state = j;
        CHECK(state["score"] == i + 2);
        CHECK(state["terminal"] == (i + 1 == figure5.size()));
    }
    CHECK(state["strings"] == json::array({"10*", "11*", "000", "001", "010", "011"}));
    auto [s, moves] = c.call("GET", "/game/" + id + "/moves");
    CHECK(moves == json::array());
    auto [h, hint] = c.call("POST", "/game/" + id + "/hint", {{"budget_ms", 500}});
    CHECK(h == 200);
    CHECK(hint.is_null());
}

TEST_CASE("illegal moves leave the session unchanged")
{
    Client c;
    const std::string id = c.create(1, 2);
    c.call("POST", "/game/" + id + "/move", {{"index", 0}, {"position", 1}});
    c.call("POST", "/game/" + id + "/move", {{"index", 0}, {"position", 2}});
    auto [s0, before] = c.call("GET", "/game/" + id);

    auto [status, err] = c.call("POST", "/game/" + id + "/move", {{"index", 0}, {"position", 2}});
    CHECK(status == 422);
    CHECK(err.contains("error"));
    CHECK(err["violating_pair"] == json::array({0, 1}));
    CHECK(err["distance"] == 2);
    auto [s1, after] = c.call("GET", "/game/" + id);
    CHECK(after == before);

    auto [s2, no_joker] = c.call("POST", "/game/" + id + "/move", {{"index", 1}, {"position", 1}});
    CHECK(s2 == 422);
    CHECK(no_joker["violating_pair"].is_null());
}

TEST_CASE("undo and hint")
{
    Client c;
    const std::string id = c.create(2, 3);
    auto [s0, start] = c.call("GET", "/game/" + id);
    auto [u0, nothing] = c.call("POST", "/game/" + id + "/undo");
    CHECK(u0 == 409);

    auto [h, hint] = c.call("POST", "/game/" + id + "/hint", {{"budget_ms", 2000}});
    CHECK(h == 200);
    CHECK(hint == json{{"index", 0}, {"position", 1}});
    auto [m, moved] = c.call("POST", "/game/" + id + "/move", hint);
    CHECK(m == 200);
    CHECK(moved["score"] == 2);
    auto [u1, back] = c.call("POST", "/game/" + id + "/undo");
    CHECK(u1 == 200);
    CHECK(back == start);

    auto [h2, default_budget] = c.call("POST", "/game/" + id + "/hint");
    CHECK(h2 == 200);
    CHECK(default_budget == hint);
}

TEST_CASE("errors")
{
    Client c;
    CHECK(c.call("GET", "/game/nope").first == 404);
    CHECK(c.call("GET", "/game/nope").second.contains("error"));
    CHECK(c.call("POST", "/game/nope/move", {{"index", 0}, {"position", 1}}).first == 404);
    CHECK(c.call("GET", "/other").first == 404);
    CHECK(c.call("GET", "/game").first == 405);
    CHECK(c.call("POST", "/game", {{"k", 3}, {"d", 2}}).first == 400);
    CHECK(c.call("POST", "/game", {{"k", 2}}).first == 400);
    CHECK(c.call("POST", "/game", {{"k", -1}, {"d", 2}}).first == 400);
    CHECK(c.call("POST", "/game", {{"k", 2}, {"d", 40}}).first == 400);
    const auto bad = c.service.handle("POST", "/game", "{not json");
    CHECK(bad.status == 400);
    const std::string id = c.create(2, 3);
    CHECK(c.call("POST", "/game/" + id + "/move", {{"index", "zero"}, {"position", 1}}).first == 400);
    CHECK(c.call("POST", "/game/" + id).first == 405);
    CHECK(c.call("GET", "/game/" + id + "/undo").first == 405);
    CHECK(c.call("POST", "/game/" + id + "/teleport").first == 404);
    CHECK(c.call("POST", "/game/" + id + "/hint", {{"budget_ms", 0}}).first == 400);
}

TEST_CASE("state is a function of the history")
{
    Client c;
    const std::string a = c.create(2, 4);
    const std::string b = c.create(2, 4);
    for (auto [i, p] : std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {0, 4}}) {
        const json mv{{"index", i}, {"position", p}};
        CHECK(c.call("POST", "/game/" + a + "/move", mv) == c.call("POST", "/game/" + b + "/move", mv));
    }
    CHECK(c.call("GET", "/game/" + a) == c.call("GET", "/game/" + b));
}

TEST_CASE("concurrent sessions")
{
    GameService service;
    std::vector<std::string> ids;
    for (int i = 0; i < 4; ++i) {
        const auto r = service.handle("POST", "/game", R"({"k":2,"d":3})");
        ids.push_back(json::parse(r.body)["session"]);
    }
    std::vector<std::thread> threads;
    for (const auto& id : ids)
        for (int t = 0; t < 2; ++t)
            threads.emplace_back([&service, id] {
                for (int rep = 0; rep < 20; ++rep) {
                    service.handle("POST", "/game/" + id + "/move", R"({"index":0,"position":1})");
                    service.handle("GET", "/game/" + id, "");
                    service.handle("POST", "/game/" + id + "/undo", "");
                }
            });
    for (auto& t : threads)
        t.join();
    for (const auto& id : ids) {
        const auto state = json::parse(service.handle("GET", "/game/" + id, "").body);
        // Every move is paired with an undo, but an undo may land first and
        // fail; the score is therefore 1 or 2.
        CHECK(state["score"].get<int>() >= 1);
        CHECK(state["score"].get<int>() <= 2);
    }
}

TEST_CASE("over HTTP")
{
    GameService service;
    GameServer server(service);
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread serving([&server] { server.serve(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto created = client.Post("/game", R"({"k":2,"d":3})", "application/json");
    REQUIRE(created);
    CHECK(created->status == 200);
    const std::string id = json::parse(created->body)["session"];

    for (auto [i, p] : figure5) {
        const json mv{{"index", i}, {"position", p}};
        auto r = client.Post("/game/" + id + "/move", mv.dump(), "application/json");
        REQUIRE(r);
        CHECK(r->status == 200);
    }
    auto state = client.Get("/game/" + id);
    REQUIRE(state);
    CHECK(json::parse(state->body)["score"] == 6);
    CHECK(json::parse(state->body)["terminal"] == true);
    CHECK(state->get_header_value("Content-Type") == "application/json");

    auto bad = client.Post("/game/" + id + "/move", R"({"index":0,"position":3})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 422);
    auto missing = client.Get("/game/zzz");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    server.stop();
    serving.join();
}
