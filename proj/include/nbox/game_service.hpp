#pragma once

#include "nbox/splitting_game.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

namespace nbox {

/// n(k,d) where an exact value is known: k = 1, k = d, k = d - 1, and
/// n(2,d) = b(d) for d <= 7.
std::optional<std::uint64_t> known_n(std::size_t k, std::size_t d);

struct ServiceResponse {
    int status = 200;
    std::string body;  // JSON
};

/// In-memory game sessions behind a small JSON API:
///
///   POST /game                {k, d}            -> {session, state}
///   GET  /game/{id}                             -> state
///   GET  /game/{id}/moves                       -> [{index, position}]
///   POST /game/{id}/move      {index, position} -> state | {error, violating_pair, distance}
///   POST /game/{id}/undo                        -> state
///   POST /game/{id}/hint      {budget_ms}       -> {index, position} | null
///
/// state = {k, d, strings, score, terminal, reference: {b_d, n_kd_if_known}}.
/// Indices are 0-based, positions 1-based. Operations on one session are
/// serialized; different sessions proceed in parallel.
class GameService {
public:
    ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body);

    std::size_t session_count() const;

private:
    struct Session {
        std::mutex mutex;
        GameState state;
        explicit Session(GameState s) : state(std::move(s)) {}
    };

    std::shared_ptr<Session> find(const std::string& id) const;
    ServiceResponse create(std::string_view body);

    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_id_ = 1;
};

/// Serves `service` over HTTP until stop() is called from another thread or
/// the process exits. Binds to loopback unless `host` says otherwise.
class GameServer {
public:
    explicit GameServer(GameService& service);
    ~GameServer();

    /// Binds and starts listening in the calling thread. Returns false if
    /// the port could not be bound. Port 0 picks a free port.
    bool listen(const std::string& host, int port);
    /// Binds without blocking; returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Serves on a socket prepared by bind(); blocks.
    bool serve();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace nbox
