#include "nbox/exact_search.hpp"

#include "nbox/error.hpp"
#include "nbox/formulas.hpp"
#include "nbox/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace nbox {

std::vector<TernaryString> search_vertex_order(std::size_t d)
{
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= 3;
    std::vector<TernaryString> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        TernaryString s(d);
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
            s.set(i, static_cast<Symbol>(c % 3));
            c /= 3;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const TernaryString& a, const TernaryString& b) {
        const auto ca = a.defined_count();
        const auto cb = b.defined_count();
        if (ca != cb)
            return ca > cb;
        return a < b;
    });
    return out;
}

namespace {

using Word = std::uint64_t;

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t words) : w_(words, 0) {}

    Word* data() noexcept { return w_.data(); }
    const Word* data() const noexcept { return w_.data(); }
    std::size_t words() const noexcept { return w_.size(); }

    void set(std::size_t i) noexcept { w_[i / 64] |= Word{1} << (i % 64); }
    void reset(std::size_t i) noexcept { w_[i / 64] &= ~(Word{1} << (i % 64)); }
    bool test(std::size_t i) const noexcept { return (w_[i / 64] >> (i % 64)) & 1; }

    bool none() const noexcept
    {
        return std::all_of(w_.begin(), w_.end(), [](Word w) { return w == 0; });
    }

    // Lowest set bit at or after word `from`; returns npos if none.
    std::size_t first_from(std::size_t& from) const noexcept
    {
        for (; from < w_.size(); ++from)
            if (w_[from] != 0)
                return from * 64 + static_cast<std::size_t>(std::countr_zero(w_[from]));
        return npos;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<Word> w_;
};

struct Graph {
    std::vector<TernaryString> vertices;
    std::vector<std::size_t> defined;
    std::vector<Bitset> adj;
    std::size_t words = 0;
};

Graph build_graph(std::size_t k, std::size_t d)
{
    Graph g;
    g.vertices = search_vertex_order(d);
    const std::size_t n = g.vertices.size();
    g.words = (n + 63) / 64;
    g.defined.reserve(n);
    for (const auto& v : g.vertices)
        g.defined.push_back(v.defined_count());

    const kernels::PackedPlanes planes(g.vertices, d);
    std::vector<std::uint32_t> row;
    g.adj.assign(n, Bitset(g.words));
    for (std::size_t i = 0; i < n; ++i) {
        planes.distances_from(i, 0, row);
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] >= 1 && row[j] <= k)
                g.adj[i].set(j);
    }
    return g;
}

// A unit of work: extend `clique` using candidates `p`, branching only when
// clique.size() + bound can beat the incumbent.
struct Task {
    std::vector<std::size_t> clique;
    Bitset p;
    std::size_t bound;
};

class Shared {
public:
    Shared(std::size_t initial, std::vector<std::size_t> initial_code, std::chrono::steady_clock::time_point deadline)
        : best_(initial), code_(std::move(initial_code)), deadline_(deadline)
    {
    }

    std::size_t best() const noexcept { return best_.load(std::memory_order_relaxed); }

    void offer(const std::vector<std::size_t>& clique)
    {
        std::lock_guard lock(mutex_);
        if (clique.size() > best_.load(std::memory_order_relaxed)) {
            best_.store(clique.size(), std::memory_order_relaxed);
            code_ = clique;
        }
    }

    std::vector<std::size_t> code() const
    {
        std::lock_guard lock(mutex_);
        return code_;
    }

    bool aborted() const noexcept { return aborted_.load(std::memory_order_relaxed); }

    void check_clock()
    {
        if (std::chrono::steady_clock::now() >= deadline_)
            aborted_.store(true, std::memory_order_relaxed);
    }

    std::atomic<std::uint64_t> nodes{0};

private:
    std::atomic<std::size_t> best_;
    mutable std::mutex mutex_;
    std::vector<std::size_t> code_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<bool> aborted_{false};
};

constexpr std::uint64_t clock_check_interval = std::uint64_t{1} << 14;

class Worker {
public:
    Worker(const Graph& g, Shared& shared) : g_(g), shared_(shared), k_(kernels::active())
    {
        // frames are referenced across recursion; never reallocate
        frames_.reserve(g_.vertices.size() + 2);
    }

    void run(Task task)
    {
        clique_ = std::move(task.clique);
        if (clique_.size() + task.bound <= shared_.best())
            return;
        if (task.p.none()) {
            shared_.offer(clique_);
            return;
        }
        expand(task.p, 0);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    // Greedy sequential colouring of p. Fills order/colours with the vertices
    // whose colour can still beat `best`, in increasing colour.
    void colour(const Bitset& p, std::size_t min_colour, std::vector<std::size_t>& order,
                std::vector<std::size_t>& colours, Bitset& uncoloured, Bitset& q)
    {
        order.clear();
        colours.clear();
        std::copy(p.data(), p.data() + g_.words, uncoloured.data());
        std::size_t colour = 1;
        while (!uncoloured.none()) {
            std::copy(uncoloured.data(), uncoloured.data() + g_.words, q.data());
            std::size_t from = 0;
            for (std::size_t v = q.first_from(from); v != Bitset::npos; v = q.first_from(from)) {
                q.reset(v);
                uncoloured.reset(v);
                k_.and_not(q.data() + from, g_.adj[v].data() + from, g_.words - from);
                if (colour >= min_colour) {
                    order.push_back(v);
                    colours.push_back(colour);
                }
            }
            ++colour;
        }
    }

private:
    struct Frame {
        Bitset p, next, uncoloured, q;
        std::vector<std::size_t> order, colours;
    };

    Frame& frame(std::size_t depth)
    {
        while (frames_.size() <= depth) {
            Frame f{Bitset(g_.words), Bitset(g_.words), Bitset(g_.words), Bitset(g_.words), {}, {}};
            frames_.push_back(std::move(f));
        }
        return frames_[depth];
    }

    void expand(const Bitset& candidates, std::size_t depth)
    {
        if (shared_.aborted())
            return;
        if (++nodes_ % clock_check_interval == 0)
            shared_.check_clock();

        Frame& f = frame(depth);
        std::copy(candidates.data(), candidates.data() + g_.words, f.p.data());
        const std::size_t best = shared_.best();
        const std::size_t min_colour = best >= clique_.size() ? best - clique_.size() + 1 : 1;
        colour(f.p, min_colour, f.order, f.colours, f.uncoloured, f.q);

        for (std::size_t idx = f.order.size(); idx-- > 0;) {
            if (clique_.size() + f.colours[idx] <= shared_.best() || shared_.aborted())
                return;
            const std::size_t v = f.order[idx];
            clique_.push_back(v);
            const std::size_t left = k_.and_count(f.next.data(), f.p.data(), g_.adj[v].data(), g_.words);
            if (left == 0) {
                if (clique_.size() > shared_.best())
                    shared_.offer(clique_);
            } else {
                expand(f.next, depth + 1);
            }
            clique_.pop_back();
            f.p.reset(v);
        }
    }

    const Graph& g_;
    Shared& shared_;
    const kernels::KernelTable& k_;
    std::vector<std::size_t> clique_;
    std::vector<Frame> frames_;
    std::uint64_t nodes_ = 0;
};

std::vector<Task> root_tasks(const Graph& g, std::size_t d, bool symmetry, Shared& shared)
{
    std::vector<Task> tasks;
    const std::size_t n = g.vertices.size();
    if (symmetry) {
        // Every code maps, by coordinate permutations and 0/1 swaps, to one
        // whose densest member is 0^j *^{d-j}; the rest have <= j non-jokers.
        for (std::size_t j = d + 1; j-- > 0;) {
            TernaryString root(d);
            for (std::size_t i = 0; i < j; ++i)
                root.set(i, Symbol::Zero);
            const auto it = std::find(g.vertices.begin(), g.vertices.end(), root);
            const std::size_t r = static_cast<std::size_t>(it - g.vertices.begin());
            Bitset p(g.words);
            for (std::size_t v = 0; v < n; ++v)
                if (g.defined[v] <= j && g.adj[r].test(v))
                    p.set(v);
            const std::size_t bound = kernels::active().popcount(p.data(), g.words) + 1;
            tasks.push_back(Task{{r}, std::move(p), bound});
        }
        return tasks;
    }

    // Split the first level of the plain search into independent branches.
    Bitset all(g.words);
    for (std::size_t v = 0; v < n; ++v)
        all.set(v);
    Worker w(g, shared);
    std::vector<std::size_t> order, colours;
    Bitset uncoloured(g.words), q(g.words);
    w.colour(all, 1, order, colours, uncoloured, q);
    Bitset remaining = all;
    for (std::size_t idx = order.size(); idx-- > 0;) {
        const std::size_t v = order[idx];
        Bitset p(g.words);
        kernels::active().and_count(p.data(), remaining.data(), g.adj[v].data(), g.words);
        tasks.push_back(Task{{v}, std::move(p), colours[idx]});
        remaining.reset(v);
    }
    return tasks;
}

}  // namespace

SearchResult max_code(const SearchConfig& cfg)
{
    if (cfg.d == 0 || cfg.d > max_search_width)
        throw DomainError("exact search supports 1 <= d <= " + std::to_string(max_search_width));
    if (cfg.k == 0 || cfg.k > cfg.d)
        throw DomainError("exact search needs 1 <= k <= d");
    if (cfg.time_budget.count() <= 0)
        throw DomainError("exact search needs a positive time budget");

    const auto start = std::chrono::steady_clock::now();
    const Graph g = build_graph(cfg.k, cfg.d);

    std::vector<std::size_t> seed_clique;
    if (cfg.lower_bound_seed) {
        const CodeList& seed = *cfg.lower_bound_seed;
        if (seed.empty() || seed.width() != cfg.d)
            throw DomainError("seed code must be nonempty with width " + std::to_string(cfg.d));
        if (!is_k_neighborly(seed, cfg.k))
            throw DomainError("seed code is not " + std::to_string(cfg.k) + "-neighborly");
        for (const auto& s : seed) {
            const auto it = std::find(g.vertices.begin(), g.vertices.end(), s);
            seed_clique.push_back(static_cast<std::size_t>(it - g.vertices.begin()));
        }
    }

    Shared shared(seed_clique.size(), seed_clique, start + cfg.time_budget);
    std::vector<Task> tasks = root_tasks(g, cfg.d, cfg.symmetry_reduction, shared);

    std::atomic<std::size_t> next_task{0};
    auto work = [&] {
        Worker w(g, shared);
        for (std::size_t t = next_task.fetch_add(1); t < tasks.size() && !shared.aborted();
             t = next_task.fetch_add(1))
            w.run(std::move(tasks[t]));
        shared.nodes.fetch_add(w.nodes());
    };

    const unsigned workers = std::max(1u, cfg.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(work);
    }

    SearchResult result;
    const auto best = shared.code();
    result.best_size = best.size();
    result.best_code = CodeList(cfg.d);
    for (auto v : best)
        result.best_code.push_back(g.vertices[v]);
    result.proven_optimal = !shared.aborted();
    result.nodes_explored = shared.nodes.load();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

bool IdentityReport::all_agree() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.agrees(); });
}

IdentityReport verify_extremal_identities(std::size_t d_max, std::chrono::milliseconds budget_per_search)
{
    if (d_max > 5)
        throw DomainError("verify_extremal_identities supports d_max <= 5");

    IdentityReport report;
    auto run = [&](std::string family, std::size_t k, std::size_t d, std::size_t expected) {
        SearchConfig cfg;
        cfg.k = k;
        cfg.d = d;
        cfg.time_budget = budget_per_search;
        const auto r = max_code(cfg);
        report.checks.push_back(IdentityCheck{std::move(family), k, d, expected, r.best_size, r.proven_optimal});
    };

    for (std::size_t d = 1; d <= d_max; ++d) {
        run("n(1,d)=d+1", 1, d, d + 1);
        run("n(d,d)=2^d", d, d, std::size_t{1} << d);
        if (d >= 2) {
            run("n(d-1,d)=3*2^(d-2)", d - 1, d, 3 * (std::size_t{1} << (d - 2)));
            run("n(2,d)=b(d)", 2, d, static_cast<std::size_t>(seq_b(d)));
        }
    }
    return report;
}

}  // namespace nbox
