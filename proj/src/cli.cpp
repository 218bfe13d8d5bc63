#include "nbox/cli.hpp"

#include "nbox/construction.hpp"
#include "nbox/covering.hpp"
#include "nbox/error.hpp"
#include "nbox/exact_search.hpp"
#include "nbox/formulas.hpp"
#include "nbox/game_service.hpp"
#include "nbox/heatmap.hpp"
#include "nbox/io.hpp"
#include "nbox/kernels.hpp"
#include "nbox/splitting_game.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace nbox {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::size_t d = 0;
    std::size_t k = 0;
    std::string file;
    std::string out;
    std::string seq;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    double budget = 0;
    bool no_symmetry = false;
    bool symmetry = false;
    bool seed = false;
    std::string seed_file;
    unsigned workers = 1;
    bool zaks = false;
    std::string format;
    std::size_t cell = 16;
    std::string host = "127.0.0.1";
    int port = 8080;
};

// Writes to --out if given, otherwise to `out`.
void emit(const Options& o, std::ostream& out, const std::string& bytes)
{
    if (o.out.empty()) {
        out << bytes;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f)
        throw ParseError("cannot write '" + o.out + "'");
    f << bytes;
}

std::chrono::milliseconds to_ms(double seconds)
{
    return std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
}

std::string moves_text(const std::vector<Move>& line)
{
    std::string s;
    for (const auto& m : line)
        s += "(" + std::to_string(m.string_index) + ", " + std::to_string(m.position) + ")\n";
    return s;
}

int cmd_construct(const Options& o, std::ostream& out)
{
    std::ostringstream ss;
    io::write_code(ss, generate_code(o.d), 2);
    emit(o, out, ss.str());
    return exit_ok;
}

int cmd_plan(const Options& o, std::ostream& out)
{
    const auto plan = plan_decomposition(o.d);
    const auto counts = count_seeds(plan.leaves);
    const Triple t = build_triple(plan);
    out << "d=" << o.d << " k=" << plan.k << " case=" << plan_case_name(plan.case_tag) << '\n';
    out << "seeds: flat=" << counts.flat << " dagger=" << counts.dagger << " double-dagger=" << counts.double_dagger
        << " sharp=" << counts.sharp << '\n';
    out << "leaves:";
    for (auto id : plan.leaves)
        out << ' ' << seed_name(id);
    out << '\n' << "triple " << to_string(t.params()) << '\n';
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto file = io::read_code_file(o.file);
    std::size_t k = o.k;
    if (k == 0) {
        if (!file.k)
            throw CLI::ValidationError("--k", "required when the file has no 'k=' header");
        k = *file.k;
    }
    const auto verdict = is_k_neighborly(file.code, k);
    if (!verdict) {
        const auto& v = *verdict.violation;
        out << "FAIL: entries " << v.first << " (" << file.code[v.first].to_string() << ") and " << v.second << " ("
            << file.code[v.second].to_string() << ") at distance " << v.distance << ", need 1.." << k << '\n';
        return exit_failed;
    }
    out << "OK: " << file.code.size() << " strings of width " << file.code.width() << " are " << k
        << "-neighborly\n";
    return exit_ok;
}

int cmd_tables(const Options& o, std::ostream& out)
{
    Sequence seq;
    std::string index_name;
    std::string value_name;
    if (o.seq == "a") {
        seq = Sequence::A;
        index_name = "n";
        value_name = "a(n)";
    } else if (o.seq == "b") {
        seq = Sequence::B;
        index_name = "d";
        value_name = "b(d)";
    } else {
        seq = Sequence::C;
        index_name = "n";
        value_name = "c(n)";
    }
    const auto values = sequence_range(seq, o.from, o.to);
    out << index_name;
    for (std::uint64_t i = o.from; i <= o.to; ++i)
        out << ',' << i;
    out << '\n' << value_name;
    for (auto v : values)
        out << ',' << v;
    out << '\n';
    return exit_ok;
}

int cmd_search(const Options& o, std::ostream& out)
{
    SearchConfig cfg;
    cfg.k = o.k;
    cfg.d = o.d;
    if (o.budget > 0)
        cfg.time_budget = to_ms(o.budget);
    cfg.symmetry_reduction = !o.no_symmetry;
    cfg.workers = o.workers;
    if (!o.seed_file.empty())
        cfg.lower_bound_seed = io::read_code_file(o.seed_file).code;
    else if (o.seed && o.k == 2 && o.d >= 2)
        cfg.lower_bound_seed = generate_code(o.d);

    const auto r = max_code(cfg);
    out << "n(" << o.k << "," << o.d << ") " << (r.proven_optimal ? "=" : ">=") << ' ' << r.best_size << '\n';
    out << "proven_optimal=" << (r.proven_optimal ? "true" : "false") << " nodes=" << r.nodes_explored
        << " elapsed=" << std::fixed << std::setprecision(3) << r.elapsed.count() << "s"
        << " isa=" << kernels::isa_name(kernels::active().isa) << '\n';
    if (!o.out.empty()) {
        std::ostringstream ss;
        io::write_code(ss, r.best_code, o.k);
        emit(o, out, ss.str());
    } else {
        for (const auto& s : r.best_code)
            out << s.to_string() << '\n';
    }
    return exit_ok;
}

int cmd_cover(const Options& o, std::ostream& out)
{
    const CodeList code = o.zaks ? zaks_code(o.d) : generate_code(o.d);
    std::ostringstream ss;
    io::write_covering(ss, code_to_covering(code));
    emit(o, out, ss.str());
    return exit_ok;
}

int cmd_cover_verify(const Options& o, std::ostream& out)
{
    const auto cov = io::read_covering_file(o.file);
    const auto verdict = verify_covering(cov, o.k);
    if (!verdict) {
        const auto& v = *verdict.violation;
        out << "FAIL: edge {" << v.u << ", " << v.v << "} lies in " << v.count << " cliques, need 1.." << o.k
            << '\n';
        return exit_failed;
    }
    out << "OK: " << cov.cliques().size() << " cliques form a bipartite " << o.k << "-covering of K_"
        << cov.n_vertices() << '\n';
    return exit_ok;
}

int cmd_game_solve(const Options& o, std::ostream& out)
{
    SolveOptions opts;
    if (o.budget > 0)
        opts.budget = to_ms(o.budget);
    opts.symmetry = o.symmetry;
    const auto r = solve(o.k, o.d, opts);
    out << "score(" << o.k << "," << o.d << ") " << (r.proven ? "=" : ">=") << ' ' << r.score << '\n';
    out << "proven=" << (r.proven ? "true" : "false") << " positions=" << r.positions << '\n';
    out << "moves:\n" << moves_text(r.line);
    return exit_ok;
}

int cmd_game_replay(const Options& o, std::ostream& out)
{
    std::ifstream in(o.file);
    if (!in)
        throw ParseError("cannot open '" + o.file + "'");
    const GameState s = io::read_game(in);
    out << "score=" << s.score() << " terminal=" << (s.terminal() ? "true" : "false") << '\n';
    for (const auto& v : s.code())
        out << v.to_string() << '\n';
    return exit_ok;
}

int cmd_heatmap(const Options& o, std::ostream& out)
{
    const auto file = io::read_code_file(o.file);
    emit(o, out, render_heatmap(file.code, heatmap_format_from_string(o.format), o.cell));
    return exit_ok;
}

int cmd_serve(const Options& o, std::ostream& out, std::ostream& err)
{
    GameService service;
    GameServer server(service);
    const int port = server.bind(o.host, o.port);
    if (port < 0) {
        err << "cannot bind " << o.host << ':' << o.port << '\n';
        return exit_failed;
    }
    out << "listening on http://" << o.host << ':' << port << '\n' << std::flush;
    return server.serve() ? exit_ok : exit_failed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct, verify and explore k-neighborly ternary codes", "nbox"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "2-neighborly code of width d and size b(d)");
    construct->add_option("--d", o.d, "width (>= 2)")->required();
    construct->add_option("--out", o.out, "output file");

    auto* plan = app.add_subcommand("plan", "show the seed decomposition used for width d");
    plan->add_option("--d", o.d, "width (>= 4)")->required();

    auto* verify = app.add_subcommand("verify", "check that a code file is k-neighborly");
    verify->add_option("--file", o.file, "code file")->required();
    verify->add_option("--k", o.k, "neighborliness (default: the file header)")->check(CLI::PositiveNumber);

    auto* tables = app.add_subcommand("tables", "values of the sequences a, b, c");
    tables->add_option("--seq", o.seq, "sequence")->required()->check(CLI::IsMember({"a", "b", "c"}));
    tables->add_option("--from", o.from, "first index")->required();
    tables->add_option("--to", o.to, "last index")->required();

    auto* search = app.add_subcommand("search", "exact n(k,d) by branch and bound");
    search->add_option("--k", o.k, "neighborliness")->required();
    search->add_option("--d", o.d, "width (<= 8)")->required();
    search->add_option("--budget", o.budget, "time budget in seconds (default 300)");
    search->add_flag("--no-symmetry", o.no_symmetry, "search without symmetry reduction");
    search->add_flag("--seed", o.seed, "start from the constructed code (k = 2)");
    search->add_option("--seed-file", o.seed_file, "start from the code in this file");
    search->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", o.out, "write the best code to this file");

    auto* cover = app.add_subcommand("cover", "bipartite covering from the constructed code");
    cover->add_option("--d", o.d, "width")->required();
    cover->add_flag("--zaks", o.zaks, "use the d+1 string 1-neighborly code instead");
    cover->add_option("--out", o.out, "output file");

    auto* cover_verify = app.add_subcommand("cover-verify", "check a bipartite k-covering file");
    cover_verify->add_option("--file", o.file, "covering file")->required();
    cover_verify->add_option("--k", o.k, "multiplicity bound")->required()->check(CLI::PositiveNumber);

    auto* game = app.add_subcommand("game", "the splitting game");
    game->require_subcommand(1);
    auto* game_solve = game->add_subcommand("solve", "best score by exhaustive play");
    game_solve->add_option("--k", o.k, "neighborliness")->required();
    game_solve->add_option("--d", o.d, "width")->required();
    game_solve->add_option("--budget", o.budget, "time budget in seconds (default 60)");
    game_solve->add_flag("--symmetry", o.symmetry, "merge positions equal up to symmetry (d <= 6)");
    auto* game_replay = game->add_subcommand("replay", "replay a serialized game");
    game_replay->add_option("--file", o.file, "game file")->required();

    auto* heatmap = app.add_subcommand("heatmap", "render a code as a heat map");
    heatmap->add_option("--file", o.file, "code file")->required();
    heatmap->add_option("--format", o.format, "svg or ppm")->required()->check(CLI::IsMember({"svg", "ppm"}));
    heatmap->add_option("--cell", o.cell, "cell size in pixels")->check(CLI::PositiveNumber);
    heatmap->add_option("--out", o.out, "output file");

    auto* serve = app.add_subcommand("serve", "JSON game service");
    serve->add_option("--port", o.port, "TCP port (0 picks one)")->check(CLI::Range(0, 65535));
    serve->add_option("--host", o.host, "bind address");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try {
        if (*construct)
            return cmd_construct(o, out);
        if (*plan)
            return cmd_plan(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*tables)
            return cmd_tables(o, out);
        if (*search)
            return cmd_search(o, out);
        if (*cover)
            return cmd_cover(o, out);
        if (*cover_verify)
            return cmd_cover_verify(o, out);
        if (*game_solve)
            return cmd_game_solve(o, out);
        if (*game_replay)
            return cmd_game_replay(o, out);
        if (*heatmap)
            return cmd_heatmap(o, out);
        if (*serve)
            return cmd_serve(o, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IllegalMove& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace nbox
