#include "ghmod/annihilator.hpp"
#include "ghmod/delta.hpp"
#include "ghmod/general.hpp"
#include "ghmod/hook.hpp"
#include "ghmod/linalg.hpp"
#include "ghmod/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <thread>

using namespace ghmod;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct Globals {
    std::string output = "text";
    int threads = 0;
    std::uint64_t seed = 1;
    int limit_n = 7;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_size(int n, const Globals& g) {
    if (n > g.limit_n)
        throw SizeLimitError("n = " + std::to_string(n) + " exceeds --limit-n " + std::to_string(g.limit_n));
}

void require_hook(int K, int L, const Globals& g) {
    if (K < 0 || L < 0) throw UsageError("--k and --l must be non-negative");
    require_size(K + L + 1, g);
}

Partition parse_partition(const std::string& text, const Globals& g) {
    Partition mu = [&] {
        try {
            return Partition::parse(text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad partition: ") + e.what());
        }
    }();
    require_size(mu.n(), g);
    return mu;
}

RankOptions rank_opts(const Globals& g) {
    RankOptions r;
    r.seed = g.seed;
    return r;
}

SuiteOptions suite_opts(const Globals& g) {
    return {g.seed, g.threads};
}

std::string hook_name(int K, int L) {
    return "(K=" + std::to_string(K) + ",L=" + std::to_string(L) + ")";
}

void cmd_delta(Report& r, const Globals& g, const std::string& part) {
    const Partition mu = parse_partition(part, g);
    r.params = {{"partition", mu.to_string()}};
    const auto d = build_delta(mu, std::max(g.limit_n, 1));
    r.notes["delta"] = format(d.value);
    r.notes["bidegree"] = {d.bidegree.first, d.bidegree.second};
    r.notes["terms"] = d.value.size();
}

void cmd_hooks(Report& r, const Globals& g, const std::string& action, int K, int L, bool list) {
    require_hook(K, L, g);
    r.params = {{"k", K}, {"l", L}};
    const int n = K + L + 1;
    const auto nf = to_json_number(factorial(n));
    const auto name = hook_name(K, L);
    if (action == "enumerate") {
        const auto ds = enumerate_drawings(K, L);
        r.add("drawing count " + name, nf, ds.size());
        r.add("closed form " + name, nf, to_json_number(closed_form_count(K, L)));
        if (list) {
            r.notes["drawings"] = json::array();
            for (const auto& d : ds) r.notes["drawings"].push_back(json::parse(d.to_json()));
        }
    } else if (action == "verify-dim") {
        const auto delta = build_delta(hook_partition(K, L), g.limit_n);
        const auto cl = derivative_closure(delta, rank_opts(g), g.limit_n);
        r.add("dim M_mu", nf, cl.dimension);
    } else if (action == "verify-basis") {
        Report inner;
        check_basis_rank(inner, n, n, suite_opts(g));
        for (auto& c : inner.checks)
            if (c.name.find(name) != std::string::npos) r.checks.push_back(c);
    } else if (action == "descendants") {
        const auto delta = build_delta(hook_partition(K, L), g.limit_n);
        const auto graph = descendant_graph(K, L, delta, g.limit_n);
        r.add("descendant graph acyclic " + name, true, graph.acyclic);
        r.notes["drawings"] = graph.drawings.size();
        r.notes["edges"] = graph.edge_count;
    }
}

void cmd_ideal(Report& r, const Globals& g, const std::string& action, int K, int L, const std::string& op_text) {
    require_hook(K, L, g);
    r.params = {{"k", K}, {"l", L}};
    const int n = K + L + 1;
    const auto name = hook_name(K, L);
    const auto delta = build_delta(hook_partition(K, L), g.limit_n);
    if (action == "verify") {
        const auto gs = generators(K, L);
        size_t ok = 0;
        for (const auto& gen : gs.generators) ok += annihilates(gen.poly, delta);
        r.add("generators annihilating delta " + name, gs.generators.size(), ok);
        for (int w = 1; w <= 4; ++w) {
            const auto inst = proposition_instances(n, K, L, w, g.limit_n);
            size_t good = 0;
            for (const auto& i : inst) good += annihilates(i, delta);
            r.add("proposition " + std::to_string(w) + " instances annihilating delta " + name, inst.size(), good);
        }
    } else if (action == "quotient-dim") {
        const auto q = quotient_hilbert(K, L, rank_opts(g), g.limit_n);
        r.add("quotient dimension " + name, to_json_number(factorial(n)), q.total);
        r.add("quotient vanishes beyond the grid " + name, true, q.shell_zero);
        json table = json::object();
        for (const auto& [bd, d] : q.table) table[std::to_string(bd.first) + "," + std::to_string(bd.second)] = d;
        r.notes["table"] = table;
    } else if (action == "normal-form") {
        if (op_text.empty()) throw UsageError("normal-form needs --op");
        r.params["op"] = op_text;
        Monomial op;
        try {
            op = parse_monomial(op_text, n);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad operator: ") + e.what());
        }
        Rewriter rw(K, L, &delta);
        const auto nf = rw.normal_form(op);
        Polynomial rhs(n);
        json terms = json::array();
        for (const auto& [d, c] : nf) {
            const Polynomial img = apply_diff(diff_op(d), delta.value);
            for (const auto& [m, v] : img.terms()) {
                const mpq_class t = c * mpq_class(v);
                if (t.get_den() != 1) throw std::logic_error("non-integral image coefficient");
                rhs.add_term(m, t.get_num());
            }
            terms.push_back({{"coefficient", c.get_str()}, {"operator", diff_op(d).to_string()},
                             {"drawing", json::parse(d.to_json())}});
        }
        const Polynomial lhs = apply_diff(op, delta.value);
        r.add("normal form agrees on delta", true, format(sub(lhs, rhs)) == "0");
        r.notes["normal_form"] = terms;
        json rules = json::object();
        for (const auto& [rule, c] : rw.stats().by_rule) rules[to_string(rule)] = c;
        r.notes["rules"] = rules;
    }
}

void cmd_zerox(Report& r, const Globals& g, const std::string& action, const std::string& part) {
    const Partition mu = parse_partition(part, g);
    r.params = {{"partition", mu.to_string()}};
    const auto name = "(" + mu.to_string() + ")";
    if (action == "count") {
        const auto c = count_check(mu, g.limit_n);
        r.add("zero-x drawing count " + name, to_json_number(c.expected), to_json_number(c.count));
    } else {
        const auto delta = build_delta(mu, g.limit_n);
        const auto t4 = verify_theorem4(mu, delta, rank_opts(g), true, g.limit_n);
        const auto e = to_json_number(t4.expected);
        r.add("zero-x drawing count " + name, e, t4.drawings);
        r.add("rank of S images " + name, e, t4.rank_s);
        r.add("rank of T images " + name, e, t4.rank_t);
        r.add("x-degrees of S and T images " + name, true, t4.degrees_ok);
        r.add("minimal monomials " + name, true, t4.lemma7_ok);
        r.add("distinct M_T " + name, true, t4.distinct_mt);
        r.add("zero-x-degree part of the closure " + name, e, t4.closure_x0);
    }
}

void cmd_suite(Report& r, const Globals& g, const std::string& level) {
    r.params = {{"level", level}};
    const auto criteria = level == "full" ? acceptance_criteria() : smoke_criteria();
    for (const auto& c : criteria) c.run(r, suite_opts(g));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of drawing bases and annihilators for diagonal modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    g.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized rank passes");
    app.add_option("--limit-n", g.limit_n, "Largest n accepted")->check(CLI::PositiveNumber);

    std::string partition, action, op;
    int K = -1, L = -1;
    bool list = false;

    auto* delta = app.add_subcommand("delta", "Print the determinant for a partition");
    delta->add_option("--partition", partition, "Comma-separated parts")->required();

    auto* hooks = app.add_subcommand("hooks", "Drawing bases for hook partitions");
    hooks->add_option("action", action)->required()->check(
        CLI::IsMember({"enumerate", "verify-dim", "verify-basis", "descendants"}));
    hooks->add_option("--k", K)->required();
    hooks->add_option("--l", L)->required();
    hooks->add_flag("--list", list, "Include every drawing");

    auto* ideal = app.add_subcommand("ideal", "Annihilator ideal for hook partitions");
    ideal->add_option("action", action)->required()->check(CLI::IsMember({"verify", "quotient-dim", "normal-form"}));
    ideal->add_option("--k", K)->required();
    ideal->add_option("--l", L)->required();
    ideal->add_option("--op", op, "Operator monomial such as x3 or y1^2*x2");

    auto* zerox = app.add_subcommand("zerox", "Zero-x-degree bases for any partition");
    zerox->add_option("action", action)->required()->check(CLI::IsMember({"count", "verify"}));
    zerox->add_option("--partition", partition)->required();

    auto* suite = app.add_subcommand("suite", "Run a verification matrix");
    suite->add_option("level", action)->required()->check(CLI::IsMember({"smoke", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Report r;
    r.seed = g.seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (delta->parsed()) {
            r.command = "delta";
            cmd_delta(r, g, partition);
        } else if (hooks->parsed()) {
            r.command = "hooks " + action;
            cmd_hooks(r, g, action, K, L, list);
        } else if (ideal->parsed()) {
            r.command = "ideal " + action;
            cmd_ideal(r, g, action, K, L, op);
        } else if (zerox->parsed()) {
            r.command = "zerox " + action;
            cmd_zerox(r, g, action, partition);
        } else {
            r.command = "suite " + action;
            cmd_suite(r, g, action);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return kExitSize;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

    if (g.output == "json")
        std::cout << r.to_json().dump(2) << '\n';
    else if (r.command == "delta")
        std::cout << r.notes["delta"].get<std::string>() << '\n';
    else
        std::cout << r.to_text();
    return r.pass() ? kExitPass : kExitFail;
}
