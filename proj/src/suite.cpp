#include "ghmod/suite.hpp"

#include "ghmod/annihilator.hpp"
#include "ghmod/general.hpp"
#include "ghmod/hook.hpp"
#include "ghmod/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace ghmod {

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    const size_t workers = std::min<size_t>(count, static_cast<size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next++;
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

nlohmann::json to_json_number(const mpz_class& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

namespace {

struct Hook {
    int K, L;
    int n() const { return K + L + 1; }
    std::string name() const { return "(K=" + std::to_string(K) + ",L=" + std::to_string(L) + ")"; }
};

std::vector<Hook> hooks_upto(int min_n, int max_n) {
    std::vector<Hook> v;
    for (int n = min_n; n <= max_n; ++n)
        for (int K = 0; K < n; ++K) v.push_back({K, n - 1 - K});
    return v;
}

std::vector<Partition> partitions_upto(int max_n) {
    std::vector<Partition> v;
    for (int n = 1; n <= max_n; ++n)
        for (auto& p : partitions_of(n)) v.push_back(p);
    return v;
}

RankOptions rank_opts(const SuiteOptions& o) {
    RankOptions r;
    r.seed = o.seed;
    return r;
}

// Appends per-item checks in index order.
template <class Item, class Fn>
void per_item(Report& r, const std::vector<Item>& items, const SuiteOptions& o, Fn fn) {
    std::vector<std::vector<Check>> out(items.size());
    parallel_for(items.size(), o.threads, [&](size_t i) {
        Report local;
        fn(local, items[i]);
        out[i] = std::move(local.checks);
    });
    for (auto& cs : out)
        for (auto& c : cs) r.checks.push_back(std::move(c));
}

bool equal_images(const Polynomial& lhs, const std::vector<std::pair<mpq_class, const Polynomial*>>& rhs) {
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    for (const auto& [m, c] : lhs.terms()) acc[m] += mpq_class(c);
    for (const auto& [c, p] : rhs)
        for (const auto& [m, v] : p->terms()) acc[m] -= c * mpq_class(v);
    for (const auto& [m, c] : acc)
        if (c != 0) return false;
    return true;
}

}  // namespace

void check_drawing_counts(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        const auto f = to_json_number(factorial(h.n()));
        rr.add("drawing count " + h.name(), f, enumerate_drawings(h.K, h.L).size());
        rr.add("closed form " + h.name(), f, to_json_number(closed_form_count(h.K, h.L)));
    });
}

void check_basis_rank(Report& r, int min_n, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(min_n, max_n), o, [&](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        std::map<std::pair<int, int>, std::vector<Polynomial>> blocks;
        for (const auto& d : enumerate_drawings(h.K, h.L)) {
            Monomial s = diff_op(d);
            blocks[{s.deg_x(), s.deg_y()}].push_back(apply_diff(s, delta.value));
        }
        size_t rank_sum = 0;
        for (const auto& [bd, polys] : blocks) rank_sum += rank_of(polys, rank_opts(o)).rank;
        rr.add("rank of drawing images " + h.name(), to_json_number(factorial(h.n())), rank_sum);
    });
}

void check_closure_dim(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [&](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        auto cl = derivative_closure(delta, rank_opts(o), 7);
        rr.add("dim M_mu by derivative closure " + h.name(), to_json_number(factorial(h.n())), cl.dimension);
    });
}

void check_spanning(Report& r, int max_n, const SuiteOptions& o) {
    const auto hooks = hooks_upto(1, max_n);
    std::vector<nlohmann::json> notes(hooks.size());
    std::vector<std::vector<Check>> out(hooks.size());
    parallel_for(hooks.size(), o.threads, [&](size_t idx) {
        const Hook h = hooks[idx];
        auto delta = build_delta(hook_partition(h.K, h.L));
        Rewriter rw(h.K, h.L, &delta);
        std::map<HookDrawing, Polynomial> img;
        for (const auto& d : rw.drawings()) img.emplace(d, apply_diff(diff_op(d), delta.value));
        const auto [A, B] = delta.bidegree;
        size_t total = 0, ok = 0;
        for (int a = 0; a <= A; ++a)
            for (int b = 0; b <= B; ++b)
                for (const auto& op : monomials_of_bidegree(h.n(), a, b)) {
                    ++total;
                    auto nf = rw.normal_form(op);
                    std::vector<std::pair<mpq_class, const Polynomial*>> rhs;
                    for (const auto& [d, c] : nf) rhs.emplace_back(c, &img.at(d));
                    if (equal_images(apply_diff(op, delta.value), rhs)) ++ok;
                }
        Report rr;
        rr.add("normal forms verified on delta " + h.name(), total, ok);
        out[idx] = std::move(rr.checks);
        nlohmann::json rules = nlohmann::json::object();
        for (const auto& [rule, c] : rw.stats().by_rule) rules[to_string(rule)] = c;
        notes[idx] = {{"hook", h.name()}, {"reduction_steps", rw.stats().steps}, {"rules", rules}};
    });
    for (auto& cs : out)
        for (auto& c : cs) r.checks.push_back(std::move(c));
    for (auto& n : notes) r.notes["rewriting"].push_back(n);
}

void check_generators(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        auto gs = generators(h.K, h.L);
        size_t ok = 0;
        for (const auto& g : gs.generators) ok += annihilates(g.poly, delta);
        rr.add("generators annihilating delta " + h.name(), gs.generators.size(), ok);
    });
}

void check_propositions(Report& r, int max_n, const SuiteOptions& o) {
    std::vector<std::pair<Hook, int>> jobs;
    for (const auto& h : hooks_upto(1, max_n))
        for (int w = 1; w <= 4; ++w) jobs.emplace_back(h, w);
    per_item(r, jobs, o, [](Report& rr, const std::pair<Hook, int>& job) {
        const auto& [h, w] = job;
        auto delta = build_delta(hook_partition(h.K, h.L));
        auto inst = proposition_instances(h.n(), h.K, h.L, w);
        size_t ok = 0;
        for (const auto& i : inst) ok += annihilates(i, delta);
        rr.add("proposition " + std::to_string(w) + " instances annihilating delta " + h.name(), inst.size(), ok);
    });
}

void check_quotient(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [&](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        auto q = quotient_hilbert(h.K, h.L, rank_opts(o));
        auto cl = derivative_closure(delta, rank_opts(o), 7);
        const auto [A, B] = delta.bidegree;
        nlohmann::json qt = nlohmann::json::object(), ct = nlohmann::json::object();
        for (const auto& [bd, d] : q.table) qt[std::to_string(bd.first) + "," + std::to_string(bd.second)] = d;
        for (const auto& [bd, d] : cl.table)
            ct[std::to_string(A - bd.first) + "," + std::to_string(B - bd.second)] = d;
        rr.add("quotient dimension " + h.name(), to_json_number(factorial(h.n())), q.total);
        rr.add("quotient graded table equals closure table " + h.name(), ct, qt);
        rr.add("quotient vanishes beyond the grid " + h.name(), true, q.shell_zero);
    });
}

void check_reconstruction(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        const auto ds = enumerate_drawings(h.K, h.L);
        size_t okS = 0, okT = 0;
        for (const auto& d : ds) {
            auto [S, T] = split(d);
            try {
                okS += reconstruct(S, Side::S, h.K, h.L) == d;
            } catch (const NoPreimage&) {
            }
            try {
                okT += reconstruct(T, Side::T, h.K, h.L) == d;
            } catch (const NoPreimage&) {
            }
        }
        rr.add("reconstruct from S " + h.name(), ds.size(), okS);
        rr.add("reconstruct from T " + h.name(), ds.size(), okT);
    });
}

void check_acyclic(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        auto g = descendant_graph(h.K, h.L, delta, 7);
        rr.add("descendant graph acyclic " + h.name(), true, g.acyclic);
    });
}

void check_flip_son_duality(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        auto delta = build_delta(hook_partition(h.K, h.L));
        const auto ds = enumerate_drawings(h.K, h.L);
        size_t pairs = 0, ok = 0;
        for (size_t i = 0; i < ds.size(); ++i)
            for (size_t j = 0; j < ds.size(); ++j) {
                if (i == j) continue;
                ++pairs;
                ok += is_son(ds[i], ds[j], delta) == is_son(flip(ds[j]), flip(ds[i]), delta);
            }
        rr.add("flip-son duality " + h.name(), pairs, ok);
    });
}

void check_flip_involution(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, hooks_upto(1, max_n), o, [](Report& rr, const Hook& h) {
        const auto ds = enumerate_drawings(h.K, h.L);
        std::set<HookDrawing> all(ds.begin(), ds.end());
        size_t ok = 0;
        for (const auto& d : ds) ok += flip(flip(d)) == d && all.count(flip(d));
        rr.add("flip involution on the family " + h.name(), ds.size(), ok);
    });
}

void check_zerox_counts(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, partitions_upto(max_n), o, [](Report& rr, const Partition& mu) {
        auto c = count_check(mu);
        rr.add("zero-x drawing count (" + mu.to_string() + ")", to_json_number(c.expected), to_json_number(c.count));
    });
}

void check_lemma7(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, partitions_upto(max_n), o, [](Report& rr, const Partition& mu) {
        auto delta = build_delta(mu);
        const auto ds = enumerate_general(mu);
        size_t ok = 0;
        std::set<std::vector<std::uint8_t>> mts;
        for (const auto& d : ds) {
            ok += lemma7_check(d, delta);
            auto T = split_general(d).second;
            mts.insert({T.raw().begin(), T.raw().end()});
        }
        rr.add("minimal monomials (" + mu.to_string() + ")", ds.size(), ok);
        rr.add("distinct M_T (" + mu.to_string() + ")", ds.size(), mts.size());
    });
}

void check_zerox_ranks(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, partitions_upto(max_n), o, [&](Report& rr, const Partition& mu) {
        auto delta = build_delta(mu);
        auto t4 = verify_theorem4(mu, delta, rank_opts(o), false);
        const auto e = to_json_number(t4.expected);
        rr.add("rank of S images (" + mu.to_string() + ")", e, t4.rank_s);
        rr.add("rank of T images (" + mu.to_string() + ")", e, t4.rank_t);
        rr.add("x-degrees of S and T images (" + mu.to_string() + ")", true, t4.degrees_ok);
    });
}

void check_corner_recursion(Report& r, int max_n, const SuiteOptions& o) {
    per_item(r, partitions_upto(max_n), o, [](Report& rr, const Partition& mu) {
        auto c = corner_recursion_check(mu);
        rr.add("corner recursion (" + mu.to_string() + ")", to_json_number(c.lhs), to_json_number(c.rhs));
    });
}

void check_fixtures(Report& r, const SuiteOptions&) {
    // Worked operator d_y1^2 d_x2 d_x4 d_x5^2 d_y6: it needs eight variables.
    const std::string op_text = "y1^2*x2*x4*x5^2*y6";
    const int n = 8;
    Monomial op = parse_monomial(op_text, n);
    nlohmann::json hooks = nlohmann::json::array();
    bool round_trip = true;
    for (int K = 0; K < n; ++K) {
        const int L = n - 1 - K;
        try {
            HookDrawing d = reconstruct(diagram_of(op), Side::S, K, L);
            hooks.push_back("K=" + std::to_string(K) + ",L=" + std::to_string(L) + ":" + d.shape_word());
            round_trip = round_trip && diff_op_of(split(d).first, n) == op && diff_op_of(split(d).first, n).to_string() == op_text;
        } catch (const NoPreimage&) {
        }
    }
    r.add("worked operator round-trips through its drawings", true, round_trip && !hooks.empty());
    r.add("hooks admitting the worked operator", nlohmann::json::array({"K=2,L=5:YXXXXYX", "K=3,L=4:YXYXXYX"}), hooks);

    // Zero-x example strings.
    const std::string ms = "x_2y_2x_3^4x_4^3x_6x_7^2x_8", mt = "y_1^3y_2y_5^2y_6y_9";
    r.add("M_S string round-trip", ms, parse_monomial(ms).to_compact());
    r.add("M_T string round-trip", mt, parse_monomial(mt).to_compact());
    const Partition mu({4, 3, 1, 1, 1});
    bool same = false;
    try {
        auto dS = reconstruct_general(parse_monomial(ms, mu.n()), Side::S, mu);
        auto dT = reconstruct_general(parse_monomial(mt, mu.n()), Side::T, mu);
        same = dS == dT && is_valid_general(dS);
    } catch (const NoPreimage&) {
    }
    r.add("M_S and M_T come from one drawing of (4,3,1,1,1)", true, same);
}

std::vector<Criterion> acceptance_criteria() {
    return {
        {"drawing count n<=7", [](Report& r, const SuiteOptions& o) { check_drawing_counts(r, 7, o); }},
        {"basis independence n<=6",
         [](Report& r, const SuiteOptions& o) { check_basis_rank(r, 1, 6, o); }},
        {"dimension by derivative closure n<=5", [](Report& r, const SuiteOptions& o) { check_closure_dim(r, 5, o); }},
        {"spanning rewriting n<=5", [](Report& r, const SuiteOptions& o) { check_spanning(r, 5, o); }},
        {"ideal soundness (generators n<=7, propositions n<=5)",
         [](Report& r, const SuiteOptions& o) {
             check_generators(r, 7, o);
             check_propositions(r, 5, o);
         }},
        {"ideal completeness n<=5", [](Report& r, const SuiteOptions& o) { check_quotient(r, 5, o); }},
        {"independence machinery",
         [](Report& r, const SuiteOptions& o) {
             check_reconstruction(r, 6, o);
             check_acyclic(r, 5, o);
             check_flip_son_duality(r, 5, o);
             check_flip_involution(r, 7, o);
         }},
        {"zero-x-degree bases",
         [](Report& r, const SuiteOptions& o) {
             check_zerox_counts(r, 7, o);
             check_lemma7(r, 6, o);
             check_zerox_ranks(r, 6, o);
             check_corner_recursion(r, 8, o);
         }},
        {"worked fixtures", [](Report& r, const SuiteOptions& o) { check_fixtures(r, o); }},
    };
}

std::vector<Criterion> smoke_criteria() {
    return {
        {"drawing count n<=4", [](Report& r, const SuiteOptions& o) { check_drawing_counts(r, 4, o); }},
        {"basis independence n<=4", [](Report& r, const SuiteOptions& o) { check_basis_rank(r, 1, 4, o); }},
        {"dimension by derivative closure n<=4", [](Report& r, const SuiteOptions& o) { check_closure_dim(r, 4, o); }},
        {"spanning rewriting n<=4", [](Report& r, const SuiteOptions& o) { check_spanning(r, 4, o); }},
        {"ideal soundness n<=4",
         [](Report& r, const SuiteOptions& o) {
             check_generators(r, 4, o);
             check_propositions(r, 4, o);
         }},
        {"ideal completeness n<=4", [](Report& r, const SuiteOptions& o) { check_quotient(r, 4, o); }},
        {"independence machinery n<=4",
         [](Report& r, const SuiteOptions& o) {
             check_reconstruction(r, 4, o);
             check_acyclic(r, 4, o);
             check_flip_son_duality(r, 4, o);
             check_flip_involution(r, 4, o);
         }},
        {"zero-x-degree bases n<=4",
         [](Report& r, const SuiteOptions& o) {
             check_zerox_counts(r, 4, o);
             check_lemma7(r, 4, o);
             check_zerox_ranks(r, 4, o);
             check_corner_recursion(r, 4, o);
         }},
        {"worked fixtures", [](Report& r, const SuiteOptions& o) { check_fixtures(r, o); }},
    };
}

}  // namespace ghmod
