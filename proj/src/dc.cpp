#include "dc.hpp"

#include <algorithm>

namespace hcdc {

namespace {

nlohmann::json edge_json(int a, int b) {
    return nlohmann::json::array({std::min(a, b), std::max(a, b)});
}

} // namespace

DCState::DCState(const Graph& g, const TwoFactor& f, const MatchingPartition& p) {
    n_ = g.n();
    std::vector<Edge> all_pairs = p.cross;
    all_pairs.insert(all_pairs.end(), p.within.begin(), p.within.end());
    PerfectMatching m = matching_from_pairs(g, all_pairs);
    if (!verify_matching(g, m))
        throw error(errc::inconsistent_inputs, "partition edges are not a perfect matching of g");

    // f must be exactly the complement of the partition's matching.
    std::vector<Edge> expect;
    for (const Edge& e : g.edges())
        if (m.partner[e.u] != e.v)
            expect.push_back(e);
    if (expect != f.edges)
        throw error(errc::inconsistent_inputs, "factor is not the complement of the matching");
    for (const Edge& e : p.cross)
        if (f.cycle_id[e.u] == f.cycle_id[e.v])
            throw error(errc::inconsistent_inputs,
                        "cross edge " + to_string(e) + " has both ends on one factor cycle");
    for (const Edge& e : p.within)
        if (f.cycle_id[e.u] != f.cycle_id[e.v])
            throw error(errc::inconsistent_inputs,
                        "within edge " + to_string(e) + " spans two factor cycles");

    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    marked_.assign(static_cast<std::size_t>(n_) * n_, 0);
    alive_.assign(n_, 1);
    deg_.assign(n_, 0);
    partner_ = m.partner;
    pair_of_.assign(n_, -1);
    for (const Edge& e : g.edges()) {
        adj_[idx(e.u, e.v)] = adj_[idx(e.v, e.u)] = 1;
        ++deg_[e.u];
        ++deg_[e.v];
        ++edge_count_;
    }
    for (const Edge& e : p.cross)
        pairs_.push_back({e.u, e.v, true, true});
    for (const Edge& e : p.within)
        pairs_.push_back({e.u, e.v, false, true});
    std::sort(pairs_.begin(), pairs_.end(),
              [](const DCPair& a, const DCPair& b) { return a.u < b.u; });
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        pair_of_[pairs_[i].u] = static_cast<int>(i);
        pair_of_[pairs_[i].v] = static_cast<int>(i);
    }
}

int DCState::live_pair_count() const {
    int c = 0;
    for (const DCPair& p : pairs_)
        c += p.alive ? 1 : 0;
    return c;
}

std::vector<Edge> DCState::live_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[idx(u, v)])
                out.push_back({u, v});
    return out;
}

void DCState::delete_edge(int a, int b) {
    if (!adj_[idx(a, b)])
        throw error(errc::internal_invariant_violation,
                    "deleting absent edge " + to_string(make_edge(a, b)));
    adj_[idx(a, b)] = adj_[idx(b, a)] = 0;
    if (marked_[idx(a, b)]) {
        marked_[idx(a, b)] = marked_[idx(b, a)] = 0;
        --marked_count_;
    }
    --deg_[a];
    --deg_[b];
    --edge_count_;
}

void DCState::delete_vertex_pair(int pair_index) {
    DCPair& pr = pairs_[pair_index];
    pr.alive = false;
    for (int x : {pr.u, pr.v}) {
        for (int w = 0; w < n_; ++w)
            if (adj_[idx(x, w)])
                delete_edge(x, w);
        alive_[x] = 0;
    }
}

void DCState::mark_edge(int a, int b) {
    if (!adj_[idx(a, b)])
        throw error(errc::internal_invariant_violation,
                    "marking absent edge " + to_string(make_edge(a, b)));
    if (partner_[a] == b)
        throw error(errc::internal_invariant_violation,
                    "marking matching edge " + to_string(make_edge(a, b)));
    if (!marked_[idx(a, b)]) {
        marked_[idx(a, b)] = marked_[idx(b, a)] = 1;
        ++marked_count_;
    }
}

bool DCState::has_marked_incident(int v) const {
    const std::uint8_t* row = marked_.data() + idx(v, 0);
    for (int w = 0; w < n_; ++w)
        if (row[w])
            return true;
    return false;
}

DCState init_dc_state(const Graph& g, const TwoFactor& f, const MatchingPartition& p) {
    return DCState(g, f, p);
}

namespace {

// Applies the first applicable rule at the first eligible site; returns the
// rule number, or 0 at a fixpoint.
int apply_one_rule(DCState& s, TraceSink* trace) {
    const auto& pairs = s.pairs();
    auto note = [&](int rule, const DCPair& pr, int v1, int a, int b) {
        if (trace && trace->on(2))
            trace->emit({{"event", "rule"},
                         {"rule", rule},
                         {"pair", edge_json(pr.u, pr.v)},
                         {"vertex", v1},
                         {"edge", edge_json(a, b)},
                         {"e_j", s.edge_count()}});
    };

    // rule 3
    for (const DCPair& pr : pairs) {
        if (!pr.alive)
            continue;
        for (int v1 : {pr.u, pr.v}) {
            if (s.degree(v1) <= 1) {
                int pi = s.pair_index_of(v1);
                s.delete_vertex_pair(pi);
                note(3, pr, v1, pr.u, pr.v);
                return 3;
            }
        }
    }
    // rule 5
    for (const DCPair& pr : pairs) {
        if (!pr.alive)
            continue;
        for (auto [v1, v2] : {std::pair{pr.u, pr.v}, std::pair{pr.v, pr.u}}) {
            if (s.degree(v1) != 3 || !s.has_marked_incident(v1))
                continue;
            bool fired = false;
            for (int w = 0; w < s.n(); ++w) {
                if (w == v2 || !s.has_edge(v1, w) || s.is_marked(v1, w))
                    continue;
                s.delete_edge(v1, w);
                note(5, pr, v1, v1, w);
                fired = true;
            }
            if (fired)
                return 5;
        }
    }
    // rule 7
    for (const DCPair& pr : pairs) {
        if (!pr.alive)
            continue;
        for (auto [v1, v2] : {std::pair{pr.u, pr.v}, std::pair{pr.v, pr.u}}) {
            if (s.degree(v1) != 2)
                continue;
            for (int w = 0; w < s.n(); ++w) {
                if (w == v2 || !s.has_edge(v1, w) || s.is_marked(v1, w))
                    continue;
                s.mark_edge(v1, w);
                note(7, pr, v1, v1, w);
                return 7;
            }
        }
    }
    // rule 9
    for (const DCPair& pr : pairs) {
        if (!pr.alive || !pr.cross)
            continue;
        for (auto [v1, v2] : {std::pair{pr.u, pr.v}, std::pair{pr.v, pr.u}}) {
            if (s.degree(v1) != 3 || s.has_marked_incident(v1))
                continue;
            int w[2], k = 0;
            for (int x = 0; x < s.n() && k < 2; ++x)
                if (x != v2 && s.has_edge(v1, x))
                    w[k++] = x;
            bool c0 = s.pairs()[s.pair_index_of(w[0])].cross;
            bool c1 = s.pairs()[s.pair_index_of(w[1])].cross;
            if (c0 == c1)
                continue;
            int toward_cross = c0 ? w[0] : w[1];
            int toward_within = c0 ? w[1] : w[0];
            s.mark_edge(v1, toward_cross);
            s.delete_edge(v1, toward_within);
            note(9, pr, v1, v1, toward_cross);
            return 9;
        }
    }
    return 0;
}

} // namespace

void apply_forcing_rules(DCState& s, TraceSink* trace, long long* firings) {
    long long count = 0;
    while (apply_one_rule(s, trace) != 0)
        ++count;
    if (firings)
        *firings += count;
}

std::optional<BranchSite> find_branch_site(const DCState& s) {
    for (const DCPair& pr : s.pairs()) {
        if (!pr.alive || !pr.cross)
            continue;
        for (auto [v1, v2] : {std::pair{pr.u, pr.v}, std::pair{pr.v, pr.u}}) {
            if (s.degree(v1) != 3 || s.has_marked_incident(v1))
                continue;
            int w[2], k = 0;
            for (int x = 0; x < s.n() && k < 2; ++x)
                if (x != v2 && s.has_edge(v1, x))
                    w[k++] = x;
            return BranchSite{v1, v2, w[0], w[1]};
        }
    }
    return std::nullopt;
}

void apply_branch(DCState& s, int pivot, int keep_w, int drop_w, TraceSink* trace, int depth) {
    s.mark_edge(pivot, keep_w);
    s.delete_edge(pivot, drop_w);
    if (trace && trace->on(2))
        trace->emit({{"event", "branch"},
                     {"vertex", pivot},
                     {"keep", edge_json(pivot, keep_w)},
                     {"drop", edge_json(pivot, drop_w)},
                     {"depth", depth},
                     {"e_j", s.edge_count()}});
}

std::optional<std::pair<DCState, DCState>> branch_children(const DCState& s) {
    auto site = find_branch_site(s);
    if (!site)
        return std::nullopt;
    DCState lo = s, hi = s;
    apply_branch(lo, site->pivot, site->w_lo, site->w_hi);
    apply_branch(hi, site->pivot, site->w_hi, site->w_lo);
    return std::make_pair(std::move(lo), std::move(hi));
}

namespace {

// Enumerates simple cycles of the surviving graph that alternate between
// matching and factor edges. Each cycle is found exactly once: the walk
// starts at the cycle's minimum vertex along its unique matching edge and
// only visits larger vertices.
struct CycleEnum {
    const DCState& s;
    const DCBudget& budget;
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path;
    long long steps = 0;
    bool budget_hit = false;

    CycleEnum(const DCState& state, const DCBudget& b) : s(state), budget(b) {
        on_path.assign(s.n(), 0);
    }

    bool full() {
        if (static_cast<long long>(cycles.size()) >= budget.cycle_cap) {
            budget_hit = true;
            return true;
        }
        return false;
    }

    // expect_matching: next edge must be the matching edge of the current
    // path head; otherwise the next edge must be a non-matching one.
    bool walk(int root, int at, bool expect_matching) {
        if (++steps > budget.walk_steps) {
            budget_hit = true;
            return false;
        }
        if (expect_matching) {
            int w = s.partner(at);
            if (!s.has_edge(at, w))
                return true; // partner edge gone only if pair dead; defensive
            if (w == root)
                return true; // would close on a matching edge; impossible shape
            if (w < root || on_path[w])
                return true;
            path.push_back(w);
            on_path[w] = 1;
            bool go = walk(root, w, false);
            on_path[w] = 0;
            path.pop_back();
            return go;
        }
        for (int w = 0; w < s.n(); ++w) {
            if (w == s.partner(at) || !s.has_edge(at, w))
                continue;
            if (w == root) {
                cycles.push_back(path);
                if (full())
                    return false;
                continue;
            }
            if (w < root || on_path[w])
                continue;
            path.push_back(w);
            on_path[w] = 1;
            bool go = walk(root, w, true);
            on_path[w] = 0;
            path.pop_back();
            if (!go)
                return false;
        }
        return true;
    }

    void run() {
        for (int root = 0; root < s.n(); ++root) {
            if (!s.vertex_alive(root))
                continue;
            int p = s.partner(root);
            if (p < root || !s.has_edge(root, p))
                continue;
            path = {root, p};
            on_path[root] = on_path[p] = 1;
            bool go = walk(root, p, false);
            on_path[root] = on_path[p] = 0;
            if (!go)
                break;
        }
    }
};

} // namespace

ExtractResult extract_exchange_set(const DCState& s, const TwoFactor& f, const DCOptions& opt) {
    ExtractResult res;

    CycleEnum en(s, opt.budget);
    en.run();
    res.budget_hit = en.budget_hit;
    res.cycles_enumerated = static_cast<long long>(en.cycles.size());

    std::vector<std::vector<int>> cand;
    cand.reserve(en.cycles.size());
    for (auto& c : en.cycles)
        cand.push_back(canonical_cycle(c));
    std::sort(cand.begin(), cand.end());

    const int ncyc = static_cast<int>(cand.size());
    const int k = static_cast<int>(f.cycle_count());

    // Per-candidate vertex mask and the set of factor cycles it touches.
    const int words = (s.n() + 63) / 64;
    std::vector<std::uint64_t> vmask(static_cast<std::size_t>(ncyc) * words, 0);
    std::vector<std::vector<int>> touches(ncyc);
    for (int i = 0; i < ncyc; ++i) {
        for (int v : cand[i]) {
            vmask[static_cast<std::size_t>(i) * words + v / 64] |= 1ull << (v % 64);
            touches[i].push_back(f.cycle_id[v]);
        }
        std::sort(touches[i].begin(), touches[i].end());
        touches[i].erase(std::unique(touches[i].begin(), touches[i].end()), touches[i].end());
    }

    struct Best {
        long long primary = -1, secondary = -1; // lex key; -1 = unset
        std::vector<int> sel;
    } best;

    const bool comp_first = opt.objective == Objective::components_first;
    if (comp_first) {
        best.primary = k; // empty selection: components(F), 0 cycles
        best.secondary = 0;
    }

    std::vector<std::uint64_t> used(words, 0);
    std::vector<int> parent(k);
    std::vector<int> sel;
    long long subsets = 0;
    bool stop = false;

    auto find_root = [&parent](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    // Depth-first over candidate indices in canonical order, include-first,
    // evaluating each disjoint selection exactly once.
    auto rec = [&](auto&& self, int from, int components) -> void {
        if (stop)
            return;
        for (int j = from; j < ncyc; ++j) {
            bool overlap = false;
            for (int w = 0; w < words; ++w)
                if (used[w] & vmask[static_cast<std::size_t>(j) * words + w]) {
                    overlap = true;
                    break;
                }
            if (overlap)
                continue;
            if (++subsets > opt.budget.subset_cap) {
                res.budget_hit = true;
                stop = true;
                return;
            }
            // merge the factor cycles this candidate touches
            std::vector<int> saved_parent = parent;
            int merged = 0;
            int r0 = find_root(touches[j][0]);
            for (std::size_t t = 1; t < touches[j].size(); ++t) {
                int r = find_root(touches[j][t]);
                if (r != r0) {
                    parent[r] = r0;
                    ++merged;
                }
            }
            int comp2 = components - merged;
            sel.push_back(j);
            for (int w = 0; w < words; ++w)
                used[w] |= vmask[static_cast<std::size_t>(j) * words + w];

            long long p1, p2;
            bool eligible;
            if (comp_first) {
                p1 = comp2;
                p2 = static_cast<long long>(sel.size());
                eligible = true;
            } else {
                p1 = static_cast<long long>(sel.size());
                p2 = comp2;
                eligible = comp2 < k; // must actually merge something
            }
            if (eligible &&
                (best.primary < 0 || p1 < best.primary ||
                 (p1 == best.primary && p2 < best.secondary))) {
                best.primary = p1;
                best.secondary = p2;
                best.sel = sel;
            }

            self(self, j + 1, comp2);

            for (int w = 0; w < words; ++w)
                used[w] &= ~vmask[static_cast<std::size_t>(j) * words + w];
            sel.pop_back();
            parent = std::move(saved_parent);
            if (stop)
                return;
        }
    };

    if (ncyc > 0 && k > 0) {
        for (int i = 0; i < k; ++i)
            parent[i] = i;
        rec(rec, 0, k);
    }
    res.subsets_examined = subsets;

    bool winner = comp_first ? (best.primary >= 0 && best.primary < k && !best.sel.empty())
                             : (best.primary >= 0 && !best.sel.empty());
    if (winner) {
        for (int j : best.sel)
            res.cycles.cycles.push_back(cand[j]);
    }
    return res;
}

DCResult run_dc(const Graph& g, const TwoFactor& f, const MatchingPartition& p,
                const DCOptions& opt) {
    DCResult res;
    DCState s = init_dc_state(g, f, p);

    struct Pending {
        DCState snapshot;
        BranchSite site;
        int depth;
    };
    std::vector<Pending> stack;

    apply_forcing_rules(s, opt.trace, &res.stats.rule_firings);
    while (true) {
        ++res.stats.branch_nodes;
        res.stats.max_depth = std::max(res.stats.max_depth, static_cast<int>(stack.size()));
        if (res.stats.branch_nodes > opt.budget.branch_nodes) {
            res.budget_exhausted = true;
            return res;
        }

        auto site = find_branch_site(s);
        if (site) {
            // note (*): the pair under scrutiny is stacked; explore the
            // lower-indexed neighbor first, keep the alternative for LIFO
            // backtracking.
            stack.push_back({s, *site, static_cast<int>(stack.size())});
            apply_branch(s, site->pivot, site->w_lo, site->w_hi, opt.trace,
                         static_cast<int>(stack.size()) - 1);
            apply_forcing_rules(s, opt.trace, &res.stats.rule_firings);
            continue;
        }

        ++res.stats.terminals;
        if (!res.stats.have_first_terminal) {
            res.stats.first_terminal_edges = s.live_edges();
            res.stats.have_first_terminal = true;
        }
        ExtractResult ex = extract_exchange_set(s, f, opt);
        res.stats.cycles_enumerated += ex.cycles_enumerated;
        res.stats.subsets_examined += ex.subsets_examined;
        res.budget_exhausted = res.budget_exhausted || ex.budget_hit;
        if (opt.trace && opt.trace->on(2))
            opt.trace->emit({{"event", "terminal"},
                             {"e_j", s.edge_count()},
                             {"cycles_found", ex.cycles_enumerated},
                             {"k_prime_cycles", ex.cycles.size()}});
        if (!ex.cycles.empty()) {
            res.k_prime = std::move(ex.cycles);
            return res;
        }

        if (stack.empty())
            return res;
        Pending pend = std::move(stack.back());
        stack.pop_back();
        s = std::move(pend.snapshot);
        apply_branch(s, pend.site.pivot, pend.site.w_hi, pend.site.w_lo, opt.trace, pend.depth);
        apply_forcing_rules(s, opt.trace, &res.stats.rule_firings);
    }
}

} // namespace hcdc
