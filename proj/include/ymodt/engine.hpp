#pragma once

// The rule-based recursive solver for the pair ([Y] mod T, [Y°] mod T) of a
// matroid: Y is the projective hypersurface complement of the configuration
// polynomial, Y° its part in the open torus, and mod-T classes are plain
// integers (L ≡ 1, T ≡ 0, [P^{n-1}] ≡ n).
//
// Rules fire in a fixed order; cheap structural reductions come before the
// exponential stratification sums.  A context owns the memo tables, the
// in-progress set that cuts the Y ⇄ Y° cycle at a single matroid, and the
// cache of graphic realizations.  Unknown is a value, not an error: the
// rule system does not resolve every input.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ymodt/builders.hpp"
#include "ymodt/exact.hpp"
#include "ymodt/graph.hpp"
#include "ymodt/matroid.hpp"
#include "ymodt/recognize.hpp"

namespace ymodt {

struct ClassModT {
    std::optional<i64> value;
    std::string note;  // reason when unknown

    bool known() const { return value.has_value(); }
    i64 v() const { return *value; }
    static ClassModT of(i64 x) { return {x, {}}; }
    static ClassModT unknown(std::string why) { return {std::nullopt, std::move(why)}; }
};

inline ClassModT negate(ClassModT c) {
    if (c.known()) return ClassModT::of(-c.v());
    return c;
}

/// One recursion step: which rule fired at which target, with the child
/// classes it consumed.  Replaying a trace (constant + Σ weight·child for
/// inner nodes, the stored value at leaves) re-derives the result exactly.
struct TraceNode {
    std::string target;
    std::string rule;
    std::string note;
    i64 weight = 1;    // multiplier applied by the parent
    i64 constant = 0;  // additive constant of sum rules
    ClassModT result;
    std::vector<TraceNode> children;
};

struct EngineOptions {
    bool use_memo = true;
    bool use_recognition = true;
    bool use_anchors = true;
    bool build_trace = false;
    int sum_cap = kSubsetEnumCap;
    RealizationLimits recog_limits{};
};

struct EngineStats {
    long long y_calls = 0, ytorus_calls = 0, memo_hits = 0, recognitions = 0;
};

struct Context {
    EngineOptions opt;
    std::unordered_map<MatroidKey, i64, MatroidKeyHash> memo_y, memo_ytorus;
    std::unordered_set<MatroidKey, MatroidKeyHash> in_progress_y, in_progress_ytorus;
    std::unordered_map<MatroidKey, std::optional<Multigraph>, MatroidKeyHash> realization_cache;
    EngineStats stats;
};

ClassModT class_Y(const Matroid& m, Context& ctx, TraceNode* t = nullptr);
ClassModT class_Ytorus(const Matroid& m, Context& ctx, TraceNode* t = nullptr);
ClassModT class_Y_dual_via_flats(const Matroid& m0, Context& ctx, TraceNode* t = nullptr);

namespace detail {

inline std::string describe(const Matroid& m) {
    std::ostringstream os;
    os << "(n=" << m.n << " rk=" << m.rank << " b=" << m.basis_count();
    if (m.n <= 14) {
        os << " [";
        for (int e = 0; e < m.n; ++e) os << (e ? " " : "") << m.labels[e];
        os << "]";
    }
    os << ")";
    return os.str();
}

inline ClassModT finish(TraceNode* t, const char* rule, ClassModT res, std::string note = {}) {
    if (t) {
        t->rule = rule;
        t->result = res;
        if (!note.empty()) t->note = std::move(note);
    }
    return res;
}

inline TraceNode* child_node(TraceNode* t, i64 weight = 1) {
    if (!t) return nullptr;
    t->children.emplace_back();
    t->children.back().weight = weight;
    return &t->children.back();
}

struct ProgressGuard {
    std::unordered_set<MatroidKey, MatroidKeyHash>& set;
    MatroidKey key;
    ~ProgressGuard() { set.erase(key); }
};

/// Attach a previously recognized graph to a provenance-less matroid.
inline Matroid with_provenance(Matroid m, Context& ctx) {
    if (m.graph || !ctx.opt.use_recognition) return m;
    auto it = ctx.realization_cache.find(key_of(m));
    if (it != ctx.realization_cache.end() && it->second)
        m.graph = std::make_shared<Multigraph>(*it->second);
    return m;
}

/// Provenance graph, running the realization search (cached) if absent.
inline std::shared_ptr<const Multigraph> graph_for(const Matroid& m, Context& ctx) {
    if (m.graph) return m.graph;
    if (!ctx.opt.use_recognition) return nullptr;
    MatroidKey key = key_of(m);
    auto it = ctx.realization_cache.find(key);
    if (it == ctx.realization_cache.end()) {
        ++ctx.stats.recognitions;
        it = ctx.realization_cache.emplace(key, find_graph_realization(m, ctx.opt.recog_limits))
                 .first;
    }
    if (it->second) return std::make_shared<Multigraph>(*it->second);
    return nullptr;
}

/// Values established outside this rule system.  The coupled relations at
/// these two matroids and their duals determine only differences of the
/// three classes involved, never an absolute value; the entries below are
/// the standard ones and are re-checked against finite-field point counts
/// by the test suite.  Keys are the labeled basis keys of the canonical
/// builders, so only those exact matroids match.
struct Anchor {
    MatroidKey key;
    i64 y;
    const char* name;
};

inline const std::vector<Anchor>& anchored_classes() {
    static const std::vector<Anchor> table = [] {
        std::vector<Anchor> t;
        t.push_back({key_of(from_graph(make_complete_bipartite(3, 3))), 1, "K33"});
        t.push_back({key_of(from_graph(make_octahedron())), -1, "octahedron"});
        return t;
    }();
    return table;
}

/// Σ over spanning connected S of (-1)^{|E\S|} [Y(base|S)]; Unknown if any
/// term is.  Valid for loopless base of positive rank.
inline ClassModT inverse_stratification_sum(Matroid base, Context& ctx, TraceNode* t) {
    auto subsets = spanning_connected_subsets(base, ctx.opt.sum_cap);
    i64 sum = 0;
    for (size_t i = 0; i < subsets.size(); ++i) {
        uint32_t S = subsets[i];
        i64 sgn = sign_pow(base.n - popcount32(S));
        ClassModT term;
        if (S == base.full_mask()) {
            term = class_Y(base, ctx, child_node(t, sgn));
            base = with_provenance(std::move(base), ctx);  // pick up a fresh realization
        } else {
            term = class_Y(restrict_to(base, S), ctx, child_node(t, sgn));
        }
        if (!term.known()) return ClassModT::unknown(term.note);
        sum += sgn * term.v();
    }
    return ClassModT::of(sum);
}

inline ClassModT class_Y_rules(const Matroid& m, const MatroidKey& key, Context& ctx, TraceNode* t);
inline ClassModT class_Ytorus_rules(const Matroid& m, Context& ctx, TraceNode* t);

}  // namespace detail

// ---------------------------------------------------------------------------

inline ClassModT class_Y(const Matroid& m, Context& ctx, TraceNode* t) {
    using namespace detail;
    ++ctx.stats.y_calls;
    if (t) t->target = "Y" + describe(m);
    MatroidKey key = key_of(m);
    if (ctx.opt.use_memo) {
        auto it = ctx.memo_y.find(key);
        if (it != ctx.memo_y.end()) {
            ++ctx.stats.memo_hits;
            return finish(t, "cached", ClassModT::of(it->second));
        }
    }
    if (ctx.in_progress_y.count(key))
        return finish(t, "blocked-cycle",
                      ClassModT::unknown("Y of this matroid is already in progress"));
    ctx.in_progress_y.insert(key);
    ProgressGuard guard{ctx.in_progress_y, key};
    ClassModT res = class_Y_rules(m, key, ctx, t);
    if (res.known() && ctx.opt.use_memo) ctx.memo_y[key] = res.v();
    return res;
}

inline ClassModT class_Ytorus(const Matroid& m, Context& ctx, TraceNode* t) {
    using namespace detail;
    ++ctx.stats.ytorus_calls;
    if (t) t->target = "Yo" + describe(m);
    MatroidKey key = key_of(m);
    if (ctx.opt.use_memo) {
        auto it = ctx.memo_ytorus.find(key);
        if (it != ctx.memo_ytorus.end()) {
            ++ctx.stats.memo_hits;
            return finish(t, "cached", ClassModT::of(it->second));
        }
    }
    if (ctx.in_progress_ytorus.count(key))
        return finish(t, "blocked-cycle",
                      ClassModT::unknown("Y° of this matroid is already in progress"));
    ctx.in_progress_ytorus.insert(key);
    ProgressGuard guard{ctx.in_progress_ytorus, key};
    ClassModT res = class_Ytorus_rules(m, ctx, t);
    if (res.known() && ctx.opt.use_memo) ctx.memo_ytorus[key] = res.v();
    return res;
}

namespace detail {

inline ClassModT class_Y_rules(const Matroid& m, const MatroidKey& key, Context& ctx,
                               TraceNode* t) {
    const int n = m.n, r = m.rank;

    // 1. rank 0: Y is all of P^{n-1}, class n.
    if (r == 0) return finish(t, "rank0-projective-space", ClassModT::of(n));

    // 2. loops drop out of Y (the class is multiplied by L ≡ 1).
    for (int e = 0; e < n; ++e)
        if (is_loop(m, e)) {
            auto sub = class_Y(del(m, 1u << e), ctx, child_node(t));
            return finish(t, "loop-delete", sub, "drop " + m.labels[e]);
        }

    // 3. one of a parallel pair drops out the same way.
    if (auto pp = first_parallel_pair(m)) {
        auto sub = class_Y(del(m, 1u << pp->first), ctx, child_node(t));
        return finish(t, "parallel-delete", sub, "drop " + m.labels[pp->first]);
    }

    // 4. a coloop at rank > 1 makes Y a torus multiple: class 0.
    if (r > 1)
        for (int e = 0; e < n; ++e)
            if (is_coloop(m, e)) return finish(t, "coloop-vanish", ClassModT::of(0), m.labels[e]);

    // 5. loopless disconnected: the polynomial splits, class 0.
    if (n >= 2 && !is_connected(m)) return finish(t, "disconnected-vanish", ClassModT::of(0));

    // 6. rank 1 (Y is an affine space) and the free matroid.
    if (r == 1) return finish(t, "rank1", ClassModT::of(1));
    if (r == n) return finish(t, "free", ClassModT::of(n == 1 ? 1 : 0));

    // 7. graph-supported vanishing: a nexus or fat nexus of the simplified
    //    graph gives the hypersurface a torus action, class 0.  Available
    //    with graph provenance or a certified realization.
    if (auto g = graph_for(m, ctx)) {
        Multigraph s = simplify(*g);
        if (!find_nexi(s).empty() || find_fat_nexus(s).has_value())
            return finish(t, "fat-nexus-vanish", ClassModT::of(0));
    }

    // 8. connected rank 2: Y is L^{n-2}, class 1.
    if (r == 2) return finish(t, "rank2", ClassModT::of(1));

    // 9. connected corank 1 is U_{n-1,n}.
    if (n - r == 1) return finish(t, "corank1", ClassModT::of(sign_pow(n - 1)));

    // 10. series pair split: [Y] = [Y(del both)] - [Y(contract one)],
    //     subject to the side conditions below.
    {
        auto hyp_ok = [&](int e, int f) {
            if (r - 1 <= 0) return false;  // rank of the contraction
            uint32_t ef = (1u << e) | (1u << f);
            if (rank_of(m, m.full_mask() & ~ef) <= 0) return false;
            if (closure(m, ef) == m.full_mask()) return false;
            // f must not become a coloop after contracting e.
            uint32_t rest = m.full_mask() & ~ef;
            if (rank_of(m, rest | (1u << e)) - rank_of(m, 1u << e) < r - 1) return false;
            return true;
        };
        std::vector<bool> coloop(n);
        for (int e = 0; e < n; ++e) coloop[e] = is_coloop(m, e);
        for (int e = 0; e < n; ++e) {
            if (coloop[e]) continue;
            for (int f = e + 1; f < n; ++f) {
                if (coloop[f]) continue;
                if (rank_of(m, m.full_mask() & ~((1u << e) | (1u << f))) != r - 1) continue;
                if (!hyp_ok(e, f)) continue;
                auto a = class_Y(del(m, (1u << e) | (1u << f)), ctx, child_node(t, 1));
                auto b = class_Y(contract(m, 1u << e), ctx, child_node(t, -1));
                ClassModT res = (a.known() && b.known())
                                    ? ClassModT::of(a.v() - b.v())
                                    : ClassModT::unknown(a.known() ? b.note : a.note);
                return finish(t, "series-split", res, m.labels[e] + "," + m.labels[f]);
            }
        }
    }

    // 11. uniform of corank 2 (n >= 4); the constant here is the one the
    //     finite-field counts confirm, see the acceptance suite.
    if (auto u = uniform_signature(m); u && u->first == u->second - 2 && u->second >= 4) {
        i64 un = u->second;
        return finish(t, "corank2-uniform",
                      ClassModT::of(sign_pow(static_cast<int>(un) - 1) * (un * un - 5 * un + 2) / 2));
    }

    // 11b. externally established classes (see anchored_classes()).
    if (ctx.opt.use_anchors)
        for (const auto& a : anchored_classes())
            if (a.key == key) return finish(t, "anchored-value", ClassModT::of(a.y), a.name);

    // 12. stratification sum: [Y] = Σ over spanning connected S of [Y°(M|S)].
    if (n <= ctx.opt.sum_cap) {
        TraceNode* saved = t;
        size_t mark = t ? t->children.size() : 0;
        auto subsets = spanning_connected_subsets(m, ctx.opt.sum_cap);
        i64 sum = 0;
        bool ok = true;
        for (uint32_t S : subsets) {
            ClassModT term = (S == m.full_mask())
                                 ? class_Ytorus(m, ctx, child_node(t))
                                 : class_Ytorus(restrict_to(m, S), ctx, child_node(t));
            if (!term.known()) {
                ok = false;
                break;
            }
            sum += term.v();
        }
        if (ok) return finish(t, "stratification-sum", ClassModT::of(sum));
        if (saved) saved->children.resize(mark);  // discard the failed attempt
    }

    // 13. resolve as the dual of the dual through the flats formula.
    if (n - r > 0) {
        Matroid md = with_provenance(dual(m), ctx);
        ClassModT res = class_Y_dual_via_flats(md, ctx, child_node(t));
        if (res.known()) return finish(t, "dual-flats", res);
        if (t) t->children.pop_back();
    }

    return finish(t, "unresolved", ClassModT::unknown("no rule resolved Y" + describe(m)));
}

inline ClassModT class_Ytorus_rules(const Matroid& m, Context& ctx, TraceNode* t) {
    const int n = m.n, r = m.rank;

    // 1. a single element (loop or coloop): Y° is a point.
    if (n == 1) return finish(t, "point", ClassModT::of(1));

    // 2. rank 0 with n >= 2: Y° is the open torus, a positive power of T.
    if (r == 0) return finish(t, "torus-power", ClassModT::of(0));

    // 3. loops and coloops each contribute a torus factor.
    for (int e = 0; e < n; ++e)
        if (is_loop(m, e) || is_coloop(m, e))
            return finish(t, "coloop-or-loop-torus", ClassModT::of(0), m.labels[e]);

    // 4. parallel pair negates under deletion; series pair under contraction.
    if (n >= 3) {
        if (auto pp = first_parallel_pair(m)) {
            auto sub = class_Ytorus(del(m, 1u << pp->first), ctx, child_node(t, -1));
            return finish(t, "parallel-negate", negate(sub), "drop " + m.labels[pp->first]);
        }
        if (auto sp = first_series_pair(m)) {
            auto sub = class_Ytorus(contract(m, 1u << sp->first), ctx, child_node(t, -1));
            return finish(t, "series-negate", negate(sub), "contract " + m.labels[sp->first]);
        }
    }

    // 5. disconnected: Y° factors with a torus factor, class 0.
    if (!is_connected(m)) return finish(t, "disconnected-torus", ClassModT::of(0));

    // 6. uniform base cases.
    if (auto u = uniform_signature(m)) {
        auto [ur, un] = *u;
        if (ur == 1 || ur == un - 1)
            return finish(t, "uniform-corank1", ClassModT::of(sign_pow(un - 1)));
        if ((ur == 2 || ur == un - 2) && un >= 4)
            return finish(t, "uniform-corank2",
                          ClassModT::of(sign_pow(un - 1) * binomial(un - 1, 2)));
    }

    // 7. Cremona: Y° agrees with the dual's; flip when that side is smaller.
    if (n - r > r) {
        auto sub = class_Ytorus(with_provenance(dual(m), ctx), ctx, child_node(t));
        if (sub.known()) return finish(t, "cremona-flip", sub);
        if (t) t->children.pop_back();
    }

    // 8. inverse stratification, directly and then through the dual.
    if (n <= ctx.opt.sum_cap) {
        size_t mark = t ? t->children.size() : 0;
        ClassModT direct = inverse_stratification_sum(m, ctx, t);
        if (direct.known()) return finish(t, "inverse-stratification", direct);
        if (t) t->children.resize(mark);
        ClassModT via_dual = inverse_stratification_sum(with_provenance(dual(m), ctx), ctx, t);
        if (via_dual.known()) return finish(t, "inverse-stratification-dual", via_dual);
        if (t) t->children.resize(mark);
    }

    return finish(t, "unresolved", ClassModT::unknown("no rule resolved Y°" + describe(m)));
}

}  // namespace detail

/// The flats route: for 0 < rank(m0) < n, the class of Y of the DUAL of m0
/// equals δ_{1,nullity(m0)}·b(m0) plus Σ over independent proper flats F of
/// [Y°(m0/F)].  When nullity(m0) > 1 and every rank-1 flat of m0 has at
/// least two elements, the whole sum collapses to [Y°(m0)].
inline ClassModT class_Y_dual_via_flats(const Matroid& m0, Context& ctx, TraceNode* t) {
    using namespace detail;
    if (t) t->target = "Ydual" + describe(m0);
    if (m0.rank == 0 || m0.nullity() == 0)
        return finish(t, "dual-flats-inapplicable",
                      ClassModT::unknown("needs 0 < rank < ground size"));
    if (m0.nullity() > 1) {
        bool all_thick = true;
        for (int e = 0; e < m0.n && all_thick; ++e) {
            if (is_loop(m0, e)) continue;
            if (popcount32(closure(m0, 1u << e)) < 2) all_thick = false;
        }
        if (all_thick) {
            auto res = class_Ytorus(m0, ctx, child_node(t));
            return finish(t, "dual-flats-shortcircuit", res);
        }
    }
    i64 constant = (m0.nullity() == 1) ? m0.basis_count() : 0;
    if (t) t->constant = constant;
    i64 sum = constant;
    for (uint32_t F : independent_proper_flats(m0)) {
        ClassModT term = (F == 0) ? class_Ytorus(m0, ctx, child_node(t))
                                  : class_Ytorus(contract(m0, F), ctx, child_node(t));
        if (!term.known()) return finish(t, "dual-flats-sum", ClassModT::unknown(term.note));
        sum += term.v();
    }
    return finish(t, "dual-flats-sum", ClassModT::of(sum));
}

// ---------------------------------------------------------------------------
// Trace rendering and replay.

namespace detail {
inline void explain_rec(const TraceNode& t, int depth, std::ostringstream& os) {
    for (int i = 0; i < depth; ++i) os << "  ";
    os << t.target << "  [" << t.rule << "]";
    if (!t.note.empty()) os << " (" << t.note << ")";
    os << "  = ";
    if (t.result.known())
        os << t.result.v();
    else
        os << "unknown: " << t.result.note;
    os << "\n";
    for (const auto& c : t.children) explain_rec(c, depth + 1, os);
}
}  // namespace detail

/// Deterministic indented rendering of a trace tree.
inline std::string explain(const TraceNode& t) {
    std::ostringstream os;
    detail::explain_rec(t, 0, os);
    return os.str();
}

/// Recompute a node's class from its children: leaves keep their stored
/// value, inner nodes are constant + Σ weight·child.
inline ClassModT trace_replay(const TraceNode& t) {
    if (t.children.empty()) return t.result;
    i64 sum = t.constant;
    for (const auto& c : t.children) {
        ClassModT sub = trace_replay(c);
        if (!sub.known()) return sub;
        sum += c.weight * sub.v();
    }
    return ClassModT::of(sum);
}

}  // namespace ymodt
