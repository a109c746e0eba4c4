#include "cdcl.hpp"

#include <algorithm>

namespace rado::detail {

namespace {

constexpr std::int8_t kFree = -1;

double luby(double y, int x)
{
    int size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    double r = 1;
    for (int i = 0; i < seq; ++i)
        r *= y;
    return r;
}

}  // namespace

IncrementalSat::IncrementalSat(int vars, int decision_vars)
    : vars_(vars), decision_vars_(decision_vars)
{
    const std::size_t n = static_cast<std::size_t>(vars);
    watches_.resize(2 * n);
    assign_.assign(n, kFree);
    level_.assign(n, 0);
    reason_.assign(n, -1);
    phase_.assign(n, 0);
    activity_.assign(n, 0);
    seen_.assign(n, 0);
    model_.assign(n, kFree);
}

std::int8_t IncrementalSat::value(int lit) const
{
    const std::int8_t a = assign_[static_cast<std::size_t>(lit_var(lit))];
    if (a == kFree)
        return kFree;
    return (lit & 1) ? static_cast<std::int8_t>(1 - a) : a;
}

void IncrementalSat::enqueue(int lit, int reason)
{
    const std::size_t v = static_cast<std::size_t>(lit_var(lit));
    assign_[v] = (lit & 1) ? 0 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(lit);
}

void IncrementalSat::attach(int c)
{
    const Clause& cl = clauses_[static_cast<std::size_t>(c)];
    watches_[static_cast<std::size_t>(cl.lits[0])].push_back(c);
    watches_[static_cast<std::size_t>(cl.lits[1])].push_back(c);
}

void IncrementalSat::add_clause(std::vector<int> lits)
{
    if (unsat_)
        return;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == lit_neg(lits[i]))
            return;  // tautology
        const std::int8_t v = value(lits[i]);
        if (v == 1)
            return;
        if (v == kFree)
            kept.push_back(lits[i]);
    }
    if (kept.empty()) {
        unsat_ = true;
        return;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], -1);
        if (propagate() >= 0)
            unsat_ = true;
        return;
    }
    clauses_.push_back({std::move(kept), false, false, 0});
    attach(static_cast<int>(clauses_.size()) - 1);
}

int IncrementalSat::propagate()
{
    int confl = -1;
    while (qhead_ < trail_.size()) {
        const int p = trail_[qhead_++];
        const int false_lit = lit_neg(p);
        auto& ws = watches_[static_cast<std::size_t>(false_lit)];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            const int ci = ws[i++];
            Clause& c = clauses_[static_cast<std::size_t>(ci)];
            if (c.deleted)
                continue;
            if (c.lits[0] == false_lit)
                std::swap(c.lits[0], c.lits[1]);
            if (value(c.lits[0]) == 1) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.lits.size(); ++k)
                if (value(c.lits[k]) != 0) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[static_cast<std::size_t>(c.lits[1])].push_back(ci);
                    moved = true;
                    break;
                }
            if (moved)
                continue;
            ws[j++] = ci;
            if (value(c.lits[0]) == 0) {
                confl = ci;
                qhead_ = trail_.size();
                while (i < ws.size())
                    ws[j++] = ws[i++];
            } else {
                enqueue(c.lits[0], ci);
            }
        }
        ws.resize(j);
        if (confl >= 0)
            break;
    }
    return confl;
}

void IncrementalSat::bump_var(int v)
{
    double& a = activity_[static_cast<std::size_t>(v)];
    a += var_inc_;
    if (a > 1e100) {
        for (double& x : activity_)
            x *= 1e-100;
        var_inc_ *= 1e-100;
    }
}

void IncrementalSat::bump_clause(Clause& c)
{
    c.activity += cla_inc_;
    if (c.activity > 1e20) {
        for (Clause& x : clauses_)
            if (x.learnt)
                x.activity *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

void IncrementalSat::analyze(int confl, std::vector<int>& learnt, int& back_level)
{
    learnt.assign(1, -1);
    int path = 0;
    int p = -1;
    std::size_t index = trail_.size();
    do {
        Clause& c = clauses_[static_cast<std::size_t>(confl)];
        if (c.learnt)
            bump_clause(c);
        for (std::size_t k = (p < 0 ? 0 : 1); k < c.lits.size(); ++k) {
            const int q = c.lits[k];
            const int v = lit_var(q);
            if (seen_[static_cast<std::size_t>(v)] || level(v) == 0)
                continue;
            seen_[static_cast<std::size_t>(v)] = 1;
            bump_var(v);
            if (level(v) >= decision_level())
                ++path;
            else
                learnt.push_back(q);
        }
        while (!seen_[static_cast<std::size_t>(lit_var(trail_[--index]))]) {
        }
        p = trail_[index];
        confl = reason_[static_cast<std::size_t>(lit_var(p))];
        seen_[static_cast<std::size_t>(lit_var(p))] = 0;
        --path;
        // The reason clause keeps its implied literal first.
        if (confl >= 0) {
            Clause& r = clauses_[static_cast<std::size_t>(confl)];
            if (r.lits[0] != p)
                for (std::size_t k = 1; k < r.lits.size(); ++k)
                    if (r.lits[k] == p) {
                        std::swap(r.lits[0], r.lits[k]);
                        break;
                    }
        }
    } while (path > 0);
    learnt[0] = lit_neg(p);

    back_level = 0;
    std::size_t max_i = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k)
        if (level(lit_var(learnt[k])) > back_level) {
            back_level = level(lit_var(learnt[k]));
            max_i = k;
        }
    if (learnt.size() > 1)
        std::swap(learnt[1], learnt[max_i]);
    for (int q : learnt)
        seen_[static_cast<std::size_t>(lit_var(q))] = 0;
}

void IncrementalSat::analyze_final(int p)
{
    failed_.clear();
    failed_.push_back(lit_neg(p));
    if (decision_level() == 0)
        return;
    seen_[static_cast<std::size_t>(lit_var(p))] = 1;
    for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[0]);) {
        const int x = lit_var(trail_[i]);
        if (!seen_[static_cast<std::size_t>(x)])
            continue;
        const int r = reason_[static_cast<std::size_t>(x)];
        if (r < 0) {
            failed_.push_back(trail_[i]);
        } else {
            const Clause& c = clauses_[static_cast<std::size_t>(r)];
            for (std::size_t k = 1; k < c.lits.size(); ++k)
                if (level(lit_var(c.lits[k])) > 0)
                    seen_[static_cast<std::size_t>(lit_var(c.lits[k]))] = 1;
        }
        seen_[static_cast<std::size_t>(x)] = 0;
    }
    seen_[static_cast<std::size_t>(lit_var(p))] = 0;
}

void IncrementalSat::cancel_until(int lvl)
{
    if (decision_level() <= lvl)
        return;
    for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]);) {
        const std::size_t v = static_cast<std::size_t>(lit_var(trail_[i]));
        phase_[v] = assign_[v];
        assign_[v] = kFree;
        reason_[v] = -1;
    }
    trail_.resize(static_cast<std::size_t>(trail_lim_[static_cast<std::size_t>(lvl)]));
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = trail_.size();
}

int IncrementalSat::pick_branch() const
{
    int best = -1;
    for (int v = 0; v < decision_vars_; ++v)
        if (assign_[static_cast<std::size_t>(v)] == kFree &&
            (best < 0 || activity_[static_cast<std::size_t>(v)] > activity_[static_cast<std::size_t>(best)]))
            best = v;
    return best;
}

void IncrementalSat::reduce_db()
{
    std::vector<int> learnts;
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        if (clauses_[i].learnt && !clauses_[i].deleted && clauses_[i].lits.size() > 2)
            learnts.push_back(static_cast<int>(i));
    std::stable_sort(learnts.begin(), learnts.end(), [&](int a, int b) {
        return clauses_[static_cast<std::size_t>(a)].activity < clauses_[static_cast<std::size_t>(b)].activity;
    });
    auto locked = [&](int ci) {
        const Clause& c = clauses_[static_cast<std::size_t>(ci)];
        const int v = lit_var(c.lits[0]);
        return reason_[static_cast<std::size_t>(v)] == ci && value(c.lits[0]) == 1;
    };
    for (std::size_t i = 0; i < learnts.size() / 2; ++i)
        if (!locked(learnts[i])) {
            Clause& c = clauses_[static_cast<std::size_t>(learnts[i])];
            c.deleted = true;
            c.lits.clear();
            c.lits.shrink_to_fit();
            --learnt_count_;
        }
}

int IncrementalSat::search(long long conflict_budget, const std::vector<int>& assumptions)
{
    long long local = 0;
    std::vector<int> learnt;
    for (;;) {
        const int confl = propagate();
        if (confl >= 0) {
            ++conflicts_;
            ++local;
            if (decision_level() == 0) {
                unsat_ = true;
                failed_.clear();
                return 0;
            }
            int back = 0;
            analyze(confl, learnt, back);
            cancel_until(back);
            if (learnt.size() == 1) {
                enqueue(learnt[0], -1);
            } else {
                clauses_.push_back({learnt, true, false, 0});
                const int ci = static_cast<int>(clauses_.size()) - 1;
                attach(ci);
                bump_clause(clauses_.back());
                ++learnt_count_;
                enqueue(learnt[0], ci);
            }
            var_inc_ /= 0.95;
            cla_inc_ /= 0.999;
            continue;
        }
        if (local >= conflict_budget) {
            cancel_until(0);
            return -1;
        }
        if (static_cast<double>(learnt_count_) >= max_learnts_ + static_cast<double>(trail_.size())) {
            reduce_db();
            max_learnts_ *= 1.1;
        }
        int next = -1;
        while (decision_level() < static_cast<int>(assumptions.size())) {
            const int p = assumptions[static_cast<std::size_t>(decision_level())];
            const std::int8_t v = value(p);
            if (v == 1) {
                trail_lim_.push_back(static_cast<int>(trail_.size()));
            } else if (v == 0) {
                analyze_final(lit_neg(p));
                return 0;
            } else {
                next = p;
                break;
            }
        }
        if (next < 0) {
            const int v = pick_branch();
            if (v < 0)
                return 1;
            next = make_lit(v, phase_[static_cast<std::size_t>(v)] != 1);
        }
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, -1);
    }
}

bool IncrementalSat::solve(const std::vector<int>& assumptions)
{
    failed_.clear();
    if (unsat_)
        return false;
    if (max_learnts_ == 0)
        max_learnts_ = std::max(2000.0, static_cast<double>(clauses_.size()) / 3);
    int status = -1;
    for (int restart = 0; status < 0; ++restart)
        status = search(static_cast<long long>(luby(2, restart) * 100), assumptions);
    if (status == 1)
        for (int v = 0; v < vars_; ++v)
            model_[static_cast<std::size_t>(v)] = assign_[static_cast<std::size_t>(v)];
    cancel_until(0);
    return status == 1;
}

}  // namespace rado::detail
