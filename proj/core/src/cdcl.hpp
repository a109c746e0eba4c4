#pragma once

#include <cstdint>
#include <vector>

namespace rado::detail {

// Literal of variable v: 2v (positive) or 2v+1 (negative).
inline int make_lit(int var, bool negative) { return 2 * var + (negative ? 1 : 0); }
inline int lit_var(int lit) { return lit >> 1; }
inline int lit_neg(int lit) { return lit ^ 1; }

// Incremental conflict-driven clause-learning solver with assumptions.
// Deterministic: fixed activity ties, Luby restarts, no randomness.
class IncrementalSat {
public:
    // Decisions are only made on variables below `decision_vars`; the rest
    // must be fixed through assumptions or unit clauses.
    IncrementalSat(int vars, int decision_vars);

    // Only at decision level 0 (between solves).
    void add_clause(std::vector<int> lits);

    // true = satisfiable under the assumptions.
    bool solve(const std::vector<int>& assumptions);

    // After an unsatisfiable solve: assumptions taking part in the final
    // conflict (a subset of the ones passed in).
    const std::vector<int>& failed_assumptions() const { return failed_; }
    bool model_value(int var) const { return model_[static_cast<std::size_t>(var)] == 1; }

    std::uint64_t conflicts() const { return conflicts_; }

private:
    struct Clause {
        std::vector<int> lits;
        bool learnt = false;
        bool deleted = false;
        double activity = 0;
    };

    std::int8_t value(int lit) const;
    int level(int var) const { return level_[static_cast<std::size_t>(var)]; }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }
    void enqueue(int lit, int reason);
    int propagate();
    void analyze(int confl, std::vector<int>& learnt, int& back_level);
    void analyze_final(int p);
    void cancel_until(int lvl);
    int pick_branch() const;
    void attach(int c);
    void bump_var(int v);
    void bump_clause(Clause& c);
    void reduce_db();
    int search(long long conflict_budget, const std::vector<int>& assumptions);

    int vars_;
    int decision_vars_;
    bool unsat_ = false;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;  // by literal: clauses watching it
    std::vector<std::int8_t> assign_;        // per var: -1 unset, 0 false, 1 true
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<std::int8_t> phase_;
    std::vector<double> activity_;
    std::vector<std::uint8_t> seen_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    double var_inc_ = 1;
    double cla_inc_ = 1;
    std::size_t learnt_count_ = 0;
    double max_learnts_ = 0;
    std::uint64_t conflicts_ = 0;
    std::vector<int> failed_;
    std::vector<std::int8_t> model_;
};

}  // namespace rado::detail
