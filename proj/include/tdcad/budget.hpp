#pragma once

#include <chrono>
#include <optional>

#include "tdcad/errors.hpp"

namespace tdcad {

// Per-thread work deadline. The solver and the root-isolation loops poll
// check_budget() at their entry points; when the deadline has passed they
// raise TimeoutError, which the CLI maps to an aborted run report.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    static void set_deadline(std::chrono::milliseconds from_now) {
        deadline_ = Clock::now() + from_now;
    }
    static void clear() { deadline_.reset(); }

    static void check() {
        if (deadline_ && Clock::now() > *deadline_) throw TimeoutError();
    }

private:
    static thread_local std::optional<Clock::time_point> deadline_;
};

inline void check_budget() { Budget::check(); }

// RAII scope for a deadline; restores the previous state on exit.
class BudgetScope {
public:
    explicit BudgetScope(std::chrono::milliseconds from_now) {
        Budget::set_deadline(from_now);
    }
    ~BudgetScope() { Budget::clear(); }
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;
};

}  // namespace tdcad
