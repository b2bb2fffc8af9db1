#include "tdcad/budget.hpp"

namespace tdcad {

thread_local std::optional<Budget::Clock::time_point> Budget::deadline_;

}  // namespace tdcad
