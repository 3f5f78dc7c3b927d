#include "wres/budget.hpp"

#include "wres/error.hpp"

namespace wres {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> tDeadline;
} // namespace

DeadlineScope::DeadlineScope(std::chrono::steady_clock::duration budget) : saved_(tDeadline) {
    auto d = std::chrono::steady_clock::now() + budget;
    if (!tDeadline || d < *tDeadline) tDeadline = d;
}

DeadlineScope::~DeadlineScope() { tDeadline = saved_; }

void checkDeadline() {
    if (!tDeadline) return;
    if (std::chrono::steady_clock::now() > *tDeadline) throw Error(ErrorKind::Timeout, "time budget exhausted");
}

} // namespace wres
