#pragma once

#include <chrono>
#include <optional>

namespace wres {

// Cooperative wall-clock deadline for the calling thread. Long-running
// loops call checkDeadline(), which throws Error(Timeout) once it passes.
class DeadlineScope {
public:
    explicit DeadlineScope(std::chrono::steady_clock::duration budget);
    ~DeadlineScope();
    DeadlineScope(const DeadlineScope&) = delete;
    DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
    std::optional<std::chrono::steady_clock::time_point> saved_;
};

void checkDeadline();

} // namespace wres
