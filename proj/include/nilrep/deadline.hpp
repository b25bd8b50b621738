#ifndef NILREP_DEADLINE_HPP
#define NILREP_DEADLINE_HPP

#include <chrono>
#include <stdexcept>

namespace nilrep {

class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("computation exceeded its time budget") {}
};

/// Cooperative cancellation point for long eliminations.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(std::chrono::milliseconds budget) : enabled_(true), end_(Clock::now() + budget) {}

    void check() const {
        if (enabled_ && Clock::now() > end_) throw TimeoutError();
    }

private:
    bool enabled_ = false;
    Clock::time_point end_{};
};

inline void check_deadline(const Deadline* d) {
    if (d) d->check();
}

}  // namespace nilrep

#endif
