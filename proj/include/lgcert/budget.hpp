#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace lgcert {

/// Wall-clock and step limits shared by the searches that can blow up
/// (lattice automorphisms, group automorphisms, the eutaxy LP).
/// A default-constructed Budget is unlimited in time.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;

    static Budget seconds(double s) {
        Budget b;
        b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(s));
        return b;
    }

    Budget& with_max_group_candidates(std::uint64_t v) { max_group_candidates_ = v; return *this; }
    Budget& with_max_lp_variables(std::size_t v) { max_lp_variables_ = v; return *this; }
    Budget& with_max_pivots(std::uint64_t v) { max_pivots_ = v; return *this; }

    bool expired() const { return deadline_ && Clock::now() > *deadline_; }

    /// Throws BudgetExceeded naming `where` if the deadline has passed.
    void check(const char* where) const;

    std::uint64_t max_group_candidates() const { return max_group_candidates_; }
    std::size_t max_lp_variables() const { return max_lp_variables_; }
    std::uint64_t max_pivots() const { return max_pivots_; }

private:
    std::optional<Clock::time_point> deadline_;
    std::uint64_t max_group_candidates_ = 10'000'000;
    std::size_t max_lp_variables_ = 5000;
    std::uint64_t max_pivots_ = 200'000;
};

} // namespace lgcert
