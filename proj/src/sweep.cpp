#include "gfib/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace gfib {

std::vector<Cell> scan_order_cells(IntRange p_range, IntRange q_range) {
    std::vector<Cell> cells;
    for (std::int64_t p = p_range.lo; p <= p_range.hi; ++p) {
        for (std::int64_t q = q_range.lo; q <= q_range.hi; ++q) cells.push_back({p, q});
    }
    auto key = [](const Cell& c) {
        return std::make_tuple(c.p < 0 ? -static_cast<__int128>(c.p) : c.p, c.p < 0,
                               c.q < 0 ? -static_cast<__int128>(c.q) : c.q, c.q < 0);
    };
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return key(a) < key(b); });
    return cells;
}

Deadline::Deadline(std::optional<double> seconds) {
    if (seconds) {
        at_ = std::chrono::steady_clock::now() +
              std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
    }
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

void Deadline::check() const {
    if (expired()) throw ResourceError("time budget exhausted");
}

}  // namespace gfib
