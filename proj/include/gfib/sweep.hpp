#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

#include <omp.h>

#include "gfib/errors.hpp"

namespace gfib {

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool operator==(const IntRange&) const = default;
};

/// One (p, q) grid cell.
struct Cell {
    std::int64_t p = 0;
    std::int64_t q = 0;
    bool operator==(const Cell&) const = default;
};

/// Cells of p_range x q_range in scan order: |p|, then |q|, positive before negative at ties.
std::vector<Cell> scan_order_cells(IntRange p_range, IntRange q_range);

/// Wall-clock budget shared by the tasks of one sweep; unset means unlimited.
class Deadline {
public:
    Deadline() = default;
    explicit Deadline(std::optional<double> seconds);

    bool expired() const;
    /// Throws ResourceError once expired.
    void check() const;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Reference path: runs `task(cell)` for every cell in order.
template <class Task>
auto map_cells_serial(const std::vector<Cell>& cells, Task&& task) {
    using Result = decltype(task(cells.front()));
    std::vector<Result> out;
    out.reserve(cells.size());
    for (const Cell& cell : cells) out.push_back(task(cell));
    return out;
}

/// OpenMP fan-out over cells; results come back in the cell order, independent of `workers`.
/// The first exception thrown by any task (in cell order) is rethrown after the loop.
template <class Task>
auto map_cells_parallel(const std::vector<Cell>& cells, Task&& task, int workers) {
    using Result = decltype(task(cells.front()));
    std::vector<std::optional<Result>> slots(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers < 1 ? 1 : workers)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            slots[idx].emplace(task(cells[idx]));
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    std::vector<Result> out;
    out.reserve(cells.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

template <class Task>
auto map_cells(const std::vector<Cell>& cells, Task&& task, int workers) {
    if (workers <= 1) return map_cells_serial(cells, task);
    return map_cells_parallel(cells, task, workers);
}

}  // namespace gfib
