#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>

namespace edgecolor {

// Kernels that have a data-parallel loop take an Exec. Both variants write
// results into per-index slots and merge in index order, so the output is
// bit-identical; `serial` is the reference path the tests compare against.
enum class Exec { serial, parallel };

// Exceptions cannot cross an OpenMP region; the one from the lowest index is
// rethrown after the loop, matching what the serial path would throw.
template <class Body>
void for_each_index(Exec exec, std::size_t count, Body&& body) {
    const auto n = static_cast<std::int64_t>(count);
    if (exec == Exec::parallel) {
        std::exception_ptr first_error;
        std::int64_t first_index = n;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(edgecolor_for_each_index)
                if (i < first_index) {
                    first_index = i;
                    first_error = std::current_exception();
                }
            }
        }
        if (first_error) {
            std::rethrow_exception(first_error);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            body(static_cast<std::size_t>(i));
        }
    }
}

int available_threads();

} // namespace edgecolor
