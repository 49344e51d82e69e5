#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

#include <omp.h>

#include "treequest/types.hpp"

namespace treequest {

/*
 * for i in [0, count): body(i), either in a plain loop or as an OpenMP
 * dynamic loop. Exceptions cannot leave an OpenMP region, so the first one
 * is parked and rethrown after the loop. jobs <= 0 keeps the OpenMP default.
 */
template <class Body>
void for_each_index(std::int64_t count, Execution exec, int jobs, Body&& body) {
    if (exec == Execution::Serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr first;
    std::mutex guard;
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
            std::lock_guard lock(guard);
            if (!first) {
                first = std::current_exception();
            }
        }
    }
    if (first) {
        std::rethrow_exception(first);
    }
}

}  // namespace treequest
