#pragma once

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

#include "treequest/oracle.hpp"

namespace treequest {

/*
 * A search strategy written as a coroutine that suspends on every oracle
 * query:  OracleAnswer ans = co_yield v;
 * The caller owns the oracle, which lets two strategies share one oracle
 * query by query.
 *
 *   while (task.advance()) task.provide(oracle.query(task.pending_query()));
 *   Result r = task.result();
 */
template <class Result>
class SearchTask {
public:
    struct promise_type {
        Vertex pending = kNoVertex;
        OracleAnswer answer;
        std::optional<Result> result;
        std::exception_ptr error;

        SearchTask get_return_object() { return SearchTask(Handle::from_promise(*this)); }
        std::suspend_always initial_suspend() noexcept { return {}; }
        std::suspend_always final_suspend() noexcept { return {}; }

        struct AnswerAwaiter {
            promise_type* promise;
            bool await_ready() const noexcept { return false; }
            void await_suspend(std::coroutine_handle<>) const noexcept {}
            OracleAnswer await_resume() const noexcept { return promise->answer; }
        };
        AnswerAwaiter yield_value(Vertex v) {
            pending = v;
            return {this};
        }
        void return_value(Result r) { result = std::move(r); }
        void unhandled_exception() { error = std::current_exception(); }
    };
    using Handle = std::coroutine_handle<promise_type>;

    SearchTask(SearchTask&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
    SearchTask& operator=(SearchTask&& other) noexcept {
        if (this != &other) {
            destroy();
            handle_ = std::exchange(other.handle_, {});
        }
        return *this;
    }
    SearchTask(const SearchTask&) = delete;
    SearchTask& operator=(const SearchTask&) = delete;
    ~SearchTask() { destroy(); }

    /// Runs to the next query; false once the strategy has returned.
    bool advance() {
        if (handle_.done()) {
            return false;
        }
        handle_.resume();
        if (handle_.promise().error) {
            std::rethrow_exception(handle_.promise().error);
        }
        return !handle_.done();
    }

    Vertex pending_query() const { return handle_.promise().pending; }
    void provide(OracleAnswer ans) { handle_.promise().answer = ans; }
    bool done() const { return handle_.done(); }
    Result& result() { return *handle_.promise().result; }

private:
    explicit SearchTask(Handle h) : handle_(h) {}
    void destroy() {
        if (handle_) {
            handle_.destroy();
        }
    }
    Handle handle_;
};

}  // namespace treequest
