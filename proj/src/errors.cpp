#include "monocat/errors.hpp"

#include <atomic>
#include <cstdlib>

namespace monocat {

namespace {
std::atomic<long long> g_deadline_ns{0};

long long now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

void Budget::set_milliseconds(long long ms) { g_deadline_ns = now_ns() + ms * 1000000LL; }

void Budget::clear() { g_deadline_ns = 0; }

void Budget::from_environment() {
    const char* v = std::getenv("MONOCAT_BUDGET_MS");
    if (!v || !*v) return;
    char* end = nullptr;
    long long ms = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || ms <= 0)
        throw InputError("MONOCAT_BUDGET_MS must be a positive integer");
    set_milliseconds(ms);
}

bool Budget::active() { return g_deadline_ns.load() != 0; }

void Budget::check(const std::string& where) {
    long long d = g_deadline_ns.load();
    if (d != 0 && now_ns() > d) throw BudgetExceeded("time budget exceeded during " + where);
}

}  // namespace monocat
