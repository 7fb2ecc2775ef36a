#include "webmon/engine.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace webmon {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += kGolden;
    return mix64(state);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

void EventQueue::schedule(SimTime time, EventKind kind, std::uint32_t resource_id,
                          std::uint64_t aux) {
    if (time < clock_)
        throw std::logic_error("EventQueue::schedule: event time precedes current clock");
    heap_.push(Event{time, next_seq_++, kind, resource_id, aux});
}

std::optional<Event> EventQueue::next_event() {
    if (heap_.empty()) return std::nullopt;
    Event e = heap_.top();
    heap_.pop();
    clock_ = e.time;
    ++popped_;
    return e;
}

std::int64_t uniform_int_from_unit(double u, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::logic_error("uniform_int: lo > hi");
    const double span = static_cast<double>(hi - lo) + 1.0;
    auto offset = static_cast<std::int64_t>(u * span);
    if (offset > hi - lo) offset = hi - lo;  // u within one ulp of 1
    return lo + offset;
}

SimTime exp_delay_from_unit(double u, double mean_units) {
    if (mean_units <= 0.0) throw std::logic_error("exp_delay: mean must be positive");
    const double t = -mean_units * std::log1p(-u);
    const long long rounded = std::llround(t);
    return rounded < 1 ? SimTime{1} : static_cast<SimTime>(rounded);
}

RngStream::RngStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t key) {
    std::uint64_t s = seed;
    s = mix64(s + kGolden * (static_cast<std::uint64_t>(purpose) + 1));
    s = mix64(s ^ (key + kGolden));
    for (auto& word : state_) word = splitmix_next(s);
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
        state_[0] = kGolden;  // xoshiro forbids the all-zero state
}

RngStream RngStream::scripted(std::vector<double> units) {
    RngStream s;
    s.scripted_ = true;
    s.script_ = std::move(units);
    return s;
}

std::uint64_t RngStream::next_raw() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
}

double RngStream::next_unit() {
    if (scripted_) {
        if (script_pos_ >= script_.size())
            throw std::logic_error("RngStream: scripted draws exhausted");
        return script_[script_pos_++];
    }
    return static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
}

}  // namespace webmon
