#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

namespace webmon {

/// Simulation clock value. One unit of modeling time stands for 10 ms of
/// real time; a full-scale run spans 8,640,000 units (10 days).
using SimTime = std::uint64_t;

inline constexpr SimTime kFullHorizon = 8'640'000;

enum class EventKind : std::uint8_t {
    Change,                ///< a resource's change process fires
    Request,               ///< a user request arrives at a resource
    NotificationArrival,   ///< a sensor notification reaches the robot
    DownloadComplete,      ///< an in-flight download finishes
    MeasurementTick,       ///< periodic metrics sampling
    RobotDispatch,         ///< kicks off the crawling robot at t=0
};

struct Event {
    SimTime time = 0;
    std::uint64_t seq = 0;   ///< global insertion counter; breaks time ties
    EventKind kind = EventKind::MeasurementTick;
    std::uint32_t resource_id = 0;
    std::uint64_t aux = 0;   ///< notification seq / download id, by kind
};

/// Min-heap of events ordered by (time, seq). The queue owns the insertion
/// counter and the simulation clock: popping an event advances the clock to
/// the event's time. Scheduling into the past aborts the run.
class EventQueue {
public:
    void schedule(SimTime time, EventKind kind, std::uint32_t resource_id = 0,
                  std::uint64_t aux = 0);

    /// Pops the (time, seq)-minimal event and advances the clock to it.
    /// Empty queue yields std::nullopt.
    std::optional<Event> next_event();

    SimTime clock() const noexcept { return clock_; }
    bool empty() const noexcept { return heap_.empty(); }
    std::size_t size() const noexcept { return heap_.size(); }
    std::uint64_t scheduled_count() const noexcept { return next_seq_; }
    std::uint64_t popped_count() const noexcept { return popped_; }

private:
    struct After {
        bool operator()(const Event& a, const Event& b) const noexcept {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Event, std::vector<Event>, After> heap_;
    SimTime clock_ = 0;
    std::uint64_t next_seq_ = 0;
    std::uint64_t popped_ = 0;
};

/// Purpose tag of a named random substream. Streams with distinct purposes
/// or keys are independent; the same (seed, purpose, key) always replays the
/// same variate sequence, which is what keeps the world trajectory identical
/// across strategies run on the same seed.
enum class StreamPurpose : std::uint32_t {
    Sizes = 1,
    Changes,
    Requests,
    Downloads,
    Notifications,
};

/// SplitMix64 finalizer; used for seed derivation and hashing.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Maps a uniform draw u in [0,1) to lo + floor(u * (hi - lo + 1)).
std::int64_t uniform_int_from_unit(double u, std::int64_t lo, std::int64_t hi);

/// Maps a uniform draw u in [0,1) to an exponential delay with the given
/// mean: max(1, round(-mean * ln(1 - u))), in whole units.
SimTime exp_delay_from_unit(double u, double mean_units);

/// Named random substream. The generator is xoshiro256** seeded from
/// (seed, purpose, key) through SplitMix64; unit draws take the top 53 bits,
/// so sequences are identical across platforms. A scripted stream replays a
/// fixed list of unit draws instead and throws when the script runs out.
class RngStream {
public:
    RngStream() : RngStream(0, StreamPurpose::Sizes, 0) {}
    RngStream(std::uint64_t seed, StreamPurpose purpose, std::uint64_t key = 0);

    static RngStream scripted(std::vector<double> units);

    /// Next uniform draw in [0,1).
    double next_unit();

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return uniform_int_from_unit(next_unit(), lo, hi);
    }

    SimTime exp_delay(double mean_units) {
        return exp_delay_from_unit(next_unit(), mean_units);
    }

private:
    std::uint64_t next_raw();

    std::array<std::uint64_t, 4> state_{};
    std::vector<double> script_;
    std::size_t script_pos_ = 0;
    bool scripted_ = false;
};

}  // namespace webmon
