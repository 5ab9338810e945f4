#pragma once

#include <boost/dynamic_bitset.hpp>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotscan {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

enum class Ring : std::uint8_t { z2, z };
enum class QuadMode : std::uint8_t { all, chordless };

inline const char* to_string(Ring r) { return r == Ring::z2 ? "z2" : "z"; }
inline const char* to_string(QuadMode q) { return q == QuadMode::all ? "all" : "chordless"; }

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg) : std::runtime_error(msg), line(line_) {}
};

// Thrown when a run exceeds its budget; the caller turns it into a TIMEOUT verdict.
struct Timeout : std::runtime_error {
    Timeout() : std::runtime_error("budget exhausted") {}
};

class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double seconds) {
        Deadline d;
        if (seconds > 0) {
            d.enabled_ = true;
            d.end_ = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(seconds));
        }
        return d;
    }

    bool expired() const {
        return enabled_ && std::chrono::steady_clock::now() >= end_;
    }

    void check() const {
        if (expired()) throw Timeout();
    }

private:
    bool enabled_ = false;
    std::chrono::steady_clock::time_point end_{};
};

}  // namespace knotscan
