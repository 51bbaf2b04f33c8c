#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <string>
#include <utility>
#include <vector>

namespace pgcodes {

// Key-sorted "key = value" document. Everything run-dependent (timestamp,
// wall-clock timings) collapses into the single trailing volatile line, so
// two identical runs diff clean above it.
class RunReport {
public:
    explicit RunReport(std::string command) { set("command", std::move(command)); }

    void set(const std::string& key, std::string value) {
        for (auto& kv : entries_) {
            if (kv.first == key) {
                kv.second = std::move(value);
                return;
            }
        }
        entries_.emplace_back(key, std::move(value));
    }
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }
    void set(const std::string& key, int64_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, uint64_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, int value) { set(key, std::to_string(value)); }
    void verdict(const std::string& key, bool pass) {
        set("verdict." + key, pass ? "pass" : "fail");
        all_pass_ = all_pass_ && pass;
    }
    void timing_ms(const std::string& phase, double ms) { timings_.emplace_back(phase, ms); }

    bool all_pass() const { return all_pass_; }

    std::string render() const {
        std::vector<std::pair<std::string, std::string>> sorted = entries_;
        std::sort(sorted.begin(), sorted.end());
        std::string out;
        for (const auto& [k, v] : sorted) out += k + " = " + v + "\n";
        out += "volatile: timestamp=" + iso_now();
        for (const auto& [phase, ms] : timings_) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s_ms=%.1f", phase.c_str(), ms);
            out += buf;
        }
        out += "\n";
        return out;
    }

private:
    static std::string iso_now() {
        std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<std::pair<std::string, double>> timings_;
    bool all_pass_ = true;
};

// wall-clock phase timer feeding RunReport::timing_ms
class PhaseTimer {
public:
    PhaseTimer(RunReport& report, std::string phase)
        : report_(report), phase_(std::move(phase)), start_(std::chrono::steady_clock::now()) {}
    ~PhaseTimer() {
        std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
        report_.timing_ms(phase_, d.count());
    }
    PhaseTimer(const PhaseTimer&) = delete;
    PhaseTimer& operator=(const PhaseTimer&) = delete;

private:
    RunReport& report_;
    std::string phase_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace pgcodes
