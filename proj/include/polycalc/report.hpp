#pragma once

// Check reports shared by the CLI suites: one line per check, exit code 0
// iff nothing failed.

#include <chrono>
#include <cstddef>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycalc/rational.hpp"

namespace polycalc {

enum class Status { Pass, Fail, Inconclusive, Skipped };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Inconclusive: return "INCONCLUSIVE";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string expected;
    std::string computed;
};

inline std::string format_counts(std::span<const Integer> f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i].str();
    return out + ")";
}

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

    void add(Check c) { checks_.push_back(std::move(c)); }
    void add(std::string name, bool ok, std::string expected, std::string computed) {
        checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(computed)});
    }
    void add(std::string name, Status s, std::string expected, std::string computed) {
        checks_.push_back({std::move(name), s, std::move(expected), std::move(computed)});
    }

    const std::vector<Check>& checks() const { return checks_; }
    const std::string& command() const { return command_; }
    bool failed() const {
        for (const auto& c : checks_)
            if (c.status == Status::Fail) return true;
        return false;
    }
    int exit_code() const { return failed() ? 1 : 0; }
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

    std::string to_text(bool timing = false) const {
        std::ostringstream os;
        os << "command: " << command_ << '\n';
        for (const auto& c : checks_) {
            os << std::left << std::setw(13) << status_name(c.status) << c.name;
            if (!c.expected.empty()) os << "  expected=" << c.expected;
            if (!c.computed.empty()) os << "  computed=" << c.computed;
            os << '\n';
        }
        std::size_t counts[4] = {0, 0, 0, 0};
        for (const auto& c : checks_) ++counts[static_cast<int>(c.status)];
        os << "summary: " << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " inconclusive, "
           << counts[3] << " skipped\n";
        if (timing) os << "elapsed: " << std::fixed << std::setprecision(3) << seconds() << " s\n";
        return os.str();
    }

    /// One JSON object per line.
    std::string to_records(bool timing = false) const {
        std::ostringstream os;
        for (const auto& c : checks_) {
            nlohmann::json j;
            j["command"] = command_;
            j["check"] = c.name;
            j["status"] = status_name(c.status);
            j["expected"] = c.expected;
            j["computed"] = c.computed;
            os << j.dump() << '\n';
        }
        if (timing) {
            nlohmann::json j;
            j["command"] = command_;
            j["elapsed_seconds"] = seconds();
            os << j.dump() << '\n';
        }
        return os.str();
    }

private:
    std::string command_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Check> checks_;
};

}  // namespace polycalc
