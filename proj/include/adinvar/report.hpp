#pragma once

#include "json.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace adinvar {

using json = nlohmann::json;

/// One named pass/fail verification. Witness tuples are 1-based basis
/// indices; only the first few are kept, `violations` counts all of them.
struct Check {
    std::string name;
    bool pass = true;
    std::size_t violations = 0;
    std::vector<std::vector<std::size_t>> witnesses;
    std::string note;

    static constexpr std::size_t max_witnesses = 8;

    static Check from_bool(std::string name, bool ok, std::string note = {});
    /// Records a 0-based tuple as a failure.
    void fail(std::vector<std::size_t> zero_based_tuple);
};

/// Deterministic, machine-parseable verification report.
class Report {
public:
    explicit Report(std::string command = {}) : command_(std::move(command)) {}

    void add(Check check) { checks_.push_back(std::move(check)); }
    void add_all(std::vector<Check> checks);
    json& data() { return data_; }
    const json& data() const { return data_; }
    const std::vector<Check>& checks() const { return checks_; }
    const std::string& command() const { return command_; }

    bool all_pass() const;
    /// Checks sorted by name; object keys sorted by nlohmann::json.
    json to_json() const;
    std::string to_table() const;

private:
    std::string command_;
    std::vector<Check> checks_;
    json data_ = json::object();
};

json check_to_json(const Check& c);

}  // namespace adinvar
