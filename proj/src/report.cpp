#include "adinvar/report.hpp"

#include <algorithm>
#include <sstream>

namespace adinvar {

Check Check::from_bool(std::string name, bool ok, std::string note) {
    Check c;
    c.name = std::move(name);
    c.pass = ok;
    c.violations = ok ? 0 : 1;
    c.note = std::move(note);
    return c;
}

void Check::fail(std::vector<std::size_t> zero_based_tuple) {
    pass = false;
    ++violations;
    if (witnesses.size() >= max_witnesses)
        return;
    for (auto& i : zero_based_tuple)
        ++i;
    witnesses.push_back(std::move(zero_based_tuple));
}

void Report::add_all(std::vector<Check> checks) {
    for (auto& c : checks)
        checks_.push_back(std::move(c));
}

bool Report::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

json check_to_json(const Check& c) {
    json j = {{"name", c.name}, {"pass", c.pass}, {"violations", c.violations}};
    j["witnesses"] = c.witnesses;
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

namespace {
std::vector<const Check*> sorted(const std::vector<Check>& checks) {
    std::vector<const Check*> out;
    for (const auto& c : checks)
        out.push_back(&c);
    std::stable_sort(out.begin(), out.end(), [](const Check* a, const Check* b) {
        if (a->name != b->name)
            return a->name < b->name;
        return a->witnesses < b->witnesses;
    });
    return out;
}
}  // namespace

json Report::to_json() const {
    json j = json::object();
    j["command"] = command_;
    j["pass"] = all_pass();
    json arr = json::array();
    for (const Check* c : sorted(checks_))
        arr.push_back(check_to_json(*c));
    j["checks"] = std::move(arr);
    j["data"] = data_;
    return j;
}

std::string Report::to_table() const {
    std::ostringstream os;
    os << "command: " << command_ << "\n";
    std::size_t width = 5;
    for (const auto& c : checks_)
        width = std::max(width, c.name.size());
    for (const Check* c : sorted(checks_)) {
        std::string line = (c->pass ? "PASS  " : "FAIL  ") + c->name + std::string(width - c->name.size() + 2, ' ');
        std::ostringstream tail;
        if (!c->pass) {
            tail << c->violations << " violation(s)";
            for (const auto& w : c->witnesses) {
                tail << " (";
                for (std::size_t i = 0; i < w.size(); ++i)
                    tail << (i ? "," : "") << w[i];
                tail << ")";
            }
        }
        if (!c->note.empty())
            tail << (c->pass ? "" : "  ") << c->note;
        line += tail.str();
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << "\n";
    }
    os << (all_pass() ? "result: pass" : "result: FAIL") << "\n";
    return os.str();
}

}  // namespace adinvar
