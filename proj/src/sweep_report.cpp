#include "collatz/sweep_report.hpp"

#include <sstream>

#include <json.hpp>

namespace collatz {

std::string to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["range_start"] = report.range_start.str();
    j["range_end"] = report.range_end.str();
    j["checked"] = report.checked;
    j["succeeded"] = report.succeeded;
    auto failures = nlohmann::ordered_json::array();
    for (const auto& n : report.failures) failures.push_back(n.str());
    j["failures"] = std::move(failures);
    j["max_orbit_value"] = report.max_orbit_value.str();
    j["max_steps_seen"] = report.max_steps_seen;
    return j.dump(2);
}

std::string to_csv(const SweepReport& report) {
    std::string out = "n\n";
    for (const auto& n : report.failures) {
        out += n.str();
        out += '\n';
    }
    return out;
}

std::string to_text(const SweepReport& report) {
    std::ostringstream os;
    const double ms =
        std::chrono::duration<double, std::milli>(report.elapsed).count();
    os << "range [" << report.range_start << ", " << report.range_end << "]\n"
       << "checked    " << report.checked << "\n"
       << "succeeded  " << report.succeeded << "\n"
       << "failures   " << report.failures.size() << "\n";
    for (const auto& n : report.failures) os << "  failed: " << n << "\n";
    os << "max orbit value " << report.max_orbit_value << "\n"
       << "max steps seen  " << report.max_steps_seen << "\n"
       << "elapsed " << ms << " ms\n";
    return os.str();
}

}  // namespace collatz
