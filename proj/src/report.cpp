#include "lcr/report.hpp"

#include <sstream>

namespace lcr {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Unknown: return "unknown";
    }
    return "?";
}

std::size_t CheckReport::count(Outcome o) const {
    std::size_t c = 0;
    for (const auto& r : results) c += r.outcome == o;
    return c;
}

Outcome CheckReport::verdict() const {
    if (count(Outcome::Fail)) return Outcome::Fail;
    if (count(Outcome::Unknown)) return Outcome::Unknown;
    return Outcome::Pass;
}

std::string CheckReport::table() const {
    std::ostringstream os;
    os << kind << " check of " << candidate << " (premise cap " << options.depth_cap << ", conclusion cap "
       << options.conclusion_bound() << ")\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        os << i << "  " << to_string(r.outcome) << "  " << r.instance.label << "  " << print(r.instance.conclusion);
        if (r.conclusion_depth) os << "  [in at " << *r.conclusion_depth << "]";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
    }
    os << "summary: " << count(Outcome::Pass) << " pass, " << count(Outcome::Fail) << " fail, "
       << count(Outcome::Unknown) << " unknown -> " << to_string(verdict()) << "\n";
    return os.str();
}

InstanceResult check_instance(const Instance& inst, PoleSearch& search, const CheckOptions& opts) {
    InstanceResult r;
    r.instance = inst;
    for (std::size_t i = 0; i < inst.premises.size(); ++i) {
        r.premise_depths.push_back(search.depth(inst.premises[i], opts.depth_cap));
        if (!r.premise_depths.back() && r.detail.empty())
            r.detail = "premise " + print(inst.premises[i]) + " not in within " + std::to_string(opts.depth_cap);
    }
    if (!r.detail.empty()) {
        // the instance is vacuous at this cap; still record the conclusion
        r.conclusion_depth = search.depth(inst.conclusion, opts.conclusion_bound());
        r.outcome = Outcome::Unknown;
        return r;
    }
    r.conclusion_depth = search.depth(inst.conclusion, opts.conclusion_bound());
    if (r.conclusion_depth) {
        r.outcome = Outcome::Pass;
    } else {
        r.outcome = Outcome::Fail;
        r.detail = "premises in, conclusion not in within " + std::to_string(opts.conclusion_bound());
    }
    return r;
}

void append(CheckReport& into, const CheckReport& from) {
    into.results.insert(into.results.end(), from.results.begin(), from.results.end());
}

}  // namespace lcr
