#include "lcr/machine.hpp"

#include <ostream>

#include <json.hpp>

namespace lcr {

const char* to_string(Rule r) {
    switch (r) {
        case Rule::Push: return "push";
        case Rule::Grab: return "grab";
        case Rule::Save: return "save";
        case Rule::Restore: return "restore";
    }
    return "?";
}

const char* to_string(StuckReason r) {
    switch (r) {
        case StuckReason::BareInstruction: return "bare-instruction";
        case StuckReason::EmptyStackAbstraction: return "empty-stack-abstraction";
        case StuckReason::BottomReached: return "bottom-reached";
        case StuckReason::ContinuationEmptyStack: return "continuation-empty-stack";
        case StuckReason::OpenTerm: return "open-term";
    }
    return "?";
}

namespace {

StepOutcome stuck(StuckReason r) {
    StepOutcome o;
    o.reason = r;
    return o;
}

StepOutcome stepped(Process next, Rule rule) {
    StepOutcome o;
    o.stepped = true;
    o.next = std::move(next);
    o.rule = rule;
    return o;
}

}  // namespace

StepOutcome step(const Process& p) {
    const Term& t = p.head;
    const Stack& pi = p.stack;
    switch (t.kind()) {
        case TermKind::App:
            return stepped(Process{t.fun(), Stack::cons(t.arg(), pi)}, Rule::Push);
        case TermKind::Lam:
            if (pi.is_bottom()) return stuck(StuckReason::EmptyStackAbstraction);
            return stepped(Process{instantiate(t.body(), pi.head()), pi.tail()}, Rule::Grab);
        case TermKind::Cc:
            if (pi.is_bottom()) return stuck(StuckReason::BottomReached);
            return stepped(Process{pi.head(), Stack::cons(Term::cont(pi.tail()), pi.tail())}, Rule::Save);
        case TermKind::Cont:
            if (pi.is_bottom()) return stuck(StuckReason::ContinuationEmptyStack);
            return stepped(Process{pi.head(), t.stack()}, Rule::Restore);
        case TermKind::Instr:
            return stuck(StuckReason::BareInstruction);
        case TermKind::Bound:
        case TermKind::Free:
            return stuck(StuckReason::OpenTerm);
    }
    return stuck(StuckReason::OpenTerm);
}

namespace {

template <class OnStep>
Trace drive(const Process& p, std::size_t fuel, OnStep&& on_step) {
    Trace tr;
    tr.initial = p;
    Process cur = p;
    while (true) {
        if (tr.fuel_used >= fuel) {
            tr.status = RunStatus::FuelExhausted;
            break;
        }
        StepOutcome o = step(cur);
        if (!o.stepped) {
            tr.status = RunStatus::Stuck;
            tr.stuck_reason = o.reason;
            break;
        }
        ++tr.fuel_used;
        on_step(TraceStep{o.rule, o.next});
        cur = std::move(o.next);
    }
    tr.final = std::move(cur);
    return tr;
}

}  // namespace

Trace run(const Process& p, std::size_t fuel) {
    std::vector<TraceStep> steps;
    Trace tr = drive(p, fuel, [&](const TraceStep& s) { steps.push_back(s); });
    tr.steps = std::move(steps);
    return tr;
}

Trace run_streaming(const Process& p, std::size_t fuel, const std::function<void(const TraceStep&)>& sink) {
    return drive(p, fuel, sink);
}

Trace run_quiet(const Process& p, std::size_t fuel) {
    return drive(p, fuel, [](const TraceStep&) {});
}

void write_trace_text(std::ostream& os, const Trace& t) {
    os << "init | " << print(t.initial.head) << " | " << print(t.initial.stack) << '\n';
    for (const auto& s : t.steps) os << to_string(s.rule) << " | " << print(s.result.head) << " | " << print(s.result.stack) << '\n';
    if (t.status == RunStatus::Stuck)
        os << "stuck (" << to_string(t.stuck_reason) << ") after " << t.fuel_used << " steps\n";
    else
        os << "fuel exhausted after " << t.fuel_used << " steps\n";
}

void write_trace_jsonl(std::ostream& os, const Trace& t) {
    std::size_t i = 0;
    os << nlohmann::json{{"step", i++}, {"rule", "init"}, {"process", print(t.initial)}}.dump() << '\n';
    for (const auto& s : t.steps)
        os << nlohmann::json{{"step", i++}, {"rule", to_string(s.rule)}, {"process", print(s.result)}}.dump() << '\n';
    nlohmann::json end{{"status", t.status == RunStatus::Stuck ? "stuck" : "fuel-exhausted"},
                       {"fuel_used", t.fuel_used},
                       {"final", print(t.final)}};
    if (t.status == RunStatus::Stuck) end["reason"] = to_string(t.stuck_reason);
    os << end.dump() << '\n';
}

}  // namespace lcr
