#pragma once

// Deterministic weak-head evaluation of processes (push, grab, save, restore).

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcr/syntax.hpp"

namespace lcr {

enum class Rule { Push, Grab, Save, Restore };
enum class StuckReason { BareInstruction, EmptyStackAbstraction, BottomReached, ContinuationEmptyStack, OpenTerm };

const char* to_string(Rule r);
const char* to_string(StuckReason r);

struct StepOutcome {
    bool stepped = false;
    Process next;          // valid when stepped
    Rule rule{};           // valid when stepped
    StuckReason reason{};  // valid when !stepped
};

StepOutcome step(const Process& p);

enum class RunStatus { Stuck, FuelExhausted };

struct TraceStep {
    Rule rule;
    Process result;
};

struct Trace {
    Process initial;
    std::vector<TraceStep> steps;
    std::size_t fuel_used = 0;
    RunStatus status = RunStatus::Stuck;
    StuckReason stuck_reason{};
    Process final;
};

/// Runs until stuck or `fuel` steps have been taken, recording every step.
Trace run(const Process& p, std::size_t fuel);

/// Same as run() but hands each step to `sink` instead of storing it; the
/// returned trace has an empty `steps` vector. Used for large fuel budgets.
Trace run_streaming(const Process& p, std::size_t fuel, const std::function<void(const TraceStep&)>& sink);

/// Final process only, without trace bookkeeping.
Trace run_quiet(const Process& p, std::size_t fuel);

/// `rule | head-term | stack` per line.
void write_trace_text(std::ostream& os, const Trace& t);
/// One JSON object per line: {"step":i,"rule":...,"process":...}.
void write_trace_jsonl(std::ostream& os, const Trace& t);

}  // namespace lcr
