#pragma once

#include <string>
#include <vector>

namespace cluspat {

/// Severity of a report entry. Critical findings contradict a proved
/// statement; conjecture findings only contradict a conjecture.
enum class Status { Pass, Fail, Conjecture };

std::string to_string(Status s);

struct Finding {
    std::string identity; // which checked identity
    std::string node;     // mutation word of the node, e.g. "1,2,1" ("" = initial)
    Status status = Status::Pass;
    std::string witness;  // offending data on failure
};

using Report = std::vector<Finding>;

/// True when no entry has status Fail.
bool report_ok(const Report& r);

/// Append b to a.
void report_merge(Report& a, Report b);

} // namespace cluspat
