#pragma once

#include "qpt/serialize.hpp"

namespace qpt {

struct JobOptions {
  int truncation_override = 0;  // 0 keeps the document's (or default) value
};

/// Dispatches one declarative job document and returns the report document.
/// Deterministic: identical inputs produce identical reports. Schema problems
/// throw SchemaError, violated mathematical preconditions PreconditionError.
Json run_job(const Json& job, const JobOptions& options = {});

/// Report for one verification suite ("all" runs every suite), canonically
/// keyed and reproducible for a fixed seed.
Json run_suite_report(const std::string& name, std::uint64_t seed);

}  // namespace qpt
