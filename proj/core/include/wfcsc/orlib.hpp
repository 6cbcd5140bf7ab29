#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfcsc/instance.hpp"

namespace wfcsc {

// The two published encodings of OR-Library set-covering files. Both start
// with a header "m n" (m rows/elements, n columns/sets).
//
//   row-major:    n column costs, then per row a count and that many
//                 covering column indices
//   column-major: per column a cost, a count and that many covered row
//                 indices
//
// Costs are read and discarded; the problems here are unicost.
enum class OrlibFormat { row_major, column_major };

std::string_view to_string(OrlibFormat f);

// Parses an OR-Library scp file. Without a hint the format is autodetected
// by exact token consumption: the variant must parse without structural
// errors and consume the stream exactly. If both variants parse cleanly the
// input is ambiguous and an explicit hint is required.
//
// Throws ParseError (with byte offset) on malformed input and BuildError
// when the parsed rows are uncoverable.
Instance parse_orlib(std::string_view text, std::string name = "",
                     std::optional<OrlibFormat> hint = std::nullopt,
                     BuildStats* stats = nullptr);

// The unique variant that consumes the stream exactly.
OrlibFormat detect_format(std::string_view text);

// Renders an instance in the given encoding (all costs 1). Reparsing the
// output yields an identical instance.
std::string write_orlib(const Instance& instance, OrlibFormat format);

// Feasibility report for a claimed solution. Never throws: invalid set
// identifiers and infeasibility are reported, not raised.
struct VerifyReport {
    bool feasible = false;
    std::size_t k = 0;
    std::vector<SetId> invalid_ids;             // out-of-range selections (as given)
    std::vector<SetId> duplicate_ids;           // selected more than once
    std::vector<ElemId> uncovered_elements;     // 1-based
    std::vector<std::int32_t> coverage;         // per element, how many selected sets cover it
};

VerifyReport verify_solution(const Instance& instance, const Cover& cover);

// Human-readable rendering of a report (1-based ids).
std::string format_report(const VerifyReport& report);

}  // namespace wfcsc
