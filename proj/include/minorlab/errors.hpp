#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minorlab {

// Empty or otherwise unusable input (n = 0 graph, |V| < 3 where 3 is required, ...).
struct degenerate_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Minimum-degree precondition violated; message reports the deficit.
struct min_degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Average-degree precondition violated.
struct average_degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A theorem hypothesis failed; `inequality` quotes the failed inequality.
struct hypothesis_error : std::runtime_error {
    std::string inequality;
    hypothesis_error(std::string ineq, const std::string& detail)
        : std::runtime_error(detail), inequality(std::move(ineq)) {}
};

// A guaranteed bound could not be met (e.g. greedy fallback exceeded the
// connected-dominating-set size bound). Never silently weakened.
struct bound_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input stream; carries the byte offset and line of the defect.
struct parse_error : std::runtime_error {
    std::size_t byte_offset;
    std::size_t line;
    parse_error(const std::string& msg, std::size_t offset, std::size_t ln)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", byte " +
                             std::to_string(offset) + ")"),
          byte_offset(offset), line(ln) {}
};

} // namespace minorlab
