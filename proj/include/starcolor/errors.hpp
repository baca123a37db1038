#ifndef starcolor_errors_hpp
#define starcolor_errors_hpp

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starcolor {

/// Malformed graph file, pattern string or generator spec. `position` is a
/// byte offset (graph6, patterns) or a 1-based line number (DIMACS).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An exact oracle was asked to run beyond the instance size it supports.
class OracleScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Stable-subset enumeration inside the colorer exceeded the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proof step of the coloring recursion did not hold. On an input known to
/// be H-free this is a bug; with the H-free check skipped it can also mean
/// the input was not H-free after all. `node_json` holds the
/// partially built trace node at the point of failure.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(const std::string& what, std::string node_json)
        : std::logic_error(what), node_json_(std::move(node_json)) {}

    const std::string& node_json() const { return node_json_; }

private:
    std::string node_json_;
};

} // namespace starcolor

#endif // starcolor_errors_hpp
