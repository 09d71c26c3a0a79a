#ifndef CYCLEPACK_ERRORS_HPP
#define CYCLEPACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclepack {

// Malformed external input (bad vertex ids, broken graph6 lines, bad CLI data).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its contract (e.g. contracting a non-edge).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds the exact-solver size guard; never a silent wrong answer.
struct too_large_error : std::runtime_error {
  explicit too_large_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclepack

#endif
