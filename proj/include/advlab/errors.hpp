#ifndef ADVLAB_ERRORS_HPP
#define ADVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace advlab {

// Malformed or inconsistent input data (code files, duplicate words, ...).
// The CLI maps this to exit code 2.
class InputDataError : public std::runtime_error {
   public:
    explicit InputDataError(const std::string& message) : std::runtime_error(message) {}
};

// LP solver breakdown (infeasible / unbounded / numerical failure where a
// certified result was required). The CLI maps this to exit code 3.
class SolverFailure : public std::runtime_error {
   public:
    explicit SolverFailure(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace advlab

#endif
