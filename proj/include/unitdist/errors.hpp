#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unitdist {

/// Raised when construction parameters fall outside their valid domain.
class ParameterDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by bipartition(); carries a closed walk of odd length.
class NotBipartiteError : public std::runtime_error {
 public:
  NotBipartiteError(std::string what, std::vector<std::size_t> odd_cycle)
      : std::runtime_error(std::move(what)), odd_cycle_(std::move(odd_cycle)) {}

  const std::vector<std::size_t>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<std::size_t> odd_cycle_;
};

class InfeasibleLayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSegmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotFaithfulError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Metric incidences disagree with graph adjacency; usually a tolerance problem.
class IncidenceMismatchError : public std::runtime_error {
 public:
  IncidenceMismatchError(std::string what, std::size_t point_label, std::size_t circle_label)
      : std::runtime_error(std::move(what)), witness_(point_label, circle_label) {}

  std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

 private:
  std::pair<std::size_t, std::size_t> witness_;
};

}  // namespace unitdist
