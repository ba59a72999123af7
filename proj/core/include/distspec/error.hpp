#pragma once

#include <stdexcept>
#include <string>

namespace distspec {

/// Precondition or parameter violation (bad n, mismatched degrees, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A distance routine was handed a graph with more than one component.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(int u, int v, const std::string& u_label, const std::string& v_label)
      : std::runtime_error("graph is disconnected: no path between vertex " + u_label + " and vertex " +
                           v_label),
        u_(u),
        v_(v) {}

  int first_vertex() const noexcept { return u_; }
  int second_vertex() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

/// An exact verification step did not hold (non-equitable partition, vector not an eigenvector, ...).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace distspec
