#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tempknow/errors.hpp"

namespace tempknow {

/// A finite initial segment of the past-directed frame: states 0..length-1,
/// state 0 being the earliest point, plus one valuation.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }

  /// Marks the letter true at the given position.
  void set(const std::string& letter, std::size_t position);
  bool holds(const std::string& letter, std::size_t position) const;

  /// Letters with at least one declared position.
  std::set<std::string> letters() const;
  const std::map<std::string, std::vector<bool>>& valuation() const {
    return rows_;
  }

 private:
  std::size_t length_ = 0;
  std::map<std::string, std::vector<bool>> rows_;
};

/// An ultimately periodic model prefix.loop^omega, stored as one block of
/// prefix_length + loop_length states; the loop starts at prefix_length.
/// The prefix may be empty, the loop may not.
class LassoTrace {
 public:
  LassoTrace(std::size_t prefix_length, std::size_t loop_length)
      : prefix_length_(prefix_length),
        states_(prefix_length + loop_length) {
    if (loop_length == 0) throw format_error("lasso loop must be nonempty");
  }

  std::size_t prefix_length() const { return prefix_length_; }
  std::size_t loop_length() const { return states_.length() - prefix_length_; }
  /// Number of explicitly stored states (prefix plus first loop unrolling).
  std::size_t state_count() const { return states_.length(); }

  void set(const std::string& letter, std::size_t position) {
    states_.set(letter, position);
  }
  bool holds(const std::string& letter, std::size_t position) const {
    return states_.holds(letter, position);
  }
  std::set<std::string> letters() const { return states_.letters(); }
  /// Successor within the stored window: the last state wraps to loop start.
  std::size_t next_state(std::size_t position) const {
    return position + 1 < state_count() ? position + 1 : prefix_length_;
  }

 private:
  std::size_t prefix_length_;
  Trace states_;
};

/// Shared finite frame with one valuation per agent.
class MultiAgentModel {
 public:
  MultiAgentModel() = default;
  MultiAgentModel(std::size_t length, std::size_t agent_count);

  std::size_t length() const { return length_; }
  std::size_t agent_count() const { return agents_.size(); }
  Trace& agent(std::size_t i) { return agents_.at(i); }
  const Trace& agent(std::size_t i) const { return agents_.at(i); }
  const std::vector<Trace>& agents() const { return agents_; }

 private:
  std::size_t length_ = 0;
  std::vector<Trace> agents_;
};

/// Reads the model JSON format:
///   {"length": n, "agents": [ {letter: [positions...]}, ... ]}
/// Positions are 0-based, strictly ascending and < n. Unknown extra fields
/// (such as a witness's "designated") are ignored. Throws format_error.
MultiAgentModel load_model(std::istream& in);
MultiAgentModel load_model_file(const std::string& path);

/// Serializes a single-valuation trace as a one-agent model; when
/// `designated` is non-negative a "designated" field is added.
std::string model_json(const Trace& trace, long long designated = -1);

}  // namespace tempknow
