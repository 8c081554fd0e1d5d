#include "tempknow/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tempknow {

namespace {

bool valid_letter(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

}  // namespace

void Trace::set(const std::string& letter, std::size_t position) {
  if (position >= length_) throw format_error("position out of range");
  auto [it, inserted] = rows_.try_emplace(letter);
  if (inserted) it->second.assign(length_, false);
  it->second[position] = true;
}

bool Trace::holds(const std::string& letter, std::size_t position) const {
  auto it = rows_.find(letter);
  return it != rows_.end() && it->second.at(position);
}

std::set<std::string> Trace::letters() const {
  std::set<std::string> out;
  for (const auto& [letter, row] : rows_) out.insert(letter);
  return out;
}

MultiAgentModel::MultiAgentModel(std::size_t length, std::size_t agent_count)
    : length_(length), agents_(agent_count, Trace(length)) {
  if (length == 0) throw format_error("model length must be positive");
  if (agent_count == 0) throw format_error("model needs at least one agent");
}

MultiAgentModel load_model(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw format_error("model must be a JSON object");
  if (!doc.contains("length")) throw format_error("missing field: length");
  if (!doc.contains("agents")) throw format_error("missing field: agents");
  const auto& length_field = doc["length"];
  if (!length_field.is_number_unsigned() || length_field.get<long long>() == 0) {
    throw format_error("length must be a positive integer");
  }
  std::size_t length = length_field.get<std::size_t>();
  const auto& agents = doc["agents"];
  if (!agents.is_array() || agents.empty()) {
    throw format_error("agents must be a nonempty array");
  }

  MultiAgentModel model(length, agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const auto& entry = agents[i];
    if (!entry.is_object()) {
      throw format_error("agent valuation must be an object");
    }
    for (const auto& [letter, positions] : entry.items()) {
      if (!valid_letter(letter)) {
        throw format_error("invalid letter name: " + letter);
      }
      if (!positions.is_array()) {
        throw format_error("positions of '" + letter + "' must be an array");
      }
      long long previous = -1;
      for (const auto& position : positions) {
        if (!position.is_number_unsigned()) {
          throw format_error("positions of '" + letter +
                             "' must be nonnegative integers");
        }
        long long p = position.get<long long>();
        if (p <= previous) {
          throw format_error("positions of '" + letter +
                             "' must be strictly ascending");
        }
        if (static_cast<std::size_t>(p) >= length) {
          std::ostringstream msg;
          msg << "position " << p << " of '" << letter
              << "' exceeds model length " << length;
          throw format_error(msg.str());
        }
        model.agent(i).set(letter, static_cast<std::size_t>(p));
        previous = p;
      }
    }
  }
  return model;
}

MultiAgentModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw format_error("cannot open model file: " + path);
  return load_model(in);
}

std::string model_json(const Trace& trace, long long designated) {
  nlohmann::json valuation = nlohmann::json::object();
  for (const auto& [letter, row] : trace.valuation()) {
    nlohmann::json positions = nlohmann::json::array();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) positions.push_back(i);
    }
    valuation[letter] = std::move(positions);
  }
  nlohmann::json doc;
  doc["length"] = trace.length();
  doc["agents"] = nlohmann::json::array({valuation});
  if (designated >= 0) doc["designated"] = designated;
  return doc.dump();
}

}  // namespace tempknow
