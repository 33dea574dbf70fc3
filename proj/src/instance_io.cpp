#include "auctionsim/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace auctionsim {

using nlohmann::json;

namespace {

double parse_allowance(const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return kUnboundedAllowance;
    throw std::invalid_argument("allowance string must be \"inf\"");
  }
  if (!value.is_number()) throw std::invalid_argument("allowance must be a number or \"inf\"");
  return value.get<double>();
}

}  // namespace

AuctionInstance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& error) {
    throw std::invalid_argument(std::string("instance file is not valid JSON: ") + error.what());
  }
  if (!doc.is_object() || !doc.contains("bidders") || !doc.contains("ctrs")) {
    throw std::invalid_argument("instance file needs \"bidders\" and \"ctrs\"");
  }
  if (doc.contains("version") && doc["version"].get<int>() != kInstanceFileVersion) {
    throw std::invalid_argument("unsupported instance file version");
  }

  AuctionInstance instance;
  for (const json& entry : doc["bidders"]) {
    Bidder bidder;
    bidder.value = entry.at("value").get<double>();
    bidder.allowance = parse_allowance(entry.at("allowance"));
    instance.bidders.push_back(bidder);
    instance.reports.push_back(entry.at("bid").get<double>());
  }
  for (const json& ctr : doc["ctrs"]) instance.ctrs.push_back(ctr.get<double>());
  return instance;
}

std::string serialize_instance(const AuctionInstance& instance,
                               const std::string& metadata_json) {
  json doc;
  doc["version"] = kInstanceFileVersion;
  doc["bidders"] = json::array();
  for (std::size_t i = 0; i < instance.num_bidders(); ++i) {
    json entry;
    entry["value"] = instance.bidders[i].value;
    if (instance.bidders[i].allowance == kUnboundedAllowance) {
      entry["allowance"] = "inf";
    } else {
      entry["allowance"] = instance.bidders[i].allowance;
    }
    entry["bid"] = instance.reports[i];
    doc["bidders"].push_back(entry);
  }
  doc["ctrs"] = instance.ctrs;
  if (!metadata_json.empty()) doc["metadata"] = json::parse(metadata_json);
  return doc.dump(2) + "\n";
}

AuctionInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void save_instance(const std::string& path, const AuctionInstance& instance,
                   const std::string& metadata_json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << serialize_instance(instance, metadata_json);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace auctionsim
