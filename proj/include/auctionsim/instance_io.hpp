#pragma once

#include <string>

#include "auctionsim/model.hpp"

namespace auctionsim {

// Instance files are JSON:
//   {
//     "version": 1,
//     "bidders": [{"value": v, "allowance": g | "inf", "bid": b}, ...],
//     "ctrs": [a1, a2, ...],
//     "metadata": { ... }          // optional, free-form
//   }
// An unbounded allowance is written as the string "inf".
inline constexpr int kInstanceFileVersion = 1;

AuctionInstance parse_instance(const std::string& json_text);
std::string serialize_instance(const AuctionInstance& instance,
                               const std::string& metadata_json = "");

AuctionInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const AuctionInstance& instance,
                   const std::string& metadata_json = "");

// Minimal RFC-style CSV field quoting.
std::string csv_escape(const std::string& field);

}  // namespace auctionsim
