#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qs {

// Fixed labels for the relation data a report record exercises.
const std::vector<std::pair<std::string, std::string>>& anchor_table();

// returns key; throws std::out_of_range for labels missing from the table
const std::string& anchor(const std::string& key);

}  // namespace qs
