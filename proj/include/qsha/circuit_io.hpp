#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qsha/qsim.hpp"

namespace qsha::qsim {

// Plain-text gate list, one entry per line:
//   qubits N
//   x Q
//   cnot C T
//   measure Q1 Q2 ...
// Lines starting with '#' are comments. `qubits` must come first.
std::string serialize(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

Circuit load_circuit(const std::filesystem::path& path);
void save_circuit(const Circuit& circuit, const std::filesystem::path& path);

} // namespace qsha::qsim
