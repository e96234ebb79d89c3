#pragma once

// Custom model files (JSON):
//
//   {
//     "amplitudes": [[re, im], [re, im], [re, im], [re, im]],   // 00 01 10 11
//     "left":  {"basis1": [[[re, im], [re, im]], [[re, im], [re, im]]],
//               "basis2": ...},
//     "right": {"basis1": ..., "basis2": ...}
//   }
//
// Each basis lists the plus vector, then the minus vector. Flat keys
// "left.basis1" etc. are accepted in place of the nested objects.

#include <filesystem>
#include <string_view>

#include "hardy/quantum.hpp"

namespace hardy {

// Throws InvalidModelError on malformed documents or non-physical content.
HardyModel parse_model(std::string_view document);
HardyModel load_model(const std::filesystem::path& path);

}  // namespace hardy
