#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "hardy/quantum.hpp"
#include "hardy/types.hpp"
#include "hardy/worlds.hpp"

namespace hardy::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kAssertionFailed = 1;
inline constexpr int kUsageOrParseError = 2;
inline constexpr int kModelError = 3;

enum class Format { Text, Json };

struct CanonicalSource {};
struct FamilySource {
  double x;
};
struct FileSource {
  std::string path;
};
using ModelSource = std::variant<CanonicalSource, FamilySource, FileSource>;

struct RunConfig {
  ModelSource source = CanonicalSource{};
  double epsilon = kDefaultEpsilon;
  FrameOrdering frame = FrameOrdering::LeftBeforeRight;
  LocalityCondition locality = LocalityCondition::LOC1;
  Format format = Format::Text;
};

// "canonical", "family:<x>" or "file:<path>"; throws std::invalid_argument.
ModelSource parse_model_source(std::string_view text);

HardyModel build_model(const ModelSource& source);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
