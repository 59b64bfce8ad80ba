#pragma once

namespace bowtie {

inline constexpr const char* kToolName = "bowtie";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace bowtie
