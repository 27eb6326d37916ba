#pragma once

namespace radloc {

// Artifact version, reported by the CLI.
inline constexpr const char* kVersion = "0.1.0";

// Version of the CSV/config schemas; bumped whenever a header or field
// changes meaning.
inline constexpr const char* kSchemaVersion = "1";

}  // namespace radloc
