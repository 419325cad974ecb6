#pragma once

namespace mhs {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kManifestSchema = "mhs.verify.v1";

}  // namespace mhs
