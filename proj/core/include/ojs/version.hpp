// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace ojs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ojs
