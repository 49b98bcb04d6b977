// Copyright (c) 2026 The syn3dtxt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>

#include "syn3dtxt/image.hpp"

namespace syn3dtxt {

/// Writes 1-channel (gray) or 3-channel (RGB) images. Output bytes are a pure
/// function of the pixels.
void write_png(const std::filesystem::path& path, const Image& img);

/// Reads PNG or JPEG (by signature), converted to `channels` (1 or 3).
Image read_image(const std::filesystem::path& path, int channels = 3);

}  // namespace syn3dtxt
