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

#include <stdexcept>
#include <string>

namespace syn3dtxt {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A projected corner reached the camera near limit; the caller resamples angles.
class DegenerateProjection : public Error {
 public:
  using Error::Error;
};

class DegenerateHomography : public Error {
 public:
  using Error::Error;
};

/// Missing or unusable resources (fonts, corpus, backgrounds, config).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The requested font cannot render a character of the text.
class GlyphCoverageError : public Error {
 public:
  using Error::Error;
};

/// The two halves of a paired sample were rendered with different parameters.
class PairingError : public Error {
 public:
  using Error::Error;
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

/// Bounded resampling ran out of attempts.
class ResampleExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace syn3dtxt
