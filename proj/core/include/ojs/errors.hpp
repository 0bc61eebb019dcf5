// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ojs {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Antenna counts fall outside the supported operating regime.
class AntennaRegimeViolation : public Error {
 public:
  using Error::Error;
};

/// Matrix arguments have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Input matrix does not have full column rank.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to have orthonormal columns does not.
class NotOrthonormal : public Error {
 public:
  using Error::Error;
};

/// A matrix expected to be Hermitian is not.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Orthogonal complement requested for a subspace that already fills the
/// ambient space.
class FullSpace : public Error {
 public:
  using Error::Error;
};

/// Subset size exceeds the pool it is drawn from.
class KTooLarge : public Error {
 public:
  using Error::Error;
};

/// Aggregate jamming Gram matrix is singular, so the interference-limited
/// eavesdropper rate is undefined (unbounded).
class SingularJammingGram : public Error {
 public:
  using Error::Error;
};

/// Rate-gap argument must be strictly positive.
class NonpositiveDelta : public Error {
 public:
  using Error::Error;
};

/// Slope estimation window has fewer than two distinct abscissae.
class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

/// Empty sample set where at least one draw is required.
class EmptySamples : public Error {
 public:
  using Error::Error;
};

/// Exhaustive subset search would exceed the configured enumeration cap.
class PoolTooLarge : public Error {
 public:
  using Error::Error;
};

/// Experiment configuration file is malformed.
class ConfigParseError : public Error {
 public:
  using Error::Error;
};

/// Filesystem output could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ojs
