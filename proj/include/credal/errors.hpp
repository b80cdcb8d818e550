// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid grids, models, loss specifications, configs, malformed input files.
class config_error : public error {
public:
  using error::error;
};

/// A computation could not be carried out on otherwise valid inputs.
class evaluation_error : public error {
public:
  using error::error;
};

/// An exhaustive operation was requested on a grid too large to enumerate.
class size_guard_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

/// A region-based test was built from or evaluated with an empty region.
class empty_region_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

/// An operation whose definition quantifies over a non-empty set received the
/// empty set (supremum over no elements, empty hypothesis family, ...).
class empty_set_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

/// Every likelihood value vanished at the observed data point.
class zero_normalizer_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

/// The requested construction provably has no output for these inputs.
class no_witness_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

/// A stated precondition of the operation does not hold.
class precondition_error : public evaluation_error {
public:
  using evaluation_error::evaluation_error;
};

} // namespace credal
