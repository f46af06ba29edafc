#pragma once

#include <stdexcept>
#include <string>

namespace ted {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph construction
struct IndexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// filtrations
struct EmptyUniverse : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NonInjectiveFeatures : Error { using Error::Error; };
struct MissingFiltrationValue : Error { using Error::Error; };
struct InvalidFiltrationValue : Error { using Error::Error; };

// persistence
struct MalformedMatrix : Error { using Error::Error; };

// integration
struct UnknownToken : Error { using Error::Error; };
struct SizeBoundExceeded : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };

// harness
struct TooLarge : Error { using Error::Error; };

// io
struct MissingFile : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct RaggedIndicator : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

}  // namespace ted
