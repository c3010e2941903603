#pragma once

#include <stdexcept>
#include <string>

namespace hfd {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller passed an out-of-range or inconsistent argument.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Value outside the domain an operation is defined on (e.g. a codepoint
/// outside the Hangul syllable range).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A shipped table or configuration file is missing or malformed.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A font file could not be read or parsed.
class IngestionError : public Error {
public:
    using Error::Error;
};

/// A font parses but covers no Hangul.
class UnsupportedFontError : public Error {
public:
    using Error::Error;
};

/// Codepoint not covered by the font and no fallback available.
class MissingGlyphError : public Error {
public:
    using Error::Error;
};

/// On-disk data fails checksum or structural validation.
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// On-disk data carries an unknown schema/format version.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Training produced non-finite values.
class DivergenceError : public Error {
public:
    using Error::Error;
};

} // namespace hfd
