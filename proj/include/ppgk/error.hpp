#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppgk {

enum class Errc {
    invalid_argument = 1,
    invalid_vertex,
    parse,
    io,
    undefined_owner,
    dimension_mismatch,
    zero_vector,
    checksum_mismatch,
    parameter_mismatch,
    missing_artifact,
    no_private_owners,
};

const char *errc_name(Errc code) noexcept;

/// Base exception for every failure raised by the toolkit. The C API maps
/// code() onto its status enum.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Malformed input. offset is the byte position in the (decompressed)
/// stream where the problem was detected.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::uint64_t offset)
        : Error(Errc::parse, what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

} // namespace ppgk
