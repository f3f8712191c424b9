#include "ppgk/error.hpp"

namespace ppgk {

const char *errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::invalid_vertex: return "invalid vertex";
    case Errc::parse: return "parse error";
    case Errc::io: return "i/o error";
    case Errc::undefined_owner: return "undefined owner";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::zero_vector: return "zero vector";
    case Errc::checksum_mismatch: return "checksum mismatch";
    case Errc::parameter_mismatch: return "parameter mismatch";
    case Errc::missing_artifact: return "missing artifact";
    case Errc::no_private_owners: return "no private owners";
    }
    return "unknown error";
}

} // namespace ppgk
