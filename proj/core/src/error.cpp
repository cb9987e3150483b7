#include "ordlat/error.hpp"

namespace ordlat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_generator: return "invalid generator";
    case ErrorKind::backend_mismatch: return "backend mismatch";
    case ErrorKind::wrong_backend: return "wrong backend";
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::identity_sign: return "identity has no sign";
    case ErrorKind::outside_domain: return "outside finite domain";
    case ErrorKind::cap_exceeded: return "resource cap exceeded";
    case ErrorKind::precision_exhausted: return "precision exhausted";
    case ErrorKind::incomplete_lo_space: return "LO space not complete";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::io: return "i/o error";
    case ErrorKind::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace ordlat
