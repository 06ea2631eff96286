#include "vknot/error.hpp"

namespace vknot {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelCountNotTwo: return "LabelCountNotTwo";
    case ErrorKind::RoleDuplicated: return "RoleDuplicated";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::UnknownCrossing: return "UnknownCrossing";
    case ErrorKind::ArcOutOfRange: return "ArcOutOfRange";
    case ErrorKind::InvalidSite: return "InvalidSite";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonterminatingRelocation: return "NonterminatingRelocation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::MalformedJson: return "MalformedJson";
  }
  return "Unknown";
}

}  // namespace vknot
