#include "cyclotome/error.hpp"

namespace cyclotome {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::NoField: return "NoField";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::ZeroIndex: return "ZeroIndex";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::ZeroInD: return "ZeroInD";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::NotTwoValued: return "NotTwoValued";
    case ErrorCode::NotAds: return "NotAds";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::Malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace cyclotome
