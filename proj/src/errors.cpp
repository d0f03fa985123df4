#include "ordpat/errors.hpp"

namespace ordpat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::InfiniteIdeal: return "InfiniteIdeal";
    case Errc::UnsupportedCapability: return "UnsupportedCapability";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotAStructure: return "NotAStructure";
    case Errc::UndefinedForSpace: return "UndefinedForSpace";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownFixture: return "UnknownFixture";
  }
  return "Error";
}

}  // namespace ordpat
