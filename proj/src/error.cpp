#include "isorad/error.hpp"

namespace isorad {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPlanarOrInconsistent: return "NonPlanarOrInconsistent";
        case Errc::BadBipartition: return "BadBipartition";
        case Errc::DanglingReference: return "DanglingReference";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::BadParams: return "BadParams";
        case Errc::NotBipartite: return "NotBipartite";
        case Errc::HasClosedLoop: return "HasClosedLoop";
        case Errc::NotACycle: return "NotACycle";
        case Errc::NotSimpleCycle: return "NotSimpleCycle";
        case Errc::NotFlat: return "NotFlat";
        case Errc::NonIntegerRHS: return "NonIntegerRHS";
        case Errc::DegenerateAngle: return "DegenerateAngle";
        case Errc::DegenerateEdge: return "DegenerateEdge";
        case Errc::HasDegreeOneVertex: return "HasDegreeOneVertex";
        case Errc::UnbalancedColors: return "UnbalancedColors";
        case Errc::TooLarge: return "TooLarge";
        case Errc::PatternMismatch: return "PatternMismatch";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

}  // namespace isorad
