#pragma once

#include <stdexcept>
#include <string>

namespace isorad {

enum class Errc {
    NonPlanarOrInconsistent,
    BadBipartition,
    DanglingReference,
    UnknownFamily,
    BadParams,
    NotBipartite,
    HasClosedLoop,
    NotACycle,
    NotSimpleCycle,
    NotFlat,
    NonIntegerRHS,
    DegenerateAngle,
    DegenerateEdge,
    HasDegreeOneVertex,
    UnbalancedColors,
    TooLarge,
    PatternMismatch,
    BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace isorad
