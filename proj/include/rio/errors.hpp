#pragma once

#include <stdexcept>

namespace rio {

// Contract violations raised by the operator/state layer. Each maps to one
// precondition named in the public API docs.
struct NonUnimodular : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LabelCollision : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownPhoton : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LabelMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoProbe : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace rio
