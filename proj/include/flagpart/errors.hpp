#ifndef FLAGPART_ERRORS_HPP
#define FLAGPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagpart {

// Base class for all error conditions raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FLAGPART_DEFINE_ERROR(NAME)                                  \
    struct NAME : Error {                                            \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {} \
    }

FLAGPART_DEFINE_ERROR(UnsupportedType);
FLAGPART_DEFINE_ERROR(TypeMismatch);
FLAGPART_DEFINE_ERROR(GroupMismatch);
FLAGPART_DEFINE_ERROR(InvalidPartition);
FLAGPART_DEFINE_ERROR(BadCharacteristic);
FLAGPART_DEFINE_ERROR(RepeatedEigenvalue);
FLAGPART_DEFINE_ERROR(NotIsotropic);
FLAGPART_DEFINE_ERROR(NotSelfDual);
FLAGPART_DEFINE_ERROR(PermutationOutsideSubgroup);
FLAGPART_DEFINE_ERROR(OverdeterminedMismatch);
FLAGPART_DEFINE_ERROR(DuplicateAbscissa);
FLAGPART_DEFINE_ERROR(NonIntegerCoefficients);
FLAGPART_DEFINE_ERROR(MinCoeffMismatch);
FLAGPART_DEFINE_ERROR(PoleAtSpecialization);
FLAGPART_DEFINE_ERROR(SingularAtPoint);
FLAGPART_DEFINE_ERROR(FullSystemMismatch);
FLAGPART_DEFINE_ERROR(IncompleteTable);
FLAGPART_DEFINE_ERROR(NotInPaper);

#undef FLAGPART_DEFINE_ERROR

} // namespace flagpart

#endif
