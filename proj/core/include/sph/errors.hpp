#ifndef SPH_ERRORS_HPP
#define SPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sph {

struct SphError : std::runtime_error {
    explicit SphError(const std::string& what) : std::runtime_error(what) {}
};

#define SPH_DEFINE_ERROR(Name)                                            \
    struct Name : SphError {                                              \
        explicit Name(const std::string& what) : SphError(#Name ": " + what) {} \
    }

SPH_DEFINE_ERROR(BadPrime);
SPH_DEFINE_ERROR(AmbientMismatch);
SPH_DEFINE_ERROR(NotSymmetric);
SPH_DEFINE_ERROR(NotClosed);
SPH_DEFINE_ERROR(ThetaNotInvolutive);
SPH_DEFINE_ERROR(NotAbelian);
SPH_DEFINE_ERROR(IrrationalSpectrum);
SPH_DEFINE_ERROR(BadParams);
SPH_DEFINE_ERROR(FormIncompatible);
SPH_DEFINE_ERROR(SignatureMismatch);
SPH_DEFINE_ERROR(BadTarget);
SPH_DEFINE_ERROR(UnsupportedSignature);
SPH_DEFINE_ERROR(CentralizerTooSmall);
SPH_DEFINE_ERROR(NotNilpotent);
SPH_DEFINE_ERROR(LeavesAmbient);
SPH_DEFINE_ERROR(NotThetaStable);
SPH_DEFINE_ERROR(GenericityFailure);
SPH_DEFINE_ERROR(NotSymmetricPair);
SPH_DEFINE_ERROR(OutOfRange);
SPH_DEFINE_ERROR(ParseError);
SPH_DEFINE_ERROR(UnknownFamily);
SPH_DEFINE_ERROR(ArityError);

#undef SPH_DEFINE_ERROR

} // namespace sph

#endif
