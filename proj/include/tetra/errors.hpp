#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid or band limit insufficient for an exact (de-aliased) operation.
struct ResolutionError : Error {
    using Error::Error;
};

/// Fredholm solvability violated: right-hand side has a component in the
/// kernel of the operator being inverted (or a nonzero mean where the
/// inverse Laplacian is applied).
struct FredholmError : Error {
    using Error::Error;
};

/// The input lies (entirely) in the kernel of the operator.
struct KernelError : Error {
    using Error::Error;
};

/// Transversality failure: gamma'(lambda*) = 0.
struct DegenerateBifurcationError : Error {
    using Error::Error;
};

/// Hessian prefactor lost sign-definiteness (|dF/dpsi| dropped below the guard).
struct SingularHessianError : Error {
    using Error::Error;
};

/// Eigenvector tracking could not identify the critical mode unambiguously.
struct TrackingError : Error {
    using Error::Error;
};

/// An internal cross-check failed (two routes to the same quantity disagree).
struct ConsistencyError : Error {
    using Error::Error;
};

} // namespace tetra
