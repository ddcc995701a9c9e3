#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace duffing {

// Base of all typed errors. `name()` is the stable machine-readable
// identifier surfaced by the CLI exit path and the JSON reports.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define DUFFING_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

// spectral_core
DUFFING_DEFINE_ERROR(NonIncreasingSpectrum);
DUFFING_DEFINE_ERROR(NonPositiveEigenvalue);
DUFFING_DEFINE_ERROR(TooFewModes);
DUFFING_DEFINE_ERROR(LambdaOutOfGap);
DUFFING_DEFINE_ERROR(DimensionMismatch);

// dynamics
DUFFING_DEFINE_ERROR(StepTooLargeForStiffness);
DUFFING_DEFINE_ERROR(NonFiniteState);
DUFFING_DEFINE_ERROR(SampledOutOfRange);

// energy_ledger
DUFFING_DEFINE_ERROR(NonUniformGrid);
DUFFING_DEFINE_ERROR(WellAssumptionViolated);

// asymptotics
DUFFING_DEFINE_ERROR(EmptySeries);
DUFFING_DEFINE_ERROR(InfeasibleBeta);
DUFFING_DEFINE_ERROR(HorizonTooShort);
DUFFING_DEFINE_ERROR(GridMismatch);
DUFFING_DEFINE_ERROR(UnboundedSolution);
DUFFING_DEFINE_ERROR(NonCoerciveB);

// special_solutions
DUFFING_DEFINE_ERROR(NonContraction);
DUFFING_DEFINE_ERROR(MaxIterExceeded);
DUFFING_DEFINE_ERROR(ZeroStiffnessMode);
DUFFING_DEFINE_ERROR(NonNegativeMu);
DUFFING_DEFINE_ERROR(WindowTooShort);

// basin_explorer
DUFFING_DEFINE_ERROR(EndpointsSameBasin);
DUFFING_DEFINE_ERROR(UncertifiedBasePoint);

// cli
DUFFING_DEFINE_ERROR(ConfigParseError);

#undef DUFFING_DEFINE_ERROR

}  // namespace duffing
