#ifndef WRZETA_ERRORS_HPP
#define WRZETA_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrzeta {

// All library errors derive from Error and carry a stable machine-readable
// code, surfaced verbatim by the CLI's structured error reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

#define WRZETA_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string &msg) : Error(#Name, msg) {}              \
  }

WRZETA_DEFINE_ERROR(OrderExceedsBound);
WRZETA_DEFINE_ERROR(DegreeMismatch);
WRZETA_DEFINE_ERROR(NotFaithful);
WRZETA_DEFINE_ERROR(NotTransitive);
WRZETA_DEFINE_ERROR(NotPerfect);
WRZETA_DEFINE_ERROR(UnknownPartition);
WRZETA_DEFINE_ERROR(MultiplicityOverflow);
WRZETA_DEFINE_ERROR(NumericalDegreeExtraction);
WRZETA_DEFINE_ERROR(NonIntegralCoefficient);
WRZETA_DEFINE_ERROR(IllConditioned);
WRZETA_DEFINE_ERROR(BadBracket);
WRZETA_DEFINE_ERROR(MultiplicityDetectionFailed);
WRZETA_DEFINE_ERROR(InternalStabilizationFailure);
WRZETA_DEFINE_ERROR(BadInput);

#undef WRZETA_DEFINE_ERROR

// Thrown by trajectory continuation when two candidate roots are equally
// close to the previous point; carries whatever prefix was already traced.
class RootTrackingAmbiguity : public Error {
public:
  RootTrackingAmbiguity(const std::string &msg,
                        std::vector<std::pair<int, std::complex<double>>> got)
      : Error("RootTrackingAmbiguity", msg), partial_(std::move(got)) {}
  const std::vector<std::pair<int, std::complex<double>>> &partial() const {
    return partial_;
  }

private:
  std::vector<std::pair<int, std::complex<double>>> partial_;
};

} // namespace wrzeta

#endif
