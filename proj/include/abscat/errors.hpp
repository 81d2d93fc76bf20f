#pragma once

#include <stdexcept>
#include <string>

namespace abscat
{
//! Invalid argument or evaluation outside the supported domain.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! A numerical routine could not reach its requested accuracy.
class AccuracyError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! A summation hit its term cap or an extrapolation failed to settle.
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};
}  // namespace abscat
