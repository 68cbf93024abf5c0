#include "zaremba/error.hpp"

#include <sstream>

namespace zaremba {

namespace {

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

NonpositiveTime::NonpositiveTime(double t)
    : DomainError("time must be positive, got t=" + format_double(t))
{
}

InvalidBracket::InvalidBracket(double lo, double hi, double f_lo, double f_hi)
    : DomainError("root bracket [" + format_double(lo) + ", " + format_double(hi) +
                  "] does not change sign: f(lo)=" + format_double(f_lo) +
                  ", f(hi)=" + format_double(f_hi))
{
}

NonConvergence::NonConvergence(double estimate, double error_bound)
    : Error("adaptive quadrature did not converge: estimate=" + format_double(estimate) +
            ", error bound=" + format_double(error_bound)),
      estimate_(estimate),
      error_bound_(error_bound)
{
}

} // namespace zaremba
