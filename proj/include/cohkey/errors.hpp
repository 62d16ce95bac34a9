#pragma once

#include <stdexcept>

namespace cohkey {

// Base class for every library failure.  Each subclass names the violated
// precondition or invariant; messages carry the offending values.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error { public: using Error::Error; };
class TraceNotOne : public Error { public: using Error::Error; };
class NotPositive : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };
class NotUnitary : public Error { public: using Error::Error; };
class InvalidDistribution : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class InconsistentErrorRates : public Error { public: using Error::Error; };
class Infeasible : public Error { public: using Error::Error; };
class BadIndex : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class VanishingNorm : public Error { public: using Error::Error; };
class EmptyData : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

// Sweep abscissa falls outside the band where the optimized protocols admit a
// positive-semidefinite witness.
class InfeasibleAlpha : public Infeasible { public: using Infeasible::Infeasible; };

}  // namespace cohkey
