// Shared scalar types, unit conversions and the error type used across the
// simulator library.
#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tsp {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Thrown on contract violations (bad parameters, impossible layouts, ...).
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace tsp
