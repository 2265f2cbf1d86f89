#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecc/linear_program.hpp"

namespace ecc::cert {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);

enum class Family { A, B };

/// Auxiliary LP  max constant + c^T v  s.t.  M v <= rhs, with v = (omega_1..omega_m, chi).
struct AuxLpCase {
  Family family = Family::A;
  int p = 0;  // family B only
  int q = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  Rational constant;

  /// "A q=3" or "B p=2 q=4".
  std::string id() const;
};

/// Family A: 1 <= q <= 6; 10 rows over (omega_1..omega_6, chi).
AuxLpCase build_lp_a(int q);
/// Family B: 1 <= p <= 5, p <= q <= 10; 16 rows over (omega_1..omega_10, chi).
AuxLpCase build_lp_b(int p, int q);

struct DualCertificate {
  Family family = Family::A;
  int p = 0;
  int q = 0;
  /// One nonnegative multiplier per constraint row.
  std::vector<Rational> duals;
  Rational claimed;
};

struct Verification {
  Rational bound;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Exact weak-duality check: y >= 0, M^T y = c, bound = constant + rhs^T y;
/// ok iff those hold, bound <= 1/2, and bound equals the claimed value.
/// Throws std::invalid_argument on a dimension or case mismatch.
Verification verify_certificate(const AuxLpCase& lp, const DualCertificate& cert);

/// The 6 family-A and 40 family-B certificates compiled into the library.
const std::vector<DualCertificate>& embedded_certificates();

/// FNV-1a over a canonical serialization of the certificates.
std::uint64_t certificate_checksum(const std::vector<DualCertificate>& certs);
/// Checksum of the embedded tables at the time they were transcribed.
inline constexpr std::uint64_t kEmbeddedChecksum = 15627494089695488198ULL;

struct CaseReport {
  std::string id;
  Rational bound;
  bool ok = false;
  std::vector<std::string> failures;
};

struct VerifyReport {
  std::vector<CaseReport> cases;
  Rational max_bound;
  bool checksum_ok = false;
  /// Id of the first failing case; verification stops there.
  std::optional<std::string> failed_case;
  bool ok() const { return checksum_ok && !failed_case; }
  std::size_t passed() const;
};

/// Verifies every certificate in order, stopping at the first failure.
VerifyReport verify_all(const std::vector<DualCertificate>& certs = embedded_certificates());

/// Floating-point model of the case with every variable boxed to [0, box].
lp::LinearProgram to_linear_program(const AuxLpCase& lp, double box = 16.0);

/// Primal optimum with the reference simplex; throws std::runtime_error if
/// the solver does not report optimality.
double solve_aux_numeric(const AuxLpCase& lp, double box = 16.0);

}  // namespace ecc::cert
