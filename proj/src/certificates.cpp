#include "ecc/certificates.hpp"

#include <stdexcept>

#include "ecc/ecc_lp.hpp"

namespace ecc::cert {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string AuxLpCase::id() const {
  if (family == Family::A) return "A q=" + std::to_string(q);
  return "B p=" + std::to_string(p) + " q=" + std::to_string(q);
}

namespace {

Rational r(long n, long d = 1) { return Rational(n) / Rational(d); }

// Row with the given coefficients on (omega_1..omega_m, chi); omega index is
// 1-based, chi is index 0 in `coefs`.
struct Builder {
  std::size_t omegas;
  AuxLpCase& lp;

  std::size_t chi() const { return omegas; }
  std::size_t omega(int j) const { return static_cast<std::size_t>(j - 1); }

  std::vector<Rational>& row(Rational rhs) {
    lp.matrix.emplace_back(omegas + 1, Rational(0));
    lp.rhs.push_back(rhs);
    return lp.matrix.back();
  }

  void monotone(int count) {
    for (int i = 1; i <= count; ++i) {
      auto& a = row(0);
      a[omega(i)] = 1;
      a[omega(i + 1)] = -1;
    }
  }

  void init(int m) {
    lp.variables.clear();
    for (int j = 1; j <= m; ++j) lp.variables.push_back("w" + std::to_string(j));
    lp.variables.push_back("chi");
    lp.objective.assign(omegas + 1, Rational(0));
  }
};

}  // namespace

AuxLpCase build_lp_a(int q) {
  if (q < 1 || q > 6) throw std::invalid_argument("family A needs 1 <= q <= 6");
  AuxLpCase lp;
  lp.family = Family::A;
  lp.q = q;
  Builder b{6, lp};
  b.init(6);
  lp.objective[b.chi()] = r(7 * q, 8 * (q + 1));
  for (int j = 1; j <= q; ++j) lp.objective[b.omega(j)] = -r(1, j * (j + 1));
  lp.constant = 0;

  b.monotone(5);  // A1-A5
  {
    auto& a = b.row(1);  // A6
    a[b.chi()] = 1;
    a[b.omega(1)] = -1;
  }
  {
    auto& a = b.row(1);  // A7
    a[b.chi()] = 2;
    a[b.omega(2)] = -1;
    a[b.omega(3)] = -1;
  }
  {
    auto& a = b.row(1);  // A8
    a[b.chi()] = 3;
    a[b.omega(5)] = -3;
  }
  b.row(-2)[b.chi()] = -1;  // A9
  {
    auto& a = b.row(0);  // A10
    a[b.omega(q)] = 1;
    a[b.chi()] = -r(7, 8);
  }
  return lp;
}

AuxLpCase build_lp_b(int p, int q) {
  if (p < 1 || p > 5 || q < p || q > 10)
    throw std::invalid_argument("family B needs 1 <= p <= 5 and p <= q <= 10");
  AuxLpCase lp;
  lp.family = Family::B;
  lp.p = p;
  lp.q = q;
  Builder b{10, lp};
  b.init(10);
  lp.objective[b.chi()] = r(q, q + 1) * r(7, 8) - r(1, 2);
  for (int j = p; j <= q; ++j) lp.objective[b.omega(j)] = -r(1, j * (j + 1));
  lp.constant = r(1, p);

  b.monotone(9);  // B1-B9
  {
    auto& a = b.row(1);  // B10
    a[b.chi()] = 1;
    a[b.omega(1)] = -1;
  }
  {
    auto& a = b.row(1);  // B11
    a[b.chi()] = 2;
    a[b.omega(2)] = -1;
    a[b.omega(3)] = -1;
  }
  {
    auto& a = b.row(1);  // B12
    a[b.chi()] = 3;
    a[b.omega(3)] = -1;
    a[b.omega(4)] = -1;
    a[b.omega(5)] = -1;
  }
  {
    auto& a = b.row(1);  // B13
    a[b.chi()] = 4;
    a[b.omega(7)] = -4;
  }
  {
    auto& a = b.row(1);  // B14; omega_0 is the constant 0, leaving 0 <= 1
    if (p > 1) a[b.omega(p - 1)] = 1;
  }
  b.row(-1)[b.omega(p)] = -1;  // B15
  {
    auto& a = b.row(0);  // B16
    a[b.omega(q)] = 1;
    a[b.chi()] = -r(7, 8);
  }
  return lp;
}

Verification verify_certificate(const AuxLpCase& lp, const DualCertificate& cert) {
  if (cert.family != lp.family || cert.q != lp.q || (lp.family == Family::B && cert.p != lp.p))
    throw std::invalid_argument("certificate does not belong to case " + lp.id());
  if (cert.duals.size() != lp.matrix.size())
    throw std::invalid_argument("certificate has " + std::to_string(cert.duals.size()) +
                                " multipliers, case " + lp.id() + " has " +
                                std::to_string(lp.matrix.size()) + " rows");
  Verification out;
  for (std::size_t i = 0; i < cert.duals.size(); ++i)
    if (cert.duals[i] < 0)
      out.failures.push_back("multiplier " + std::to_string(i + 1) + " is negative");
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    Rational sum = 0;
    for (std::size_t i = 0; i < lp.matrix.size(); ++i) sum += lp.matrix[i][j] * cert.duals[i];
    if (sum != lp.objective[j])
      out.failures.push_back("column " + lp.variables[j] + ": A^T y = " + to_string(sum) +
                             " but c = " + to_string(lp.objective[j]));
  }
  out.bound = lp.constant;
  for (std::size_t i = 0; i < lp.rhs.size(); ++i) out.bound += lp.rhs[i] * cert.duals[i];
  if (out.bound > Rational(1, 2))
    out.failures.push_back("bound " + to_string(out.bound) + " exceeds 1/2");
  if (out.bound != cert.claimed)
    out.failures.push_back("bound " + to_string(out.bound) + " differs from claimed " +
                           to_string(cert.claimed));
  out.ok = out.failures.empty();
  return out;
}

std::uint64_t certificate_checksum(const std::vector<DualCertificate>& certs) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char ch : s) {
      hash ^= ch;
      hash *= 0x100000001b3ULL;
    }
  };
  for (const auto& c : certs) {
    feed(c.family == Family::A ? "A" : "B");
    feed("," + std::to_string(c.p) + "," + std::to_string(c.q) + ":");
    for (const auto& y : c.duals) feed(to_string(y) + ";");
    feed("=" + to_string(c.claimed) + "\n");
  }
  return hash;
}

std::size_t VerifyReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.ok;
  return n;
}

VerifyReport verify_all(const std::vector<DualCertificate>& certs) {
  VerifyReport report;
  report.checksum_ok = certificate_checksum(certs) == kEmbeddedChecksum;
  report.max_bound = 0;
  for (const auto& cert : certs) {
    const auto lp = cert.family == Family::A ? build_lp_a(cert.q) : build_lp_b(cert.p, cert.q);
    auto v = verify_certificate(lp, cert);
    report.cases.push_back({lp.id(), v.bound, v.ok, std::move(v.failures)});
    if (v.bound > report.max_bound) report.max_bound = v.bound;
    if (!v.ok) {
      report.failed_case = lp.id();
      break;
    }
  }
  return report;
}

lp::LinearProgram to_linear_program(const AuxLpCase& aux, double box) {
  lp::LinearProgram program(lp::Sense::maximize);
  for (std::size_t j = 0; j < aux.variables.size(); ++j)
    program.add_variable(aux.variables[j], 0.0, box, aux.objective[j].convert_to<double>());
  program.set_constant(aux.constant.convert_to<double>());
  for (std::size_t i = 0; i < aux.matrix.size(); ++i) {
    std::vector<lp::Term> terms;
    for (std::size_t j = 0; j < aux.matrix[i].size(); ++j)
      if (aux.matrix[i][j] != 0) terms.push_back({j, aux.matrix[i][j].convert_to<double>()});
    program.add_constraint(std::move(terms), lp::Relation::less_equal,
                           aux.rhs[i].convert_to<double>(), "r" + std::to_string(i + 1));
  }
  return program;
}

double solve_aux_numeric(const AuxLpCase& aux, double box) {
  return solve_value(to_linear_program(aux, box));
}

}  // namespace ecc::cert
