#pragma once
// Exact scalars: arbitrary-precision rationals and real quadratic extensions
// Q(sqrt(d)), with an explicit field tag so values from distinct extensions
// cannot be mixed silently.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mwtrisect {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class errc {
  division_by_zero,
  field_mismatch,
  invalid_field,
  both_zero,
  zero_polynomial,
  both_constant_in_x,
  inexact_division,
  not_polynomial,
  not_on_curve,
  singular_curve,
  non_squarefree_f,
  non_monic_f,
  multiplicity_unsupported,
  repeated_x,
  invalid_mumford,
  unexpected_quotient_degree,
  zero_b0,
  point_at_infinity,
  shape_mismatch,
  basis_mismatch,
  r_out_of_range,
  non_integral_intersection,
  common_component,
  center_on_both_curves,
  non_squarefree_modulus,
  zero_curve,
  unknown_scenario,
  syntax_error,
  unknown_symbol,
  expected_scalar,
  invalid_config,
  usage,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::invalid_field: return "InvalidField";
    case errc::both_zero: return "BothZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::both_constant_in_x: return "BothConstantInX";
    case errc::inexact_division: return "InexactDivision";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::not_on_curve: return "NotOnCurve";
    case errc::singular_curve: return "SingularCurve";
    case errc::non_squarefree_f: return "NonSquarefreeF";
    case errc::non_monic_f: return "NonMonicF";
    case errc::multiplicity_unsupported: return "MultiplicityUnsupported";
    case errc::repeated_x: return "RepeatedX";
    case errc::invalid_mumford: return "InvalidMumford";
    case errc::unexpected_quotient_degree: return "UnexpectedQuotientDegree";
    case errc::zero_b0: return "ZeroB0";
    case errc::point_at_infinity: return "PointAtInfinity";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::basis_mismatch: return "BasisMismatch";
    case errc::r_out_of_range: return "ROutOfRange";
    case errc::non_integral_intersection: return "NonIntegralIntersection";
    case errc::common_component: return "CommonComponent";
    case errc::center_on_both_curves: return "CenterOnBothCurves";
    case errc::non_squarefree_modulus: return "NonSquarefreeModulus";
    case errc::zero_curve: return "ZeroCurve";
    case errc::unknown_scenario: return "UnknownScenario";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::expected_scalar: return "ExpectedScalar";
    case errc::invalid_config: return "InvalidConfig";
    case errc::usage: return "Usage";
  }
  return "Unknown";
}

struct Error : std::runtime_error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  errc code;
  std::size_t offset;  // byte offset for syntax_error / unknown_symbol

  Error(errc c, const std::string& msg, std::size_t off = npos)
      : std::runtime_error(msg), code(c), offset(off) {}
};

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline bool rat_is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

// Element of Q (d == 0) or Q(sqrt(d)), d squarefree, d not in {0, 1}.
// Canonical form: b == 0 forces d == 0, so equality is structural.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long long n) : a_(n) {}
  QuadScalar(const Int& n) : a_(n) {}
  QuadScalar(const Rat& a) : a_(a) {}
  QuadScalar(const Rat& a, const Rat& b, long long d) : a_(a), b_(b), d_(d) {
    if (b_ != 0) {
      require_valid_radicand(d_);
    }
    canonicalize();
  }

  // sqrt(n) for n >= 0, with square part extracted: sqrt(8) = 2*sqrt(2).
  static QuadScalar sqrt_of(long long n) {
    if (n < 0) throw Error(errc::invalid_field, "negative radicand in sqrt");
    if (n == 0) return QuadScalar();
    long long k = 1, m = n;
    for (long long p = 2; p * p <= m; ++p) {
      while (m % (p * p) == 0) {
        m /= p * p;
        k *= p;
      }
    }
    if (m == 1) return QuadScalar(k);
    return QuadScalar(Rat(0), Rat(k), m);
  }

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  long long radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return d_ == 0; }

  QuadScalar conj() const { return b_ == 0 ? *this : QuadScalar(a_, -b_, d_); }
  // N(s) = s * conj(s) = a^2 - d b^2, a rational.
  Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

  friend QuadScalar operator-(const QuadScalar& x) {
    QuadScalar r;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    r.d_ = x.d_;
    return r;
  }
  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    long long d = joined(x, y);
    QuadScalar r;
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    r.d_ = d;
    r.canonicalize();
    return r;
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) { return x + (-y); }
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    long long d = joined(x, y);
    QuadScalar r;
    r.a_ = x.a_ * y.a_ + Rat(d) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    r.d_ = d;
    r.canonicalize();
    return r;
  }
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
    if (y.is_zero()) throw Error(errc::division_by_zero, "scalar division by zero");
    long long d = joined(x, y);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - d b^2); d squarefree keeps the norm nonzero.
    Rat n = y.norm();
    QuadScalar yc = y.conj();
    QuadScalar r = x * yc;
    r.a_ /= n;
    r.b_ /= n;
    r.d_ = r.b_ == 0 ? 0 : d;
    return r;
  }
  QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
  QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
  QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
  QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const QuadScalar& s) {
    if (s.b_ == 0) return os << s.a_;
    return os << "(" << s.a_ << " + " << s.b_ << "*sqrt(" << s.d_ << "))";
  }

 private:
  Rat a_{};
  Rat b_{};
  long long d_ = 0;

  void canonicalize() {
    if (b_ == 0) d_ = 0;
  }

  static void require_valid_radicand(long long d) {
    if (d == 0 || d == 1) throw Error(errc::invalid_field, "radicand must not be 0 or 1");
    long long m = d < 0 ? -d : d;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) throw Error(errc::invalid_field, "radicand is not squarefree");
    }
  }

  // Common field of two values: plain Q embeds into any Q(sqrt(d)); two
  // distinct explicit radicands never mix.
  static long long joined(const QuadScalar& x, const QuadScalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw Error(errc::field_mismatch, "cannot combine sqrt(" + std::to_string(x.d_) +
                                          ") with sqrt(" + std::to_string(y.d_) + ")");
  }
};

inline QuadScalar quad_conjugate(const QuadScalar& s) { return s.conj(); }

enum class ScalarOp { add, sub, mul, div };

inline QuadScalar scalar_arith(ScalarOp op, const QuadScalar& x, const QuadScalar& y) {
  switch (op) {
    case ScalarOp::add: return x + y;
    case ScalarOp::sub: return x - y;
    case ScalarOp::mul: return x * y;
    case ScalarOp::div: return x / y;
  }
  throw Error(errc::usage, "unknown scalar operation");
}

}  // namespace mwtrisect
