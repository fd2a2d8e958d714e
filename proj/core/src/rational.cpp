#include "georeduce/rational.hpp"

#include <cmath>

#include "georeduce/errors.hpp"

namespace georeduce {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateInput: return "degenerate-input";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kTeethOverlap: return "teeth-overlap";
    case ErrorCode::kTangencyUnresolved: return "tangency-unresolved";
    case ErrorCode::kThresholdCoincidence: return "threshold-coincidence";
    case ErrorCode::kNonpositiveParameter: return "nonpositive-parameter";
    case ErrorCode::kInfeasibleWitness: return "infeasible-witness";
    case ErrorCode::kDegreeViolation: return "degree-violation";
    case ErrorCode::kUncoverableElement: return "uncoverable-element";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kMembershipMismatch: return "membership-mismatch";
    case ErrorCode::kConditionViolation: return "condition-violation";
    case ErrorCode::kPerturbationExhausted: return "perturbation-exhausted";
    case ErrorCode::kAdjacencyMismatch: return "adjacency-mismatch";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kParseError: return "parse-error";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  // No leading zeros except the literal "0".
  const std::size_t first = (s[0] == '-') ? 1 : 0;
  if (s.size() - first > 1 && s[first] == '0') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_integer_text(num_text, /*allow_sign=*/true) || num_text == "-0") {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text, /*allow_sign=*/false)) {
      throw Error(ErrorCode::kParseError,
                  "malformed denominator in '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(den_text), 10);
    if (den == 0) {
      throw Error(ErrorCode::kParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    if (den == 1) {
      throw Error(ErrorCode::kParseError,
                  "integer written as a fraction: '" + std::string(text) + "'");
    }
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1)) {
    throw Error(ErrorCode::kParseError,
                "non-reduced rational '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  return Rational(std::move(q));
}

Rational Rational::round_to_denominator(double value, long den) {
  const double scaled = std::round(value * static_cast<double>(den));
  mpz_class k;
  mpz_set_d(k.get_mpz_t(), scaled);
  mpq_class q(k, mpz_class(den));
  return Rational(std::move(q));
}

Rational pow(const Rational& r, unsigned e) {
  Rational out(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

}  // namespace georeduce
