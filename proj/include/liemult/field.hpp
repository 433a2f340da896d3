#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liemult {

/// Error codes shared by the whole library; the CLI maps them to exit codes.
enum class Errc {
  AmbientMismatch,
  FieldMismatch,
  LengthMismatch,
  NotAnIdeal,
  NotAbelian,
  NotNilpotent,
  KernelNotCentral,
  ModeUnsupported,
  SubspaceNotContained,
  UnknownKey,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Exact rational arithmetic. Elements are arbitrary-precision, always
/// reduced, with positive denominator (GMP canonical form).
class Rationals {
public:
  using Elt = mpq_class;
  static constexpr bool is_finite = false;

  Elt zero() const { return Elt(0); }
  Elt one() const { return Elt(1); }
  Elt from_int(long v) const { return Elt(v); }

  Elt add(const Elt& a, const Elt& b) const { return a + b; }
  Elt sub(const Elt& a, const Elt& b) const { return a - b; }
  Elt mul(const Elt& a, const Elt& b) const { return a * b; }
  Elt neg(const Elt& a) const { return -a; }
  Elt div(const Elt& a, const Elt& b) const {
    if (b == 0) throw Error(Errc::Internal, "rational division by zero");
    return a / b;
  }
  Elt inv(const Elt& a) const { return div(one(), a); }

  bool is_zero(const Elt& a) const { return a == 0; }
  bool eq(const Elt& a, const Elt& b) const { return a == b; }

  /// Parses "a" or "a/b"; result is canonicalized. Rejects zero denominators.
  Elt from_string(const std::string& s) const {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw Error(Errc::BadInput, "not a rational: '" + s + "'");
    if (q.get_den() == 0)
      throw Error(Errc::BadInput, "zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
  }
  std::string to_string(const Elt& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const { return true; }
  bool operator!=(const Rationals&) const { return false; }
};

/// The prime field F_p with runtime modulus. Elements are residues in [0, p).
/// The modulus lives in the field object, not in the elements, so matrices
/// and algebras carry their field with them.
class PrimeField {
public:
  using Elt = std::int64_t;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p))
      throw Error(Errc::BadInput, "modulus " + std::to_string(p) + " is not prime");
  }

  std::int64_t p() const { return p_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1 % p_; }
  Elt from_int(long v) const {
    Elt r = static_cast<Elt>(v % p_);
    return r < 0 ? r + p_ : r;
  }

  Elt add(Elt a, Elt b) const {
    Elt r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Elt sub(Elt a, Elt b) const {
    Elt r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Elt mul(Elt a, Elt b) const { return (a * b) % p_; }
  Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
  Elt inv(Elt a) const {
    if (a == 0) throw Error(Errc::Internal, "inverse of zero in F_p");
    // extended Euclid
    Elt t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      Elt q = r / nr;
      Elt tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  bool is_zero(Elt a) const { return a == 0; }
  bool eq(Elt a, Elt b) const { return a == b; }

  /// Accepts integer residues and fractions "a/b" with b invertible mod p.
  Elt from_string(const std::string& s) const {
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
      std::size_t pos = 0;
      long long v;
      try {
        v = std::stoll(part, &pos);
      } catch (const std::exception&) {
        throw Error(Errc::BadInput, "not a residue: '" + s + "'");
      }
      if (pos != part.size()) throw Error(Errc::BadInput, "not a residue: '" + s + "'");
      return from_int(static_cast<long>(v));
    };
    if (slash == std::string::npos) return parse_int(s);
    Elt num = parse_int(s.substr(0, slash));
    Elt den = parse_int(s.substr(slash + 1));
    if (den == 0)
      throw Error(Errc::BadInput, "denominator of '" + s + "' vanishes mod " + std::to_string(p_));
    return div(num, den);
  }
  std::string to_string(Elt a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  std::int64_t p_;
};

/// Runtime description of a ground field, used at I/O and CLI boundaries.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p) { return {Kind::PrimeField, p}; }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }

  std::string to_string() const {
    return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
  }
};

inline FieldSpec spec_of(const Rationals&) { return FieldSpec::rationals(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.p()); }

/// Calls fn with the concrete field object named by the spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(Rationals{});
  return fn(PrimeField{spec.p});
}

}  // namespace liemult
