#include "bcl/field.hpp"

#include <limits>
#include <vector>

namespace bcl {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::duplicate_vertex_in_face: return "duplicate-vertex-in-face";
    case errc::ghost_vertex: return "ghost-vertex";
    case errc::face_not_in_complex: return "face-not-in-complex";
    case errc::not_balanced: return "not-balanced";
    case errc::coloring_improper: return "coloring-improper";
    case errc::not_facets: return "not-facets";
    case errc::label_collision: return "label-collision";
    case errc::color_mismatch: return "color-mismatch";
    case errc::not_admissible: return "not-admissible";
    case errc::lsop_not_found: return "lsop-not-found";
    case errc::budget_exhausted: return "budget-exhausted";
    case errc::unknown_name: return "unknown-name";
    case errc::not_a_manifold: return "not-a-manifold";
  }
  return "error";
}

namespace {

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u32(p) || p >= (1u << 31))
    fail(errc::invalid_input, "field modulus must be a prime < 2^31, got " + std::to_string(p));
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  std::string digits;
  if (s.rfind("Fp:", 0) == 0)
    digits = s.substr(3);
  else if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
    digits = s.substr(1);
  else
    fail(errc::invalid_input, "unrecognized field '" + s + "' (expected Q, F<p> or Fp:<p>)");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::invalid_input, "bad field modulus in '" + s + "'");
  unsigned long v = std::stoul(digits);
  return prime(static_cast<std::uint32_t>(v));
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rationals) return "Q";
  return "F" + std::to_string(p);
}

Fp::Elem Fp::inv(Elem a) const {
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p_), newr = static_cast<long long>(a % p_);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(errc::invalid_input, "not invertible mod p");
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<Elem>(t);
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt binomial_product(const std::vector<int>& c, const std::vector<int>& b) {
  BigInt r = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (b[i] > c[i]) return 0;
    r *= binomial(c[i], b[i]);
  }
  return r;
}

long long to_longlong(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<long long>::max()) ||
      v < BigInt(std::numeric_limits<long long>::min()))
    fail(errc::invalid_input, "integer out of 64-bit range");
  return static_cast<long long>(v);
}

}  // namespace bcl
