#include "leavitt/rings.hpp"

#include <cctype>
#include <charconv>

#include "leavitt/errors.hpp"

namespace leavitt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

// x with a*x = 1 mod n, or nullopt.
std::optional<BigInt> mod_inverse(const BigInt& a, const BigInt& n) {
  BigInt r0 = n, r1 = mod_floor(a, n);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  return mod_floor(t0, n);
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected an integer");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("expected digits in '" + std::string(s) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer literal '" + std::string(s) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

Rational parse_scalar(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  BigInt den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

std::string atom_to_string(const RingAtom& a) {
  switch (a.kind) {
    case RingAtom::Kind::integers: return "Z";
    case RingAtom::Kind::rationals: return "Q";
    case RingAtom::Kind::modular: return "Z/" + std::to_string(a.modulus);
  }
  return "?";
}

}  // namespace

bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

Rational canonical_part(const RingAtom& atom, const Rational& x) {
  switch (atom.kind) {
    case RingAtom::Kind::rationals:
      return x;
    case RingAtom::Kind::integers:
      if (denominator(x) != 1)
        throw PreconditionError("value " + x.str() + " is not an integer");
      return x;
    case RingAtom::Kind::modular: {
      BigInt n = atom.modulus;
      BigInt num = mod_floor(numerator(x), n);
      BigInt den = denominator(x);
      if (den == 1) return Rational(num);
      auto inv = mod_inverse(den, n);
      if (!inv) throw PreconditionError("denominator " + den.str() + " is not invertible mod " + n.str());
      return Rational(mod_floor(num * *inv, n));
    }
  }
  return x;
}

std::optional<Rational> invert_part(const RingAtom& atom, const Rational& x) {
  switch (atom.kind) {
    case RingAtom::Kind::rationals:
      if (x == 0) return std::nullopt;
      return Rational(1) / x;
    case RingAtom::Kind::integers:
      if (x == 1 || x == -1) return x;
      return std::nullopt;
    case RingAtom::Kind::modular: {
      auto inv = mod_inverse(numerator(x), BigInt(atom.modulus));
      if (!inv) return std::nullopt;
      return Rational(*inv);
    }
  }
  return std::nullopt;
}

// --- RingDescriptor ---------------------------------------------------------

RingDescriptor::RingDescriptor() : RingDescriptor(std::vector<RingAtom>{RingAtom{}}) {}

RingDescriptor::RingDescriptor(std::vector<RingAtom> atoms)
    : atoms_(std::make_shared<const std::vector<RingAtom>>(std::move(atoms))) {}

RingDescriptor RingDescriptor::integers() { return RingDescriptor({RingAtom{RingAtom::Kind::integers, 0}}); }

RingDescriptor RingDescriptor::rationals() { return RingDescriptor({RingAtom{RingAtom::Kind::rationals, 0}}); }

RingDescriptor RingDescriptor::modular(std::uint64_t n) {
  if (n < 2)
    throw PreconditionError("modulus must be at least 2 (Z/" + std::to_string(n) +
                            " is the zero ring or undefined)");
  return RingDescriptor({RingAtom{RingAtom::Kind::modular, n}});
}

RingDescriptor RingDescriptor::product(const std::vector<RingDescriptor>& factors) {
  if (factors.empty()) throw PreconditionError("a product ring needs at least one factor");
  std::vector<RingAtom> atoms;
  for (const auto& f : factors) atoms.insert(atoms.end(), f.atoms().begin(), f.atoms().end());
  return RingDescriptor(std::move(atoms));
}

std::string RingDescriptor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (i) out += " x ";
    out += atom_to_string(atom(i));
  }
  return out;
}

RingValue RingDescriptor::zero() const { return RingValue(*this, std::vector<Rational>(arity(), Rational(0))); }

RingValue RingDescriptor::one() const { return from_integer(1); }

RingValue RingDescriptor::from_integer(const BigInt& n) const {
  std::vector<Rational> parts;
  parts.reserve(arity());
  for (const auto& a : atoms()) parts.push_back(canonical_part(a, Rational(n)));
  return RingValue(*this, std::move(parts));
}

RingValue RingDescriptor::parse_value(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty ring literal");
  std::vector<Rational> parts;
  try {
    if (s.front() == '(') {
      if (s.back() != ')') throw ParseError("unterminated tuple literal '" + std::string(s) + "'");
      std::string_view inner = s.substr(1, s.size() - 2);
      std::size_t start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        parts.push_back(parse_scalar(inner.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (parts.size() != arity())
        throw ParseError("tuple literal '" + std::string(s) + "' has " + std::to_string(parts.size()) +
                         " components, ring " + to_string() + " has " + std::to_string(arity()));
    } else {
      parts.assign(arity(), parse_scalar(s));
    }
    for (std::size_t i = 0; i < arity(); ++i) parts[i] = canonical_part(atom(i), parts[i]);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in literal '" + std::string(s) + "'");
  }
  return RingValue(*this, std::move(parts));
}

RingDescriptor parse_ring(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty ring descriptor");
  std::vector<RingDescriptor> factors;
  std::size_t start = 0;
  while (true) {
    auto sep = s.find(" x ", start);
    std::string_view tok = trim(s.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start));
    if (tok == "Z") {
      factors.push_back(RingDescriptor::integers());
    } else if (tok == "Q") {
      factors.push_back(RingDescriptor::rationals());
    } else if (tok.starts_with("Z/")) {
      std::string_view digits = tok.substr(2);
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("invalid modulus in ring atom '" + std::string(tok) + "'");
      if (n < 2) throw ParseError("modulus must be at least 2, got Z/" + std::string(digits));
      factors.push_back(RingDescriptor::modular(n));
    } else {
      throw ParseError("unknown ring atom '" + std::string(tok) + "' (expected Z, Q or Z/n)");
    }
    if (sep == std::string_view::npos) break;
    start = sep + 3;
  }
  return RingDescriptor::product(factors);
}

RingFlags ring_flags(const RingDescriptor& ring) {
  RingFlags out{true, true, true, true, true, true};
  for (const auto& a : ring.atoms()) {
    RingFlags f;
    switch (a.kind) {
      case RingAtom::Kind::integers:
        f = {true, true, false, false, false, false};
        break;
      case RingAtom::Kind::rationals:
        f = {true, true, true, true, true, true};
        break;
      case RingAtom::Kind::modular:
        f = {true, true, true, true, is_squarefree(a.modulus), false};
        break;
    }
    out.noetherian_left &= f.noetherian_left;
    out.noetherian_right &= f.noetherian_right;
    out.artinian_left &= f.artinian_left;
    out.artinian_right &= f.artinian_right;
    out.semisimple &= f.semisimple;
    out.all_nonzero_integers_invertible &= f.all_nonzero_integers_invertible;
  }
  return out;
}

// --- RingValue --------------------------------------------------------------

RingValue::RingValue(RingDescriptor ring, std::vector<Rational> parts) : ring_(std::move(ring)), parts_(std::move(parts)) {
  if (parts_.size() != ring_.arity()) throw PreconditionError("ring value has wrong number of components");
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] = canonical_part(ring_.atom(i), parts_[i]);
}

bool RingValue::is_zero() const {
  for (const auto& p : parts_)
    if (p != 0) return false;
  return true;
}

bool RingValue::is_one() const {
  for (const auto& p : parts_)
    if (p != 1) return false;
  return true;
}

std::optional<RingValue> RingValue::inverse() const {
  std::vector<Rational> inv;
  inv.reserve(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto p = invert_part(ring_.atom(i), parts_[i]);
    if (!p) return std::nullopt;
    inv.push_back(*p);
  }
  return RingValue(ring_, std::move(inv));
}

std::string RingValue::to_string() const {
  if (parts_.size() == 1) return parts_[0].str();
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i].str();
  }
  return out + ")";
}

namespace {

void require_same_ring(const RingValue& a, const RingValue& b) {
  if (!(a.ring() == b.ring()))
    throw PreconditionError("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

RingValue RingValue::operator-() const {
  std::vector<Rational> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = -parts_[i];
  return RingValue(ring_, std::move(out));
}

RingValue operator+(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  std::vector<Rational> out(a.parts_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.parts_[i] + b.parts_[i];
  return RingValue(a.ring_, std::move(out));
}

RingValue operator-(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  std::vector<Rational> out(a.parts_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.parts_[i] - b.parts_[i];
  return RingValue(a.ring_, std::move(out));
}

RingValue operator*(const RingValue& a, const RingValue& b) {
  require_same_ring(a, b);
  std::vector<Rational> out(a.parts_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.parts_[i] * b.parts_[i];
  return RingValue(a.ring_, std::move(out));
}

}  // namespace leavitt
