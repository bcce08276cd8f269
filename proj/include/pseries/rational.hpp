#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace pseries {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
// Exact rational coordinate vector: weights, e-parameters, projections.
using Weight = std::vector<Rat>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string int_str(const Int& v) { return v.str(); }

// Canonical "p/q" rendering; integers render without the "/1".
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "a" or "a/b" with optional sign; exact, never a float.
inline Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require(!s.empty(), "malformed rational: empty string");
  auto digits_ok = [](const std::string& t, size_t from) {
    if (from >= t.size()) return false;
    for (size_t i = from; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto check_part = [&](std::string& t) {
    size_t from = (t.size() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
    require(digits_ok(t, from), "malformed rational: '" + text + "'");
    if (t[0] == '+') t.erase(0, 1);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    check_part(s);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_part(num);
  check_part(den);
  Int d(den);
  require(d != 0, "malformed rational: zero denominator in '" + text + "'");
  return Rat(Int(num), d);
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline IVec ivec_neg(const IVec& a) {
  IVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline IVec ivec_scale(const Int& c, const IVec& a) {
  IVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool ivec_is_zero(const IVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Int ivec_dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Weight to_weight(const IVec& a) {
  Weight w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = Rat(a[i]);
  return w;
}

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Weight weight_scale(const Rat& c, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool weight_is_zero(const Weight& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Rat weight_dot(const Weight& a, const Weight& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat weight_dot(const Weight& a, const IVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

inline std::string weight_str(const Weight& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

}  // namespace pseries
