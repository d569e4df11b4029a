#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace modnet {

using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// accepts "a", "a/b", "-a/b"; result is reduced
inline Scalar parse_scalar(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Scalar q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Scalar& q) {
    Scalar c = q;
    c.canonicalize();
    std::string s = c.get_num().get_str();
    if (c.get_den() != 1) s += "/" + c.get_den().get_str();
    return s;
}

inline double to_double(const Scalar& q) { return q.get_d(); }

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace modnet
