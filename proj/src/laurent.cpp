#include "cyclewalk/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cyclewalk {

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    long lo = std::min(shift_, rhs.shift_);
    return LaurentPoly(body_.shifted_up(static_cast<unsigned>(shift_ - lo)) +
                           rhs.body_.shifted_up(static_cast<unsigned>(rhs.shift_ - lo)),
                       lo);
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = max_exponent(); e >= min_exponent(); --e) {
        Rational c = coeff(e);
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << cyclewalk::to_string(abs_c);
        } else {
            if (abs_c != 1) os << cyclewalk::to_string(abs_c) << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace cyclewalk
