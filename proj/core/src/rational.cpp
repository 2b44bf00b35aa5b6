#include "tropmle/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "tropmle/errors.hpp"

namespace tropmle {

Rat::Rat(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw SingularMatrixError("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw SingularMatrixError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (sgn(den) == 0) throw ParseError("zero denominator in \"" + text + "\"");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational \"" + text + "\"");
    }
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace tropmle
