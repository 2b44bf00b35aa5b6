#ifndef TROPMLE_RATIONAL_HPP
#define TROPMLE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropmle {

using BigInt = mpz_class;

// Exact rational scalar. Always kept in lowest terms with positive
// denominator, so equality and ordering are canonical.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(static_cast<long int>(v)) {}
    Rat(const BigInt& v) : q_(v) {}
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den);

    static Rat parse(const std::string& text);  // "p/q" or "p"

    const mpq_class& raw() const { return q_; }
    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rat abs() const { return sign() < 0 ? Rat(-q_) : *this; }
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

using RatVector = std::vector<Rat>;

} // namespace tropmle

#endif
