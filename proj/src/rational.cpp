#include "chainforge/rational.hpp"

#include <stdexcept>
#include <utility>

namespace chainforge {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::abs() const {
    Rational out = *this;
    if (out.num_.is_negative()) out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

bool Rational::operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string Rational::to_fraction_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string(unsigned digits) const {
    BigInt n = num_.abs();
    BigInt ipart, rem;
    BigInt::divmod(n, den_, ipart, rem);
    std::string out = num_.is_negative() ? "-" : "";
    out += ipart.to_string();
    if (digits == 0) return out;
    BigInt scaled = rem * BigInt::pow(BigInt(10), digits);
    BigInt frac, junk;
    BigInt::divmod(scaled, den_, frac, junk);
    std::string fs = frac.to_string();
    out += "." + std::string(digits - fs.size(), '0') + fs;
    return out;
}

}  // namespace chainforge
