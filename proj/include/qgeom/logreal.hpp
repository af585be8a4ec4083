#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qgeom {

// Signed real number stored as (sign, log of absolute value).  All the
// closed forms evaluated by this library are ratios of huge Gamma products
// ((d^2-1)! appears everywhere), so products and quotients are carried out
// as sums in log space and converted to double only at the output boundary.
class LogReal {
public:
    LogReal() : sign_(0), logmag_(0.0) {}

    static LogReal zero() { return LogReal(); }
    static LogReal one() { return LogReal(1, 0.0); }

    static LogReal from_double(double x) {
        if (x == 0.0) return LogReal();
        if (!std::isfinite(x)) throw std::domain_error("LogReal: non-finite input");
        return LogReal(x > 0 ? 1 : -1, std::log(std::fabs(x)));
    }

    // value = sign * exp(logmag)
    static LogReal from_log(double logmag, int sign = 1) {
        if (sign == 0) return LogReal();
        if (sign != 1 && sign != -1) throw std::domain_error("LogReal: sign must be -1, 0 or 1");
        return LogReal(sign, logmag);
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    // Natural log of |value|; only meaningful when sign() != 0.
    double log_magnitude() const {
        if (sign_ == 0) return -std::numeric_limits<double>::infinity();
        return logmag_;
    }

    double to_double() const {
        if (sign_ == 0) return 0.0;
        return sign_ * std::exp(logmag_);
    }

    LogReal operator-() const { return LogReal(-sign_, logmag_); }

    LogReal operator*(const LogReal& o) const {
        if (sign_ == 0 || o.sign_ == 0) return LogReal();
        return LogReal(sign_ * o.sign_, logmag_ + o.logmag_);
    }

    LogReal operator/(const LogReal& o) const {
        if (o.sign_ == 0) throw std::domain_error("LogReal: division by zero");
        if (sign_ == 0) return LogReal();
        return LogReal(sign_ * o.sign_, logmag_ - o.logmag_);
    }

    LogReal operator+(const LogReal& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        if (sign_ == o.sign_) {
            double hi = std::max(logmag_, o.logmag_);
            double lo = std::min(logmag_, o.logmag_);
            return LogReal(sign_, hi + std::log1p(std::exp(lo - hi)));
        }
        // opposite signs: magnitude difference
        if (logmag_ == o.logmag_) return LogReal();
        const LogReal& big = (logmag_ > o.logmag_) ? *this : o;
        const LogReal& small = (logmag_ > o.logmag_) ? o : *this;
        double diff = big.logmag_ + std::log1p(-std::exp(small.logmag_ - big.logmag_));
        return LogReal(big.sign_, diff);
    }

    LogReal operator-(const LogReal& o) const { return *this + (-o); }

    LogReal& operator*=(const LogReal& o) { *this = *this * o; return *this; }
    LogReal& operator/=(const LogReal& o) { *this = *this / o; return *this; }
    LogReal& operator+=(const LogReal& o) { *this = *this + o; return *this; }

    // |value|^e, keeping the sign for even/odd integral e is not attempted:
    // only nonnegative bases are supported.
    LogReal pow(double e) const {
        if (sign_ < 0) throw std::domain_error("LogReal::pow: negative base");
        if (sign_ == 0) return e == 0.0 ? one() : zero();
        return LogReal(1, logmag_ * e);
    }

    bool operator==(const LogReal& o) const {
        return sign_ == o.sign_ && (sign_ == 0 || logmag_ == o.logmag_);
    }
    bool operator<(const LogReal& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        if (sign_ == 0) return false;
        return sign_ > 0 ? logmag_ < o.logmag_ : logmag_ > o.logmag_;
    }
    bool operator>(const LogReal& o) const { return o < *this; }
    bool operator<=(const LogReal& o) const { return !(o < *this); }
    bool operator>=(const LogReal& o) const { return !(*this < o); }

private:
    LogReal(int sign, double logmag) : sign_(sign), logmag_(logmag) {}

    int sign_;
    double logmag_;
};

// Relative deviation |a-b| / max(|a|,|b|) evaluated in log space, usable even
// when the values themselves overflow double.
inline double relative_error(const LogReal& a, const LogReal& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    LogReal diff = a - b;
    if (diff.is_zero()) return 0.0;
    double ref = std::max(a.log_magnitude(), b.log_magnitude());
    return std::exp(diff.log_magnitude() - ref);
}

} // namespace qgeom
