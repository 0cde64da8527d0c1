#include "vbf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vbf {

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    const auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!digits(num) || !digits(den)) bad_literal(text);

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_literal(text);
    if (negative) n = -n;
    return Rational(n, d);
}

long Rational::num_long() const {
    if (!q_.get_num().fits_slong_p()) throw std::range_error("rational numerator exceeds long");
    return q_.get_num().get_si();
}

long Rational::den_long() const {
    if (!q_.get_den().fits_slong_p()) throw std::range_error("rational denominator exceeds long");
    return q_.get_den().get_si();
}

std::string Rational::str() const {
    std::string out = q_.get_num().get_str();
    if (!is_integer()) {
        out += '/';
        out += q_.get_den().get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace vbf
