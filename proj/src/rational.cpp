#include "credal/rational.hpp"

#include <cctype>
#include <sstream>

#include "credal/errors.hpp"

namespace credal {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw InvariantViolationError("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InvariantViolationError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty number in \"" + std::string(text) + "\"");

    auto fail = [&]() -> Rational {
        throw ParseError("not an exact number: \"" + std::string(text) +
                         "\" (expected \"p/q\", an integer, or a finite decimal)");
    };

    mpq_class value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
        value = mpq_class(n) / mpq_class(d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) return fail();
        if (!whole.empty() && !all_digits(whole)) return fail();
        if (!frac.empty() && !all_digits(frac)) return fail();
        mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
        mpz_class scale = 1;
        mpz_class f = 0;
        if (!frac.empty()) {
            f = mpz_class(std::string(frac), 10);
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        }
        value = mpq_class(w * scale + f) / mpq_class(scale);
    } else {
        if (!all_digits(s)) return fail();
        value = mpq_class(mpz_class(std::string(s), 10));
    }
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_rounded(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(v * scale), half away from zero
    mpz_class num = v_.get_num() * scale * 2;
    mpz_class den = v_.get_den() * 2;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // q = floor(v*scale); round by comparing remainder against den/2
    mpz_class half = v_.get_den();  // den/2
    if (r > half || (r == half && sgn(v_) >= 0)) q += 1;

    bool neg = q < 0;
    mpz_class mag = ::abs(q);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = s.substr(0, s.size() - digits);
    std::string frac = digits > 0 ? s.substr(s.size() - digits) : std::string();
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    if (neg) out.insert(0, 1, '-');
    return out;
}

Rational dot(const Point& a, const Point& b) {
    Rational acc;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool lex_less(const Point& a, const Point& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

std::string point_str(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace credal
