#include "fuchs/gaussian.hpp"

#include "fuchs/error.hpp"

#include <cctype>

namespace fuchs {

Gaussian Gaussian::ratio(long num, long den, long inum, long iden)
{
    if (den == 0 || iden == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational re(num, den), im(inum, iden);
    re.canonicalize();
    im.canonicalize();
    return Gaussian(re, im);
}

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0)
        im_ += o.im_;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0)
        im_ -= o.im_;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o)
{
    if (o.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        if (sgn(im_) != 0)
            im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void Gaussian::sub_mul(const Gaussian& f, const Gaussian& g)
{
    if (sgn(f.im_) == 0 && sgn(g.im_) == 0) {
        re_ -= f.re_ * g.re_;
        return;
    }
    re_ -= f.re_ * g.re_ - f.im_ * g.im_;
    im_ -= f.re_ * g.im_ + f.im_ * g.re_;
}

std::string Gaussian::str() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string imag;
    Rational mag = abs(im_);
    if (mag != 1)
        imag = mag.get_str();
    imag += "i";
    if (sgn(re_) == 0)
        return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

namespace {

[[noreturn]] void bad_scalar(std::string_view text)
{
    throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
}

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// RATIONAL := ['-'] digits ['/' digits]
Rational parse_rational(std::string_view s, std::string_view whole)
{
    bool neg = false;
    if (!s.empty() && s.front() == '-') {
        neg = true;
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        bad_scalar(whole);
    Rational q;
    q.get_num() = mpz_class(std::string(num), 10);
    q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q.get_den() == 0)
        bad_scalar(whole);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

} // namespace

Gaussian Gaussian::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        bad_scalar(text);
    if (s.back() != 'i')
        return Gaussian(parse_rational(s, text));

    s.remove_suffix(1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re(0);
    bool neg = false;
    std::string_view imag;
    if (split == std::string_view::npos) {
        imag = s;
        if (!imag.empty() && imag.front() == '-') {
            neg = true;
            imag.remove_prefix(1);
        }
    } else {
        re = parse_rational(s.substr(0, split), text);
        neg = s[split] == '-';
        imag = s.substr(split + 1);
    }
    Rational im = imag.empty() ? Rational(1) : parse_rational(imag, text);
    if (!imag.empty() && imag.front() == '-')
        bad_scalar(text);
    return Gaussian(re, neg ? Rational(-im) : im);
}

std::optional<Rational> exact_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return std::nullopt;
    Rational r;
    r.get_num() = sqrt(q.get_num());
    r.get_den() = sqrt(q.get_den());
    r.canonicalize();
    return r;
}

std::optional<Gaussian> exact_sqrt(const Gaussian& z)
{
    const Rational& a = z.re();
    const Rational& b = z.im();
    if (sgn(b) == 0) {
        if (sgn(a) >= 0) {
            if (auto r = exact_sqrt(a))
                return Gaussian(*r);
            return std::nullopt;
        }
        if (auto r = exact_sqrt(Rational(-a)))
            return Gaussian(Rational(0), *r);
        return std::nullopt;
    }
    auto modulus = exact_sqrt(Rational(a * a + b * b));
    if (!modulus)
        return std::nullopt;
    auto x = exact_sqrt(Rational((a + *modulus) / 2));
    auto y = exact_sqrt(Rational((*modulus - a) / 2));
    if (!x || !y)
        return std::nullopt;
    return Gaussian(*x, sgn(b) < 0 ? Rational(-*y) : *y);
}

} // namespace fuchs
