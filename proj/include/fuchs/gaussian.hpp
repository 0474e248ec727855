#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace fuchs {

using Rational = mpq_class;

// Exact complex number re + im*i with rational parts. GMP keeps every
// arithmetic result in lowest terms with a positive denominator, so equality
// is structural.
class Gaussian {
public:
    Gaussian() = default;
    template <std::integral T>
    Gaussian(T v) : re_(static_cast<long>(v)) {}
    Gaussian(Rational re) : re_(std::move(re)) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian imag_unit() { return Gaussian(Rational(0), Rational(1)); }
    static Gaussian ratio(long num, long den, long inum = 0, long iden = 1);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    // this -= f * g without constructing the product.
    void sub_mul(const Gaussian& f, const Gaussian& g);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

    friend bool operator==(const Gaussian& a, const Gaussian& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic order on (re, im); used only for canonical sorting.
    friend bool lex_less(const Gaussian& a, const Gaussian& b)
    {
        int c = cmp(a.re_, b.re_);
        return c < 0 || (c == 0 && cmp(a.im_, b.im_) < 0);
    }

    std::string str() const;
    static Gaussian parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

private:
    Rational re_{0};
    Rational im_{0};
};

// Square root inside the Gaussian rationals, when one exists.
std::optional<Gaussian> exact_sqrt(const Gaussian& z);
std::optional<Rational> exact_sqrt(const Rational& q);

} // namespace fuchs
