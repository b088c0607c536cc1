#pragma once

#include <complex>
#include <concepts>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qdh/error.hpp"

namespace qdh::detail {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

// for finite sums whose terms exceed the result by 30+ orders
using multi = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>>;

// Minimal complex arithmetic over a real type T.
template <class T>
struct basic_wc {
    T re = 0, im = 0;
    basic_wc() = default;
    basic_wc(T r, T i = 0) : re(r), im(i) {}
    template <class C>
        requires std::same_as<C, std::complex<double>>
    explicit basic_wc(C v) : re(v.real()), im(v.imag()) {}
    std::complex<double> to() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    double abs2() const { return static_cast<double>(re * re + im * im); }

    friend basic_wc operator+(const basic_wc& a, const basic_wc& b) { return {a.re + b.re, a.im + b.im}; }
    friend basic_wc operator-(const basic_wc& a, const basic_wc& b) { return {a.re - b.re, a.im - b.im}; }
    friend basic_wc operator-(const basic_wc& a) { return {-a.re, -a.im}; }
    friend basic_wc operator*(const basic_wc& a, const basic_wc& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend basic_wc operator/(const basic_wc& a, const basic_wc& b)
    {
        T d = b.re * b.re + b.im * b.im;
        if (d == 0)
            throw Error(ErrorKind::ZeroDivisor, "division by zero in extended precision");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

using wc = basic_wc<wide>;
using mc = basic_wc<multi>;

} // namespace qdh::detail
