#pragma once

#include "flatsaf/rat.hpp"

#include <array>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace flatsaf {

// Real quadratic field Q(sqrt(f)), f a square-free positive integer.
// f = 1 encodes the degenerate case K = Q.
class QuadField {
public:
    QuadField() : f_(1) {}
    explicit QuadField(unsigned long f);
    unsigned long f() const { return f_; }
    bool is_rational() const { return f_ == 1; }
    friend bool operator==(const QuadField& a, const QuadField& b) { return a.f_ == b.f_; }
    friend bool operator!=(const QuadField& a, const QuadField& b) { return a.f_ != b.f_; }

    // Largest square-free divisor kernel: n = c^2 * f with f square-free.
    // Returns (f, c).
    static std::pair<unsigned long, unsigned long> squarefree_kernel(unsigned long n);

private:
    unsigned long f_;
};

// Element a + b*sqrt(f) of K = Q(sqrt(f)).  If f = 1 then b = 0.
class KNum {
public:
    KNum() : a_(0), b_(0), field_(1) {}
    KNum(int v) : a_(v), b_(0), field_(1) {}
    KNum(const Rat& a) : a_(a), b_(0), field_(1) {}
    KNum(const Rat& a, const Rat& b, QuadField field);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const QuadField& field() const { return field_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    KNum operator-() const { return KNum(-a_, -b_, field_); }
    KNum conj() const { return KNum(a_, -b_, field_); }
    Rat norm() const; // a^2 - b^2 f = x * conj(x)

    // Exact sign of the real number a + b*sqrt(f).
    int sign() const;

    double approx() const;

    friend KNum operator+(const KNum& x, const KNum& y);
    friend KNum operator-(const KNum& x, const KNum& y);
    friend KNum operator*(const KNum& x, const KNum& y);
    friend KNum operator/(const KNum& x, const KNum& y);
    KNum& operator+=(const KNum& y) { *this = *this + y; return *this; }
    KNum& operator-=(const KNum& y) { *this = *this - y; return *this; }
    KNum& operator*=(const KNum& y) { *this = *this * y; return *this; }

    friend bool operator==(const KNum& x, const KNum& y);
    friend bool operator!=(const KNum& x, const KNum& y) { return !(x == y); }
    friend bool operator<(const KNum& x, const KNum& y) { return (x - y).sign() < 0; }
    friend bool operator>(const KNum& x, const KNum& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const KNum& x, const KNum& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const KNum& x, const KNum& y) { return (x - y).sign() >= 0; }

    // Text literal per the KNUM grammar, e.g. "2+3/2*sqrt(5)".  Also accepts the
    // parenthesized form "(-1+1*sqrt(17))/6".
    static KNum parse(const std::string& s);
    static KNum parse(const std::string& s, QuadField expected);
    std::string str() const;

    nlohmann::json to_json() const;
    static KNum from_json(const nlohmann::json& j);

private:
    Rat a_, b_;
    QuadField field_;
};

KNum sqrt_of_field(QuadField F); // the element sqrt(f)

// Promote x into field F; legal iff x already lives there or is rational.
KNum promote(const KNum& x, QuadField F);
QuadField common_field(const KNum& x, const KNum& y);

// Complex element re + i*im with re, im in one quadratic field.
struct KiNum {
    KNum re, im;

    KiNum() = default;
    KiNum(const KNum& r) : re(r), im(KNum(Rat(0))) {}
    KiNum(const KNum& r, const KNum& i) : re(r), im(i) {}

    KiNum conj_complex() const { return KiNum(re, -im); }   // re - i*im
    KiNum conj_galois() const { return KiNum(re.conj(), im.conj()); } // (k1+ik2)' = k1'+ik2'
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend KiNum operator+(const KiNum& x, const KiNum& y) { return {x.re + y.re, x.im + y.im}; }
    friend KiNum operator-(const KiNum& x, const KiNum& y) { return {x.re - y.re, x.im - y.im}; }
    friend KiNum operator*(const KiNum& x, const KiNum& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend KiNum operator-(const KiNum& x) { return {-x.re, -x.im}; }
    friend bool operator==(const KiNum& x, const KiNum& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const KiNum& x, const KiNum& y) { return !(x == y); }

    std::string str() const;
};

// Element c * (1 ^ sqrt(f)) of K ^_Q K.  For f = 1 the space is 0.
class WedgeNum {
public:
    WedgeNum() : c_(0), field_(1) {}
    WedgeNum(const Rat& c, QuadField field) : c_(c), field_(field) {
        if (field_.is_rational()) c_ = 0; // Q ^_Q Q = 0
    }
    const Rat& c() const { return c_; }
    const QuadField& field() const { return field_; }
    bool is_zero() const { return c_ == 0; }

    friend WedgeNum operator+(const WedgeNum& x, const WedgeNum& y);
    friend WedgeNum operator-(const WedgeNum& x, const WedgeNum& y);
    WedgeNum operator-() const { return WedgeNum(-c_, field_); }
    friend WedgeNum operator*(const Rat& q, const WedgeNum& x) { return WedgeNum(q * x.c(), x.field()); }
    friend bool operator==(const WedgeNum& x, const WedgeNum& y);
    friend bool operator!=(const WedgeNum& x, const WedgeNum& y) { return !(x == y); }

    std::string str() const;

private:
    Rat c_;
    QuadField field_;
};

// x ^_Q y for x, y in K, expanded over the basis pair (1, sqrt(f)).
WedgeNum wedgeK(const KNum& x, const KNum& y);

// Vector in K^2.
struct Vec2K {
    KNum x, y;

    Vec2K() = default;
    Vec2K(const KNum& xx, const KNum& yy) : x(xx), y(yy) {}

    friend Vec2K operator+(const Vec2K& u, const Vec2K& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2K operator-(const Vec2K& u, const Vec2K& v) { return {u.x - v.x, u.y - v.y}; }
    Vec2K operator-() const { return {-x, -y}; }
    friend Vec2K operator*(const KNum& s, const Vec2K& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2K& u, const Vec2K& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec2K& u, const Vec2K& v) { return !(u == v); }

    std::string str() const;
};

inline KNum cross(const Vec2K& u, const Vec2K& v) { return u.x * v.y - u.y * v.x; }
inline KNum dot(const Vec2K& u, const Vec2K& v) { return u.x * v.x + u.y * v.y; }

// Element of Lambda^2_Q(K^2) over the ordered basis
//   u1^u2, u1^u3, u1^u4, u2^u3, u2^u4, u3^u4
// where u1=(1,0), u2=(sqrt f,0), u3=(0,1), u4=(0,sqrt f).
class JNum {
public:
    JNum() : c_{}, field_(1) { c_.fill(Rat(0)); }
    explicit JNum(QuadField field) : c_{}, field_(field) { c_.fill(Rat(0)); }
    JNum(const std::array<Rat, 6>& c, QuadField field) : c_(c), field_(field) {}

    const std::array<Rat, 6>& coeffs() const { return c_; }
    const QuadField& field() const { return field_; }
    bool is_zero() const;

    friend JNum operator+(const JNum& x, const JNum& y);
    friend JNum operator-(const JNum& x, const JNum& y);
    friend bool operator==(const JNum& x, const JNum& y);
    friend bool operator!=(const JNum& x, const JNum& y) { return !(x == y); }

    std::string str() const;

private:
    std::array<Rat, 6> c_;
    QuadField field_;
};

JNum jWedge(const Vec2K& v, const Vec2K& w);
// Projection (a,b)^(c,d) -> a^c onto K ^_Q K.
WedgeNum jxx(const JNum& J);

// 2x2 matrix over K.
struct KMat2 {
    KNum m[2][2];

    KMat2() = default;
    KMat2(const KNum& a, const KNum& b, const KNum& c, const KNum& d) {
        m[0][0] = a; m[0][1] = b; m[1][0] = c; m[1][1] = d;
    }
    static KMat2 identity();

    KNum det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    KMat2 inverse() const;
    Vec2K apply(const Vec2K& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    friend KMat2 operator*(const KMat2& A, const KMat2& B);
};

// g . J, acting diagonally on both factors of the wedge.
JNum transform(const KMat2& g, const JNum& J);

} // namespace flatsaf
