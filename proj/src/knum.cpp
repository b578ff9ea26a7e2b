#include "flatsaf/knum.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace flatsaf {

Rat parse_rat(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad rational literal: " + s);
    Int num(s.substr(i, j - i));
    Int den(1);
    if (j < s.size()) {
        if (s[j] != '/') throw std::invalid_argument("bad rational literal: " + s);
        size_t k = j + 1, e = k;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        if (e == k || e != s.size()) throw std::invalid_argument("bad rational literal: " + s);
        den = Int(s.substr(k, e - k));
    }
    if (neg) num = -num;
    return make_rat(num, den);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << '/' << r.get_den();
    return os.str();
}

QuadField::QuadField(unsigned long f) : f_(f) {
    if (f == 0) throw std::domain_error("field parameter must be positive");
    for (unsigned long p = 2; p * p <= f; ++p)
        if (f % (p * p) == 0) throw std::domain_error("field parameter must be square-free");
}

std::pair<unsigned long, unsigned long> QuadField::squarefree_kernel(unsigned long n) {
    if (n == 0) throw std::domain_error("squarefree_kernel of 0");
    unsigned long f = n, c = 1;
    for (unsigned long p = 2; p * p <= f; ++p) {
        while (f % (p * p) == 0) {
            f /= p * p;
            c *= p;
        }
    }
    return {f, c};
}

KNum::KNum(const Rat& a, const Rat& b, QuadField field) : a_(a), b_(b), field_(field) {
    if (field_.is_rational() && b_ != 0)
        throw std::domain_error("nonzero sqrt coefficient in Q (f = 1)");
}

Rat KNum::norm() const {
    return a_ * a_ - b_ * b_ * Rat(static_cast<unsigned long>(field_.f()));
}

int KNum::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b| sqrt(f) decided by squaring.
    int t = sgn(a_ * a_ - b_ * b_ * Rat(static_cast<unsigned long>(field_.f())));
    return sa * t;
}

double KNum::approx() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(field_.f()));
}

QuadField common_field(const KNum& x, const KNum& y) {
    if (x.field() == y.field()) return x.field();
    if (x.is_rational() && x.field().is_rational()) return y.field();
    if (y.is_rational() && y.field().is_rational()) return x.field();
    throw std::domain_error("field mismatch: Q(sqrt(" + std::to_string(x.field().f()) +
                            ")) vs Q(sqrt(" + std::to_string(y.field().f()) + "))");
}

KNum promote(const KNum& x, QuadField F) {
    if (x.field() == F) return x;
    if (x.is_rational() && x.field().is_rational()) return KNum(x.a(), Rat(0), F);
    throw std::domain_error("cannot promote element of Q(sqrt(" + std::to_string(x.field().f()) +
                            ")) into Q(sqrt(" + std::to_string(F.f()) + "))");
}

KNum operator+(const KNum& x, const KNum& y) {
    QuadField F = common_field(x, y);
    return KNum(x.a() + y.a(), x.b() + y.b(), F);
}

KNum operator-(const KNum& x, const KNum& y) {
    QuadField F = common_field(x, y);
    return KNum(x.a() - y.a(), x.b() - y.b(), F);
}

KNum operator*(const KNum& x, const KNum& y) {
    QuadField F = common_field(x, y);
    Rat f(static_cast<unsigned long>(F.f()));
    return KNum(x.a() * y.a() + x.b() * y.b() * f, x.a() * y.b() + x.b() * y.a(), F);
}

KNum operator/(const KNum& x, const KNum& y) {
    if (y.is_zero()) throw std::domain_error("division by zero in K");
    QuadField F = common_field(x, y);
    Rat n = y.norm();
    KNum num = x * y.conj();
    return KNum(num.a() / n, num.b() / n, F);
}

bool operator==(const KNum& x, const KNum& y) {
    if (x.a() != y.a() || x.b() != y.b()) return false;
    if (x.b() != 0 && x.field() != y.field())
        throw std::domain_error("field mismatch in comparison");
    return true;
}

KNum sqrt_of_field(QuadField F) {
    if (F.is_rational()) return KNum(Rat(1));
    return KNum(Rat(0), Rat(1), F);
}

KNum KNum::parse(const std::string& s0) {
    std::string s;
    s.reserve(s0.size());
    for (char ch : s0)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty K literal");

    // Parenthesized form "(<KNUM>)/<digits>".
    if (s.front() == '(') {
        size_t close = s.rfind(')');
        if (close == std::string::npos) throw std::invalid_argument("unbalanced parens: " + s0);
        KNum inner = parse(s.substr(1, close - 1));
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return inner;
        if (rest[0] != '/') throw std::invalid_argument("bad K literal: " + s0);
        Rat den = parse_rat(rest.substr(1));
        return KNum(inner.a() / den, inner.b() / den, inner.field());
    }

    size_t sq = s.find("*sqrt(");
    if (sq == std::string::npos) return KNum(parse_rat(s));
    if (s.back() != ')') throw std::invalid_argument("bad K literal: " + s0);
    unsigned long f = std::stoul(s.substr(sq + 6, s.size() - sq - 7));
    // b starts after the last '+' or '-' preceding "*sqrt(" that is not the leading sign.
    size_t split = std::string::npos;
    for (size_t i = sq; i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    QuadField F(f);
    if (split == std::string::npos) {
        // Pure "b*sqrt(f)" shorthand.
        Rat b = parse_rat(s.substr(0, sq));
        return KNum(Rat(0), b, F);
    }
    Rat a = parse_rat(s.substr(0, split));
    Rat b = parse_rat(s.substr(split, sq - split));
    return KNum(a, b, F);
}

KNum KNum::parse(const std::string& s, QuadField expected) {
    return promote(parse(s), expected);
}

std::string KNum::str() const {
    if (b_ == 0) return rat_str(a_);
    std::ostringstream os;
    os << rat_str(a_);
    if (sgn(b_) >= 0)
        os << '+' << rat_str(b_);
    else
        os << '-' << rat_str(-b_);
    os << "*sqrt(" << field_.f() << ')';
    return os.str();
}

nlohmann::json KNum::to_json() const {
    return nlohmann::json{{"a", rat_str(a_)}, {"b", rat_str(b_)}, {"f", field_.f()}};
}

KNum KNum::from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse(j.get<std::string>());
    QuadField F(j.at("f").get<unsigned long>());
    return KNum(parse_rat(j.at("a").get<std::string>()), parse_rat(j.at("b").get<std::string>()), F);
}

std::string KiNum::str() const {
    return re.str() + " + i*(" + im.str() + ")";
}

WedgeNum operator+(const WedgeNum& x, const WedgeNum& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.field() != y.field()) throw std::domain_error("field mismatch in wedge sum");
    return WedgeNum(x.c() + y.c(), x.field());
}

WedgeNum operator-(const WedgeNum& x, const WedgeNum& y) { return x + (-y); }

bool operator==(const WedgeNum& x, const WedgeNum& y) {
    if (x.is_zero() || y.is_zero()) return x.c() == y.c();
    if (x.field() != y.field()) throw std::domain_error("field mismatch in wedge comparison");
    return x.c() == y.c();
}

std::string WedgeNum::str() const {
    if (is_zero()) return "0";
    return rat_str(c_) + "*(1^sqrt(" + std::to_string(field_.f()) + "))";
}

WedgeNum wedgeK(const KNum& x, const KNum& y) {
    QuadField F = common_field(x, y);
    return WedgeNum(x.a() * y.b() - x.b() * y.a(), F);
}

bool JNum::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

JNum operator+(const JNum& x, const JNum& y) {
    QuadField F = x.field();
    if (F.is_rational()) F = y.field();
    else if (!y.field().is_rational() && !(x.field() == y.field()))
        throw std::domain_error("field mismatch in J sum");
    std::array<Rat, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = x.coeffs()[i] + y.coeffs()[i];
    return JNum(c, F);
}

JNum operator-(const JNum& x, const JNum& y) {
    std::array<Rat, 6> c;
    for (int i = 0; i < 6; ++i) c[i] = -y.coeffs()[i];
    return x + JNum(c, y.field());
}

bool operator==(const JNum& x, const JNum& y) {
    for (int i = 0; i < 6; ++i)
        if (x.coeffs()[i] != y.coeffs()[i]) return false;
    return true;
}

std::string JNum::str() const {
    static const char* names[6] = {"u1^u2", "u1^u3", "u1^u4", "u2^u3", "u2^u4", "u3^u4"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[i]) << '*' << names[i];
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

JNum jWedge(const Vec2K& v, const Vec2K& w) {
    QuadField F = common_field(common_field(v.x, v.y), common_field(w.x, w.y));
    // Coordinates over u1..u4.
    Rat a[4] = {v.x.a(), v.x.b(), v.y.a(), v.y.b()};
    Rat b[4] = {w.x.a(), w.x.b(), w.y.a(), w.y.b()};
    std::array<Rat, 6> c;
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) c[idx++] = a[i] * b[j] - a[j] * b[i];
    return JNum(c, F);
}

WedgeNum jxx(const JNum& J) {
    // Only u1^u2 has both legs with a nonzero x-part pair (1, sqrt f).
    return WedgeNum(J.coeffs()[0], J.field());
}

KMat2 KMat2::identity() {
    return KMat2(KNum(Rat(1)), KNum(Rat(0)), KNum(Rat(0)), KNum(Rat(1)));
}

KMat2 KMat2::inverse() const {
    KNum d = det();
    if (d.is_zero()) throw std::domain_error("singular matrix");
    return KMat2(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d);
}

KMat2 operator*(const KMat2& A, const KMat2& B) {
    KMat2 C;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            C.m[i][j] = A.m[i][0] * B.m[0][j] + A.m[i][1] * B.m[1][j];
    return C;
}

JNum transform(const KMat2& g, const JNum& J) {
    QuadField F = J.field();
    KNum sq = sqrt_of_field(F);
    Vec2K u[4] = {{KNum(Rat(1)), KNum(Rat(0))},
                  {sq, KNum(Rat(0))},
                  {KNum(Rat(0)), KNum(Rat(1))},
                  {KNum(Rat(0)), sq}};
    Vec2K gu[4];
    for (int i = 0; i < 4; ++i) gu[i] = g.apply(u[i]);
    JNum out(F);
    int idx = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Rat& c = J.coeffs()[idx++];
            if (c == 0) continue;
            JNum term = jWedge(gu[i], gu[j]);
            std::array<Rat, 6> sc;
            for (int k = 0; k < 6; ++k) sc[k] = c * term.coeffs()[k];
            out = out + JNum(sc, F);
        }
    return out;
}

std::string Vec2K::str() const { return "(" + x.str() + ", " + y.str() + ")"; }

} // namespace flatsaf
