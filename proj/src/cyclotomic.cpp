#include "hhodge/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hhodge/error.hpp"

namespace hhodge {

namespace {

long mod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

unsigned euler_phi(unsigned n)
{
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n)
{
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
    static std::mutex lock;
    static std::map<unsigned, std::vector<std::int64_t>> table;
    {
        std::lock_guard guard(lock);
        if (auto it = table.find(n); it != table.end()) return it->second;
    }

    // x^n - 1, then divide out Phi_d for every proper divisor d.  Each Phi_d
    // is monic, so the division stays in Z.
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& divisor = cyclotomic_polynomial(d);
        const std::size_t dd = divisor.size() - 1;
        std::vector<std::int64_t> quotient(poly.size() - dd, 0);
        for (std::size_t i = poly.size() - 1; i + 1 > dd; --i) {
            const std::int64_t c = poly[i];
            quotient[i - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
        }
        for (std::size_t i = 0; i < dd; ++i)
            if (poly[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
        poly = std::move(quotient);
    }

    std::lock_guard guard(lock);
    return table.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}

Cyclotomic::Cyclotomic(long r) : conductor_(1), coeffs_{Rational(r)} {}

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> coeffs) : conductor_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long k)
{
    if (n == 0) throw std::invalid_argument("root of unity of order 0");
    std::vector<Rational> poly(n, Rational(0));
    poly[static_cast<std::size_t>(mod(k, n))] = 1;
    return Cyclotomic(n, reduce(std::move(poly), n));
}

std::vector<Rational> Cyclotomic::reduce(std::vector<Rational> poly, unsigned n)
{
    // Fold with zeta^n = 1 first, then divide by Phi_n.
    if (poly.size() > n) {
        for (std::size_t i = n; i < poly.size(); ++i) poly[i % n] += poly[i];
        poly.resize(n);
    }
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) continue;
        const Rational c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0) poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const
{
    if (!is_rational()) throw InconsistencyError("expected a rational value, got " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::galois(unsigned t) const
{
    if (std::gcd(t, conductor_) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    std::vector<Rational> poly(conductor_, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[(j * t) % conductor_] += coeffs_[j];
    return Cyclotomic(conductor_, reduce(std::move(poly), conductor_));
}

Cyclotomic Cyclotomic::conjugate() const
{
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Cyclotomic others(Rational(1));
    for (unsigned t = 2; t < conductor_; ++t)
        if (std::gcd(t, conductor_) == 1) others *= galois(t);
    const Rational norm = (*this * others).to_rational();
    return others * Cyclotomic(1 / norm);
}

Cyclotomic Cyclotomic::embed(unsigned m) const
{
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw std::invalid_argument("embedding into a conductor that is not a multiple");
    const unsigned step = m / conductor_;
    std::vector<Rational> poly(m, Rational(0));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return Cyclotomic(m, reduce(std::move(poly), m));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (o.conductor_ == conductor_ || o.conductor_ == 1) {
        // Rationals sit in coefficient 0 of every basis.
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    const unsigned m = std::lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = embed(m);
    const Cyclotomic rhs = o.embed(m);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
    if (o.conductor_ == 1) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        const Rational scale = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= scale;
        return *this;
    }
    const unsigned m = std::lcm(conductor_, o.conductor_);
    const Cyclotomic lhs = embed(m);
    const Cyclotomic rhs = o.embed(m);
    std::vector<Rational> poly(lhs.coeffs_.size() + rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) poly[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    *this = Cyclotomic(m, reduce(std::move(poly), m));
    return *this;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    return (a - b).is_zero();
}

std::string Cyclotomic::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (!first) out << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) out << '-';
        first = false;
        if (j == 0) {
            out << hhodge::to_string(mag);
        } else {
            if (mag != 1) out << hhodge::to_string(mag) << '*';
            out << 'z' << conductor_ << '^' << j;
        }
    }
    return first ? std::string("0") : out.str();
}

Rational root_of_unity_sum(unsigned m, unsigned l)
{
    if (m < 2 || l >= m) throw std::invalid_argument("root_of_unity_sum needs m >= 2 and 0 <= l < m");
    Cyclotomic acc;
    for (unsigned j = 1; j < m; ++j) {
        const Cyclotomic numerator = Cyclotomic::root_of_unity(m, static_cast<long>(j) * l);
        const Cyclotomic denominator = Cyclotomic(1) - Cyclotomic::root_of_unity(m, -static_cast<long>(j));
        acc += numerator / denominator;
    }
    return acc.to_rational();
}

}  // namespace hhodge
