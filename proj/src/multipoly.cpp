#include "potts/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "potts/errors.hpp"

namespace potts {

std::string VarId::name() const { return is_q() ? "q" : "t" + std::to_string(code_); }

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].first, a[i].second + b[j].second});
            ++i;
            ++j;
        }
    }
    return out;
}

bool GradedLexDesc::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
    }
    return a.size() > b.size();
}

MPoly::MPoly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

MPoly::MPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(VarId v, unsigned exp) {
    MPoly p;
    if (exp == 0)
        p.terms_.emplace(Monomial{}, 1);
    else
        p.terms_.emplace(Monomial{{v, exp}}, 1);
    return p;
}

MPoly MPoly::term(const Monomial& m, const mpz_class& c) {
    MPoly p;
    p.add_term(m, c);
    return p;
}

void MPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<VarId> MPoly::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

unsigned MPoly::total_degree() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "degree of the zero polynomial");
    return potts::total_degree(terms_.begin()->first);
}

unsigned MPoly::min_total_degree() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "degree of the zero polynomial");
    return potts::total_degree(terms_.rbegin()->first);
}

unsigned MPoly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [x, e] : m)
            if (x == v) d = std::max(d, e);
    return d;
}

bool MPoly::is_homogeneous() const { return is_zero() || total_degree() == min_total_degree(); }

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool coeff = a != 1 || m.empty();
        if (coeff) out << a.get_str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (coeff || i > 0) out << '*';
            out << m[i].first.name();
            if (m[i].second > 1) out << '^' << m[i].second;
        }
    }
    return out.str();
}

MPoly pow(const MPoly& p, unsigned e) {
    MPoly r(1), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

MPoly substitute(const MPoly& p, VarId v, const MPoly& r) {
    std::vector<MPoly> powers{MPoly(1)};
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest;
        unsigned k = 0;
        for (const auto& [x, e] : m) {
            if (x == v)
                k = e;
            else
                rest.push_back({x, e});
        }
        while (powers.size() <= k) powers.push_back(powers.back() * r);
        out += MPoly::term(rest, c) * powers[k];
    }
    return out;
}

namespace {

std::uint64_t powmod(std::uint64_t b, unsigned e, std::uint64_t p) {
    unsigned __int128 r = 1 % p, x = b % p;
    while (e) {
        if (e & 1u) r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t eval_mod(const MPoly& p, const std::map<VarId, std::uint64_t>& assignment,
                       std::uint64_t prime) {
    if (prime < 2) fail(ErrorKind::InvalidArgument, "eval_mod: modulus must be a prime");
    unsigned __int128 acc = 0;
    for (const auto& [m, c] : p.terms()) {
        unsigned __int128 t = mpz_fdiv_ui(c.get_mpz_t(), prime);
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                fail(ErrorKind::InvalidArgument, "eval_mod: no value for " + v.name());
            t = t * powmod(it->second, e, prime) % prime;
        }
        acc = (acc + t) % prime;
    }
    return static_cast<std::uint64_t>(acc);
}

mpz_class eval(const MPoly& p, const std::map<VarId, mpz_class>& assignment) {
    mpz_class acc = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class t = c;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                fail(ErrorKind::InvalidArgument, "eval: no value for " + v.name());
            mpz_class x;
            mpz_pow_ui(x.get_mpz_t(), it->second.get_mpz_t(), e);
            t *= x;
        }
        acc += t;
    }
    return acc;
}

MPoly lowest_homogeneous_part(const MPoly& p) {
    if (p.is_zero()) fail(ErrorKind::InvalidArgument, "lowest homogeneous part of zero");
    unsigned d = p.min_total_degree();
    MPoly r;
    for (const auto& [m, c] : p.terms())
        if (total_degree(m) == d) r += MPoly::term(m, c);
    return r;
}

MPoly divide_exact_by_q_power(const MPoly& p, unsigned k) {
    if (k == 0) return p;
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.empty() || !m.front().first.is_q() || m.front().second < k)
            fail(ErrorKind::ExactDivisionFailure,
                 "q^" + std::to_string(k) + " does not divide " + p.to_string());
        Monomial n = m;
        n.front().second -= k;
        if (n.front().second == 0) n.erase(n.begin());
        r += MPoly::term(n, c);
    }
    return r;
}

}  // namespace potts
