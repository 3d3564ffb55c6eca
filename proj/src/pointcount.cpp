#include "potts/pointcount.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "potts/errors.hpp"
#include "potts/json_io.hpp"

namespace potts {

std::uint64_t point_budget() {
    if (const char* s = std::getenv("POTTS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return kDefaultPointBudget;
}

namespace {

using Res = std::uint32_t;

// Dense coefficient array of one polynomial over the shared variable list;
// variable 0 is outermost.
struct Dense {
    std::vector<unsigned> dims;  // degree + 1 per variable
    std::vector<Res> data;
};

Dense densify(const MPoly& p, const std::vector<VarId>& vars, std::uint64_t prime) {
    Dense d;
    for (VarId v : vars) d.dims.push_back(p.degree_in(v) + 1);
    std::size_t size = 1;
    for (unsigned x : d.dims) size *= x;
    d.data.assign(size, 0);
    for (const auto& [m, c] : p.terms()) {
        std::size_t idx = 0;
        std::size_t j = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            unsigned e = 0;
            if (j < m.size() && m[j].first == vars[i]) e = m[j++].second;
            idx = idx * d.dims[i] + e;
        }
        d.data[idx] = Res((d.data[idx] + mpz_fdiv_ui(c.get_mpz_t(), prime)) % prime);
    }
    return d;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

class ZeroCounter {
public:
    ZeroCounter(std::vector<Dense> polys, std::size_t nvars, std::uint64_t p)
        : polys_(std::move(polys)), nvars_(nvars), p_(p) {}

    // Zeros with variable 0 fixed to each residue in [lo, hi).
    std::uint64_t count_range(Res lo, Res hi) const {
        std::vector<std::vector<std::vector<Res>>> work(nvars_ + 1, std::vector<std::vector<Res>>(polys_.size()));
        std::vector<const std::vector<Res>*> cur;
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            cur.push_back(&polys_[i].data);
            ids.push_back(i);
        }
        std::uint64_t total = 0;
        for (Res x = lo; x < hi; ++x) total += specialize_and_recurse(0, x, cur, ids, work);
        return total;
    }

    std::uint64_t count_all() const {
        if (polys_.empty()) return ipow(p_, unsigned(nvars_));
        if (nvars_ == 0) return all_zero_constants() ? 1 : 0;
        unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), unsigned(p_)));
        if (threads == 1 || ipow(p_, unsigned(nvars_)) < 100000) return count_range(0, Res(p_));
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            Res lo = Res(p_ * w / threads), hi = Res(p_ * (w + 1) / threads);
            pool.emplace_back([this, w, lo, hi, &partial] { partial[w] = count_range(lo, hi); });
        }
        for (auto& t : pool) t.join();
        std::uint64_t total = 0;
        for (auto x : partial) total += x;
        return total;
    }

private:
    bool all_zero_constants() const {
        for (const auto& d : polys_)
            if (d.data[0] != 0) return false;
        return true;
    }

    std::size_t stride(std::size_t poly, std::size_t level) const {
        std::size_t s = 1;
        for (std::size_t i = level + 1; i < nvars_; ++i) s *= polys_[poly].dims[i];
        return s;
    }

    // cur[i] is the array of poly ids[i] over variables level..nvars-1.
    std::uint64_t specialize_and_recurse(std::size_t level, Res x,
                                         const std::vector<const std::vector<Res>*>& cur,
                                         const std::vector<std::size_t>& ids,
                                         std::vector<std::vector<std::vector<Res>>>& work) const {
        std::vector<const std::vector<Res>*> next;
        std::vector<std::size_t> next_ids;
        next.reserve(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::size_t id = ids[i];
            std::size_t s = stride(id, level);
            unsigned d = polys_[id].dims[level];
            const auto& a = *cur[i];
            auto& out = work[level][id];
            out.assign(a.begin() + std::ptrdiff_t((d - 1) * s), a.begin() + std::ptrdiff_t(d * s));
            for (unsigned k = d - 1; k-- > 0;)
                for (std::size_t j = 0; j < s; ++j)
                    out[j] = Res((std::uint64_t(out[j]) * x + a[k * s + j]) % p_);
            bool zero = true, constant = out[0] != 0;
            for (std::size_t j = 1; j < s && (zero || constant); ++j)
                if (out[j] != 0) constant = false;
            for (std::size_t j = 0; j < s && zero; ++j)
                if (out[j] != 0) zero = false;
            if (zero) continue;             // vanishes identically from here on
            if (constant) return 0;         // nonzero constant: no common zeros
            next.push_back(&out);
            next_ids.push_back(id);
        }
        std::size_t rest = nvars_ - level - 1;
        if (next.empty()) return ipow(p_, unsigned(rest));
        if (rest == 1) return leaf(next, next_ids);
        std::uint64_t total = 0;
        for (Res y = 0; y < p_; ++y) total += specialize_and_recurse(level + 1, y, next, next_ids, work);
        return total;
    }

    std::uint64_t leaf(const std::vector<const std::vector<Res>*>& cur, const std::vector<std::size_t>& ids) const {
        if (cur.size() == 1 && cur[0]->size() <= 2) {
            // Non-constant of degree 1 here: exactly one root.
            return 1;
        }
        std::uint64_t n = 0;
        for (Res y = 0; y < p_; ++y) {
            bool all = true;
            for (std::size_t i = 0; i < cur.size() && all; ++i) {
                const auto& a = *cur[i];
                std::uint64_t v = 0;
                for (std::size_t k = polys_[ids[i]].dims[nvars_ - 1]; k-- > 0;) v = (v * y + a[k]) % p_;
                all = v == 0;
            }
            n += all;
        }
        return n;
    }

    std::vector<Dense> polys_;
    std::size_t nvars_;
    std::uint64_t p_;
};

void check_prime_arg(std::uint64_t prime) {
    if (prime < 2 || prime > 0xffffffffULL)
        fail(ErrorKind::InvalidArgument, "prime out of range: " + std::to_string(prime));
    for (std::uint64_t d = 2; d * d <= prime; ++d)
        if (prime % d == 0) fail(ErrorKind::InvalidArgument, std::to_string(prime) + " is not prime");
}

void check_budget(unsigned dim, std::uint64_t prime) {
    std::uint64_t budget = point_budget();
    std::uint64_t n = 1;
    for (unsigned i = 0; i < dim; ++i) {
        if (n > budget / prime)
            fail(ErrorKind::ResourceLimit, std::to_string(prime) + "^" + std::to_string(dim) +
                                               " points exceed the enumeration budget " +
                                               std::to_string(budget));
        n *= prime;
    }
}

mpz_class mpz_pow(std::uint64_t b, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

}  // namespace

mpz_class count_zero_locus(const std::vector<MPoly>& polys, unsigned ambient_dim, std::uint64_t prime) {
    check_prime_arg(prime);
    std::vector<VarId> vars;
    for (const auto& p : polys) {
        auto v = p.variables();
        vars.insert(vars.end(), v.begin(), v.end());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() > ambient_dim)
        fail(ErrorKind::InvalidArgument, "polynomials use " + std::to_string(vars.size()) +
                                             " variables but the ambient dimension is " +
                                             std::to_string(ambient_dim));
    check_budget(ambient_dim, prime);
    std::vector<Dense> dense;
    for (const auto& p : polys)
        if (!p.is_zero()) dense.push_back(densify(p, vars, prime));
    ZeroCounter zc(std::move(dense), vars.size(), prime);
    return mpz_class(std::to_string(zc.count_all())) * mpz_pow(prime, unsigned(ambient_dim - vars.size()));
}

mpz_class count_complement(const MPoly& p, unsigned ambient_dim, std::uint64_t prime) {
    return mpz_pow(prime, ambient_dim) - count_zero_locus({p}, ambient_dim, prime);
}

mpz_class count_fixed_q(const MPoly& p, std::uint64_t q0, unsigned ambient_dim, std::uint64_t prime) {
    check_prime_arg(prime);
    MPoly s = substitute(p, VarId::q(), MPoly(mpz_class(std::to_string(q0 % prime))));
    return count_complement(s, ambient_dim, prime);
}

std::vector<std::uint64_t> prime_ladder(std::size_t count, std::uint64_t min_prime) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = std::max<std::uint64_t>(2, min_prime); out.size() < count; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
        if (prime) out.push_back(n);
    }
    return out;
}

CountReport interpolate_report(const Counter& counter, unsigned ambient_dim, std::vector<std::uint64_t> primes,
                               std::optional<std::uint64_t> check_prime, std::uint64_t min_prime) {
    if (primes.empty()) primes = prime_ladder(ambient_dim + 1, min_prime);
    std::sort(primes.begin(), primes.end());
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
        fail(ErrorKind::InvalidArgument, "sample primes must be distinct");
    if (primes.size() < ambient_dim + 1)
        fail(ErrorKind::InvalidArgument, "need at least " + std::to_string(ambient_dim + 1) + " sample primes");
    if (!check_prime) {
        auto more = prime_ladder(primes.size() + 64, std::max(min_prime, primes.back() + 1));
        check_prime = more.front();
    }
    if (std::find(primes.begin(), primes.end(), *check_prime) != primes.end())
        fail(ErrorKind::InvalidArgument, "check prime must not be a sample prime");

    CountReport r;
    r.ambient_dim = ambient_dim;
    for (auto p : primes) r.samples.push_back({p, counter(p)});

    // Newton divided differences in L, then expansion to monomials.
    std::size_t n = r.samples.size();
    std::vector<mpq_class> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = mpq_class(r.samples[i].second);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(mpz_class(std::to_string(r.samples[i].first - r.samples[i - j].first)));
            if (i == j) break;
        }
    std::vector<mpq_class> coef(1, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // coef = coef * (L - x_i) + dd[i]
        mpq_class xi(mpz_class(std::to_string(r.samples[i].first)));
        std::vector<mpq_class> next(coef.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < coef.size(); ++k) {
            next[k + 1] += coef[k];
            next[k] -= coef[k] * xi;
        }
        next[0] += dd[i];
        coef = std::move(next);
    }
    std::vector<mpz_class> lcoef;
    for (std::size_t k = 0; k < coef.size(); ++k) {
        coef[k].canonicalize();
        if (coef[k].get_den() != 1)
            fail(ErrorKind::NotPolynomialCount, "interpolated coefficient of L^" + std::to_string(k) +
                                                    " is not an integer: " + coef[k].get_str());
        lcoef.push_back(coef[k].get_num());
    }
    while (!lcoef.empty() && lcoef.back() == 0) lcoef.pop_back();
    if (lcoef.size() > ambient_dim + 1)
        fail(ErrorKind::NotPolynomialCount, "interpolated degree exceeds ambient dimension " + std::to_string(ambient_dim));
    r.interpolated = ClassPoly::from_L_basis(lcoef);

    r.check_prime = *check_prime;
    r.observed = counter(*check_prime);
    r.predicted = r.interpolated.evaluate(mpz_class(std::to_string(*check_prime - 1)));
    if (r.predicted != r.observed)
        fail(ErrorKind::NotPolynomialCount, "check prime " + std::to_string(*check_prime) + ": predicted " +
                                                r.predicted.get_str() + ", observed " + r.observed.get_str());
    return r;
}

ClassPoly interpolate_class(const Counter& counter, unsigned ambient_dim, std::vector<std::uint64_t> primes,
                            std::optional<std::uint64_t> check_prime, std::uint64_t min_prime) {
    return interpolate_report(counter, ambient_dim, std::move(primes), check_prime, min_prime).interpolated;
}

ClassPoly complement_class(const MPoly& p, unsigned ambient_dim) {
    return interpolate_class([&](std::uint64_t pr) -> mpz_class { return count_complement(p, ambient_dim, pr); }, ambient_dim);
}

ClassPoly zero_locus_complement_class(const std::vector<MPoly>& polys, unsigned ambient_dim) {
    return interpolate_class(
        [&](std::uint64_t pr) -> mpz_class { return mpz_pow(pr, ambient_dim) - count_zero_locus(polys, ambient_dim, pr); },
        ambient_dim);
}

ClassPoly fixed_q_complement_class(const MPoly& p, unsigned ambient_dim) {
    return interpolate_class([&](std::uint64_t pr) -> mpz_class { return count_fixed_q(p, 2, ambient_dim, pr); }, ambient_dim,
                             {}, std::nullopt, 3);
}

std::string CountReport::to_json() const {
    nlohmann::ordered_json j;
    j["ambient_dim"] = ambient_dim;
    auto s = nlohmann::ordered_json::array();
    for (const auto& [p, n] : samples) s.push_back({p, mpz_json(n)});
    j["samples"] = s;
    j["class_T"] = class_json(interpolated);
    j["check"] = {{"prime", check_prime}, {"predicted", mpz_json(predicted)}, {"observed", mpz_json(observed)}};
    return j.dump();
}

}  // namespace potts
