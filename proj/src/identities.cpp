#include "mhs/identities.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "mhs/sums.hpp"

namespace mhslab {

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::I5: return "i5";
        case IdentityId::I6: return "i6";
        case IdentityId::I7: return "i7";
        case IdentityId::HHT_EVEN: return "i1";
        case IdentityId::HHT_ODD: return "i2";
        case IdentityId::HHT_ODD_H: return "i3";
        case IdentityId::HHT_EVEN_H: return "i4";
        case IdentityId::C1: return "c1";
        case IdentityId::C2: return "c2";
        case IdentityId::C3: return "c3";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(const std::string& name) {
    static const std::map<std::string, IdentityId> table = {
        {"i1", IdentityId::HHT_EVEN},  {"i2", IdentityId::HHT_ODD},
        {"i3", IdentityId::HHT_ODD_H}, {"i4", IdentityId::HHT_EVEN_H},
        {"i5", IdentityId::I5},        {"i6", IdentityId::I6},
        {"i7", IdentityId::I7},        {"c1", IdentityId::C1},
        {"c2", IdentityId::C2},        {"c3", IdentityId::C3},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> identity_params(IdentityId id) {
    switch (id) {
        case IdentityId::I5: return {"n"};
        case IdentityId::I6: return {"n", "d"};
        case IdentityId::I7: return {"n", "r"};
        case IdentityId::HHT_EVEN:
        case IdentityId::HHT_ODD: return {"n", "b"};
        case IdentityId::HHT_ODD_H:
        case IdentityId::HHT_EVEN_H: return {"n", "a", "b"};
        case IdentityId::C1: return {"n", "r"};
        case IdentityId::C2: return {"n", "r", "d"};
        case IdentityId::C3: return {"n", "a", "b"};
    }
    return {};
}

namespace {

long get(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// H_k(s) for k = 0..n through the chosen engine
std::vector<Rational> depth1_prefix(long n, long s, Engine engine) {
    if (engine == Engine::fast) return mhs_prefix(n, Signature{s});
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) out.push_back(mhs_oracle(k, Signature{s}));
    return out;
}

Rational eval_mhs(long n, const Signature& s, Engine engine) {
    return engine == Engine::fast ? mhs(n, s) : mhs_oracle(n, s);
}

// sum over compositions of block: coef * 2^{l(s)} H_n(transform(s))
enum class SignFlip { none, first, last };

Rational composition_sum(long n, const Signature& block, SignFlip flip, Engine engine) {
    Rational total(0);
    for (const Signature& s : compositions(block)) {
        std::vector<long> e = s.entries();
        if (flip == SignFlip::first) e.front() = -e.front();
        if (flip == SignFlip::last) e.back() = -e.back();
        total += pow2(static_cast<long>(s.length())) * eval_mhs(n, Signature(e), engine);
    }
    return total;
}

Signature ones(long count) { return repeat_block(Signature{1}, count); }
Signature twos(long count) { return repeat_block(Signature{2}, count); }

Signature concat(const Signature& x, const Signature& y) {
    std::vector<long> e = x.entries();
    e.insert(e.end(), y.entries().begin(), y.entries().end());
    return Signature(e);
}

Rational neg_pow(long k) { return Rational((k % 2 != 0) ? -1 : 1); }

Rational kpow_inv(long k, long e) {
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(e));
    Rational q(1, kp);
    q.canonicalize();
    return q;
}

}  // namespace

void validate_params(IdentityId id, const Params& p) {
    require(get(p, "n") >= 1, identity_name(id) + " requires n >= 1");
    switch (id) {
        case IdentityId::I5: break;
        case IdentityId::I6:
            require(get(p, "d") >= 2, "i6 requires d >= 2");
            break;
        case IdentityId::I7:
            require(get(p, "r") >= 1, "i7 requires r >= 1");
            break;
        case IdentityId::HHT_EVEN:
            require(get(p, "b") >= 1, "i1 requires b >= 1");
            break;
        case IdentityId::HHT_ODD:
            require(get(p, "b") >= 1, "i2 requires b >= 1");
            break;
        case IdentityId::HHT_ODD_H:
            require(get(p, "a") >= 1, "i3 requires a >= 1");
            require(get(p, "b") >= 1, "i3 requires b >= 1");
            break;
        case IdentityId::HHT_EVEN_H:
            require(get(p, "a") >= 1, "i4 requires a >= 1");
            require(get(p, "b") >= 1, "i4 requires b >= 1");
            break;
        case IdentityId::C1:
            require(get(p, "r") >= 1, "c1 requires r >= 1");
            break;
        case IdentityId::C2:
            require(get(p, "r") >= 1, "c2 requires r >= 1");
            require(get(p, "d") >= 2, "c2 requires d >= 2");
            break;
        case IdentityId::C3:
            require(get(p, "a") >= 1, "c3 requires a >= 1");
            require(get(p, "b") >= 1, "c3 requires b >= 1");
            break;
    }
}

Rational identity_lhs(IdentityId id, const Params& p, Engine engine) {
    validate_params(id, p);
    const long n = get(p, "n");
    switch (id) {
        case IdentityId::I5: {
            auto h = depth1_prefix(n, 1, engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * Rational(binomial(n, k) * binomial(n + k, k)) * h[k];
            return acc;
        }
        case IdentityId::I6: {
            auto h = depth1_prefix(n, get(p, "d"), engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * Rational(binomial(n, k) * binomial(n + k, k)) * h[k];
            return acc;
        }
        case IdentityId::I7: {
            const long r = get(p, "r");
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * kpow_inv(k, r) * Rational(binomial(n, k) * binomial(n + k, k));
            return acc;
        }
        case IdentityId::HHT_EVEN: {
            const long b = get(p, "b");
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * kpow_inv(k, 2 * b) * binomial_ratio(n, k);
            return 2 * acc;
        }
        case IdentityId::HHT_ODD: {
            const long b = get(p, "b");
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += kpow_inv(k, 2 * b - 1) * binomial_ratio(n, k);
            return 2 * acc;
        }
        case IdentityId::HHT_ODD_H: {
            const long a = get(p, "a"), b = get(p, "b");
            auto h = depth1_prefix(n, 2 * a + 1, engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * kpow_inv(k, 2 * b) * binomial_ratio(n, k) * (h[k] + h[k - 1]);
            return 2 * acc;
        }
        case IdentityId::HHT_EVEN_H: {
            const long a = get(p, "a"), b = get(p, "b");
            auto h = depth1_prefix(n, -2 * a, engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += kpow_inv(k, 2 * b - 1) * binomial_ratio(n, k) * (h[k] + h[k - 1]);
            return 2 * acc;
        }
        case IdentityId::C1: {
            const long r = get(p, "r");
            auto h = depth1_prefix(n, 1, engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * kpow_inv(k, r) * Rational(binomial(n, k) * binomial(n + k, k)) * h[k];
            return acc;
        }
        case IdentityId::C2: {
            const long r = get(p, "r");
            auto h = depth1_prefix(n, get(p, "d"), engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += neg_pow(k) * kpow_inv(k, r) * Rational(binomial(n, k) * binomial(n + k, k)) * h[k];
            return acc;
        }
        case IdentityId::C3: {
            const long a = get(p, "a"), b = get(p, "b");
            auto hp = depth1_prefix(n, 2 * a, engine);
            auto hm = depth1_prefix(n, -2 * a, engine);
            Rational acc(0);
            for (long k = 1; k <= n; ++k)
                acc += kpow_inv(k, 2 * b - 1) * binomial_ratio(n, k) *
                       (neg_pow(k) * hp[k - 1] - hm[k - 1]);
            return 2 * acc;
        }
    }
    throw std::logic_error("unreachable");
}

Rational identity_rhs(IdentityId id, const Params& p, Engine engine) {
    validate_params(id, p);
    const long n = get(p, "n");
    switch (id) {
        case IdentityId::I5:
            return 2 * neg_pow(n) * eval_mhs(n, Signature{1}, engine);
        case IdentityId::I6: {
            // sign flipped on the LAST composition entry
            const long d = get(p, "d");
            Signature block = concat(ones(d - 2), Signature{2});
            return neg_pow(n - 1) * composition_sum(n, block, SignFlip::last, engine);
        }
        case IdentityId::I7:
            return -composition_sum(n, ones(get(p, "r")), SignFlip::none, engine);
        case IdentityId::HHT_EVEN:
            return -s_sum(1, n, twos(get(p, "b")));
        case IdentityId::HHT_ODD:
            return s_sum(1, n, concat(Signature{1}, twos(get(p, "b") - 1)));
        case IdentityId::HHT_ODD_H: {
            const long a = get(p, "a"), b = get(p, "b");
            return -s_sum(1, n, concat(concat(twos(a), Signature{3}), twos(b - 1)));
        }
        case IdentityId::HHT_EVEN_H: {
            const long a = get(p, "a"), b = get(p, "b");
            return -s_sum(1, n, concat(concat(twos(a), Signature{1}), twos(b - 1)));
        }
        case IdentityId::C1: {
            // sign flipped on the FIRST composition entry
            Signature block = concat(Signature{2}, ones(get(p, "r") - 1));
            return composition_sum(n, block, SignFlip::first, engine);
        }
        case IdentityId::C2: {
            const long r = get(p, "r"), d = get(p, "d");
            Signature block = concat(concat(ones(d - 2), Signature{3}), ones(r - 1));
            return -composition_sum(n, block, SignFlip::none, engine);
        }
        case IdentityId::C3: {
            const long a = get(p, "a"), b = get(p, "b");
            return engine == Engine::fast ? r_sum(n, a, b) : r_sum_direct(n, a, b);
        }
    }
    throw std::logic_error("unreachable");
}

VerificationReport verify(IdentityId id, const Params& p, Engine engine) {
    auto t0 = std::chrono::steady_clock::now();
    Rational lhs = identity_lhs(id, p, engine);
    Rational rhs = identity_rhs(id, p, engine);
    auto t1 = std::chrono::steady_clock::now();
    return VerificationReport{
        id, p, lhs, rhs, lhs == rhs,
        std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

std::vector<Params> sweep_points(IdentityId id, const ParamRanges& ranges) {
    std::vector<std::string> keys = identity_params(id);
    std::vector<Range> rs;
    for (const auto& k : keys) {
        auto it = ranges.find(k);
        if (it != ranges.end()) {
            rs.push_back(it->second);
        } else {
            // default: the tag's minimum legal value
            long minv = (k == "d" && (id == IdentityId::I6 || id == IdentityId::C2)) ? 2 : 1;
            rs.push_back(Range{minv, minv});
        }
    }
    std::vector<Params> points;
    std::vector<long> cur(keys.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == keys.size()) {
            Params p;
            for (std::size_t j = 0; j < keys.size(); ++j) p[keys[j]] = cur[j];
            points.push_back(std::move(p));
            return;
        }
        for (long v = rs[i].lo; v <= rs[i].hi; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return points;
}

std::vector<VerificationReport> verify_points(IdentityId id, const std::vector<Params>& points,
                                              Engine engine, unsigned jobs) {
    std::vector<std::optional<VerificationReport>> slots(points.size());
    auto run_point = [&](std::size_t i) { slots[i] = verify(id, points[i], engine); };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) run_point(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                try {
                    run_point(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<VerificationReport> out;
    out.reserve(points.size());
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

SweepResult sweep(IdentityId id, const ParamRanges& ranges, Engine engine, unsigned jobs) {
    SweepResult result;
    std::vector<Params> valid;
    for (Params& p : sweep_points(id, ranges)) {
        try {
            validate_params(id, p);
            valid.push_back(std::move(p));
        } catch (const std::invalid_argument&) {
            ++result.summary.skipped;
        }
    }
    result.reports = verify_points(id, valid, engine, jobs);
    result.summary.evaluated = result.reports.size();
    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        if (!result.reports[i].equal) {
            result.summary.all_passed = false;
            result.summary.counterexamples.push_back(i);
        }
    }
    return result;
}

}  // namespace mhslab
