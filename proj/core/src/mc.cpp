#include "asianq/mc.hpp"
#include "asianq/errors.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace asianq {

namespace {

constexpr long chunk_samples = 2048;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// running sums for one chunk; combined in chunk order
struct Moments {
    long n = 0;
    double mean[3] = {0, 0, 0};  // put, call, call - put
    double m2[3] = {0, 0, 0};

    void merge(const Moments& o) {
        if (o.n == 0) return;
        const double na = n, nb = o.n, nt = na + nb;
        for (int j = 0; j < 3; ++j) {
            const double d = o.mean[j] - mean[j];
            mean[j] += d * nb / nt;
            m2[j] += o.m2[j] + d * d * na * nb / nt;
        }
        n += o.n;
    }
};

struct ChunkBuffers {
    std::vector<double> z, g, up, dn, sum_up, sum_dn;
};

Moments run_chunk(const MarketParams& m, const McConfig& cfg, long chunk, long samples,
                  ChunkBuffers& buf) {
    boost::random::mt19937_64 gen(splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(chunk))));
    boost::random::normal_distribution<double> normal;

    const double dt = m.T / cfg.steps;
    const double drift = (m.r - 0.5 * m.sigma * m.sigma) * dt;
    const double vol = m.sigma * std::sqrt(dt);
    const double e2drift = std::exp(2.0 * drift);
    const bool anti = cfg.antithetic;

    buf.z.resize(samples);
    buf.g.resize(samples);
    buf.up.assign(samples, m.S0);
    buf.sum_up.assign(samples, 0.5 * m.S0);
    if (anti) {
        buf.dn.assign(samples, m.S0);
        buf.sum_dn.assign(samples, 0.5 * m.S0);
    }
    double* z = buf.z.data();
    double* g = buf.g.data();
    double* up = buf.up.data();
    double* su = buf.sum_up.data();
    double* dn = buf.dn.data();
    double* sd = buf.sum_dn.data();

    for (int s = 1; s <= cfg.steps; ++s) {
        const double w = s == cfg.steps ? 0.5 : 1.0;
        for (long i = 0; i < samples; ++i) z[i] = normal(gen);
        for (long i = 0; i < samples; ++i) g[i] = std::exp(drift + vol * z[i]);
        if (anti) {
            for (long i = 0; i < samples; ++i) {
                up[i] *= g[i];
                dn[i] *= e2drift / g[i];
                su[i] += w * up[i];
                sd[i] += w * dn[i];
            }
        } else {
            for (long i = 0; i < samples; ++i) {
                up[i] *= g[i];
                su[i] += w * up[i];
            }
        }
    }

    const double disc = std::exp(-m.r * m.T);
    Moments mo;
    for (long i = 0; i < samples; ++i) {
        double put = 0.0, call = 0.0;
        const double a1 = su[i] / cfg.steps;
        put = std::max(m.K - a1, 0.0);
        call = std::max(a1 - m.K, 0.0);
        if (anti) {
            const double a2 = sd[i] / cfg.steps;
            put = 0.5 * (put + std::max(m.K - a2, 0.0));
            call = 0.5 * (call + std::max(a2 - m.K, 0.0));
        }
        const double v[3] = {disc * put, disc * call, disc * (call - put)};
        ++mo.n;
        for (int j = 0; j < 3; ++j) {
            const double d = v[j] - mo.mean[j];
            mo.mean[j] += d / mo.n;
            mo.m2[j] += d * (v[j] - mo.mean[j]);
        }
    }
    return mo;
}

McEstimate estimate(const Moments& mo, int j, long paths) {
    McEstimate e;
    e.mean = mo.mean[j];
    e.std_error = mo.n > 1 ? std::sqrt(mo.m2[j] / (mo.n - 1) / mo.n) : 0.0;
    e.paths_used = paths;
    return e;
}

} // namespace

void validate(const McConfig& cfg) {
    if (cfg.paths < 2) throw domain_error("mc: paths must be >= 2");
    if (cfg.steps < 2) throw domain_error("mc: steps must be >= 2");
    if (cfg.antithetic && cfg.paths % 2 != 0) throw domain_error("mc: antithetic sampling needs an even path count");
}

McPair simulate_asian_pair(const MarketParams& m, const McConfig& cfg) {
    validate(m);
    validate(cfg);
    const long samples = cfg.antithetic ? cfg.paths / 2 : cfg.paths;
    const long chunks = (samples + chunk_samples - 1) / chunk_samples;
    std::vector<Moments> parts(chunks);

    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<long>(workers, chunks));
    auto work = [&](unsigned w) {
        ChunkBuffers buf;
        for (long c = w; c < chunks; c += workers) {
            const long len = std::min(chunk_samples, samples - c * chunk_samples);
            parts[c] = run_chunk(m, cfg, c, len, buf);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    Moments total;
    for (const Moments& p : parts) total.merge(p);
    McPair out;
    out.put = estimate(total, 0, cfg.paths);
    out.call = estimate(total, 1, cfg.paths);
    out.parity_residual = estimate(total, 2, cfg.paths);
    out.parity_residual.mean -= parity_gap(m);
    return out;
}

McEstimate simulate_asian(const MarketParams& m, const McConfig& cfg, Payoff payoff) {
    const McPair p = simulate_asian_pair(m, cfg);
    return payoff == Payoff::put ? p.put : p.call;
}

double parity_check(const MarketParams& m, const McConfig& cfg) {
    return simulate_asian_pair(m, cfg).parity_residual.mean;
}

} // namespace asianq
