#ifndef NCPAIR_GINIBRE_HPP
#define NCPAIR_GINIBRE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bitstring.hpp"
#include "count.hpp"
#include "parallel.hpp"
#include "phi.hpp"

namespace ncpair {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in (0, 1] from (seed, stream, counter); 53 random bits.
inline double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ stream) ^ counter);
    return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace detail

/// N x N matrix with entries a + ib, a and b independent N(0, 1/(2N)).
/// Entry (j, k) of stream s uses uniforms at counters 2(jN+k) and 2(jN+k)+1,
/// turned into (a, b) by the Box-Muller transform.
struct GinibreSample {
    std::size_t dimension = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    ComplexMatrix X;
};

inline GinibreSample sample(std::size_t N, std::uint64_t seed, std::uint64_t stream = 0)
{
    if (N == 0)
        throw std::invalid_argument("Ginibre dimension must be at least 1");
    GinibreSample s{N, seed, stream, ComplexMatrix(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N))};
    const double scale = std::sqrt(1.0 / (2.0 * static_cast<double>(N)));
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t k = 0; k < N; ++k) {
            const std::uint64_t c = 2 * (j * N + k);
            const double u1 = detail::counter_uniform(seed, stream, c);
            const double u2 = detail::counter_uniform(seed, stream, c + 1);
            const double radius = std::sqrt(-2.0 * std::log(u1)) * scale;
            const double angle = 2.0 * std::numbers::pi * u2;
            s.X(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = {radius * std::cos(angle),
                                                                              radius * std::sin(angle)};
        }
    return s;
}

/// (1/N) Tr of the word with 1 -> X and 0 -> X*.
inline std::complex<double> normalized_trace(const ComplexMatrix& X, const Word& w)
{
    const Eigen::Index N = X.rows();
    if (w.empty())
        return 1.0;
    const ComplexMatrix Xs = X.adjoint();
    ComplexMatrix P = w[0] ? X : Xs;
    for (std::size_t i = 1; i < w.size(); ++i)
        P = (P * (w[i] ? X : Xs)).eval();
    return P.trace() / static_cast<double>(N);
}

struct MomentEstimate {
    Word word;
    std::size_t dimension = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;       // real part of the sample mean
    double mean_imag = 0.0;  // imaginary part, for sanity
    double std_error = 0.0;    // standard error of the real part
    Count phi;
};

namespace detail {

inline MomentEstimate summarize(const Word& w, std::size_t N, std::uint64_t seed, const std::vector<std::complex<double>>& v)
{
    MomentEstimate e;
    e.word = w;
    e.dimension = N;
    e.samples = v.size();
    e.seed = seed;
    e.phi = phi(w);
    double re = 0, im = 0;
    for (const auto& z : v) {
        re += z.real();
        im += z.imag();
    }
    const double n = static_cast<double>(v.size());
    e.mean = re / n;
    e.mean_imag = im / n;
    if (v.size() >= 2) {
        double ss = 0;
        for (const auto& z : v)
            ss += (z.real() - e.mean) * (z.real() - e.mean);
        e.std_error = std::sqrt(ss / (n - 1) / n);
    }
    return e;
}

}  // namespace detail

/// Work cap, in complex multiply-adds, for a single estimate.
constexpr double moment_budget = 2e11;

/// Average of the normalized trace over independent samples 0..samples-1.
inline MomentEstimate moment_estimate(const Word& w, std::size_t N, std::size_t samples, std::uint64_t seed,
                                      unsigned threads = 1)
{
    if (samples == 0)
        throw std::invalid_argument("moment_estimate needs at least one sample");
    const double work = static_cast<double>(N) * N * N * static_cast<double>(w.size() + 1) * samples;
    if (work > moment_budget)
        throw std::length_error("moment_estimate: work budget exceeded");
    std::vector<std::complex<double>> values(samples);
    parallel_for(samples, threads, [&](std::size_t s) { values[s] = normalized_trace(sample(N, seed, s).X, w); });
    return detail::summarize(w, N, seed, values);
}

inline MomentEstimate moment_estimate(const RunProfile& p, std::size_t N, std::size_t samples, std::uint64_t seed,
                                      unsigned threads = 1)
{
    return moment_estimate(recompose(p), N, samples, seed, threads);
}

/// Estimates for many words of length <= 8 sharing the same samples. Products
/// of all words of length <= 4 are formed once per sample; a longer word is
/// split as P Q and Tr(PQ) = sum_ij P_ij Q_ji.
inline std::vector<MomentEstimate> moment_estimates_batched(const std::vector<Word>& words, std::size_t N,
                                                            std::size_t samples, std::uint64_t seed,
                                                            unsigned threads = 1)
{
    constexpr std::size_t half = 4;
    for (const auto& w : words)
        if (w.size() > 2 * half)
            throw std::invalid_argument("moment_estimates_batched handles words of length <= 8");
    if (samples == 0)
        throw std::invalid_argument("moment_estimates_batched needs at least one sample");
    const double work = static_cast<double>(N) * N * N * 30.0 * samples;
    if (work > moment_budget)
        throw std::length_error("moment_estimates_batched: work budget exceeded");

    // Products indexed by (length, code), code read left to right as binary.
    auto slot = [](std::size_t len, std::uint32_t code) { return ((std::size_t{1} << len) - 2) + code; };
    std::vector<std::vector<std::complex<double>>> values(words.size(), std::vector<std::complex<double>>(samples));
    const double invN = 1.0 / static_cast<double>(N);

    parallel_for(samples, threads, [&](std::size_t s) {
        const ComplexMatrix X = sample(N, seed, s).X;
        const ComplexMatrix Xs = X.adjoint();
        std::vector<ComplexMatrix> prod(slot(half + 1, 0));
        prod[slot(1, 0)] = Xs;
        prod[slot(1, 1)] = X;
        for (std::size_t len = 2; len <= half; ++len)
            for (std::uint32_t code = 0; code < (1u << len); ++code)
                prod[slot(len, code)] = prod[slot(len - 1, code >> 1)] * ((code & 1u) ? X : Xs);
        for (std::size_t k = 0; k < words.size(); ++k) {
            const Word& w = words[k];
            std::uint32_t code = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                code = (code << 1) | static_cast<std::uint32_t>(w[i]);
            std::complex<double> tr;
            if (w.empty()) {
                tr = 1.0;
            } else if (w.size() <= half) {
                tr = prod[slot(w.size(), code)].trace() * invN;
            } else {
                const std::size_t qlen = w.size() - half;
                const ComplexMatrix& P = prod[slot(half, code >> qlen)];
                const ComplexMatrix& Q = prod[slot(qlen, code & ((1u << qlen) - 1u))];
                tr = P.cwiseProduct(Q.transpose()).sum() * invN;
            }
            values[k][s] = tr;
        }
    });

    std::vector<MomentEstimate> out;
    out.reserve(words.size());
    for (std::size_t k = 0; k < words.size(); ++k)
        out.push_back(detail::summarize(words[k], N, seed, values[k]));
    return out;
}

struct MomentComparison {
    MomentEstimate estimate;
    double tolerance = 0.15;
    double rel_error = 0.0;  // |mean - phi| / max(phi, 1)
    bool pass = false;
};

inline MomentComparison compare(const MomentEstimate& e, double tolerance = 0.15)
{
    MomentComparison c;
    c.estimate = e;
    c.tolerance = tolerance;
    const double ref = e.phi.convert_to<double>();
    c.rel_error = std::abs(e.mean - ref) / std::max(ref, 1.0);
    c.pass = tolerance > 0 && c.rel_error <= tolerance;
    return c;
}

inline MomentComparison compare(const Word& w, std::size_t N, std::size_t samples, std::uint64_t seed,
                                double tolerance = 0.15, unsigned threads = 1)
{
    return compare(moment_estimate(w, N, samples, seed, threads), tolerance);
}

}  // namespace ncpair

#endif  // NCPAIR_GINIBRE_HPP
