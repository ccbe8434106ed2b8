#include "ambiforge/fft.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ambiforge::fft {

bool supported_size(size_t n) {
    if (n == 0) return false;
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

size_t next_supported(size_t n) {
    if (n == 0) return 1;
    while (!supported_size(n)) ++n;
    return n;
}

namespace {

// Twiddle table e^{-2*pi*i*k/n}, cached per size.
const std::vector<cplx>& twiddles(size_t n) {
    static std::map<size_t, std::vector<cplx>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> t(n);
    for (size_t k = 0; k < n; ++k) {
        double a = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        t[k] = cplx(std::cos(a), std::sin(a));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// Recursive mixed-radix (2, 3) decimation in time. `tw` is the table for the
// root size; at sub-size n the k-th twiddle is tw[k * (root/n)].
void fft_rec(cplx* out, const cplx* in, size_t n, size_t stride, size_t root,
             const std::vector<cplx>& tw, bool inverse) {
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    size_t r = (n % 2 == 0) ? 2 : 3;
    size_t m = n / r;
    for (size_t j = 0; j < r; ++j)
        fft_rec(out + j * m, in + j * stride, m, stride * r, root, tw, inverse);

    const size_t step = root / n;
    if (r == 2) {
        for (size_t k = 0; k < m; ++k) {
            cplx w = tw[k * step];
            if (inverse) w = std::conj(w);
            cplx a = out[k];
            cplx b = out[m + k] * w;
            out[k] = a + b;
            out[m + k] = a - b;
        }
    } else {
        // radix-3 butterfly; w3 = e^{-2*pi*i/3}
        const double s3 = 0.86602540378443864676;
        const cplx w3a = inverse ? cplx(-0.5, s3) : cplx(-0.5, -s3);
        const cplx w3b = std::conj(w3a);
        for (size_t k = 0; k < m; ++k) {
            cplx w1 = tw[k * step];
            cplx w2 = tw[(2 * k * step) % root];
            if (inverse) {
                w1 = std::conj(w1);
                w2 = std::conj(w2);
            }
            cplx a = out[k];
            cplx b = out[m + k] * w1;
            cplx c = out[2 * m + k] * w2;
            out[k] = a + b + c;
            out[m + k] = a + b * w3a + c * w3b;
            out[2 * m + k] = a + b * w3b + c * w3a;
        }
    }
}

}  // namespace

void transform(std::vector<cplx>& x, bool inverse) {
    size_t n = x.size();
    require(supported_size(n), "fft: size " + std::to_string(n) + " is not of the form 2^a*3^b");
    if (n == 1) return;
    std::vector<cplx> in = x;
    fft_rec(x.data(), in.data(), n, 1, n, twiddles(n), inverse);
    if (inverse) {
        double s = 1.0 / static_cast<double>(n);
        for (auto& v : x) v *= s;
    }
}

std::vector<cplx> rfft(const double* x, size_t n) {
    require(n % 2 == 0, "rfft: length must be even");
    std::vector<cplx> buf(n);
    for (size_t i = 0; i < n; ++i) buf[i] = cplx(x[i], 0.0);
    transform(buf, false);
    buf.resize(n / 2 + 1);
    return buf;
}

std::vector<cplx> rfft(const std::vector<double>& x) { return rfft(x.data(), x.size()); }

std::vector<double> irfft(const cplx* bins, size_t n) {
    require(n % 2 == 0, "irfft: length must be even");
    std::vector<cplx> full(n);
    full[0] = cplx(bins[0].real(), 0.0);
    full[n / 2] = cplx(bins[n / 2].real(), 0.0);
    for (size_t k = 1; k < n / 2; ++k) {
        full[k] = bins[k];
        full[n - k] = std::conj(bins[k]);
    }
    transform(full, true);
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = full[i].real();
    return out;
}

std::vector<double> irfft(const std::vector<cplx>& bins, size_t n) {
    require(bins.size() == n / 2 + 1, "irfft: bin count mismatch");
    return irfft(bins.data(), n);
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    require(!a.empty() && !b.empty(), "convolve: empty input");
    size_t out_len = a.size() + b.size() - 1;
    size_t n = next_supported(out_len);
    if (n % 2 != 0) n = next_supported(n + 1);
    std::vector<double> pa(n, 0.0), pb(n, 0.0);
    std::copy(a.begin(), a.end(), pa.begin());
    std::copy(b.begin(), b.end(), pb.begin());
    auto fa = rfft(pa);
    auto fb = rfft(pb);
    for (size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
    auto full = irfft(fa, n);
    full.resize(out_len);
    return full;
}

}  // namespace ambiforge::fft
