#include "edsm/sumset.hpp"

#include <cmath>
#include <complex>

namespace edsm {

namespace {

void fft(std::vector<std::complex<double>>& a, bool invert) {
    int n = int(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double ang = 2 * M_PI / len * (invert ? -1 : 1);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            std::complex<double> w(1);
            for (int j = 0; j < len / 2; ++j) {
                auto u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (invert)
        for (auto& z : a) z /= n;
}

} // namespace

ShiftResult shift(const PosSet& x, int s) {
    ShiftResult r;
    r.set = PosSet(x.bound());
    for (int v : x.ones()) {
        int t = v + s;
        if (t >= 0 && t < x.bound())
            r.set.set(t);
        else
            r.dropped = true;
    }
    return r;
}

PosSet sumset_shift_or(const PosSet& x, const PosSet& y) {
    PosSet out(x.bound() + y.bound());
    const PosSet& small = x.count() <= y.count() ? x : y;
    const PosSet& large = x.count() <= y.count() ? y : x;
    for (int s : small.ones()) out.bits().or_shifted(large.bits(), s);
    return out;
}

PosSet sumset_fft(const PosSet& x, const PosSet& y) {
    int out_bound = x.bound() + y.bound();
    PosSet out(out_bound);
    if (x.empty() || y.empty()) return out;
    int n = 1;
    while (n < out_bound) n <<= 1;
    std::vector<std::complex<double>> fa(n), fb(n);
    for (int v : x.ones()) fa[v] = 1.0;
    for (int v : y.ones()) fb[v] = 1.0;
    fft(fa, false);
    fft(fb, false);
    for (int i = 0; i < n; ++i) fa[i] *= fb[i];
    fft(fa, true);
    // true counts are integers >= 1, so 0.5 separates hits from noise
    for (int i = 0; i < out_bound; ++i)
        if (fa[i].real() >= 0.5) out.set(i);
    return out;
}

PosSet sumset(const PosSet& x, const PosSet& y) {
    int mn = std::min(x.count(), y.count());
    if (mn <= 128) return sumset_shift_or(x, y);
    return sumset_fft(x, y);
}

} // namespace edsm
