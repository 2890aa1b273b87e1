#include "edsm/strutil.hpp"

#include <vector>

namespace edsm {

int min_period(std::string_view s) {
    int n = int(s.size());
    std::vector<int> f(n + 1, 0);
    for (int i = 1; i < n; ++i) {
        int j = f[i];
        while (j && s[i] != s[j]) j = f[j];
        f[i + 1] = s[i] == s[j] ? j + 1 : 0;
    }
    return n - f[n];
}

bool is_primitive(std::string_view s) {
    if (s.empty()) return false;
    int p = min_period(s);
    return p == int(s.size()) || int(s.size()) % p != 0;
}

bool are_cyclic_equivalent(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::string bb(b);
    bb += b;
    return bb.find(a) != std::string::npos;
}

std::string rotate_left(std::string_view s, int r) {
    if (s.empty()) return {};
    r = ((r % int(s.size())) + int(s.size())) % int(s.size());
    std::string out(s.substr(r));
    out += s.substr(0, r);
    return out;
}

} // namespace edsm
